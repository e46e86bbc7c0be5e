"""Unit tests for the free abelian group on ordinal tuples."""
from __future__ import absolute_import

import unittest

from hypothesis import given, strategies as st

from . import harness

from hiwalks.group import ZERO_ELEMENT, FreeAbelianElement, basis, group_add

W = harness.W

keys = st.sampled_from([(), (W,), (W * 2,), (W, W * 2), (harness.W2,)])
elements = st.lists(st.tuples(keys, st.integers(-3, 3)), max_size=6).map(
    FreeAbelianElement)


class ElementTestCase(unittest.TestCase):

    def test_cancellation(self):
        element = basis((W,), 2) + basis((W,), -2)
        self.assertTrue(element.is_zero())
        self.assertEqual(element, ZERO_ELEMENT)
        self.assertEqual(str(element), "0")

    def test_accumulates(self):
        element = FreeAbelianElement([((W,), 1), ((W,), 2), ((W * 2,), 0)])
        self.assertEqual(element[(W,)], 3)
        self.assertEqual(element[(W * 2,)], 0)
        self.assertEqual(len(element), 1)

    def test_support_order(self):
        element = basis((W,)) - basis((W * 2,)) + basis(())
        self.assertEqual(element.support(), [(W * 2,), (W,), ()])
        self.assertEqual(str(element), "-1[w*2] +1[w] +1[]")
        self.assertEqual(element.augmentation(), 1)

    def test_scaling(self):
        self.assertEqual(3 * basis((W,)), basis((W,), 3))
        self.assertEqual(basis((W,)) * 0, ZERO_ELEMENT)

    def test_list_form(self):
        element = basis((W, W * 2), -4)
        self.assertEqual(element.to_list(),
                         [{"tuple": ["w", "w*2"], "coeff": -4}])
        self.assertEqual(FreeAbelianElement.from_list(element.to_list()),
                         element)

    @given(elements, elements, elements)
    def test_abelian_group(self, a, b, c):
        self.assertEqual(a + b, b + a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual(a - a, ZERO_ELEMENT)
        self.assertEqual(group_add(a, ZERO_ELEMENT), a)
        self.assertEqual((a + b).augmentation(),
                         a.augmentation() + b.augmentation())


if __name__ == '__main__':
    unittest.main()
