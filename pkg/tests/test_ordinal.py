"""Unit tests for ordinals and ordinal tuples."""
from __future__ import absolute_import

import types
import unittest

from hypothesis import given, settings, strategies as st

from . import context  # noqa: F401

from hiwalks import ordinal as ords
from hiwalks.errors import OrdinalError, OrdinalSyntaxError, TupleError
from hiwalks.ordinal import OMEGA, ONE, ZERO, Ordinal

coefficients = st.lists(st.integers(0, 4), min_size=4, max_size=4)
ordinals = coefficients.map(
    lambda cs: Ordinal([(3 - i, c) for i, c in enumerate(cs) if c]))
limits = ordinals.filter(lambda a: a.is_limit())


class OrdinalTestCase(unittest.TestCase):

    def test_parse_and_print(self):
        a = ords.parse_ordinal("w^2*3+w+4")
        self.assertEqual(str(a), "w^2*3+w+4")
        self.assertEqual(a, Ordinal(((2, 3), (1, 1), (0, 4))))
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(ords.parse_ordinal("3+w"), OMEGA)
        self.assertEqual(ords.parse_ordinal("w*1"), OMEGA)

    def test_syntax_error_column(self):
        with self.assertRaises(OrdinalSyntaxError) as caught:
            ords.parse_ordinal("w+x")
        self.assertEqual(caught.exception.column, 2)
        self.assertRaises(OrdinalSyntaxError, ords.parse_ordinal, "")
        self.assertRaises(OrdinalSyntaxError, ords.parse_ordinal, "w+")

    def test_compare_with_ints(self):
        self.assertEqual(Ordinal(3), 3)
        self.assertTrue(Ordinal(3) < OMEGA)
        self.assertTrue(OMEGA > 1000)
        self.assertTrue(OMEGA * 2 > OMEGA + 1000)
        self.assertTrue(ZERO < OMEGA)
        self.assertEqual(OMEGA * 2 + 1, ords.parse_ordinal("w*2+1"))
        self.assertTrue(Ordinal.omega(2) > OMEGA * 9 + 9)

    def test_arithmetic(self):
        self.assertEqual(ONE + OMEGA, OMEGA)
        self.assertEqual(str(OMEGA + ONE), "w+1")
        self.assertEqual(str(OMEGA * 3), "w*3")
        self.assertEqual(str((OMEGA + 2) * 2), "w*2+2")
        self.assertEqual(OMEGA * 2 - OMEGA, OMEGA)
        self.assertEqual(Ordinal.omega(2) - OMEGA, Ordinal.omega(2))
        self.assertRaises(OrdinalError, lambda: OMEGA - Ordinal.omega(2))

    def test_classification(self):
        self.assertTrue(ZERO.is_zero())
        self.assertTrue((OMEGA + 1).is_successor())
        self.assertTrue(OMEGA.is_limit())
        self.assertEqual((OMEGA + 1).predecessor(), OMEGA)
        self.assertRaises(OrdinalError, OMEGA.predecessor)
        self.assertEqual(Ordinal.omega(2, 3).degree(), 2)

    def test_fundamental_sequence(self):
        w2 = Ordinal.omega(2)
        self.assertEqual(ords.fundamental_sequence(OMEGA, 4), 4)
        self.assertEqual(ords.fundamental_sequence(OMEGA * 2, 0), OMEGA)
        self.assertEqual(ords.fundamental_sequence(OMEGA * 2, 3), OMEGA + 3)
        self.assertEqual(ords.fundamental_sequence(w2, 3), OMEGA * 3)
        self.assertRaises(OrdinalError, ords.fundamental_sequence, OMEGA + 1,
                          0)

    def test_fs_index(self):
        w2 = Ordinal.omega(2)
        self.assertEqual(ords.fs_index(w2, ZERO), 0)
        self.assertEqual(ords.fs_index(w2, OMEGA * 2), 2)
        self.assertEqual(ords.fs_index(w2, OMEGA * 2 + 1), 3)
        self.assertEqual(ords.fs_index(OMEGA * 2, OMEGA + 5), 5)

    def test_landmarks(self):
        found = ords.landmarks(OMEGA * 2, 2)
        self.assertEqual([str(x) for x in found],
                         ["0", "1", "2", "w", "w+1", "w+2"])
        self.assertEqual(len(ords.landmarks(Ordinal.omega(3), 3)), 64)

    @given(ordinals)
    def test_print_parse(self, a):
        self.assertEqual(ords.parse_ordinal(str(a)), a)

    @given(ordinals, ordinals)
    def test_left_subtraction(self, a, b):
        self.assertEqual((a + b) - a, b)
        self.assertTrue(a <= a + b)
        self.assertTrue(b <= a + b)

    @given(ordinals, ordinals, ordinals)
    def test_associative(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))

    @settings(max_examples=50)
    @given(limits, st.integers(0, 20))
    def test_fundamental_sequence_increasing(self, alpha, k):
        here = ords.fundamental_sequence(alpha, k)
        self.assertTrue(here < ords.fundamental_sequence(alpha, k + 1))
        self.assertTrue(here < alpha)
        self.assertEqual(ords.fs_index(alpha, here), k)


class TupleTestCase(unittest.TestCase):

    def test_kinds(self):
        t = (OMEGA, OMEGA, OMEGA * 2)
        self.assertTrue(ords.is_kind(t, ords.WEAK))
        self.assertFalse(ords.is_kind(t, ords.STRICT))
        self.assertTrue(ords.is_kind(t, ords.ALPHA_TENSOR))
        self.assertFalse(ords.is_kind((OMEGA, OMEGA * 2, OMEGA * 2),
                                      ords.ALPHA_TENSOR))
        self.assertRaises(TupleError, ords.check_tuple, t, ords.STRICT)
        self.assertRaises(TupleError, ords.check_tuple, t, ords.WEAK, 2)

    def test_index_operations(self):
        t = (ONE, OMEGA, OMEGA * 2)
        self.assertEqual(ords.remove_index(t, 1), (ONE, OMEGA * 2))
        self.assertEqual(ords.insert_index(t, 0, ZERO),
                         (ZERO, ONE, OMEGA, OMEGA * 2))
        self.assertEqual(ords.substitute(t, {0: OMEGA}),
                         (OMEGA, OMEGA, OMEGA * 2))
        self.assertRaises(TupleError, ords.remove_index, t, 3)
        self.assertRaises(TupleError, ords.substitute, t, {5: ONE})

    def test_parse_and_format(self):
        t = ords.parse_tuple("(w+3, w*2)")
        self.assertEqual(t, (OMEGA + 3, OMEGA * 2))
        self.assertEqual(ords.format_tuple(t), "(w+3,w*2)")
        self.assertEqual(ords.parse_tuple("w+3,w*2"), t)
        self.assertEqual(ords.parse_tuple("()"), ())
        self.assertRaises(OrdinalSyntaxError, ords.parse_tuple, "(w,")


class PackageTestCase(unittest.TestCase):

    def test_ordinal_module_not_shadowed(self):
        import hiwalks
        from hiwalks import analysis, characteristics, cli, csequence, \
            export, game, group, lemmas, specfile, walks

        self.assertIsInstance(ords, types.ModuleType)
        self.assertIs(hiwalks.ordinal, ords)
        for module in (analysis, characteristics, cli, csequence, export,
                       game, group, lemmas, specfile, walks):
            self.assertIs(module.ords, ords, module.__name__)

    def test_exports(self):
        import hiwalks
        self.assertEqual(hiwalks.parse_ordinal("w*2"), OMEGA * 2)
        self.assertIs(hiwalks.Ordinal, Ordinal)


if __name__ == '__main__':
    unittest.main()
