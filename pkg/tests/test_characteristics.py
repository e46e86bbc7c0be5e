"""Unit tests for walk characteristics."""
from __future__ import absolute_import

import unittest

from . import harness

from hiwalks import characteristics as chars
from hiwalks.club import Interval
from hiwalks.csequence import build_maximal, build_order_minimal
from hiwalks.errors import TupleError
from hiwalks.group import FreeAbelianElement, basis

W, W2 = harness.W, harness.W2


class Rho2TestCase(unittest.TestCase):

    def test_one_dimensional(self):
        seq = build_order_minimal(1, W2)
        self.assertEqual(chars.rho2_n(seq, 1, W + 3, (W * 2,)), 2)
        self.assertEqual(chars.rho2_n(seq, -1, W + 3, (W * 2,)), -2)
        self.assertEqual(chars.rho2_n(seq, 1, 3, (W * 2,)), 3)

    def test_classical(self):
        seq = build_order_minimal(1, W2)
        self.assertEqual(chars.classical_rho2(seq, W + 3, W * 2), 1)
        self.assertEqual(chars.classical_rho2(seq, 3, W * 2), 2)
        self.assertEqual(chars.classical_rho2(seq, W, W), 0)
        self.assertRaises(TupleError, chars.classical_rho2, seq, W * 2, W)

    def test_two_dimensional(self):
        seq = build_maximal(2, W2)
        self.assertEqual(chars.rho2_n(seq, 1, W, (W * 2, W * 3)), 1)


class ReshTestCase(unittest.TestCase):

    def setUp(self):
        self.seq = build_maximal(2, W2)

    def test_resh(self):
        element = chars.resh_n(self.seq, W, (W * 2, W * 3))
        self.assertEqual(element, FreeAbelianElement([((W * 3,), 2),
                                                      ((W * 2,), -1)]))
        self.assertEqual(str(element), "+2[w*3] -1[w*2]")
        self.assertEqual(chars.varpi(element), 1)

    def test_one_dimensional_resh(self):
        element = chars.resh_n(build_order_minimal(1, W2), W + 3, (W * 2,))
        self.assertEqual(element, basis((), 2))

    def test_project_pi(self):
        element = FreeAbelianElement([((W, W * 3), 2), ((W + 1, W * 3), 1),
                                      ((W * 2,), 5)])
        projected = chars.project_pi(element, W * 3, Interval(W * 2, W))
        self.assertEqual(projected, FreeAbelianElement([((W,), 2),
                                                        ((W + 1,), 1)]))
        projected = chars.project_pi(element, W * 3, Interval(W + 1, W))
        self.assertEqual(projected, basis((W,), 2))

    def test_family_sum(self):
        total = chars.family_alternating_sum(self.seq, (W, W * 2, W * 3), 5)
        self.assertEqual(total, basis((W * 2,)))
        total = chars.family_alternating_sum(self.seq,
                                             (W * 2, W * 3, W * 4), W)
        self.assertEqual(total, basis((W * 3,)))

    def test_family_errors(self):
        self.assertRaises(TupleError, chars.family_alternating_sum, self.seq,
                          (W * 2, W), 1)
        self.assertRaises(TupleError, chars.family_alternating_sum, self.seq,
                          (W, W * 2), W)
        self.assertRaises(TupleError, chars.family_alternating_sum, self.seq,
                          (W,), 1)


if __name__ == '__main__':
    unittest.main()
