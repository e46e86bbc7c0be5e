"""Unit tests for walks and their trees."""
from __future__ import absolute_import

import unittest

from . import harness

from hiwalks import walks
from hiwalks.csequence import build_maximal, build_order_minimal
from hiwalks.errors import ResourceCapError, TupleError
from hiwalks.ordinal import ZERO

W, W2 = harness.W, harness.W2


class OneWalkTestCase(unittest.TestCase):

    def setUp(self):
        self.seq = build_order_minimal(1, W2)

    def test_two_steps(self):
        tree = walks.walk(self.seq, 1, W + 3, (W * 2,))
        self.assertEqual(len(tree), 2)
        self.assertEqual(tree.n, 1)
        self.assertEqual(tree.alpha, W + 3)
        self.assertEqual(tree.terminals(), [(0,)])
        self.assertEqual(tree.nodes[(0,)], (1, (W + 3, W + 3)))
        self.assertEqual(tree.children(()), [(0,)])
        self.assertEqual(tree.children((0,)), [])

    def test_descends_through_limits(self):
        tree = walks.walk(self.seq, 1, 3, (W * 2,))
        self.assertEqual([label for _, label in tree.nodes.values()],
                         [(3, W * 2), (3, W), (3, 3)])

    def test_tau_iota(self):
        iota, tau, j = walks.tau_iota(self.seq, (W + 3, W * 2))
        self.assertEqual(iota, (W + 3,))
        self.assertEqual(tau, (W * 2,))
        self.assertEqual(j, 0)

    def test_bad_input(self):
        self.assertRaises(TupleError, walks.walk, self.seq, 2, W, (W * 2,))
        self.assertRaises(TupleError, walks.walk, self.seq, 1, W, ())
        self.assertRaises(TupleError, walks.walk, self.seq, 1, W * 3,
                          (W * 2,))
        self.assertRaises(TupleError, walks.walk, self.seq, 1, W, (W2,))
        self.assertRaises(TupleError, walks.walk, self.seq, 1, W,
                          (W * 2, W * 3))

    def test_cap(self):
        self.assertRaises(ResourceCapError, walks.walk, self.seq, 1, 3,
                          (W * 2,), 2)


class TwoWalkTestCase(unittest.TestCase):

    def setUp(self):
        self.seq = build_maximal(2, W2)
        self.tree = walks.walk(self.seq, 1, W, (W * 2, W * 3))

    def test_shape(self):
        tree = self.tree
        self.assertEqual(len(tree), 3)
        self.assertEqual(tree.nodes[(0,)], (1, (W, W, W * 3)))
        self.assertEqual(tree.nodes[(1,)], (-1, (W, W, W * 2)))
        self.assertEqual(tree.terminals(), [(0,), (1,)])
        self.assertEqual(tree.shape(),
                         walks.TreeShape(2, [(), (0,), (1,)], [(0,), (1,)]))

    def test_classes(self):
        classes = walks.classify_nodes(self.tree)
        self.assertEqual(classes.having(walks.EXTREME), [(), (0,), (1,)])
        self.assertEqual(classes.having(walks.BAD), [()])
        self.assertEqual(classes.having(walks.SPECTACLED), [(0,), (1,)])
        self.assertEqual(classes.having(walks.SPLITTING), [()])
        self.assertTrue(classes.has((0,), walks.TERMINAL))

    def test_lower_traces(self):
        traces = walks.lower_traces(self.tree)
        self.assertEqual(traces, {(): W, (0,): W, (1,): W})
        self.assertEqual(walks.lower_trace(self.tree, (1,)), W)

    def test_truncated(self):
        tree = walks.truncated_walk(self.seq, W, (W * 2, W * 3))
        self.assertTrue(tree.truncated)
        self.assertEqual(len(tree), 1)
        self.assertEqual(tree.lower_bound, ZERO)

    def test_subtree_and_restart(self):
        restarted = walks.walk(self.seq, -1, W, (W, W * 2))
        self.assertEqual(list(self.tree.subtree((1,)).items()),
                         list(restarted.nodes.items()))

    def test_end_extension(self):
        small = walks.walk(self.seq, 1, W, (W * 2, W * 3))
        self.assertTrue(small.is_end_extended_by(self.tree, signed=True))
        flipped = walks.walk(self.seq, -1, W, (W * 2, W * 3))
        self.assertTrue(small.is_end_extended_by(flipped))
        self.assertFalse(small.is_end_extended_by(flipped, signed=True))

    def test_boundary(self):
        self.assertEqual(walks.boundary(self.tree),
                         set([((0,), 1), ((1,), -1)]))


class PairingTestCase(unittest.TestCase):

    def test_perfect(self):
        seq = build_maximal(2, W2)
        pairing = walks.pair_boundaries(seq, W, (W * 2, W * 3, W * 4))
        self.assertEqual(len(pairing.trees), 3)
        self.assertEqual(len(pairing.items), 6)
        self.assertEqual(len(pairing.pairs), 3)
        self.assertTrue(pairing.perfect)
        self.assertIsNone(pairing.certificate)
        self.assertEqual(pairing.unmatched(), [])
        for plus, minus in pairing.pairs:
            self.assertEqual(plus.label, minus.label)
            self.assertEqual((plus.sign, minus.sign), (1, -1))

    def test_one_dimensional(self):
        seq = build_order_minimal(1, W2)
        pairing = walks.pair_boundaries(seq, 3, (W, W * 2))
        self.assertTrue(pairing.perfect)

    def test_too_short(self):
        self.assertRaises(TupleError, walks.pair_boundaries,
                          build_maximal(1, W2), W, (W * 2,))


class StretchTestCase(unittest.TestCase):

    def test_stretch(self):
        shape = walks.TreeShape(1, [(), (0,)], [(0,)])
        stretched = walks.stretch_tree(shape, 2)
        self.assertEqual(stretched.arity, 2)
        self.assertEqual(stretched.addresses,
                         frozenset([(), (0,), (1,)]))
        self.assertEqual(stretched.terminals, frozenset([(0,), (1,)]))
        self.assertEqual(walks.stretch_address((0, 1), 2), (2, 3))

    def test_no_shrinking(self):
        shape = walks.TreeShape(2, [()], [()])
        self.assertRaises(TupleError, walks.stretch_tree, shape, 2)


if __name__ == '__main__':
    unittest.main()
