"""Unit tests for the sequence spec file format."""
from __future__ import absolute_import

import os
import shutil
import tempfile
import unittest

from . import harness

from hiwalks import specfile
from hiwalks.club import Interval
from hiwalks.csequence import ExplicitSequence, MaximalSequence, \
    OrderMinimalSequence, SteppedUpSequence, build_maximal
from hiwalks.errors import BuilderError, SpecFileError
from hiwalks.game import build_by_game

W, W2 = harness.W, harness.W2

SAMPLE = """\
ncseq n=2 domain=interval(w^2) base=maximal
# a thinner club at w*2
club D := interval(w*2, from=w+1)
index (w*2) := D
"""

CANONICAL = """\
ncseq n=2 domain=interval(w^2) base=maximal
club D := interval(w*2, from=w+1)
index (w*2) := D
"""


class ParseSpecTestCase(unittest.TestCase):

    def test_sample(self):
        seq = specfile.parse_spec(SAMPLE)
        self.assertIsInstance(seq, ExplicitSequence)
        self.assertEqual(seq.n, 2)
        self.assertEqual(seq.domain, Interval(W2))
        self.assertIsInstance(seq.base, MaximalSequence)
        self.assertEqual(seq.club_of((W * 2,)), Interval(W * 2, W + 1))
        self.assertEqual(seq.club_of((W * 3,)), Interval(W * 3))
        self.assertEqual(seq.named["D"], Interval(W * 2, W + 1))

    def test_canonical_form(self):
        self.assertEqual(specfile.format_spec(specfile.parse_spec(SAMPLE)),
                         CANONICAL)
        self.assertEqual(specfile.format_spec(specfile.parse_spec(CANONICAL)),
                         CANONICAL)

    def test_builtin_form(self):
        self.assertEqual(specfile.format_spec(build_maximal(2, W2)),
                         "ncseq n=2 domain=interval(w^2) base=maximal\n")

    def test_minimal_base(self):
        seq = specfile.parse_spec("ncseq n=1 domain=interval(w*3) "
                                  "base=minimal-fs\n")
        self.assertIsInstance(seq.base, OrderMinimalSequence)
        self.assertEqual(seq.window, W * 3)

    def test_stepped_up_base(self):
        seq = specfile.parse_spec(
            "ncseq n=2 base=stepped-up d=builtin:maximal:w^2 "
            "e=builtin:minimal-fs:w kappa=w s=w\n")
        self.assertIsInstance(seq.base, SteppedUpSequence)
        self.assertEqual(seq.domain, Interval(W2))
        again = specfile.parse_spec(specfile.format_spec(seq))
        self.assertEqual(again.club_of((W * 2,)), seq.club_of((W * 2,)))

    def test_game_output(self):
        played = build_by_game(1, 12)
        text = specfile.format_spec(played)
        self.assertIn("base=inherit", text)
        self.assertIn("# turn 0 player=II move=open", text)
        seq = specfile.parse_spec(text)
        self.assertEqual(seq.n, 1)
        self.assertEqual(seq.domain, played.domain)
        self.assertEqual(seq.club_of((W,)), played.club_of((W,)))


class SpecErrorTestCase(unittest.TestCase):

    def assertSpecError(self, text, line, column=None):
        with self.assertRaises(SpecFileError) as caught:
            specfile.parse_spec(text)
        self.assertEqual(caught.exception.line, line)
        if column is not None:
            self.assertEqual(caught.exception.column, column)
        return caught.exception

    def test_missing_header(self):
        self.assertSpecError("club D := fs(w)\n", 1, 0)
        self.assertSpecError("# only a comment\n", 1, 0)

    def test_bad_header(self):
        self.assertSpecError("ncseq n=0 domain=interval(w)\n", 1, 8)
        self.assertSpecError("ncseq n=1 colour=red\n", 1, 10)
        self.assertSpecError("ncseq n=1 domain=interval(w) base=odd\n", 1)
        self.assertSpecError("ncseq n=1 base=maximal\n", 1)

    def test_not_a_plus_index(self):
        error = self.assertSpecError(
            "ncseq n=2 domain=interval(w^2) base=maximal\n"
            "index (w+1) := finite[w]\n", 2, 5)
        self.assertIn("plus-index", error.message)

    def test_not_cofinal(self):
        error = self.assertSpecError(
            "ncseq n=2 domain=interval(w^2) base=maximal\n"
            "\n"
            "index (w*2) := fs(w*3)\n", 3)
        self.assertIn("cofinal", error.message)

    def test_bad_club_literal(self):
        self.assertSpecError(
            "ncseq n=1 domain=interval(w^2) base=maximal\n"
            "index (w) := bogus(w)\n", 2)

    def test_unknown_line(self):
        self.assertSpecError(
            "ncseq n=1 domain=interval(w^2) base=maximal\n"
            "clubs D := fs(w)\n", 2, 0)

    def test_duplicates(self):
        self.assertSpecError(
            "ncseq n=1 domain=interval(w^2) base=maximal\n"
            "index (w) := fs(w)\n"
            "index (w) := fs(w)\n", 3)
        self.assertSpecError(
            "ncseq n=1 domain=interval(w^2) base=maximal\n"
            "club D := fs(w)\n"
            "club D := fs(w*2)\n", 3, 5)

    def test_message_has_position(self):
        error = self.assertSpecError("club D := fs(w)\n", 1)
        self.assertTrue(str(error).startswith("line 1, column 1:"))


class ResolveTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_builtin(self):
        seq = specfile.builtin("builtin:maximal:w^2", 2)
        self.assertIsInstance(seq, MaximalSequence)
        self.assertEqual(seq.n, 2)
        self.assertEqual(seq.ref, "builtin:maximal:w^2")
        self.assertEqual(specfile.resolve("builtin:minimal-fs:w*3").n, 1)

    def test_bad_builtin(self):
        self.assertRaises(BuilderError, specfile.builtin, "builtin:nope:w")
        self.assertRaises(BuilderError, specfile.builtin, "builtin:maximal:")
        self.assertRaises(BuilderError, specfile.builtin,
                          "builtin:maximal:w+x")

    def test_file(self):
        path = os.path.join(self.tmpdir, "sample.ncs")
        specfile.write_spec(specfile.parse_spec(SAMPLE), path)
        seq = specfile.resolve(path)
        self.assertEqual(seq.club_of((W * 2,)), Interval(W * 2, W + 1))
        self.assertEqual(specfile.resolve(path, 2).n, 2)
        self.assertRaises(BuilderError, specfile.resolve, path, 1)


if __name__ == '__main__':
    unittest.main()
