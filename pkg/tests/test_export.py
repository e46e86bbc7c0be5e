"""Unit tests for tree renderings."""
from __future__ import absolute_import

import json
import os
import shutil
import tempfile
import unittest

from . import harness

from hiwalks import export
from hiwalks.csequence import build_maximal
from hiwalks.walks import walk

W, W2 = harness.W, harness.W2

TEXT = """\
<> +(w,w*2,w*3)
  <0> +(w,w,w*3) *
  <1> -(w,w,w*2) *
"""

DOT = """\
digraph walk {
  r[label="+(w,w*2,w*3)", color=blue, shape=ellipse];
  r_0[label="+(w,w,w*3)", color=blue, shape=box];
  r_1[label="-(w,w,w*2)", color=red, shape=box];
  r -> r_0;
  r -> r_1;
}
"""


class ExportTestCase(unittest.TestCase):

    def setUp(self):
        self.tree = walk(build_maximal(2, W2), 1, W, (W * 2, W * 3))

    def test_text(self):
        self.assertEqual(export.tree_to_text(self.tree), TEXT)

    def test_dot(self):
        self.assertEqual(export.tree_to_dot(self.tree), DOT)
        self.assertEqual(export.node_id((1, 0)), "r_1_0")

    def test_dict(self):
        data = export.tree_to_dict(self.tree)
        self.assertEqual(data["n"], 2)
        self.assertEqual(data["root"], ["w", "w*2", "w*3"])
        self.assertFalse(data["truncated"])
        self.assertEqual(data["nodes"][0]["flags"],
                         ["bad", "extreme", "splitting"])
        self.assertEqual(data["nodes"][2],
                         {"address": [1], "sign": -1,
                          "label": ["w", "w", "w*2"],
                          "flags": ["extreme", "spectacled", "terminal"]})

    def test_json(self):
        data = json.loads(export.tree_to_json(self.tree))
        self.assertEqual(data, export.tree_to_dict(self.tree))

    def test_render(self):
        self.assertEqual(export.render(self.tree), TEXT)
        self.assertEqual(export.render(self.tree, "dot"), DOT)
        self.assertRaises(ValueError, export.render, self.tree, "svg")

    def test_write(self):
        tmpdir = tempfile.mkdtemp()
        try:
            path = os.path.join(tmpdir, "walk.dot")
            export.write_tree(self.tree, path, "dot")
            with open(path) as handle:
                self.assertEqual(handle.read(), DOT)
        finally:
            shutil.rmtree(tmpdir)


if __name__ == '__main__':
    unittest.main()
