"""Unit tests for the logging traits."""
from __future__ import absolute_import

import json
import logging
import os
import shutil
import tempfile
import unittest

from . import harness

from hiwalks.base import CheckResult, Failure, Instance
from hiwalks.csequence import build_maximal
from hiwalks.logger import CounterexampleLoggingSuite, ReportLoggingSuite
from hiwalks.walks import walk

W, W2 = harness.W, harness.W2


class ReportUT(ReportLoggingSuite, harness.DummyVerifier):
    pass


class CounterexampleUT(CounterexampleLoggingSuite, harness.DummyVerifier):
    pass


def _drop_file_handlers(name):
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            handler.close()


def _read_lines(path):
    with open(path) as handle:
        return handle.read().splitlines()


class ReportLoggingTestCase(harness.BaseVerifierTestCase):
    def vcls(self):
        return ReportUT

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        _drop_file_handlers("hiwalks.report")
        shutil.rmtree(self.tmpdir)

    def test_report_file(self):
        path = os.path.join(self.tmpdir, "report.log")
        verifier = self.mkverifier({"count": 3, "odd_fail": True,
                                    "report_file": path})
        self.assertTrue(verifier.log_report)
        verifier.verify()
        self.assertEqual(_read_lines(path), [
            "LEMMA dummy instance=(0) verdict=pass",
            "LEMMA dummy instance=(1) verdict=fail",
            "LEMMA dummy instance=(2) verdict=pass",
        ])

    def test_disabled(self):
        path = os.path.join(self.tmpdir, "report.log")
        verifier = self.mkverifier({"log_report": False})
        handler = logging.FileHandler(path)
        logging.getLogger("hiwalks.report").addHandler(handler)
        verifier.verify()
        self.assertEqual(_read_lines(path), [])

    def test_parser_option(self):
        args = ReportUT.arg_parser().parse_args(["-rf", "out.log"])
        self.assertEqual(args.report_file, "out.log")


class CounterexampleLoggingTestCase(harness.BaseVerifierTestCase):
    def vcls(self):
        return CounterexampleUT

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.path = os.path.join(self.tmpdir, "cex.jsonl")

    def tearDown(self):
        _drop_file_handlers("hiwalks.counterexamples")
        shutil.rmtree(self.tmpdir)

    def test_failures_only(self):
        verifier = self.mkverifier({"count": 4, "odd_fail": True,
                                    "counterexample_file": self.path})
        verifier.verify()
        records = [json.loads(line) for line in _read_lines(self.path)]
        self.assertEqual([r["instance"] for r in records], ["(1)", "(3)"])
        self.assertEqual(records[0]["lemma"], "dummy")
        self.assertEqual(records[0]["id"], str(verifier.id))
        self.assertEqual(records[0]["failures"],
                         [{"message": "1 is odd", "trees": {}}])

    def test_trees(self):
        verifier = self.mkverifier({"counterexample_file": self.path})
        tree = walk(build_maximal(2, W2), 1, W, (W * 2, W * 3))
        result = CheckResult(Instance("dummy", (0, 7), (7,)),
                             [Failure("broken", {"walk": tree})])
        verifier.log_counterexample(result)
        record = json.loads(_read_lines(self.path)[0])
        logged = record["failures"][0]["trees"]["walk"]
        self.assertEqual(logged["root"], ["w", "w*2", "w*3"])
        self.assertEqual(len(logged["nodes"]), 3)

    def test_off_by_default(self):
        verifier = self.mkverifier({"odd_fail": True})
        self.assertFalse(verifier.log_counterexamples)


if __name__ == '__main__':
    unittest.main()
