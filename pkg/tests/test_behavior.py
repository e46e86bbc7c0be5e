"""Unit tests for verifier behaviors.

"""
from __future__ import absolute_import


import unittest

from . import harness

from hiwalks.behavior import FailFastSuite, FailureTriggerSuite


class FailureTriggerUT(FailureTriggerSuite, harness.DummyVerifier):
    def __init__(self, config={}):
        super(FailureTriggerUT, self).__init__(config)
        self.seen = []

    def new_failure(self, result):
        self.seen.append(result.instance.args[0])


class FailureTriggerTestCase(harness.BaseVerifierTestCase):
    def vcls(self):
        return FailureTriggerUT

    def test_new_failure(self):
        verifier = self.mkverifier({"count": 6, "odd_fail": True})
        verifier.verify()
        self.assertEqual(verifier.seen, [1, 3, 5])
        self.assertEqual(len(verifier.failed), 3)

    def test_no_failures(self):
        verifier = self.mkverifier({"count": 6})
        verifier.verify()
        self.assertEqual(verifier.seen, [])


class FailFastUT(FailFastSuite, harness.DummyVerifier):
    pass


class FailFastTestCase(harness.BaseVerifierTestCase):
    def vcls(self):
        return FailFastUT

    def test_stops_at_first_failure(self):
        verifier = self.mkverifier({"count": 6, "odd_fail": True,
                                    "fail_fast": True})
        results = verifier.verify()
        self.assertEqual(len(results), 2)
        self.assertEqual(results[-1].verdict, "fail")

    def test_runs_everything_by_default(self):
        verifier = self.mkverifier({"count": 6, "odd_fail": True})
        self.assertEqual(len(verifier.verify()), 6)

    def test_parser_flag(self):
        parser = FailFastUT.arg_parser()
        self.assertTrue(parser.parse_args(["--fail-fast"]).fail_fast)
        self.assertIsNone(parser.parse_args([]).fail_fast)


if __name__ == '__main__':
    unittest.main()
