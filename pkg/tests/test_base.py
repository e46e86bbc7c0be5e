"""Unit tests for the base Verifier class.

"""
from __future__ import absolute_import


import unittest

from . import harness

from hiwalks.base import CheckResult, Failure, Instance


class VerifierTestCase(harness.BaseVerifierTestCase):

    def vcls(self):
        return harness.DummyVerifier

    def test_finished(self):
        verifier = self.mkverifier({"count": 3})
        verifier.plan()
        self.assertFalse(verifier.is_finished())

        verifier.iteration = 3
        self.assertTrue(verifier.is_finished())

    def test_verify(self):
        verifier = self.mkverifier({"count": 4})
        results = verifier.verify()
        self.assertEqual(len(results), 4)
        self.assertTrue(all(r.passed for r in results))
        self.assertEqual(verifier.iteration, 4)

    def test_max_instances(self):
        verifier = self.mkverifier({"count": 10, "max_instances": 2})
        self.assertEqual(len(verifier.verify()), 2)

        verifier = self.mkverifier({"count": 10, "max_instances": 0})
        self.assertEqual(verifier.max_instances, 1)

    def test_failures(self):
        verifier = self.mkverifier({"count": 4, "odd_fail": True})
        verdicts = [r.verdict for r in verifier.verify()]
        self.assertEqual(verdicts, ["pass", "fail", "pass", "fail"])

    def test_interrupt(self):
        verifier = self.mkverifier({"count": 4})

        def interrupt(instance):
            if instance.args[0] == 2:
                raise KeyboardInterrupt

        verifier.pre_check = interrupt
        results = verifier.verify()
        self.assertEqual(len(results), 2)


class CheckResultTestCase(unittest.TestCase):

    def test_verdict(self):
        instance = Instance("dummy", (0, 0), ())
        self.assertTrue(CheckResult(instance).passed)
        self.assertEqual(CheckResult(instance).verdict, "pass")

        failed = CheckResult(instance, [Failure("broken", {})])
        self.assertFalse(failed.passed)
        self.assertEqual(failed.verdict, "fail")


if __name__ == '__main__':
    unittest.main()
