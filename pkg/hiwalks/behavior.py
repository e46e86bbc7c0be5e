"""Additional behaviors for verifiers.


Contents
--------
:FailureTriggerSuite:
    A verifier that triggers an event whenever an instance fails.
:FailFastSuite:
    A verifier that can stop at its first failure.

"""

from . import base


# pylint: disable=abstract-method
class FailureTriggerSuite(base.Verifier):
    """A verifier with an event for failures.

    When an instance fails, the ``new_failure`` method is invoked and the
    result is kept in ``self.failed``.
    """

    def __init__(self, config={}):
        super(FailureTriggerSuite, self).__init__(config)
        self.failed = []

    def post_check(self, result):
        super(FailureTriggerSuite, self).post_check(result)
        if not result.passed:
            self.failed.append(result)
            self.new_failure(result)

    def new_failure(self, result):
        """Triggered when an instance fails."""
        pass


class FailFastSuite(FailureTriggerSuite):
    """A verifier that terminates after the first failure.

    Set ``fail_fast``/``--fail-fast`` to enable it; otherwise every planned
    instance is checked.
    """

    def __init__(self, config={}):
        super(FailFastSuite, self).__init__(config)
        self.fail_fast = self.config.setdefault("fail_fast", False)

    @classmethod
    def arg_parser(cls):
        parser = super(FailFastSuite, cls).arg_parser()
        parser.add_argument("--fail-fast", action="store_true", default=None,
                            help="Stop at the first failing instance")
        return parser

    def is_finished(self):
        if self.fail_fast and self.failed:
            return True
        return super(FailFastSuite, self).is_finished()
