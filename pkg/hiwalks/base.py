"""Core verification driver.

Contents
--------

:Instance: One planned check.
:CheckResult: The outcome of one check.
:Failure: One failed assertion, with the trees it concerns.
:Verifier: The base class from which every checking behavior inherits.

"""

import argparse
import collections
import random
import uuid

from .walks import DEFAULT_CAP

Instance = collections.namedtuple("Instance", ["lemma", "key", "args"])
Failure = collections.namedtuple("Failure", ["message", "trees"])


class CheckResult(object):
    """The failures of one instance; none means it passed."""

    def __init__(self, instance, failures=()):
        self.instance = instance
        self.failures = list(failures)

    @property
    def passed(self):
        return not self.failures

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def __repr__(self):
        return "CheckResult(%s, %s)" % (self.instance.lemma, self.verdict)


# pylint: disable=too-many-instance-attributes
class Verifier(object):
    """Base class for batch checkers.

    A verifier plans a list of instances, then checks them one at a time,
    calling ``pre_check`` and ``post_check`` around each one.
    """

    def __init__(self, config={}):
        """Initialize a verifier.

        Args:
            config (Dict): Configuration values; ``seed``, ``max_instances``
                and ``cap`` are read here.
        """
        self.id = uuid.uuid4()
        self.iteration = 0
        self.config = config
        self.queue = None
        self.results = []
        self.random = random.Random()

        self.max_instances = self.config.setdefault("max_instances", 300)
        if self.max_instances <= 0:
            self.max_instances = 1
        self.cap = self.config.setdefault("cap", DEFAULT_CAP)
        self.seed = self.config.setdefault("seed", 0)
        self.random.seed(self.seed)

    @classmethod
    def arg_parser(cls):
        """Add arguments to an ``ArgumentParser`` object for configuration."""
        parser = argparse.ArgumentParser(add_help=False)

        parser.add_argument("--seed", "-s", type=int,
                            help="Seed for random number generator")
        parser.add_argument("--max-instances", type=int,
                            help="Maximum number of instances per check")
        parser.add_argument("--cap", type=int,
                            help="Maximum number of nodes per walk")

        return parser

    def plan(self):
        """Fill the queue of instances."""
        if self.queue is None:
            self.queue = list(self.instances())

    def verify(self):
        """Check every planned instance and return the report."""
        self.plan()

        try:
            while not self.is_finished():
                instance = self.queue[self.iteration]
                self.iteration += 1
                self.pre_check(instance)
                result = self.check(instance)
                self.results.append(result)
                self.post_check(result)

        except KeyboardInterrupt:
            pass

        return self.report()

    def is_finished(self):
        return self.iteration >= len(self.queue)

    def pre_check(self, instance):
        """Do anything necessary before checking an instance."""
        pass

    def post_check(self, result):
        """Do anything necessary after checking an instance."""
        pass

    def instances(self):
        """Yield the ``Instance`` objects to check."""
        raise NotImplementedError

    def check(self, instance):
        """Return the ``CheckResult`` of one instance."""
        raise NotImplementedError

    def report(self):
        raise NotImplementedError

    def instance_str(self, instance):
        """Return a readable representation of an instance."""
        raise NotImplementedError
