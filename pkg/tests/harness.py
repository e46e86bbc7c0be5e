"""Test implementations and base test cases.

"""
from __future__ import absolute_import

import argparse
import itertools
import random
import unittest

from . import context  # noqa: F401

from hiwalks import ordinal as ords
from hiwalks.base import CheckResult, Failure, Instance, Verifier
from hiwalks.club import Interval
from hiwalks.ordinal import OMEGA, Ordinal

W = OMEGA
W2 = Ordinal.omega(2)
W3 = Ordinal.omega(3)


def w(k=1):
    """``ω·k``."""
    return OMEGA * k


def small_universe(bound=W2, max_coef=3):
    return ords.landmarks(bound, max_coef)


def seeded_choice(candidates, count, seed=0):
    """``count`` distinct candidates picked with a seeded generator."""
    candidates = list(candidates)
    if len(candidates) < count:
        raise ValueError("only %i candidates" % len(candidates))
    return random.Random(seed).sample(candidates, count)


def families(universe, length):
    """Every ``(α, β)`` with ``β`` strictly increasing and ``α <= β[0]`` a
    limit."""
    limits = [p for p in universe if p.is_limit()]
    for betas in itertools.combinations(sorted(universe), length):
        for alpha in limits:
            if alpha <= betas[0]:
                yield alpha, betas


class DummyVerifier(Verifier):
    """Checks the integers ``0 .. count-1``; odd ones fail when ``odd_fail``
    is set."""

    def __init__(self, config={}):
        super(DummyVerifier, self).__init__(config)
        self.count = self.config.setdefault("count", 5)
        self.odd_fail = self.config.setdefault("odd_fail", False)

    def instances(self):
        for k in range(min(self.count, self.max_instances)):
            yield Instance("dummy", (0, k), (k,))

    def check(self, instance):
        k = instance.args[0]
        if self.odd_fail and k % 2:
            return CheckResult(instance, [Failure("%i is odd" % k, {})])
        return CheckResult(instance)

    def report(self):
        return list(self.results)

    def instance_str(self, instance):
        return "(%i)" % instance.args[0]


class ObservableVerifier(Verifier):
    def __init__(self, config={}):
        super(ObservableVerifier, self).__init__(config)
        self.observers = {}

    def register(self, event, callback):
        self.observers.setdefault(event, [])
        self.observers[event].append(callback)

    def __trigger(self, event, value):
        if event in self.observers:
            for cb in self.observers[event]:
                cb(value)

    def pre_check(self, instance):
        self.__trigger("pre_check", instance)
        super(ObservableVerifier, self).pre_check(instance)

    def post_check(self, result):
        super(ObservableVerifier, self).post_check(result)
        self.__trigger("post_check", result)


def observable(cls):
    class Watched(ObservableVerifier, cls):
        def __init__(self, config={}):
            super(Watched, self).__init__(config)

    return Watched


class BaseVerifierTestCase(unittest.TestCase):

    def vcls(self):
        raise NotImplementedError

    def config(self):
        return {}

    def mkverifier(self, config={}):
        conf = self.config()
        conf.update(config)
        return self.vcls()(conf)

    def mkobservable(self, config={}):
        conf = self.config()
        conf.update(config)
        return observable(self.vcls())(conf)

    def test_parser(self):
        parser = self.vcls().arg_parser()
        self.assertIsInstance(parser, argparse.ArgumentParser)
        self.assertFalse(parser.add_help)

    def test_basic_config(self):
        verifier = self.mkverifier({"max_instances": 7, "seed": 13})
        self.assertEqual(verifier.max_instances, 7)
        self.assertEqual(verifier.seed, 13)

        verifier = self.mkverifier()
        self.assertIsInstance(verifier.max_instances, int)
        self.assertTrue(verifier.max_instances > 0)
        self.assertTrue(verifier.cap > 0)

    def test_check_hooks(self):
        counter = [0]
        pre = []
        post = []

        def pre_hook(_):
            counter[0] += 1
            pre.append(counter[0])

        def post_hook(_):
            counter[0] += 1
            post.append(counter[0])

        verifier = self.mkobservable()
        verifier.register("pre_check", pre_hook)
        verifier.register("post_check", post_hook)
        verifier.verify()

        self.assertEqual(len(pre), verifier.iteration)
        self.assertEqual(len(post), verifier.iteration)
        for before, after in zip(pre, post):
            self.assertEqual(after, before + 1)

    def test_deterministic(self):
        first = self.mkverifier({"seed": 3})
        second = self.mkverifier({"seed": 3})
        first.plan()
        second.plan()
        self.assertEqual(first.queue, second.queue)


class BaseSequenceTestCase(unittest.TestCase):
    """Invariants every n-C-sequence builder must satisfy on a sample
    universe."""

    def mkseq(self):
        raise NotImplementedError

    def universe(self, seq):
        return [x for x in small_universe(seq.window) if x < seq.window]

    def test_domain_is_club(self):
        seq = self.mkseq()
        self.assertTrue(seq.n >= 1)
        self.assertIs(seq.club_of(()), seq.domain)

    def test_clubs_are_below_first_entry(self):
        seq = self.mkseq()
        levels = seq.valid_indices(self.universe(seq))
        for level in levels[1:]:
            for index in level:
                club = seq.club_of(index)
                for x in self.universe(seq):
                    if club.member(x):
                        self.assertTrue(x < index[0], "%s in C%s"
                                        % (x, ords.format_tuple(index)))

    def test_accumulation_clubs_are_cofinal(self):
        seq = self.mkseq()
        levels = seq.valid_indices(self.universe(seq))
        for level in levels[1:]:
            for index in level:
                parent = seq.club_of(index[1:])
                if parent.is_acc_point(index[0]):
                    self.assertEqual(seq.club_of(index).ssup(), index[0])

    def test_successor_clubs_are_singletons(self):
        seq = self.mkseq()
        levels = seq.valid_indices(self.universe(seq))
        for level in levels[1:]:
            for index in level:
                parent = seq.club_of(index[1:])
                if not parent.is_acc_point(index[0]):
                    self.assertTrue(seq.club_of(index).is_finite())
                    self.assertTrue(len(seq.club_of(index).elements()) <= 1)

    def test_index_valid_matches_levels(self):
        seq = self.mkseq()
        levels = seq.valid_indices(self.universe(seq))
        for level in levels:
            for index in level:
                self.assertTrue(seq.index_valid(index))


def interval(bound, start=0):
    return Interval(bound, start)
