# coding=utf-8
"""Coherent n-C-sequences built by playing the strategic closure game.

Player II plays the even turns and follows a fixed strategy: at a successor
turn it extends the top ordinal by one, and at a limit turn ``ξ`` it closes
the play with ``C(δ^ξ) = {δ^η : η < ξ}``. Player I plays the odd turns
through a pluggable adversary.

Turns run through ``ω·b + i`` for ``i <= block``. The unplayed part of an
ω-block is taken to be the trivial continuation (one successor step per
turn), so a block closed at ``δ_last`` contributes ``[δ_last, δ_last + ω)``
to the limit club.

Contents
--------

:Advance: Player I move: ``k`` successor steps.
:Leap: Player I move: ``j`` new limits, then ``k`` successor steps.
:Extend: Player I move: extend to an ordinal with explicit limit clubs.
:TrivialAdversary: Always plays ``Advance(1)``.
:RandomAdversary: Seeded random ``Advance`` and ``Leap`` moves.
:ScriptedAdversary: Replays a list of moves.
:GameSequence: The n-C-sequence of a finished game.
:GameBuilder: Plays the game.
:build_by_game: Convenience wrapper around ``GameBuilder``.

"""

import argparse
import collections
import logging
import random
import uuid

from . import ordinal as ords
from .club import Explicit, Fundamental, Interval, Union
from .csequence import InheritingSequence
from .errors import BuilderError, MoveRejected
from .ordinal import OMEGA, ONE, ZERO, Ordinal

LOG = logging.getLogger("hiwalks.game")

PLAYER_I = "I"
PLAYER_II = "II"

Turn = collections.namedtuple("Turn", ["turn", "player", "move", "delta"])


class Advance(object):
    """Extend the top ordinal by ``k`` successor steps."""

    def __init__(self, k):
        self.k = k

    def diagnose(self):
        if not isinstance(self.k, int) or self.k < 0:
            return ["step count %r is not a natural number" % (self.k,)]
        return []

    def plan(self, delta):
        return delta + self.k, {}

    def __str__(self):
        return "advance(%i)" % self.k

    def __repr__(self):
        return "Advance(%r)" % self.k


class Leap(object):
    """Close ``j`` new limits with fundamental-sequence clubs, then take
    ``k`` successor steps."""

    def __init__(self, j, k=0):
        self.j = j
        self.k = k

    def diagnose(self):
        problems = []
        if not isinstance(self.j, int) or self.j < 1:
            problems.append("limit count %r is not positive" % (self.j,))
        if not isinstance(self.k, int) or self.k < 0:
            problems.append("step count %r is not a natural number"
                            % (self.k,))
        return problems

    def plan(self, delta):
        return delta + OMEGA * self.j + self.k, {}

    def __str__(self):
        return "leap(%i,%i)" % (self.j, self.k)

    def __repr__(self):
        return "Leap(%r, %r)" % (self.j, self.k)


class Extend(object):
    """Extend the top ordinal to ``top``, giving explicit clubs to some of
    the new limits. Unlisted limits get fundamental-sequence clubs.

    Args:
        top (Ordinal): The new top ordinal.
        clubs (Dict[Ordinal, Club]): Clubs of new limit ordinals.
    """

    def __init__(self, top, clubs=None):
        self.top = ords.ordinal(top)
        self.clubs = dict((ords.ordinal(k), v)
                          for k, v in (clubs or {}).items())

    def diagnose(self):
        return []

    def plan(self, delta):
        return self.top, dict(self.clubs)

    def __str__(self):
        listed = ",".join("%s:%s" % (k, v)
                          for k, v in sorted(self.clubs.items()))
        return "extend(%s%s)" % (self.top, "; " + listed if listed else "")

    def __repr__(self):
        return "Extend(%r, %r)" % (self.top, self.clubs)


class TrivialAdversary(object):
    """Player I always extends by one successor step."""

    def propose(self, game):
        return Advance(1)


class RandomAdversary(object):
    """Player I picks seeded random ``Advance`` and ``Leap`` moves."""

    def __init__(self, rng=None, leap_prob=0.3):
        self.random = rng or random.Random()
        self.leap_prob = leap_prob

    def propose(self, game):
        if self.random.random() < self.leap_prob:
            return Leap(self.random.randint(1, 2), self.random.randint(0, 2))
        return Advance(self.random.randint(0, 3))


class ScriptedAdversary(object):
    """Replays ``moves``, then falls back to ``Advance(1)``."""

    def __init__(self, moves):
        self.moves = list(moves)

    def propose(self, game):
        if self.moves:
            return self.moves.pop(0)
        return Advance(1)


ADVERSARIES = {
    "trivial": TrivialAdversary,
    "random": RandomAdversary,
}


class GameSequence(InheritingSequence):
    """The sequence of a finished game on ``δ_final + 1``.

    Every accumulation index ``(β,) + γ`` gets the club of ``β`` itself:
    the limit club ``T`` at Player II limits, the club Player I chose at its
    own limits.
    """

    kind = "game-built"

    def __init__(self, n, domain, top_clubs, transcript=()):
        super(GameSequence, self).__init__(n, domain, top_clubs)
        self.transcript = list(transcript)

    def recorded(self):
        points = set(turn.delta for turn in self.transcript)
        points.update(self.top_clubs)
        return points

    def landmarks(self, window=None, max_coef=3):
        window = self.window if window is None else window
        found = set(ords.landmarks(window, max_coef))
        found.update(x for x in self.recorded() if x < window)
        return sorted(found)

    def transcript_lines(self):
        return ["# turn %s player=%s move=%s delta=%s"
                % (t.turn, t.player, t.move, t.delta) for t in self.transcript]


class GameBuilder(object):
    """Plays the game for a number of turns.

    Args:
        config (Dict): ``n``, ``rounds``, ``block``, ``seed`` and
            ``adversary`` (a name from ``ADVERSARIES`` or an object with a
            ``propose(game)`` method).
    """

    def __init__(self, config={}):
        self.id = uuid.uuid4()
        self.config = config
        self.random = random.Random()

        self.n = self.config.setdefault("n", 1)
        self.rounds = self.config.setdefault("rounds", 2)
        self.block = self.config.setdefault("block", 8)
        if self.rounds < 1:
            raise BuilderError("rounds must be positive")
        if self.block < 1:
            raise BuilderError("block must be positive")

        if "seed" in self.config:
            self.random.seed(self.config["seed"])

        adversary = self.config.setdefault("adversary", "trivial")
        if isinstance(adversary, str):
            if adversary not in ADVERSARIES:
                raise BuilderError("unknown adversary %r" % adversary)
            cls = ADVERSARIES[adversary]
            adversary = cls(self.random) if cls is RandomAdversary else cls()
        self.adversary = adversary

        self.delta = ZERO
        self.position = (0, 0)
        self.turn_points = []
        self.tails = []
        self.top_clubs = {}
        self.transcript = []

    @classmethod
    def arg_parser(cls):
        parser = argparse.ArgumentParser(add_help=False)
        parser.add_argument("--rounds", type=int,
                            help="Number of turns after the opening one")
        parser.add_argument("--block", type=int,
                            help="Explicit turns per omega-block")
        parser.add_argument("--adversary", choices=sorted(ADVERSARIES),
                            help="Player I strategy")
        return parser

    @property
    def turn(self):
        b, i = self.position
        return Ordinal.omega(1, b) + i

    def record(self, player, move):
        self.transcript.append(Turn(self.turn, player, move, self.delta))
        LOG.debug("turn %s player=%s move=%s delta=%s", self.turn, player,
                  move, self.delta)

    def advance_turn(self):
        b, i = self.position
        self.position = (b, i + 1) if i < self.block else (b + 1, 0)

    def play(self):
        """Play ``rounds`` turns after the opening and return the sequence."""
        self.turn_points.append(self.delta)
        self.record(PLAYER_II, "open")
        for _ in range(self.rounds):
            self.advance_turn()
            b, i = self.position
            if i == 0:
                self.close_block()
            elif i % 2:
                self.player_one()
            else:
                self.delta = self.delta + ONE
                self.turn_points.append(self.delta)
                self.record(PLAYER_II, "step")

        LOG.info("game finished at turn %s with delta %s", self.turn,
                 self.delta)
        return GameSequence(self.n, Interval(self.delta + ONE),
                            self.top_clubs, self.transcript)

    def limit_club(self, limit):
        parts = [Explicit(self.turn_points, bound=limit)]
        parts.extend(Interval(hi, start=lo) for lo, hi in self.tails)
        return Union(parts)

    def close_block(self):
        self.tails.append((self.delta, self.delta + OMEGA))
        limit = self.delta + OMEGA
        self.top_clubs[limit] = self.limit_club(limit)
        self.delta = limit
        self.turn_points.append(limit)
        self.record(PLAYER_II, "limit")

    def player_one(self):
        move = self.adversary.propose(self)
        top, clubs = self.check_move(move)
        for limit, club in clubs.items():
            self.top_clubs[limit] = club
        self.delta = top
        self.turn_points.append(top)
        self.record(PLAYER_I, move)

    def check_move(self, move):
        """Validate a Player I move against the current position.

        Raises:
            MoveRejected: With one diagnosis line per problem.
        """
        problems = move.diagnose()
        if problems:
            raise MoveRejected(move, problems)
        top, clubs = move.plan(self.delta)
        if top < self.delta:
            problems.append("%s is below the current top %s" % (top,
                                                               self.delta))
        for limit, club in sorted(clubs.items()):
            if limit <= self.delta:
                problems.append("%s is already decided; changing its club "
                                "breaks end-extension" % limit)
            elif limit > top:
                problems.append("%s is above the new top %s" % (limit, top))
            elif not limit.is_limit():
                problems.append("%s is not a limit" % limit)
            elif club.ssup() != limit:
                problems.append("club %s of %s is not cofinal in it"
                                % (club, limit))
        if not problems:
            problems.extend(self.coherence_problems(clubs))
        if problems:
            LOG.warning("rejected %s at turn %s", move, self.turn)
            raise MoveRejected(move, problems)
        return top, clubs

    def coherence_problems(self, clubs):
        problems = []
        known = set(self.turn_points) | set(self.top_clubs) | set(clubs)
        for limit, club in sorted(clubs.items()):
            universe = set(ords.landmarks(limit, 3))
            universe.update(x for x in known if x < limit)
            for alpha in club.acc_points(sorted(universe)):
                expected = clubs.get(alpha) or self.top_clubs.get(alpha) \
                    or Fundamental(alpha)
                if not club.equal_below(expected, alpha):
                    problems.append("club of %s disagrees with the club of %s "
                                    "below %s" % (limit, alpha, alpha))
        return problems


def build_by_game(n, rounds, adversary="trivial", seed=0, block=8):
    """Play the game and return the resulting coherent n-C-sequence."""
    builder = GameBuilder({"n": n, "rounds": rounds, "adversary": adversary,
                           "seed": seed, "block": block})
    return builder.play()
