# coding=utf-8
"""Locally semi-constant detection and the family coherence verifier.

A function ``f`` on ordinals is semi-constant at a limit ``α`` when it is
constant on some interval ``(η, α)``. Below ``α`` only finitely many points
can be tried, so ``check_semi_constant`` samples ``f`` along the fundamental
sequence of ``α`` from a starting threshold and reports a witness once the
final run of equal values is long enough.

The starting threshold is ``xi_star``: the largest lower trace below ``α``
in the walk from ``α``, raised to cover every bad node. For a bad node the
threshold is searched for: it is the least tail candidate from which the
walks from smaller first entries keep matching the walk from ``α`` around
that node.

Contents
--------

:STABILIZED: Verdict when a witness was found.
:NOT_STABILIZED: Verdict when the budget ran out.
:tail_candidates: The points below ``α`` tried by every search.
:XiWalks: Memoized walks with a varying first entry.
:bad_node_mismatches: Nodes where the walk from ``ξ`` does not follow a bad
    node of the walk from ``α``.
:ThresholdReport: The parts of ``xi_star``.
:find_thresholds: Compute a ``ThresholdReport``.
:xi_star: The end-extension threshold of a walk.
:StabilizationReport: Result of ``check_semi_constant``.
:check_semi_constant: Sample a function along a fundamental sequence.
:verify_family_coherence: Check that an alternating family sum is
    semi-constant at ``α``.
:unboundedness_probe: Look for a pair with a large ``rho2``.

"""

import logging

from . import ordinal as ords
from .characteristics import family_alternating_sum, rho2_n
from .csequence import check_coherence
from .errors import IncoherentSequenceError, InvalidIndexError, OrdinalError, \
    TupleError
from .ordinal import ZERO
from .walks import DEFAULT_CAP, classify_nodes, is_spectacled, lower_traces, \
    walk, BAD

LOG = logging.getLogger("hiwalks.analysis")

STABILIZED = "stabilized-with-witness"
NOT_STABILIZED = "not-stabilized-within-budget"

DEFAULT_BUDGET = 16
DEFAULT_MIN_CONFIRM = 8
DEFAULT_SEARCH_DEPTH = 16


def _require_limit(alpha):
    if not alpha.is_limit():
        raise OrdinalError("%s is not a limit" % alpha)


def tail_candidates(alpha, universe=None, depth=DEFAULT_SEARCH_DEPTH):
    """Points of ``universe`` below ``α`` together with the first ``depth``
    elements of the fundamental sequence of ``α``, in increasing order."""
    alpha = ords.ordinal(alpha)
    _require_limit(alpha)
    found = set(x for x in (universe or ()) if x < alpha)
    found.update(ords.fundamental_sequence(alpha, k) for k in range(depth))
    return sorted(found)


class XiWalks(object):
    """Walks from ``(ξ,) + γ`` with a fixed sign, built on demand."""

    def __init__(self, seq, sign, gammas, cap=DEFAULT_CAP):
        self.seq = seq
        self.sign = sign
        self.gammas = tuple(gammas)
        self.cap = cap
        self._trees = {}

    def __call__(self, xi):
        tree = self._trees.get(xi)
        if tree is None:
            tree = walk(self.seq, self.sign, xi, self.gammas, self.cap)
            self._trees[xi] = tree
        return tree


def eta(seq, alpha, xi):
    """``min(C(α) ∖ ξ)``, or ``None`` when ``α`` is not in the domain."""
    try:
        return seq.club_of((alpha,)).min_above(xi)
    except InvalidIndexError:
        return None


def bad_node_mismatches(tree, x, xi, xi_tree, eta_xi):
    """Addresses around the bad node ``x`` where the walk from ``ξ`` does not
    match the walk from ``α``.

    Ancestors of ``x``, ``x`` itself and the non-spectacled nodes below it
    must carry the label with ``α`` replaced by ``ξ``; spectacled nodes below
    ``x`` must carry it with ``(α, α)`` replaced by ``(ξ, η_ξ)``. Signs must
    agree everywhere.
    """
    bad = []
    depth = len(x)
    for y, (sign, label) in tree.nodes.items():
        if y == x[:len(y)]:
            expected = ords.substitute(label, {0: xi})
        elif y[:depth] == x:
            if is_spectacled(label):
                if eta_xi is None:
                    bad.append(y)
                    continue
                expected = ords.substitute(label, {0: xi, 1: eta_xi})
            else:
                expected = ords.substitute(label, {0: xi})
        else:
            continue
        if xi_tree.nodes.get(y) != (sign, expected):
            bad.append(y)
    return bad


class ThresholdReport(object):
    """The parts of ``xi_star`` for one walk.

    Attributes:
        lower (Ordinal): Largest lower trace below ``α`` (0 if none).
        bad (Dict[tuple, Ordinal]): Searched threshold per bad node, ``None``
            when the search failed.
    """

    def __init__(self, alpha, gammas, sign, lower, bad):
        self.alpha = alpha
        self.gammas = tuple(gammas)
        self.sign = sign
        self.lower = lower
        self.bad = dict(bad)

    @property
    def analytic(self):
        return not self.bad

    @property
    def failed(self):
        return sorted(x for x, found in self.bad.items() if found is None)

    @property
    def value(self):
        found = [t for t in self.bad.values() if t is not None]
        return max([self.lower] + found)

    def to_dict(self):
        return {
            "alpha": str(self.alpha),
            "gammas": [str(g) for g in self.gammas],
            "lower": str(self.lower),
            "value": str(self.value),
            "bad": [{"address": list(x),
                     "threshold": None if t is None else str(t)}
                    for x, t in sorted(self.bad.items())],
        }

    def __repr__(self):
        return "ThresholdReport(value=%s, bad=%i, failed=%i)" % (
            self.value, len(self.bad), len(self.failed))


def search_threshold(candidates, passes):
    """Lowest candidate from which every higher candidate passes, scanning
    downwards; ``None`` if the highest candidate fails."""
    threshold = None
    for xi in reversed(candidates):
        if not passes(xi):
            break
        threshold = xi
    return threshold


def find_thresholds(seq, alpha, gammas, sign=1, universe=None,
                    search_depth=DEFAULT_SEARCH_DEPTH, cap=DEFAULT_CAP,
                    walks=None):
    """Compute the lower-trace bound and the bad-node thresholds of the walk
    from ``(α,) + γ``.

    Args:
        walks (XiWalks): Walk cache to share with the caller.
    """
    alpha = ords.ordinal(alpha)
    _require_limit(alpha)
    tree = walk(seq, sign, alpha, gammas, cap)
    below = [v for v in lower_traces(tree).values() if v < alpha]
    lower = max(below) if below else ZERO

    bad_nodes = classify_nodes(tree).having(BAD)
    thresholds = {}
    if bad_nodes:
        walks = walks or XiWalks(seq, sign, tree.label(())[1:], cap)
        candidates = tail_candidates(alpha, universe, search_depth)
        for x in bad_nodes:
            def passes(xi, x=x):
                return not bad_node_mismatches(tree, x, xi, walks(xi),
                                               eta(seq, alpha, xi))
            thresholds[x] = search_threshold(candidates, passes)
            if thresholds[x] is None:
                LOG.warning("no threshold for bad node %s of %s", x,
                            ords.format_tuple(tree.label(())))
    return ThresholdReport(alpha, tree.label(())[1:], sign, lower, thresholds)


def xi_star(seq, alpha, gammas, sign=1, universe=None,
            search_depth=DEFAULT_SEARCH_DEPTH, cap=DEFAULT_CAP):
    return find_thresholds(seq, alpha, gammas, sign, universe, search_depth,
                           cap).value


class StabilizationReport(object):
    """Outcome of sampling a function below a limit.

    Attributes:
        alpha (Ordinal): The limit probed.
        xi_star (Ordinal): Sampling starts strictly above it.
        samples (List[Tuple[Ordinal, Any]]): ``(ξ, f(ξ))`` in increasing
            ``ξ``.
        witness (Ordinal): First ``ξ`` of the final run of equal values when
            that run has at least ``min_confirm`` samples and the threshold
            is not refuted, else ``None``.
        threshold_refuted (bool): ``xi_star`` is given and some sample
            above it differs from the final value.
        thresholds (List[ThresholdReport]): How ``xi_star`` was obtained.
    """

    def __init__(self, alpha, xi_star, samples, min_confirm, thresholds=()):
        self.alpha = alpha
        self.xi_star = xi_star
        self.samples = list(samples)
        self.min_confirm = min_confirm
        self.thresholds = list(thresholds)

        run = 0
        for _, value in reversed(self.samples):
            if value != self.samples[-1][1]:
                break
            run += 1
        self.run = run
        # with a threshold every sample above it must agree
        self.threshold_refuted = xi_star is not None and \
            run < len(self.samples)
        self.witness = None
        if self.samples and run >= min_confirm and \
                not self.threshold_refuted:
            self.witness = self.samples[-run][0]

    @property
    def verdict(self):
        return STABILIZED if self.witness is not None else NOT_STABILIZED

    @property
    def stabilized(self):
        return self.witness is not None

    @property
    def analytic(self):
        return all(t.analytic for t in self.thresholds)

    @property
    def value(self):
        return self.samples[-1][1] if self.samples else None

    def to_dict(self):
        return {
            "alpha": str(self.alpha),
            "xi_star": None if self.xi_star is None else str(self.xi_star),
            "verdict": self.verdict,
            "witness": None if self.witness is None else str(self.witness),
            "threshold_refuted": self.threshold_refuted,
            "analytic": self.analytic,
            "samples": [{"xi": str(xi), "value": str(value)}
                        for xi, value in self.samples],
            "thresholds": [t.to_dict() for t in self.thresholds],
        }

    def __repr__(self):
        return "StabilizationReport(alpha=%s, verdict=%s, witness=%s)" % (
            self.alpha, self.verdict, self.witness)


def check_semi_constant(f, alpha, budget=DEFAULT_BUDGET,
                        min_confirm=DEFAULT_MIN_CONFIRM, xi_star=None):
    """Sample ``f`` at ``budget`` consecutive fundamental-sequence points of
    ``α``, starting at the first one above ``xi_star``.

    Raises:
        OrdinalError: If ``α`` is not a limit or ``xi_star`` is not below it.
    """
    alpha = ords.ordinal(alpha)
    _require_limit(alpha)
    start = 0
    if xi_star is not None:
        start = ords.fs_index(alpha, xi_star)
        if ords.fundamental_sequence(alpha, start) == xi_star:
            start += 1
    samples = []
    for k in range(start, start + budget):
        xi = ords.fundamental_sequence(alpha, k)
        samples.append((xi, f(xi)))
    report = StabilizationReport(alpha, xi_star, samples, min_confirm)
    LOG.debug("semi-constant check at %s from %s: %s", alpha, xi_star,
              report.verdict)
    return report


def verify_family_coherence(seq, betas, alpha, budget=DEFAULT_BUDGET,
                            min_confirm=DEFAULT_MIN_CONFIRM, universe=None,
                            search_depth=DEFAULT_SEARCH_DEPTH, coherence=None,
                            cap=DEFAULT_CAP):
    """Check that ``ξ ↦ family_alternating_sum(seq, β, ξ)`` is
    semi-constant at ``α``.

    Args:
        coherence (CoherenceReport): A precomputed scan of ``seq``; one is
            run when omitted.

    Raises:
        IncoherentSequenceError: If the coherence scan has violations.
        TupleError: If ``betas`` is not strictly increasing or ``α`` is above
            ``betas[0]``.
    """
    betas = ords.check_tuple(tuple(ords.ordinal(b) for b in betas),
                             ords.STRICT)
    alpha = ords.ordinal(alpha)
    _require_limit(alpha)
    if alpha > betas[0]:
        raise TupleError("%s is above %s" % (alpha, betas[0]))
    if coherence is None:
        coherence = check_coherence(seq, universe=universe)
    if not coherence.ok:
        raise IncoherentSequenceError(coherence)

    thresholds = [find_thresholds(seq, alpha, ords.remove_index(betas, i),
                                  universe=universe,
                                  search_depth=search_depth, cap=cap)
                  for i in range(len(betas))]
    star = max(t.value for t in thresholds)
    report = check_semi_constant(
        lambda xi: family_alternating_sum(seq, betas, xi, cap),
        alpha, budget, min_confirm, star)
    report.thresholds = thresholds
    LOG.info("family %s at %s: %s", ords.format_tuple(betas), alpha,
             report.verdict)
    return report


def unboundedness_probe(seq, points, k, cap=DEFAULT_CAP):
    """First pair ``α < β`` of ``points`` with ``rho2_n(seq, +1, α, (β,))``
    above ``k``, or ``None``."""
    points = sorted(set(ords.ordinal(p) for p in points))
    for i, beta in enumerate(points):
        for alpha in points[:i]:
            if rho2_n(seq, 1, alpha, (beta,), cap) > k:
                return alpha, beta
    return None
