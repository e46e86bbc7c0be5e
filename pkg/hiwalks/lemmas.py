# coding=utf-8
"""Structural properties of walks, checked instance by instance.

Every check has a name, a sampler that draws instances from the finite
universe of the suite with its own seeded generator, and a checker that
returns the failures of one instance. ``LemmaSuite`` runs a selection of
them through the ``Verifier`` loop.

Contents
--------

:LEMMAS: Registry of checks by name.
:SuiteReport: Per-check pass and fail counts with a JSON summary.
:LemmaSuite: The verifier that runs the registry.
:run_lemma_suite: Convenience wrapper around ``LemmaSuite``.
:format_args: Readable rendering of an instance.

"""

import collections
import logging
import random

from . import ordinal as ords
from .analysis import DEFAULT_BUDGET, DEFAULT_MIN_CONFIRM, \
    DEFAULT_SEARCH_DEPTH, XiWalks, bad_node_mismatches, eta, find_thresholds, \
    tail_candidates, verify_family_coherence
from .base import CheckResult, Failure, Instance, Verifier
from .characteristics import classical_rho2, project_pi, resh_n, rho2_n, \
    varpi
from .csequence import check_coherence, restrict
from .errors import BuilderError, IncoherentSequenceError, InvalidIndexError
from .specfile import resolve
from .walks import BAD, SPECTACLED, classify_nodes, format_address, \
    is_spectacled, lower_traces, pair_boundaries, stretch_address, \
    stretch_tree, truncated_walk, walk

LOG = logging.getLogger("hiwalks.analysis")

Lemma = collections.namedtuple("Lemma", ["name", "sample", "check"])


def format_args(args):
    """Render an instance as one token: an optional sign, then a tuple."""
    sign = ""
    parts = []
    for arg in args:
        if isinstance(arg, int):
            sign = "+" if arg > 0 else "-"
        elif isinstance(arg, tuple):
            parts.append(ords.format_tuple(arg))
        else:
            parts.append(str(arg))
    if len(parts) == 1 and parts[0].startswith("("):
        return sign + parts[0]
    return "%s(%s)" % (sign, ",".join(parts))


def _addresses(xs):
    return " ".join(format_address(x) for x in xs)


def _increasing(rng, points, length):
    return tuple(sorted(rng.sample(points, length)))


def _walk_draw(suite, dims, extra=0, limit_alpha=False, signed=True):
    """Draw ``(sign, (α,) + γ)`` with ``γ`` strictly increasing of length
    ``dim + extra`` and ``α <= γ[0]``."""
    points = suite.universe
    alphas = [p for p in points if p.is_limit()] if limit_alpha else points

    def draw(rng):
        length = rng.choice(dims) + extra
        if len(points) < length:
            return None
        gammas = _increasing(rng, points, length)
        below = [a for a in alphas if a <= gammas[0]]
        if not below:
            return None
        labels = (rng.choice(below),) + gammas
        return (rng.choice((1, -1)), labels) if signed else (labels,)
    return draw


def sample_restart(suite):
    return suite.sample("restart", _walk_draw(suite, suite.dims(1)))


def check_restart(suite, sign, labels):
    tree = walk(suite.seq, sign, labels[0], labels[1:], suite.cap)
    failures = []
    for x, (node_sign, label) in tree.nodes.items():
        if not x or tree.is_terminal(x):
            continue
        fresh = walk(suite.seq, node_sign, label[0], label[1:], suite.cap)
        if list(tree.subtree(x).items()) != list(fresh.nodes.items()):
            failures.append(Failure(
                "subtree at %s is not the walk from its label"
                % format_address(x), {"walk": tree, "restarted": fresh}))
    return failures


def check_increasing(suite, sign, labels):
    tree = walk(suite.seq, sign, labels[0], labels[1:], suite.cap)
    wrong = [x for x, (_, label) in tree.nodes.items()
             if label[0] != labels[0]
             or not ords.is_kind(label, ords.ALPHA_TENSOR)]
    if wrong:
        return [Failure("labels leave the increasing domain at %s"
                        % _addresses(wrong), {"walk": tree})]
    return []


def sample_classical(suite):
    points = suite.universe
    pairs = [(beta, gamma) for gamma in points
             if suite.seq.domain.member(gamma)
             for beta in points if beta <= gamma]
    if len(pairs) > suite.max_instances:
        pairs = suite.rng_for("classical").sample(pairs, suite.max_instances)
    return sorted(pairs)


def check_classical(suite, beta, gamma):
    try:
        expected = classical_rho2(suite.seq, beta, gamma) + 1
    except InvalidIndexError:
        return []
    found = rho2_n(suite.seq, 1, beta, (gamma,), suite.cap)
    if found != expected:
        tree = walk(suite.seq, 1, beta, (gamma,), suite.cap)
        return [Failure("rho2 is %i, the classical walk gives %i"
                        % (found, expected), {"walk": tree})]
    return []


def sample_projection(suite):
    return suite.sample("projection",
                        _walk_draw(suite, suite.dims(1), signed=False))


def check_projection(suite, labels):
    total = varpi(resh_n(suite.seq, labels[0], labels[1:], cap=suite.cap))
    count = rho2_n(suite.seq, 1, labels[0], labels[1:], suite.cap)
    if total != count:
        tree = walk(suite.seq, 1, labels[0], labels[1:], suite.cap)
        return [Failure("coefficient sum %i differs from rho2 %i"
                        % (total, count), {"walk": tree})]
    return []


def sample_end_extension(suite):
    return suite.sample("end-extension", _walk_draw(suite, suite.dims(1)))


def check_end_extension(suite, sign, labels):
    """Nodes whose parent has lower trace below ``ξ`` survive in the walk
    from ``ξ`` with ``α`` replaced by ``ξ``."""
    alpha = labels[0]
    tree = walk(suite.seq, sign, alpha, labels[1:], suite.cap)
    traces = lower_traces(tree)
    bounds = [traces[x[:-1]] for x in tree if x]
    if not bounds:
        return []
    walks = XiWalks(suite.seq, sign, labels[1:], suite.cap)
    failures = []
    for xi in suite.universe:
        if xi > alpha:
            break
        if xi <= min(bounds):
            continue
        other = walks(xi)
        wrong = [x for x, (node_sign, label) in tree.nodes.items()
                 if (not x or traces[x[:-1]] < xi) and other.nodes.get(x)
                 != (node_sign, ords.substitute(label, {0: xi}))]
        if wrong:
            failures.append(Failure(
                "walk from %s differs at %s" % (xi, _addresses(wrong)),
                {"alpha": tree, "xi": other}))
    return failures


def sample_pairing(suite):
    return suite.sample("pairing", _walk_draw(suite, suite.dims(1), extra=1,
                                              signed=False))


def check_pairing(suite, labels):
    pairing = pair_boundaries(suite.seq, labels[0], labels[1:], suite.cap)
    if pairing.perfect:
        return []
    trees = dict(("walk_%i" % i, tree) for i, tree in enumerate(pairing.trees))
    return [Failure("boundaries do not cancel at %s"
                    % ords.format_tuple(pairing.certificate), trees)]


def sample_bad_once(suite):
    return suite.sample("bad-once", _walk_draw(suite, suite.dims(2)))


def check_bad_once(suite, sign, labels):
    tree = walk(suite.seq, sign, labels[0], labels[1:], suite.cap)
    bad = classify_nodes(tree).having(BAD)
    nested = [y for y in bad for x in bad if len(y) > len(x)
              and y[:len(x)] == x]
    if nested:
        return [Failure("bad nodes below bad nodes at %s" % _addresses(nested),
                        {"walk": tree})]
    return []


def sample_spectacled_terminal(suite):
    return suite.sample("spectacled-terminal",
                        _walk_draw(suite, suite.dims(2)))


def check_spectacled_terminal(suite, sign, labels):
    tree = walk(suite.seq, sign, labels[0], labels[1:], suite.cap)
    spectacled = classify_nodes(tree).having(SPECTACLED)
    wrong = set()
    for x in spectacled:
        for y, (_, label) in tree.nodes.items():
            if len(y) > len(x) and y[:len(x)] == x and \
                    label[0] < label[1] and not tree.is_terminal(y):
                wrong.add(y)
    if wrong:
        return [Failure("splitting nodes with a larger second entry below a "
                        "spectacled node at %s" % _addresses(sorted(wrong)),
                        {"walk": tree})]
    return []


def sample_bad_tail(suite):
    return suite.sample("bad-tail", _walk_draw(suite, suite.dims(2),
                                               limit_alpha=True, signed=False))


def check_bad_tail(suite, labels):
    """Every bad node has a threshold, re-checked at the threshold and at
    ``min_confirm`` fundamental-sequence points above it."""
    alpha, gammas = labels[0], labels[1:]
    walks = XiWalks(suite.seq, 1, gammas, suite.cap)
    report = find_thresholds(suite.seq, alpha, gammas, 1, suite.universe,
                             suite.search_depth, suite.cap, walks)
    tree = walks(alpha)
    failures = []
    for x in report.failed:
        failures.append(Failure("no threshold for the bad node at %s"
                                % format_address(x), {"walk": tree}))
    for x, threshold in sorted(report.bad.items()):
        if threshold is None:
            continue
        start = ords.fs_index(alpha, threshold)
        if ords.fundamental_sequence(alpha, start) == threshold:
            start += 1
        points = [threshold] + [ords.fundamental_sequence(alpha, k) for k in
                                range(start, start + suite.min_confirm)]
        for xi in points:
            wrong = bad_node_mismatches(tree, x, xi, walks(xi),
                                        eta(suite.seq, alpha, xi))
            if wrong:
                failures.append(Failure(
                    "bad node at %s: walk from %s differs at %s"
                    % (format_address(x), xi, _addresses(wrong)),
                    {"alpha": tree, "xi": walks(xi)}))
                break
    return failures


def _tail(suite, sign, labels):
    alpha, gammas = labels[0], labels[1:]
    walks = XiWalks(suite.seq, sign, gammas, suite.cap)
    report = find_thresholds(suite.seq, alpha, gammas, sign, suite.universe,
                             suite.search_depth, suite.cap, walks)
    star = report.value
    xis = [xi for xi in tail_candidates(alpha, suite.universe,
                                        suite.search_depth) if xi > star]
    return walks, xis


def sample_tail_extension(suite):
    return suite.sample("tail-extension",
                        _walk_draw(suite, suite.dims(2), limit_alpha=True))


def check_tail_extension(suite, sign, labels):
    walks, xis = _tail(suite, sign, labels)
    tree = walks(labels[0])
    failures = []
    for xi in xis:
        if not tree.is_end_extended_by(walks(xi), signed=True):
            failures.append(Failure(
                "walk from %s does not end-extend the walk from %s"
                % (xi, labels[0]), {"alpha": tree, "xi": walks(xi)}))
    return failures


def sample_easy_nodes(suite):
    return suite.sample("easy-nodes",
                        _walk_draw(suite, suite.dims(2), limit_alpha=True))


def check_easy_nodes(suite, sign, labels):
    walks, xis = _tail(suite, sign, labels)
    tree = walks(labels[0])
    easy = [(x, value) for x, value in tree.nodes.items()
            if tree.is_terminal(x) and not is_spectacled(value[1])]
    failures = []
    for xi in xis:
        other = walks(xi)
        wrong = [x for x, (node_sign, label) in easy if other.nodes.get(x)
                 != (node_sign, ords.substitute(label, {0: xi}))]
        if wrong:
            failures.append(Failure(
                "terminal nodes change in the walk from %s at %s"
                % (xi, _addresses(wrong)), {"alpha": tree, "xi": other}))
    return failures


def sample_simulation(suite):
    if suite.seq.n < 3:
        return []
    m = suite.seq.n - 2
    points = suite.universe
    accumulation = [a for a in suite.coherence().x_set if a < suite.seq.window]
    if not accumulation:
        return []

    def draw(rng):
        alpha = rng.choice(accumulation)
        above = [p for p in points if p >= alpha]
        if len(above) < m:
            return None
        return ((alpha,) + _increasing(rng, above, m),)
    return suite.sample("simulation", draw)


def check_simulation(suite, labels):
    """Below the truncated walk's lower bound, the walk from
    ``(ξ, η_ξ) + labels`` is the stretched truncated walk."""
    seq = suite.seq
    alpha, gammas = labels[0], labels[1:]
    short = truncated_walk(seq, alpha, gammas, cap=suite.cap)
    shift = seq.n - len(gammas)
    shape = stretch_tree(short, seq.n)
    failures = []
    for xi in tail_candidates(alpha, suite.universe, suite.search_depth):
        if xi <= short.lower_bound:
            continue
        eta_xi = eta(seq, alpha, xi)
        if eta_xi is None:
            return [Failure("%s has no club to step through" % alpha,
                            {"truncated": short})]
        big = walk(seq, 1, xi, (eta_xi, alpha) + gammas, suite.cap)
        wrong = [x for x, (sign, label) in short.nodes.items()
                 if big.nodes.get(stretch_address(x, shift))
                 != (sign, (xi, eta_xi) + label)]
        if big.shape() != shape or wrong:
            failures.append(Failure(
                "walk from %s is not the stretched truncated walk%s"
                % (xi, " (labels differ at %s)" % _addresses(wrong)
                   if wrong else ""), {"truncated": short, "xi": big}))
    return failures


def sample_top_ordinal(suite):
    if suite.seq.n < 2:
        return []
    points = [p for p in suite.universe if suite.seq.domain.member(p)]
    length = suite.seq.n + 1

    def draw(rng):
        if len(points) < length:
            return None
        return (_increasing(rng, points, length),)
    return suite.sample("top-ordinal", draw)


def check_top_ordinal(suite, labels):
    tree = walk(suite.seq, 1, labels[0], labels[1:], suite.cap)
    top = labels[-1]
    inner = suite.seq.n - 1
    wrong = [x for x, (_, label) in tree.nodes.items()
             if (label[-1] == top) != all(i < inner for i in x)]
    if wrong:
        return [Failure("largest entry and address disagree at %s"
                        % _addresses(wrong), {"walk": tree})]
    return []


def sample_dimension_reduction(suite):
    seq = suite.seq
    if seq.n < 2:
        return []
    points = suite.universe
    members = {}
    for delta in seq.domain.acc_points(points):
        club = seq.club_of((delta,))
        inside = [p for p in points if club.member(p)]
        if len(inside) >= seq.n:
            members[delta] = inside
    if not members:
        return []
    deltas = sorted(members)

    def draw(rng):
        delta = rng.choice(deltas)
        return delta, _increasing(rng, members[delta], seq.n)
    return suite.sample("dimension-reduction", draw)


def check_dimension_reduction(suite, delta, labels):
    """The walk in the restriction to ``C(δ)`` is the part of the walk from
    ``labels + (δ,)`` with addresses below ``n - 1``."""
    seq = suite.seq
    small_seq = restrict(seq, delta)
    n = seq.n - 1
    tree = walk(seq, 1, labels[0], labels[1:] + (delta,), suite.cap)
    small = walk(small_seq, 1, labels[0], labels[1:], suite.cap)
    trees = {"restricted": small, "walk": tree}
    failures = []

    expected = set(x for x in tree if all(i < n for i in x))
    if set(small.nodes) != expected:
        failures.append(Failure("restricted walk has the wrong nodes", trees))
    else:
        big_traces = lower_traces(tree)
        small_traces = lower_traces(small)
        wrong = [x for x, (sign, label) in small.nodes.items()
                 if tree.nodes[x] != (sign, label + (delta,))
                 or tree.is_terminal(x) != small.is_terminal(x)
                 or big_traces[x] != small_traces[x]]
        if wrong:
            failures.append(Failure("restricted walk differs at %s"
                                    % _addresses(wrong), trees))

    restricted = resh_n(small_seq, labels[0], labels[1:], cap=suite.cap)
    projected = project_pi(resh_n(seq, labels[0], labels[1:] + (delta,),
                                  cap=suite.cap),
                           delta, seq.club_of((delta,)))
    if restricted != projected:
        failures.append(Failure("resh of the restriction is %s, projection "
                                "gives %s" % (restricted, projected), trees))
    return failures


def sample_family(suite):
    points = suite.universe
    limits = [p for p in points if p.is_limit()]
    length = suite.seq.n + 1

    def draw(rng):
        if not limits or len(points) < length:
            return None
        betas = _increasing(rng, points, length)
        below = [a for a in limits if a <= betas[0]]
        if not below:
            return None
        return rng.choice(below), betas
    return suite.sample("family-coherence", draw)


def check_family(suite, alpha, betas):
    try:
        report = verify_family_coherence(
            suite.seq, betas, alpha, suite.budget, suite.min_confirm,
            suite.universe, suite.search_depth, suite.coherence(), suite.cap)
    except IncoherentSequenceError as err:
        return [Failure(str(err), {})]
    if report.threshold_refuted:
        changed = [xi for xi, value in report.samples
                   if value != report.value]
        return [Failure("alternating sum changes above %s at %s"
                        % (report.xi_star, changed[-1]), {})]
    if not report.stabilized:
        return [Failure("alternating sum did not settle within %i samples "
                        "above %s" % (len(report.samples), report.xi_star),
                        {})]
    return []


LEMMAS = collections.OrderedDict((lemma.name, lemma) for lemma in [
    Lemma("restart", sample_restart, check_restart),
    Lemma("increasing", lambda suite: suite.sample(
        "increasing", _walk_draw(suite, suite.dims(1))), check_increasing),
    Lemma("classical", sample_classical, check_classical),
    Lemma("projection", sample_projection, check_projection),
    Lemma("end-extension", sample_end_extension, check_end_extension),
    Lemma("pairing", sample_pairing, check_pairing),
    Lemma("bad-once", sample_bad_once, check_bad_once),
    Lemma("spectacled-terminal", sample_spectacled_terminal,
          check_spectacled_terminal),
    Lemma("bad-tail", sample_bad_tail, check_bad_tail),
    Lemma("tail-extension", sample_tail_extension, check_tail_extension),
    Lemma("easy-nodes", sample_easy_nodes, check_easy_nodes),
    Lemma("simulation", sample_simulation, check_simulation),
    Lemma("top-ordinal", sample_top_ordinal, check_top_ordinal),
    Lemma("dimension-reduction", sample_dimension_reduction,
          check_dimension_reduction),
    Lemma("family-coherence", sample_family, check_family),
])


def parse_lemmas(value):
    """Split a comma-separated list of check names.

    Raises:
        ValueError: For an unknown name.
    """
    names = [v.strip() for v in value.split(",")] if isinstance(value, str) \
        else list(value)
    unknown = [name for name in names if name not in LEMMAS]
    if unknown:
        raise ValueError("unknown lemma %s" % ", ".join(unknown))
    return names


class SuiteReport(object):
    """Results of a suite run, ordered by instance key.

    Attributes:
        lemmas (List[str]): The checks that were selected.
        results (List[CheckResult]): One per instance.
    """

    def __init__(self, lemmas, results):
        self.lemmas = list(lemmas)
        self.results = sorted(results, key=lambda r: r.instance.key)

    def counts(self):
        counts = collections.OrderedDict(
            (name, {"pass": 0, "fail": 0}) for name in self.lemmas)
        for result in self.results:
            counts[result.instance.lemma][result.verdict] += 1
        return counts

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    @property
    def ok(self):
        return not self.failures

    def lines(self):
        return ["LEMMA %s instance=%s verdict=%s"
                % (r.instance.lemma, format_args(r.instance.args), r.verdict)
                for r in self.results]

    def to_dict(self):
        return {
            "ok": self.ok,
            "lemmas": self.counts(),
            "failures": [{
                "lemma": r.instance.lemma,
                "instance": format_args(r.instance.args),
                "messages": [f.message for f in r.failures],
            } for r in self.failures],
        }

    def __repr__(self):
        return "SuiteReport(instances=%i, failures=%i)" % (
            len(self.results), len(self.failures))


class LemmaSuite(Verifier):
    """Runs the checks of ``LEMMAS`` on one sequence.

    The sequence is ``config["seq"]``: an ``NCSequence`` or a ``--seq``
    reference, resolved with ``config["n"]``.
    """

    def __init__(self, config={}):
        super(LemmaSuite, self).__init__(config)

        seq = self.config.get("seq")
        if seq is None:
            raise BuilderError("no sequence to check")
        if isinstance(seq, str):
            seq = resolve(seq, self.config.get("n"))
        self.seq = seq

        self.lemma_names = parse_lemmas(
            self.config.setdefault("lemmas", list(LEMMAS)))
        self.max_coef = self.config.setdefault("max_coef", 3)
        self.budget = self.config.setdefault("budget", DEFAULT_BUDGET)
        self.min_confirm = self.config.setdefault("min_confirm",
                                                  DEFAULT_MIN_CONFIRM)
        self.search_depth = self.config.setdefault("search_depth",
                                                   DEFAULT_SEARCH_DEPTH)
        universe = self.config.get("universe")
        if universe is None:
            universe = self.seq.landmarks(self.seq.window, self.max_coef)
        self.universe = sorted(set(x for x in universe
                                   if x < self.seq.window))
        self._coherence = None

    @classmethod
    def arg_parser(cls):
        parser = super(LemmaSuite, cls).arg_parser()
        parser.add_argument("--lemmas", type=parse_lemmas,
                            help="Comma-separated checks to run (default: "
                                 "all of %s)" % ", ".join(LEMMAS))
        parser.add_argument("--budget", type=int,
                            help="Samples per stabilization check")
        parser.add_argument("--min-confirm", type=int,
                            help="Equal samples needed to stabilize")
        parser.add_argument("--max-coef", type=int,
                            help="Largest coefficient in the universe")
        parser.add_argument("--search-depth", type=int,
                            help="Fundamental-sequence points per threshold "
                                 "search")
        return parser

    def dims(self, lowest):
        return list(range(lowest, self.seq.n + 1))

    def rng_for(self, name):
        return random.Random("%s:%s" % (self.seed, name))

    def sample(self, name, draw):
        """Distinct instances from ``draw``, at most ``max_instances``."""
        if draw is None:
            return []
        rng = self.rng_for(name)
        found = set()
        for _ in range(4 * self.max_instances):
            if len(found) >= self.max_instances:
                break
            item = draw(rng)
            if item is not None:
                found.add(item)
        return sorted(found)

    def coherence(self):
        if self._coherence is None:
            self._coherence = check_coherence(self.seq)
        return self._coherence

    def instances(self):
        for order, name in enumerate(self.lemma_names):
            for k, args in enumerate(LEMMAS[name].sample(self)):
                yield Instance(name, (order, k), args)

    def check(self, instance):
        lemma = LEMMAS[instance.lemma]
        try:
            failures = lemma.check(self, *instance.args)
        except InvalidIndexError as err:
            failures = [Failure(str(err), {})]
        if failures:
            LOG.info("%s failed at %s: %s", instance.lemma,
                     self.instance_str(instance), failures[0].message)
        return CheckResult(instance, failures)

    def report(self):
        return SuiteReport(self.lemma_names, self.results)

    def instance_str(self, instance):
        return format_args(instance.args)


def run_lemma_suite(seq, universe=None, lemmas=None, config=None):
    """Run the selected checks on ``seq`` and return the ``SuiteReport``."""
    config = dict(config or {})
    config["seq"] = seq
    if universe is not None:
        config["universe"] = universe
    if lemmas is not None:
        config["lemmas"] = lemmas
    return LemmaSuite(config).verify()
