# coding=utf-8
"""n-C-sequences, their coherence checker and the constructive builders.

An n-C-sequence assigns a club ``C(γ)`` to every valid index tuple ``γ`` of
length at most ``n``: the empty tuple gets the domain club, and ``(β,) + γ``
is valid when ``γ`` is and ``β ∈ C(γ)``. Clubs at non-accumulation points
are always the singleton ``{max(C(γ) ∩ β)}`` (or empty), so a sequence class
only says what happens at accumulation points.

Contents
--------

:NCSequence: Base class; override ``accumulation_club``.
:OrderMinimalSequence: Fundamental-sequence clubs at every accumulation point.
:MaximalSequence: ``C(β,γ) = β ∩ C(γ)`` at every accumulation point.
:ExplicitSequence: Clubs listed per index, over an optional base sequence.
:InheritingSequence: Accumulation indices take the club of their first entry.
:RestrictedSequence: The (n-1)-sequence ``δ ↦ C(γ, δ)``.
:SteppedUpSequence: An (m+1)-sequence built from a 1-sequence and an
    m-sequence on κ.
:CoherenceReport: Result of ``check_coherence``.
:WitnessReport: Result of ``check_weak_nontriviality_witness``.
:build_order_minimal: Builder for ``OrderMinimalSequence``.
:build_maximal: Builder for ``MaximalSequence``.
:build_stepped_up: Builder for ``SteppedUpSequence``.
:restrict: Restrict a sequence to ``C(δ)``.
:check_coherence: Scan a window for coherence violations.
:check_weak_nontriviality_witness: Test whether a club trivializes a sequence.

"""

import logging

from . import ordinal as ords
from .club import Copy, Explicit, Fundamental, Interval
from .errors import BuilderError, InvalidIndexError, MissingClubError

LOG = logging.getLogger("hiwalks.csequence")

NOT_IN_DOMAIN = "not-in-domain"
RESTRICTION = "restriction"
AGREEMENT = "agreement"


class NCSequence(object):
    """An n-C-sequence on a domain club.

    Args:
        n (int): Maximal index length, at least 1.
        domain (Club): The club ``C(())``.
    """

    kind = "abstract"

    def __init__(self, n, domain):
        if n < 1:
            raise BuilderError("n must be positive, got %r" % n)
        self.n = n
        self.domain = domain
        self._clubs = {(): domain}

    @property
    def window(self):
        return self.domain.bound

    def club_of(self, index):
        """Return ``C(index)``.

        Raises:
            InvalidIndexError: If ``index`` is not a valid index.
        """
        index = tuple(index)
        club = self._clubs.get(index)
        if club is not None:
            return club
        if len(index) > self.n:
            raise InvalidIndexError(index, "longer than %i" % self.n)
        parent = self.club_of(index[1:])
        beta = index[0]
        if not parent.member(beta):
            raise InvalidIndexError(index, "%s is not in %s" % (beta, parent))
        if parent.is_acc_point(beta):
            club = self.accumulation_club(index, parent)
        else:
            below = parent.max_below(beta)
            club = Explicit([] if below is None else [below], bound=beta)
        self._clubs[index] = club
        return club

    def accumulation_club(self, index, parent):
        """Return ``C(index)`` when ``index[0]`` is an accumulation point of
        ``parent``, the club of ``index[1:]``."""
        raise NotImplementedError

    def index_valid(self, index):
        index = tuple(index)
        if len(index) > self.n:
            return False
        club = self.domain
        for k in range(len(index) - 1, -1, -1):
            if not club.member(index[k]):
                return False
            if k:
                club = self.club_of(index[k:])
        return True

    def is_plus_index(self, index):
        """True if every entry is an accumulation point of the club of the
        entries after it."""
        index = tuple(index)
        if not index or not self.index_valid(index):
            return False
        return all(self.club_of(index[k + 1:]).is_acc_point(index[k])
                   for k in range(len(index)))

    def landmarks(self, window=None, max_coef=3):
        """The default finite universe below ``window``."""
        window = self.window if window is None else window
        return ords.landmarks(window, max_coef)

    def valid_indices(self, universe, max_length=None):
        """Valid indices with entries from ``universe``, grouped by length.

        Returns:
            List[List[Tuple[Ordinal, ...]]]: Element ``k`` holds the indices
            of length ``k``.
        """
        max_length = self.n if max_length is None else max_length
        universe = sorted(universe)
        levels = [[()]]
        for _ in range(max_length):
            grown = []
            for suffix in levels[-1]:
                club = self.club_of(suffix)
                top = club.ssup()
                grown.extend((beta,) + suffix for beta in universe
                             if beta < top and club.member(beta))
            levels.append(grown)
        return levels

    def plus_indices(self, universe):
        """Indices all of whose entries are accumulation points, with
        entries from ``universe``."""
        found = []
        frontier = [()]
        while frontier:
            suffix = frontier.pop()
            if len(suffix) == self.n:
                continue
            for beta in self.club_of(suffix).acc_points(universe):
                index = (beta,) + suffix
                found.append(index)
                frontier.append(index)
        return sorted(found)

    def __repr__(self):
        return "%s(n=%i, domain=%s)" % (self.__class__.__name__, self.n,
                                        self.domain)


class OrderMinimalSequence(NCSequence):
    """Accumulation points get a club of order type ω."""

    kind = "order-minimal"

    def accumulation_club(self, index, parent):
        return Copy(Fundamental(parent.rank(index[0])), parent)


class MaximalSequence(NCSequence):
    """Accumulation points get everything below them."""

    kind = "maximal"

    def accumulation_club(self, index, parent):
        return parent.restrict(index[0])


class ExplicitSequence(NCSequence):
    """A sequence given by clubs at listed accumulation indices.

    Args:
        n (int): Maximal index length.
        domain (Club): The domain club.
        overrides (Dict[tuple, Club]): Clubs of listed indices.
        base (NCSequence): Supplies clubs of indices that are not listed.
        base_ref (str): How ``base`` is written in a spec file.
        named (Dict[str, Club]): Named clubs, kept for printing.
    """

    kind = "explicit"

    def __init__(self, n, domain, overrides=None, base=None, base_ref=None,
                 named=None):
        super(ExplicitSequence, self).__init__(n, domain)
        self.overrides = dict(overrides or {})
        self.base = base
        self.base_ref = base_ref
        self.named = dict(named or {})

    def accumulation_club(self, index, parent):
        if index in self.overrides:
            return self.overrides[index]
        if self.base is not None:
            return self.base.accumulation_club(index, parent)
        raise MissingClubError(index, "no club listed")

    def landmarks(self, window=None, max_coef=3):
        if self.base is not None:
            return self.base.landmarks(window, max_coef)
        return super(ExplicitSequence, self).landmarks(window, max_coef)


class InheritingSequence(NCSequence):
    """Every accumulation index ``(β,) + γ`` gets the club of ``β``.

    Args:
        n (int): Maximal index length.
        domain (Club): The domain club.
        top_clubs (Dict[Ordinal, Club]): Clubs of single limits; unlisted
            limits get their fundamental sequence.
    """

    kind = "inherit"

    def __init__(self, n, domain, top_clubs=None):
        super(InheritingSequence, self).__init__(n, domain)
        self.top_clubs = dict(top_clubs or {})

    def top_club(self, beta):
        club = self.top_clubs.get(beta)
        if club is not None:
            return club
        if beta.is_limit():
            return Fundamental(beta)
        raise MissingClubError((beta,), "not a limit")

    def accumulation_club(self, index, parent):
        return self.top_club(index[0])


class RestrictedSequence(NCSequence):
    """The (n-1)-sequence on ``C(δ)`` with ``C'(γ) = C(γ + (δ,))``."""

    kind = "restricted"

    def __init__(self, parent, delta):
        if parent.n < 2:
            raise BuilderError("cannot restrict a 1-sequence")
        if not parent.domain.member(delta):
            raise InvalidIndexError((delta,), "not in the domain")
        super(RestrictedSequence, self).__init__(parent.n - 1,
                                                 parent.club_of((delta,)))
        self.parent = parent
        self.delta = delta

    def club_of(self, index):
        index = tuple(index)
        if len(index) > self.n:
            raise InvalidIndexError(index, "longer than %i" % self.n)
        return self.parent.club_of(index + (self.delta,))

    def landmarks(self, window=None, max_coef=3):
        if window is None:
            window = self.delta
        return [x for x in self.parent.landmarks(window, max_coef)
                if x < window]


class SteppedUpSequence(NCSequence):
    """An (m+1)-sequence stepped up from a 1-sequence ``D`` on λ and an
    m-sequence ``E`` on κ.

    Accumulation points ``γ`` split into two sides. The small side holds
    ``γ`` with ``otp(D(γ)) < κ`` and the points of ``S``; there clubs are
    copies of ``E`` along ``D``, indexed through ``η(γ) = otp(D(γ))``. The
    large side uses ``D'(γ)``, the tail of ``D(γ)`` from its κ-th element.
    """

    kind = "stepped-up"

    def __init__(self, d_seq, e_seq, s_points, kappa):
        super(SteppedUpSequence, self).__init__(e_seq.n + 1, d_seq.domain)
        self.d_seq = d_seq
        self.e_seq = e_seq
        self.s_points = frozenset(s_points)
        self.kappa = kappa

    def d_club(self, x):
        return self.d_seq.club_of((x,))

    def eta(self, x):
        return self.d_club(x).order_type()

    def is_small(self, x):
        return x in self.s_points or self.eta(x) < self.kappa

    def d_prime(self, x):
        club = self.d_club(x)
        if club.order_type() > self.kappa:
            return club.above(club.element_at(self.kappa))
        return club

    def accumulation_club(self, index, parent):
        top = index[-1]
        if not self.is_small(top):
            return self.d_prime(index[0])
        if top in self.s_points:
            if len(index) == 1:
                return self.d_club(top)
            e_index = tuple(self.eta(x) for x in index[:-1])
        elif len(index) < self.n:
            e_index = tuple(self.eta(x) for x in index)
        else:
            return parent.restrict(index[0])
        return Copy(self.e_seq.club_of(e_index), self.d_club(index[0]))

    def landmarks(self, window=None, max_coef=3):
        return self.d_seq.landmarks(window, max_coef)


def build_order_minimal(n, lam):
    """Return the order-type-minimal n-sequence on ``lam``."""
    lam = ords.ordinal(lam)
    if not lam.is_limit():
        raise BuilderError("%s is not a limit" % lam)
    return OrderMinimalSequence(n, Interval(lam))


def build_maximal(n, lam):
    lam = ords.ordinal(lam)
    if not lam.is_limit():
        raise BuilderError("%s is not a limit" % lam)
    return MaximalSequence(n, Interval(lam))


def build_stepped_up(d_seq, e_seq, s_points, kappa):
    """Step an m-sequence on ``kappa`` up to an (m+1)-sequence.

    Args:
        d_seq (NCSequence): A 1-sequence; each point of ``s_points`` must
            have a club of order type ``kappa``.
        e_seq (NCSequence): An m-sequence whose domain is ``kappa``.
        s_points (Iterable[Ordinal]): Where copies of ``e_seq`` are placed.
        kappa (Ordinal): A limit ordinal.

    Raises:
        BuilderError: For an order type mismatch or an empty ``s_points``.
    """
    kappa = ords.ordinal(kappa)
    s_points = sorted(ords.ordinal(s) for s in s_points)
    if not kappa.is_limit():
        raise BuilderError("kappa %s is not a limit" % kappa)
    if d_seq.n != 1:
        raise BuilderError("the stepping sequence must have n=1")
    if e_seq.domain.ssup() != kappa:
        raise BuilderError("the stepped sequence does not live on %s" % kappa)
    if not s_points:
        raise BuilderError("kappa %s is not realized: no points given"
                           % kappa)
    for gamma in s_points:
        otp = d_seq.club_of((gamma,)).order_type()
        if otp != kappa:
            raise BuilderError("order type of the club at %s is %s, not %s"
                               % (gamma, otp, kappa))
    return SteppedUpSequence(d_seq, e_seq, s_points, kappa)


def restrict(seq, delta):
    return RestrictedSequence(seq, ords.ordinal(delta))


class CoherenceReport(object):
    """Outcome of a coherence scan.

    Attributes:
        window (Ordinal): Everything below it was scanned.
        x_set (List[Ordinal]): Accumulation points of full-length clubs.
        violations (List[Tuple[Ordinal, tuple, str]]): ``(α, index, kind)``
            where ``kind`` is ``not-in-domain``, ``restriction`` or
            ``agreement``.
    """

    def __init__(self, window, x_set, violations, checked=0):
        self.window = window
        self.x_set = list(x_set)
        self.violations = list(violations)
        self.checked = checked

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "window": str(self.window),
            "checked": self.checked,
            "x_set": [str(x) for x in self.x_set],
            "violations": [{"alpha": str(a), "index": ords.format_tuple(i),
                            "kind": k} for a, i, k in self.violations],
        }

    def __repr__(self):
        return "CoherenceReport(window=%s, x=%i, violations=%i)" % (
            self.window, len(self.x_set), len(self.violations))


def check_coherence(seq, window=None, universe=None):
    """Check both coherence clauses at every accumulation point of a
    full-length club below ``window``.

    Args:
        seq (NCSequence): The sequence.
        window (Ordinal): Defaults to the domain bound.
        universe (Iterable[Ordinal]): Index entries to scan; defaults to
            ``seq.landmarks(window)``.

    Returns:
        CoherenceReport: All violations found.
    """
    window = seq.window if window is None else ords.ordinal(window)
    if window > seq.window:
        raise BuilderError("window %s exceeds the domain bound %s"
                           % (window, seq.window))
    if universe is None:
        universe = seq.landmarks(window)
    universe = sorted(x for x in universe if x < window)
    levels = seq.valid_indices(universe)

    witnesses = []
    for index in levels[seq.n]:
        club = seq.club_of(index)
        witnesses.extend((alpha, index) for alpha in club.acc_points(universe))
    x_set = sorted(set(alpha for alpha, _ in witnesses))
    LOG.debug("coherence below %s: %i full indices, %i accumulation points",
              window, len(levels[seq.n]), len(x_set))

    violations = []
    for alpha, index in witnesses:
        if not seq.domain.member(alpha):
            violations.append((alpha, index, NOT_IN_DOMAIN))
        elif not seq.club_of(index).equal_below(seq.club_of((alpha,)), alpha):
            violations.append((alpha, index, RESTRICTION))

    in_domain = [a for a in x_set if seq.domain.member(a)]
    starting = {}
    for level in levels[2:]:
        for index in level:
            starting.setdefault(index[0], []).append(index)
    for alpha in in_domain:
        target = seq.club_of((alpha,))
        for index in starting.get(alpha, ()):
            club = seq.club_of(index)
            if club.sup_below(alpha) == alpha and club != target:
                violations.append((alpha, index, AGREEMENT))

    violations.sort(key=lambda v: (v[0], v[1], v[2]))
    checked = sum(len(level) for level in levels)
    return CoherenceReport(window, x_set, violations, checked)


class WitnessReport(object):
    """Outcome of a weak nontriviality scan.

    Attributes:
        refuted_at (Ordinal): First α with ``D' ∩ α != C(α)``, or ``None``
            when ``D'`` trivializes the sequence below the window.
    """

    def __init__(self, window, refuted_at=None):
        self.window = window
        self.refuted_at = refuted_at

    @property
    def consistent(self):
        return self.refuted_at is None

    def __repr__(self):
        if self.consistent:
            return "WitnessReport(consistent below %s)" % self.window
        return "WitnessReport(refuted at %s)" % self.refuted_at


def check_weak_nontriviality_witness(seq, dprime, window=None,
                                     universe=None):
    """Scan the accumulation points of ``dprime`` for a disagreement with
    the top-level clubs of ``seq``.

    Raises:
        ValueError: If a sampled point of ``dprime`` is outside the domain.
    """
    window = seq.window if window is None else ords.ordinal(window)
    if universe is None:
        universe = seq.landmarks(window)
    universe = sorted(x for x in universe if x < window)
    for x in universe:
        if dprime.member(x) and not seq.domain.member(x):
            raise ValueError("%s is in the witness but not in the domain" % x)
    for alpha in dprime.acc_points(universe):
        if not dprime.equal_below(seq.club_of((alpha,)), alpha):
            return WitnessReport(window, alpha)
    return WitnessReport(window)


def copy_mismatches(seq, template, base, universe):
    """Compare ``seq`` against copies of ``template`` along ``base``.

    For every valid index ``ξ`` of ``template`` with entries in ``universe``,
    the image ``base(ξ)`` must be valid in ``seq`` with club
    ``Copy(template(ξ), base)``.

    Returns:
        List[tuple]: Template indices where the copy disagrees.
    """
    bad = []
    for level in template.valid_indices(universe)[1:]:
        for index in level:
            image = tuple(base.element_at(x) for x in index)
            expected = Copy(template.club_of(index), base)
            if not seq.index_valid(image) or seq.club_of(image) != expected:
                bad.append(index)
    return bad
