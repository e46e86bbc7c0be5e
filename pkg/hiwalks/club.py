# coding=utf-8
"""Clubs of ordinals with exact queries.

Every club is reduced to a canonical, sorted list of *segments*:

* a ``Run`` is the interval ``[lo, hi)``;
* a ``Ladder`` is ``{base + ω^exp·k : k ≥ start}`` with ``exp ≥ 1`` and every
  exponent of ``base`` above ``exp``.

Two clubs are equal exactly when their segment lists are, so equality below
a bound is decided by cutting both lists and comparing.

Contents
--------

:Club: Base class implementing all queries on segments.
:Explicit: A finite set, ``finite[2,5,9]``.
:Interval: Every ordinal in ``[start, bound)``, ``interval(w^2, from=w)``.
:Fundamental: The range of a fundamental sequence, ``fs(w*2, from=3)``.
:Copy: The image of a club under the enumeration of another one.
:Union: A finite union of clubs with disjoint ranges.
:parse_club: Parse a club literal.
:parse_club_prefix: Parse a club literal embedded in a longer line.
:EMPTY: The empty club.

"""

from .errors import ClubError, ClubSyntaxError, OrdinalError, \
    OrdinalSyntaxError
from .ordinal import OMEGA, ONE, ZERO, Ordinal, fundamental_sequence, \
    ordinal, parse_ordinal


class Run(object):
    """The interval ``[lo, hi)``."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    def first(self):
        return self.lo

    def ssup(self):
        return self.hi

    def otp(self):
        return self.hi - self.lo

    def is_finite(self):
        return self.otp().is_finite()

    def contains(self, x):
        return self.lo <= x < self.hi

    def first_geq(self, x):
        if x <= self.lo:
            return self.lo
        return x if x < self.hi else None

    def last_lt(self, x):
        if x <= self.lo:
            return None
        top = min(x, self.hi)
        return top.predecessor() if top.is_successor() else None

    def sup_below(self, x):
        x = ordinal(x)
        if x <= self.lo:
            return None
        top = min(x, self.hi)
        return top.predecessor() if top.is_successor() else top

    def at_index(self, i):
        return self.lo + i

    def rank(self, x):
        return x - self.lo
        x = ordinal(x)

    def cut(self, x):
        if x <= self.lo:
            return []
        return [Run(self.lo, min(x, self.hi))]

    def cut_from(self, x):
        if x >= self.hi:
            return []
        return [Run(max(x, self.lo), self.hi)]

    def points(self):
        if not self.is_finite():
            raise ClubError("%r is infinite" % self)
        return [self.lo + i for i in range(int(self.otp()))]

    def __eq__(self, other):
        return (isinstance(other, Run) and self.lo == other.lo
                and self.hi == other.hi)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return "Run(%s, %s)" % (self.lo, self.hi)


class Ladder(object):
    """The ω-sequence ``{base + ω^exp·k : k ≥ start}``."""

    __slots__ = ("base", "exp", "start", "step")

    def __init__(self, base, exp, start):
        if exp < 1:
            raise ClubError("ladder exponent must be positive")
        if base.terms and base.terms[-1][0] <= exp:
            raise ClubError("ladder base %s is not above w^%i" % (base, exp))
        self.base = base
        self.exp = exp
        self.start = start
        self.step = Ordinal.omega(exp)

    def at(self, k):
        return self.base + self.step * k

    def first(self):
        return self.at(self.start)

    def ssup(self):
        return self.base + Ordinal.omega(self.exp + 1)

    def otp(self):
        return OMEGA

    def is_finite(self):
        return False

    def index_geq(self, x):
        """Least ``k >= start`` with ``at(k) >= x``; ``x`` below ``ssup``."""
        if x <= self.first():
            return self.start
        rest = x - self.base
        lead_exp, lead_coef = rest.terms[0]
        if lead_exp < self.exp:
            k = 1
        else:
            k = lead_coef + (1 if len(rest.terms) > 1 else 0)
        return max(k, self.start)

    def contains(self, x):
        if x < self.first() or x >= self.ssup():
            return False
        return self.at(self.index_geq(x)) == x

    def first_geq(self, x):
        if x >= self.ssup():
            return None
        return self.at(self.index_geq(x))

    def last_lt(self, x):
        if x <= self.first() or x >= self.ssup():
            return None
        return self.at(self.index_geq(x) - 1)

    def sup_below(self, x):
        x = ordinal(x)
        if x <= self.first():
            return None
        if x >= self.ssup():
            return self.ssup()
        return self.at(self.index_geq(x) - 1)

    def at_index(self, i):
        return self.at(self.start + int(i))

    def rank(self, x):
        return Ordinal(self.index_geq(x) - self.start)
        x = ordinal(x)

    def cut(self, x):
        if x <= self.first():
            return []
        if x >= self.ssup():
            return [self]
        return [point(self.at(k)) for k in range(self.start, self.index_geq(x))]

    def cut_from(self, x):
        if x >= self.ssup():
            return []
        return [Ladder(self.base, self.exp, self.index_geq(x))]

    def __eq__(self, other):
        return (isinstance(other, Ladder) and self.base == other.base
                and self.exp == other.exp and self.start == other.start)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.base, self.exp, self.start))

    def __repr__(self):
        return "Ladder(%s, %i, %i)" % (self.base, self.exp, self.start)


def point(x):
    return Run(x, x + ONE)


def make_ladder(q, exp, start):
    """Segments of ``{q + ω^exp·k : k ≥ start}`` for an arbitrary ``q``."""
    if exp == 0:
        return [Run(q + start, q + OMEGA)]
    high = Ordinal([t for t in q.terms if t[0] > exp])
    same = [t[1] for t in q.terms if t[0] == exp]
    low = [t for t in q.terms if t[0] < exp]
    coef = same[0] if same else 0
    if start >= 1:
        return [Ladder(high, exp, coef + start)]
    if not low:
        return [Ladder(high, exp, coef)]
    return [point(q), Ladder(high, exp, coef + 1)]


def normalize(segments):
    """Sort and merge segments into the canonical list.

    Raises:
        ClubError: If a ladder interleaves with anything but its own points.
    """
    pending = sorted((s for s in segments if not _empty(s)),
                     key=lambda s: s.first())
    merged = []
    for seg in pending:
        if not merged:
            merged.append(seg)
            continue
        prev = merged[-1]
        if isinstance(prev, Run) and isinstance(seg, Run):
            if prev.hi >= seg.lo:
                merged[-1] = Run(prev.lo, max(prev.hi, seg.hi))
                continue
        elif isinstance(prev, Ladder) and seg.first() < prev.ssup():
            if isinstance(seg, Ladder) and (seg.base, seg.exp) == \
                    (prev.base, prev.exp):
                merged[-1] = Ladder(prev.base, prev.exp,
                                    min(prev.start, seg.start))
                continue
            if isinstance(seg, Run) and seg.otp() == ONE and \
                    prev.contains(seg.lo):
                continue
            raise ClubError("segments interleave: %r, %r" % (prev, seg))
        elif seg.first() < prev.ssup():
            raise ClubError("segments interleave: %r, %r" % (prev, seg))
        merged.append(seg)

    result = []
    for seg in merged:
        if isinstance(seg, Ladder):
            # absorb every ladder point listed separately before it
            while seg.start >= 1 and result and isinstance(result[-1], Run):
                prev = result[-1]
                below = seg.at(seg.start - 1)
                if not (prev.hi.is_successor()
                        and prev.hi.predecessor() == below):
                    break
                result.pop()
                seg = Ladder(seg.base, seg.exp, seg.start - 1)
                prev = Run(prev.lo, below)
                if not _empty(prev):
                    result.append(prev)
        result.append(seg)
    return result


def _empty(seg):
    return isinstance(seg, Run) and seg.lo >= seg.hi


class Club(object):
    """A club, queried through its canonical segments.

    Subclasses only describe their segments in ``_build``; every query is
    answered here.

    Attributes:
        bound (Ordinal): The ordinal the club lives in.
    """

    def __init__(self, bound):
        self.bound = bound
        self._segments = None
        self._placements = None

    def _build(self):
        raise NotImplementedError

    @property
    def segments(self):
        if self._segments is None:
            self._segments = tuple(normalize(self._build()))
        return self._segments

    @property
    def placements(self):
        """``(offset, segment)`` pairs; ``offset`` is the rank of the
        segment's first element."""
        if self._placements is None:
            offset = ZERO
            placed = []
            for seg in self.segments:
                placed.append((offset, seg))
                offset = offset + seg.otp()
            self._placements = (tuple(placed), offset)
        return self._placements[0]

    def is_empty(self):
        return not self.segments

    def is_finite(self):
        return all(s.is_finite() for s in self.segments)

    def elements(self):
        """Every element of a finite club, in order."""
        found = []
        for seg in self.segments:
            if isinstance(seg, Ladder):
                raise ClubError("%s is infinite" % self)
            found.extend(seg.points())
        return found

    def ssup(self):
        """The least ordinal above every element."""
        return self.segments[-1].ssup() if self.segments else ZERO

    def member(self, x):
        x = ordinal(x)
        return any(seg.contains(x) for seg in self.segments)

    __contains__ = member

    def min_above(self, x):
        """Least element ``>= x``, or ``None``."""
        x = ordinal(x)
        for seg in self.segments:
            found = seg.first_geq(x)
            if found is not None:
                return found
        return None

    def _last_before(self, x):
        for seg in reversed(self.segments):
            if seg.first() < x:
                return seg
        return None

    def max_below(self, x):
        """Largest element ``< x``, or ``None`` if there is none or no
        largest one."""
        x = ordinal(x)
        seg = self._last_before(x)
        return seg.last_lt(x) if seg is not None else None

    def sup_below(self, x):
        """Supremum of ``C ∩ x``; 0 when that is empty."""
        x = ordinal(x)
        seg = self._last_before(x)
        return seg.sup_below(x) if seg is not None else ZERO

    def is_acc_point(self, x):
        return x > ZERO and self.member(x) and self.sup_below(x) == x

    def acc_points(self, universe):
        return [x for x in universe if self.is_acc_point(x)]

    def order_type(self):
        self.placements
        return self._placements[1]

    def element_at(self, i):
        """The element of rank ``i``."""
        i = ordinal(i)
        for offset, seg in self.placements:
            end = offset + seg.otp()
            if i < end:
                return seg.at_index(i - offset)
        raise ClubError("%s has no element of rank %s" % (self, i))

    def rank(self, x):
        """Order type of ``C ∩ x`` for a member ``x``."""
        x = ordinal(x)
        for offset, seg in self.placements:
            if seg.contains(x):
                return offset + seg.rank(x)
        raise ClubError("%s is not in %s" % (x, self))

    def restrict(self, beta):
        """``C ∩ beta``."""
        beta = ordinal(beta)
        cut = []
        for seg in self.segments:
            cut.extend(seg.cut(beta))
        return SegmentClub(cut, beta)

    def above(self, x):
        """``C ∖ x``, the elements ``>= x``."""
        x = ordinal(x)
        cut = []
        for seg in self.segments:
            cut.extend(seg.cut_from(x))
        return SegmentClub(cut, self.bound)

    def equal_below(self, other, beta):
        return self.restrict(beta).segments == other.restrict(beta).segments

    def is_subset(self, other, universe):
        """Sampled inclusion over a finite universe."""
        return all(other.member(x) for x in universe if self.member(x))

    def to_literal(self):
        """The canonical literal, built from the segments."""
        pieces = []
        points = []

        def flush():
            if points:
                pieces.append("finite[%s]" % ",".join(str(p) for p in points))
                del points[:]

        for seg in self.segments:
            if isinstance(seg, Run) and seg.is_finite():
                points.extend(seg.points())
                continue
            flush()
            if isinstance(seg, Run):
                pieces.append(_with_from("interval", seg.hi, seg.lo, ZERO))
            else:
                pieces.append(_with_from("fs", seg.ssup(), seg.start, 0))
        flush()
        if not pieces:
            return "finite[]"
        if len(pieces) == 1:
            return pieces[0]
        return "union(%s)" % ", ".join(pieces)

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, self.to_literal())

    def __eq__(self, other):
        if not isinstance(other, Club):
            return NotImplemented
        return self.segments == other.segments

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.segments)


def _with_from(name, bound, start, default):
    if start == default:
        return "%s(%s)" % (name, bound)
    return "%s(%s, from=%s)" % (name, bound, start)


class SegmentClub(Club):
    """A club given directly by segments."""

    def __init__(self, segments, bound):
        super(SegmentClub, self).__init__(bound)
        self._raw = list(segments)

    def _build(self):
        return self._raw


class Explicit(Club):
    """A finite club.

    Args:
        points (Iterable[Ordinal]): The elements.
        bound (Ordinal): Defaults to the successor of the largest point.
    """

    def __init__(self, points, bound=None):
        self.points = sorted(set(ordinal(p) for p in points))
        if bound is None:
            bound = self.points[-1] + ONE if self.points else ZERO
        super(Explicit, self).__init__(ordinal(bound))
        if self.points and self.points[-1] >= self.bound:
            raise ClubError("%s is not below %s" % (self.points[-1], bound))

    def _build(self):
        return [point(p) for p in self.points]


class Interval(Club):
    """Every ordinal in ``[start, bound)``."""

    def __init__(self, bound, start=ZERO):
        super(Interval, self).__init__(ordinal(bound))
        self.start = ordinal(start)

    def _build(self):
        return [Run(self.start, self.bound)]


class Fundamental(Club):
    """The fundamental sequence of a limit from index ``start`` on."""

    def __init__(self, bound, start=0):
        bound = ordinal(bound)
        if not bound.is_limit():
            raise ClubError("fs(%s): not a limit" % bound)
        super(Fundamental, self).__init__(bound)
        self.start = int(start)

    def _build(self):
        exp = self.bound.terms[-1][0] - 1
        return make_ladder(fundamental_sequence(self.bound, 0), exp,
                           self.start)


class Copy(Club):
    """``{base(ξ) : ξ ∈ pattern}`` where ``base(ξ)`` enumerates ``base``.

    Raises:
        ClubError: If ``pattern`` reaches past the order type of ``base``.
    """

    def __init__(self, pattern, base):
        super(Copy, self).__init__(base.bound)
        self.pattern = pattern
        self.base = base

    def _build(self):
        placed = self.base.placements
        total = self.base.order_type()
        images = []
        for seg in self.pattern.segments:
            if seg.ssup() > total:
                raise ClubError("%s is longer than %s" % (self.pattern,
                                                          self.base))
            if isinstance(seg, Run):
                images.extend(_copy_run(seg.lo, seg.hi, placed))
            else:
                images.extend(_copy_ladder(seg, placed))
        return images


def _copy_run(lo, hi, placed):
    images = []
    for offset, seg in placed:
        end = offset + seg.otp()
        a, b = max(lo, offset), min(hi, end)
        if a >= b:
            continue
        if isinstance(seg, Run):
            images.append(Run(seg.lo + (a - offset), seg.lo + (b - offset)))
        elif b == end:
            images.append(Ladder(seg.base, seg.exp,
                                 seg.start + int(a - offset)))
        else:
            images.extend(point(seg.at_index(r)) for r in
                          range(int(a - offset), int(b - offset)))
    return images


def _copy_ladder(ladder, placed):
    top = ladder.ssup()
    for offset, seg in placed:
        if offset < top <= offset + seg.otp():
            break
    else:
        raise ClubError("no segment holds the limit %s" % top)
    if not isinstance(seg, Run):
        raise ClubError("ladder %r maps into ladder %r" % (ladder, seg))
    first = ladder.index_geq(offset) if offset > ladder.first() \
        else ladder.start
    images = [point(_element_at(placed, ladder.at(k)))
              for k in range(ladder.start, first)]
    images.extend(make_ladder(seg.lo + (ladder.at(first) - offset),
                              ladder.exp, 0))
    return images


def _element_at(placed, i):
    for offset, seg in placed:
        if i < offset + seg.otp():
            return seg.at_index(i - offset)
    raise ClubError("rank %s out of range" % i)


class Union(Club):
    """A finite union of clubs whose segments do not interleave."""

    def __init__(self, parts):
        self.parts = list(parts)
        bound = max([p.bound for p in self.parts] or [ZERO])
        super(Union, self).__init__(bound)

    def _build(self):
        segments = []
        for part in self.parts:
            segments.extend(part.segments)
        return segments


EMPTY = Explicit([])


class _ClubParser(object):

    _IDENT_CHARS = "abcdefghijklmnopqrstuvwxyz" \
                   "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-"
    _ORDINAL_CHARS = "0123456789w^*+ "

    def __init__(self, text, env):
        self.text = text
        self.env = env
        self.pos = 0

    def fail(self, message, pos=None):
        raise ClubSyntaxError(message, self.text,
                              self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, token):
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            self.fail("expected %r" % token)

    def ident(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and \
                self.text[self.pos] in self._IDENT_CHARS:
            self.pos += 1
        if start == self.pos:
            self.fail("expected a club")
        return self.text[start:self.pos], start

    def ordinal(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and \
                self.text[self.pos] in self._ORDINAL_CHARS:
            self.pos += 1
        try:
            return parse_ordinal(self.text[start:self.pos])
        except OrdinalSyntaxError as err:
            self.fail(err.message, start + err.column)

    def keyword(self, key):
        self.expect(key)
        self.expect("=")

    def optional_from(self):
        if self.accept(","):
            self.keyword("from")
            return self.ordinal()
        return None

    def club(self):
        name, start = self.ident()
        try:
            return self._form(name, start)
        except (ClubError, OrdinalError) as err:
            self.fail(str(err), start)

    def _form(self, name, start):
        if name == "finite":
            self.expect("[")
            points = []
            if not self.accept("]"):
                points.append(self.ordinal())
                while self.accept(","):
                    points.append(self.ordinal())
                self.expect("]")
            return Explicit(points)
        if name in ("interval", "fs"):
            self.expect("(")
            bound = self.ordinal()
            begin = self.optional_from()
            self.expect(")")
            if name == "interval":
                return Interval(bound, begin or ZERO)
            if begin is not None and not begin.is_finite():
                self.fail("fs start must be finite", start)
            return Fundamental(bound, int(begin or ZERO))
        if name == "copy":
            self.expect("(")
            pattern = self.club()
            self.expect(",")
            self.keyword("of")
            base = self.club()
            self.expect(")")
            return Copy(pattern, base)
        if name == "union":
            self.expect("(")
            parts = [self.club()]
            while self.accept(","):
                parts.append(self.club())
            self.expect(")")
            return Union(parts)
        if name in self.env:
            return self.env[name]
        self.fail("unknown club %r" % name, start)


def parse_club(text, env=None):
    """Parse a club literal.

    Args:
        text (str): The literal, e.g. ``copy(fs(w), of=interval(w^2))``.
        env (Dict[str, Club]): Named clubs that may be referred to by name.

    Raises:
        ClubSyntaxError: With the column of the first error.
    """
    club, end = parse_club_prefix(text, 0, env)
    if end != len(text.rstrip()):
        raise ClubSyntaxError("unexpected trailing text", text, end)
    return club


def parse_club_prefix(text, pos=0, env=None):
    """Parse the club literal starting at ``pos``.

    Returns:
        Tuple[Club, int]: The club and the position just after it.
    """
    parser = _ClubParser(text, env or {})
    parser.pos = pos
    club = parser.club()
    return club, parser.pos
