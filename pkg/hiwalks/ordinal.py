# coding=utf-8
"""Ordinals below ω^ω in Cantor normal form, and tuples of them.

Ordinals print and parse as ``w^2*3+w+4``; the parser accepts any sum of
terms and normalizes it with ordinal addition, the printer only emits the
canonical form.

Contents
--------

:Ordinal: An immutable ordinal ``ω^e1·c1 + ... + ω^ek·ck``.
:parse_ordinal: Parse ordinal text.
:fundamental_sequence: The canonical ω-sequence converging to a limit.
:landmarks: A finite universe of ordinals below a bound.
:remove_index: Drop one entry from a tuple.
:insert_index: Insert one entry into a tuple.
:substitute: Replace tuple entries pointwise.
:check_tuple: Validate a tuple against one of the tuple kinds.
:parse_tuple: Parse ``(w,w*2)``.
:format_tuple: Print a tuple as ``(w,w*2)``.

Fundamental sequences
~~~~~~~~~~~~~~~~~~~~~

=====================  ==========================
Limit                  Element ``k``
=====================  ==========================
``p + ω``              ``p + k``
``p + ω^(e+1)``        ``p + ω^e·k``
``p + ω^(e+1)·(c+1)``  ``p + ω^(e+1)·c + ω^e·k``
=====================  ==========================

"""

import functools
import itertools
import re

from .errors import OrdinalError, OrdinalSyntaxError, TupleError

WEAK = "weak"
STRICT = "strict"
ALPHA_TENSOR = "alpha-tensor"
TUPLE_KINDS = (WEAK, STRICT, ALPHA_TENSOR)


@functools.total_ordering
class Ordinal(object):
    """An ordinal below ω^ω.

    Args:
        value (Union[int, Iterable[Tuple[int, int]]]): A natural number, or
            the ``(exponent, coefficient)`` terms of the normal form with
            exponents strictly decreasing and coefficients positive.

    Raises:
        OrdinalError: If the terms are not in normal form.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, value=()):
        if isinstance(value, Ordinal):
            terms = value.terms
        elif isinstance(value, int):
            if value < 0:
                raise OrdinalError("negative ordinal %i" % value)
            terms = ((0, value),) if value else ()
        else:
            terms = tuple((int(e), int(c)) for e, c in value)
            for i, (exp, coef) in enumerate(terms):
                if exp < 0 or coef < 1:
                    raise OrdinalError("bad term w^%i*%i" % (exp, coef))
                if i and terms[i - 1][0] <= exp:
                    raise OrdinalError("exponents must strictly decrease")

        self.terms = terms
        if not terms or terms[0][0] == 0:
            self._hash = hash(terms[0][1] if terms else 0)
        else:
            self._hash = hash(terms)

    @classmethod
    def omega(cls, exp=1, coef=1):
        """Return ``ω^exp·coef``."""
        if coef == 0:
            return ZERO
        return cls(((exp, coef),))

    @classmethod
    def parse(cls, text):
        return parse_ordinal(text)

    def is_zero(self):
        return not self.terms

    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0] == 0

    def is_limit(self):
        return bool(self.terms) and self.terms[-1][0] > 0

    def is_finite(self):
        return not self.terms or self.terms[0][0] == 0

    def classify(self):
        """Return ``"zero"``, ``"successor"`` or ``"limit"``."""
        if not self.terms:
            return "zero"
        return "successor" if self.terms[-1][0] == 0 else "limit"

    def degree(self):
        """Exponent of the leading term; 0 for finite ordinals."""
        return self.terms[0][0] if self.terms else 0

    def predecessor(self):
        if not self.is_successor():
            raise OrdinalError("%s has no predecessor" % self)
        exp, coef = self.terms[-1]
        if coef == 1:
            return Ordinal(self.terms[:-1])
        return Ordinal(self.terms[:-1] + ((0, coef - 1),))

    def successor(self):
        return self + ONE

    def __int__(self):
        if not self.is_finite():
            raise OrdinalError("%s is infinite" % self)
        return self.terms[0][1] if self.terms else 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms < other.terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        lead_exp, lead_coef = other.terms[0]
        kept = [t for t in self.terms if t[0] > lead_exp]
        same = [t for t in self.terms if t[0] == lead_exp]
        if same:
            kept.append((lead_exp, same[0][1] + lead_coef))
            kept.extend(other.terms[1:])
        else:
            kept.extend(other.terms)
        return Ordinal(kept)

    def __radd__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__add__(self)

    def __mul__(self, k):
        """Multiply on the right by a natural number."""
        if isinstance(k, Ordinal):
            k = int(k)
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if k == 0 or not self.terms:
            return ZERO
        exp, coef = self.terms[0]
        return Ordinal(((exp, coef * k),) + self.terms[1:])

    def __sub__(self, other):
        """Left subtraction: the unique ``r`` with ``other + r == self``."""
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other > self:
            raise OrdinalError("%s exceeds %s" % (other, self))
        for i, term in enumerate(other.terms):
            mine = self.terms[i]
            if mine == term:
                continue
            if mine[0] > term[0]:
                return Ordinal(self.terms[i:])
            # same exponent, larger coefficient
            return Ordinal(((mine[0], mine[1] - term[1]),) + self.terms[i + 1:])
        return Ordinal(self.terms[len(other.terms):])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.terms:
            if exp == 0:
                parts.append(str(coef))
                continue
            base = "w" if exp == 1 else "w^%i" % exp
            parts.append(base if coef == 1 else "%s*%i" % (base, coef))
        return "+".join(parts)

    def __repr__(self):
        return "Ordinal(%r)" % str(self)

    def __reduce__(self):
        return (Ordinal, (self.terms,))


def _coerce(value):
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return Ordinal(value)
    return None


def ordinal(value):
    """Coerce an ``int``, ``str`` or ``Ordinal`` into an ``Ordinal``."""
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, str):
        return parse_ordinal(value)
    return Ordinal(value)


ZERO = Ordinal()
ONE = Ordinal(1)
OMEGA = Ordinal.omega()


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<w>w)|(?P<op>[\^*+]))")


def parse_ordinal(text):
    """Parse ordinal text such as ``w^2*3+w+4``.

    Non-canonical sums (``3+w``, ``w*1``) are accepted and normalized.

    Raises:
        OrdinalSyntaxError: With the column of the first bad character.
    """
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise OrdinalSyntaxError("unexpected character %r"
                                     % stripped[pos], text, pos)
        start = match.start(match.lastgroup)
        tokens.append((match.lastgroup, match.group(match.lastgroup), start))
        pos = match.end()
    if not tokens:
        raise OrdinalSyntaxError("empty ordinal", text, 0)

    result = ZERO
    i = 0

    def expect_num(i):
        if i >= len(tokens) or tokens[i][0] != "num":
            col = tokens[i][2] if i < len(tokens) else len(stripped)
            raise OrdinalSyntaxError("expected a number", text, col)
        return int(tokens[i][1]), i + 1

    while True:
        if i < len(tokens) and tokens[i][0] == "w":
            exp = 1
            i += 1
            if i < len(tokens) and tokens[i][1] == "^":
                exp, i = expect_num(i + 1)
            term = Ordinal.omega(exp)
        else:
            value, i = expect_num(i)
            term = Ordinal(value)
        if i < len(tokens) and tokens[i][1] == "*":
            coef, i = expect_num(i + 1)
            term = term * coef
        result = result + term
        if i == len(tokens):
            return result
        if tokens[i][1] != "+":
            raise OrdinalSyntaxError("expected '+'", text, tokens[i][2])
        i += 1


def fundamental_sequence(alpha, k):
    """Return element ``k`` of the fundamental sequence of a limit ordinal.

    Raises:
        OrdinalError: If ``alpha`` is not a limit.
    """
    alpha = ordinal(alpha)
    if not alpha.is_limit():
        raise OrdinalError("%s is not a limit" % alpha)
    k = int(k)
    if k < 0:
        raise OrdinalError("negative index %i" % k)
    exp, coef = alpha.terms[-1]
    prefix = alpha.terms[:-1]
    if coef > 1:
        prefix += ((exp, coef - 1),)
    if k == 0:
        return Ordinal(prefix)
    return Ordinal(prefix + ((exp - 1, k),))


def fs_index(alpha, xi):
    """Return the least ``k`` with ``fundamental_sequence(alpha, k) >= xi``."""
    alpha = ordinal(alpha)
    if xi >= alpha:
        raise OrdinalError("%s is not below %s" % (xi, alpha))
    base = fundamental_sequence(alpha, 0)
    if xi <= base:
        return 0
    rest = xi - base
    exp = alpha.terms[-1][0] - 1
    lead_exp, lead_coef = rest.terms[0]
    if lead_exp < exp:
        return 1
    return lead_coef + (1 if len(rest.terms) > 1 else 0)


def landmarks(bound, max_coef=5):
    """Return every ordinal below ``bound`` with all coefficients at most
    ``max_coef``, in increasing order.

    The finite part counts as a coefficient, so ``landmarks(w*2, 2)`` is
    ``0, 1, 2, w, w+1, w+2``.
    """
    bound = ordinal(bound)
    top = bound.degree()
    found = []
    for coefs in itertools.product(range(max_coef + 1), repeat=top + 1):
        terms = [(top - i, c) for i, c in enumerate(coefs) if c]
        candidate = Ordinal(terms)
        if candidate < bound:
            found.append(candidate)
    found.sort()
    return found


def _ordinals(t):
    return tuple(ordinal(x) for x in t)


def remove_index(t, m):
    """Return ``t`` without entry ``m``.

    Raises:
        TupleError: If ``m`` is out of range.
    """
    if not 0 <= m < len(t):
        raise TupleError("index %i out of range for a %i-tuple" % (m, len(t)))
    return tuple(t[:m]) + tuple(t[m + 1:])


def insert_index(t, m, value):
    if not 0 <= m <= len(t):
        raise TupleError("index %i out of range for a %i-tuple" % (m, len(t)))
    return tuple(t[:m]) + (value,) + tuple(t[m:])


def substitute(t, assignments):
    """Replace entries of ``t`` by ``assignments`` (a map index -> value).

    Raises:
        TupleError: If an index is out of range.
    """
    result = list(t)
    for index, value in assignments.items():
        if not 0 <= index < len(result):
            raise TupleError("index %i out of range for a %i-tuple"
                             % (index, len(result)))
        result[index] = value
    return tuple(result)


def is_kind(t, kind):
    if kind not in TUPLE_KINDS:
        raise ValueError("unknown tuple kind %r" % kind)
    pairs = list(zip(t, t[1:]))
    if kind == WEAK:
        return all(a <= b for a, b in pairs)
    if kind == STRICT:
        return all(a < b for a, b in pairs)
    return all(a <= b if i == 0 else a < b for i, (a, b) in enumerate(pairs))


def check_tuple(t, kind, length=None):
    """Validate a tuple, raising ``TupleError`` when it is malformed."""
    if length is not None and len(t) != length:
        raise TupleError("expected %i entries, got %i" % (length, len(t)))
    if not is_kind(t, kind):
        raise TupleError("%s is not %s-increasing" % (format_tuple(t), kind))
    return tuple(t)


def parse_tuple(text):
    """Parse ``(w,w*2)``, ``w, w*2`` or ``()`` into a tuple of ordinals."""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("(") or body.startswith("<"):
        closing = ")" if body[0] == "(" else ">"
        if not body.endswith(closing):
            raise OrdinalSyntaxError("unbalanced tuple", text, len(text) - 1)
        body = body[1:-1]
        offset += 1
    if not body.strip():
        return ()
    result = []
    for piece in body.split(","):
        try:
            result.append(parse_ordinal(piece))
        except OrdinalSyntaxError as err:
            raise OrdinalSyntaxError(err.message, text, offset + err.column)
        offset += len(piece) + 1
    return tuple(result)


def format_tuple(t):
    return "(%s)" % ",".join(str(x) for x in t)
