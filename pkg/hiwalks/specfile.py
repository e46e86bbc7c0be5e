# coding=utf-8
"""The line-oriented sequence spec file format.

::

    ncseq n=2 domain=interval(w^2) base=maximal
    # comments start with a hash
    club D := fs(w*2)
    index (w*2) := D
    index (w,w*3) := interval(w, from=1)

The header gives ``n`` and the domain club and optionally a base sequence
that supplies every club not listed:

* ``base=maximal`` and ``base=minimal-fs`` use the maximal and the
  order-type-minimal rule on the domain;
* ``base=inherit`` gives every accumulation index the club of its first
  entry (game output uses it);
* ``base=stepped-up d=<builtin> e=<builtin> kappa=<ord> s=<ord,...>`` steps
  ``e`` up along ``d``; the domain must be the domain of ``d``.

``index`` lines list clubs at plus-indices; ``club`` lines name clubs for
later lines. Sequence references elsewhere are either a path or
``builtin:maximal:<ord>`` / ``builtin:minimal-fs:<ord>``.

Contents
--------

:parse_spec: Parse spec file text.
:read_spec: Parse a spec file.
:format_spec: Print a sequence in canonical spec file form.
:write_spec: Write a spec file.
:builtin: Build a builtin sequence.
:resolve: Turn a ``--seq`` reference into a sequence.

"""

import io
import logging
import re

from . import ordinal as ords
from .club import Interval, parse_club, parse_club_prefix
from .csequence import ExplicitSequence, InheritingSequence, \
    MaximalSequence, OrderMinimalSequence, SteppedUpSequence, \
    build_maximal, build_order_minimal, build_stepped_up
from .errors import BuilderError, ClubError, OrdinalError, ParseError, \
    SpecFileError

LOG = logging.getLogger("hiwalks.specfile")

BUILTIN_PREFIX = "builtin:"
BUILDERS = {
    "maximal": build_maximal,
    "minimal-fs": build_order_minimal,
}
BASES = ("maximal", "minimal-fs", "inherit", "stepped-up")
HEADER_KEYS = ("n", "domain", "base", "d", "e", "kappa", "s")

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_KEY = re.compile(r"\s*([a-z]+)=")


def builtin(ref, n=1):
    """Build ``builtin:<kind>:<ord>`` for dimension ``n``.

    Raises:
        BuilderError: For an unknown kind or a bad bound.
    """
    body = ref[len(BUILTIN_PREFIX):] if ref.startswith(BUILTIN_PREFIX) \
        else ref
    kind, _, bound = body.partition(":")
    if kind not in BUILDERS or not bound:
        raise BuilderError("unknown builtin %r" % ref)
    try:
        bound = ords.parse_ordinal(bound)
    except ParseError as err:
        raise BuilderError("bad builtin bound in %r: %s" % (ref, err))
    seq = BUILDERS[kind](n, bound)
    seq.ref = BUILTIN_PREFIX + "%s:%s" % (kind, bound)
    return seq


def resolve(ref, n=None):
    """Return the sequence a ``--seq`` argument names.

    Builtins default to ``n = 1``. A spec file carries its own ``n``;
    passing a different one raises ``BuilderError``.
    """
    if ref.startswith(BUILTIN_PREFIX):
        return builtin(ref, 1 if n is None else n)
    seq = read_spec(ref)
    if n is not None and n != seq.n:
        raise BuilderError("%s has n=%i, not %i" % (ref, seq.n, n))
    return seq


class _Header(object):

    def __init__(self, lineno, text):
        self.lineno = lineno
        self.text = text
        self.values = {}
        self.domain = None

    def fail(self, message, column):
        raise SpecFileError(message, self.text, column, self.lineno)

    def parse(self):
        if not self.text.startswith("ncseq"):
            self.fail("expected the 'ncseq' header", 0)
        pos = len("ncseq")
        while pos < len(self.text.rstrip()):
            match = _KEY.match(self.text, pos)
            if not match:
                self.fail("expected key=value", pos)
            key, pos = match.group(1), match.end()
            if key not in HEADER_KEYS:
                self.fail("unknown key %r" % key, match.start(1))
            if key in self.values or (key == "domain" and
                                      self.domain is not None):
                self.fail("duplicate key %r" % key, match.start(1))
            if key == "domain":
                try:
                    self.domain, pos = parse_club_prefix(self.text, pos)
                except ParseError as err:
                    self.fail(err.message, err.column)
                continue
            end = pos
            while end < len(self.text) and not self.text[end].isspace():
                end += 1
            self.values[key] = (self.text[pos:end], pos)
            pos = end
        if "n" not in self.values:
            self.fail("missing n=", len(self.text))
        return self

    def get(self, key):
        return self.values.get(key, (None, len(self.text)))

    def natural(self, key):
        value, column = self.get(key)
        if value is None or not value.isdigit() or int(value) < 1:
            self.fail("%s must be a positive integer" % key, column)
        return int(value)

    def ordinal(self, key):
        value, column = self.get(key)
        if value is None:
            self.fail("missing %s=" % key, column)
        try:
            return ords.parse_ordinal(value)
        except ParseError as err:
            self.fail(err.message, column + err.column)

    def sequence(self, key, n):
        value, column = self.get(key)
        if value is None:
            self.fail("missing %s=" % key, column)
        try:
            return builtin(value, n)
        except BuilderError as err:
            self.fail(str(err), column)


def _base(header, n):
    name, column = header.get("base")
    if name is None:
        return None
    if name not in BASES:
        header.fail("unknown base %r" % name, column)
    if name == "stepped-up":
        d_seq = header.sequence("d", 1)
        if n < 2:
            header.fail("stepped-up needs n >= 2", column)
        e_seq = header.sequence("e", n - 1)
        kappa = header.ordinal("kappa")
        s_text, s_column = header.get("s")
        if s_text is None:
            header.fail("missing s=", s_column)
        try:
            points = [ords.parse_ordinal(p) for p in s_text.split(",")]
            seq = build_stepped_up(d_seq, e_seq, points, kappa)
        except (ParseError, BuilderError, ClubError) as err:
            header.fail(str(err), s_column)
        if header.domain is not None and header.domain != seq.domain:
            header.fail("domain differs from the domain of d", 0)
        return seq
    if header.domain is None:
        header.fail("missing domain=", len(header.text))
    if name == "maximal":
        return MaximalSequence(n, header.domain)
    if name == "minimal-fs":
        return OrderMinimalSequence(n, header.domain)
    return InheritingSequence(n, header.domain)


def _split_line(lineno, line, keyword):
    body = line[len(keyword):]
    lhs, sep, rhs = body.partition(":=")
    if not sep:
        raise SpecFileError("expected ':='", line, len(line), lineno)
    offset = len(keyword) + len(lhs) + 2
    rhs_offset = offset + len(rhs) - len(rhs.lstrip())
    return lhs, len(keyword), rhs.strip(), rhs_offset


def _club(lineno, line, text, column, env):
    try:
        return parse_club(text, env)
    except ParseError as err:
        raise SpecFileError(err.message, line, column + err.column, lineno)


def parse_spec(text, source=None):
    """Parse spec file text into a sequence.

    Raises:
        SpecFileError: At the first malformed line, with its position.
    """
    header = None
    named = {}
    overrides = {}
    where = {}
    for lineno, raw in enumerate(io.StringIO(text), 1):
        line = raw.rstrip("\n").rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if header is None:
            header = _Header(lineno, line).parse()
            continue
        if line.startswith("club "):
            lhs, _, rhs, column = _split_line(lineno, line, "club")
            name = lhs.strip()
            if not _NAME.match(name):
                raise SpecFileError("bad club name %r" % name, line, 5, lineno)
            if name in named:
                raise SpecFileError("club %r defined twice" % name, line, 5,
                                    lineno)
            named[name] = _club(lineno, line, rhs, column, named)
        elif line.startswith("index "):
            lhs, lhs_column, rhs, column = _split_line(lineno, line, "index")
            try:
                index = ords.parse_tuple(lhs)
            except ParseError as err:
                raise SpecFileError(err.message, line,
                                    lhs_column + err.column, lineno)
            if index in overrides:
                raise SpecFileError("index listed twice", line, lhs_column,
                                    lineno)
            overrides[index] = _club(lineno, line, rhs, column, named)
            where[index] = (lineno, line, lhs_column)
        else:
            raise SpecFileError("expected 'club' or 'index'", line, 0, lineno)

    if header is None:
        raise SpecFileError("missing 'ncseq' header", "", 0, 1)
    n = header.natural("n")
    base = _base(header, n)
    domain = base.domain if base is not None else header.domain
    if domain is None:
        header.fail("missing domain=", len(header.text))
    if isinstance(base, InheritingSequence):
        base.top_clubs.update((i[0], c) for i, c in overrides.items()
                              if len(i) == 1)
    seq = ExplicitSequence(n, domain, overrides, base=base, named=named)
    seq.base_ref = header.get("base")[0]
    _validate(seq, where)
    LOG.debug("parsed %s: n=%i, %i clubs listed", source or "<text>", n,
              len(overrides))
    return seq


def _validate(seq, where):
    for index in sorted(seq.overrides, key=lambda i: (len(i), i)):
        lineno, line, column = where[index]

        def fail(message):
            raise SpecFileError(message, line, column, lineno)

        if len(index) > seq.n:
            fail("index longer than n=%i" % seq.n)
        if not ords.is_kind(index, ords.STRICT):
            fail("index is not strictly increasing")
        try:
            valid = seq.index_valid(index[1:])
            parent = seq.club_of(index[1:]) if valid else None
        except (ParseError, ClubError, OrdinalError, KeyError) as err:
            fail(str(err))
        if not valid or not parent.is_acc_point(index[0]):
            fail("not a plus-index")
        club = seq.overrides[index]
        if club.ssup() != index[0]:
            fail("club %s is not cofinal in %s" % (club, index[0]))
        sample = ords.landmarks(index[0], 3)
        if not club.is_subset(parent, sample):
            fail("club %s is not inside the parent club %s" % (club, parent))


def read_spec(path):
    with io.open(path, encoding="utf-8") as handle:
        return parse_spec(handle.read(), path)


def _base_header(seq):
    if isinstance(seq, SteppedUpSequence):
        return "base=stepped-up d=%s e=%s kappa=%s s=%s" % (
            _builtin_ref(seq.d_seq), _builtin_ref(seq.e_seq), seq.kappa,
            ",".join(str(s) for s in sorted(seq.s_points)))
    if isinstance(seq, MaximalSequence):
        return "base=maximal"
    if isinstance(seq, OrderMinimalSequence):
        return "base=minimal-fs"
    if isinstance(seq, InheritingSequence):
        return "base=inherit"
    raise BuilderError("%r has no spec file form" % seq)


def _builtin_ref(seq):
    kinds = {MaximalSequence: "maximal", OrderMinimalSequence: "minimal-fs"}
    kind = kinds.get(type(seq))
    if kind is None or seq.domain != Interval(seq.domain.ssup()):
        raise BuilderError("%r is not a builtin sequence" % seq)
    return "%s%s:%s" % (BUILTIN_PREFIX, kind, seq.domain.ssup())


def format_spec(seq, comments=()):
    """Print ``seq`` in canonical spec file form.

    Args:
        seq (NCSequence): An explicit, builtin, stepped-up or game sequence.
        comments (Iterable[str]): Extra comment lines after the header.
    """
    overrides = {}
    named = {}
    base = seq
    if isinstance(seq, ExplicitSequence):
        overrides = dict(seq.overrides)
        named = seq.named
        base = seq.base
    if isinstance(base, InheritingSequence):
        for beta, club in base.top_clubs.items():
            overrides.setdefault((beta,), club)
    comments = list(comments) + list(getattr(seq, "transcript_lines",
                                             lambda: [])())

    head = "ncseq n=%i domain=%s" % (seq.n, seq.domain)
    if base is not None:
        head += " " + _base_header(base)
    lines = [head]
    lines.extend(c if c.startswith("#") else "# " + c for c in comments)
    names = {}
    for name in sorted(named):
        lines.append("club %s := %s" % (name, named[name]))
        names.setdefault(named[name], name)
    for index in sorted(overrides, key=lambda i: (len(i), i)):
        club = overrides[index]
        lines.append("index %s := %s" % (ords.format_tuple(index),
                                         names.get(club, club)))
    return "\n".join(lines) + "\n"


def write_spec(seq, path, comments=()):
    with io.open(path, "w", encoding="utf-8") as handle:
        handle.write(format_spec(seq, comments))
