# coding=utf-8
"""Seeded single-club mutations of n-C-sequences.

A mutation replaces the club at one accumulation index ``(α,) + γ`` by a
smaller club that is still cofinal in ``α``. Against a coherent sequence,
mutating at an index whose first entry is an accumulation point of a
full-length club always produces a coherence violation at ``α``.

Contents
--------

:thin: Keep the fundamental-sequence points of the club from ``start`` on.
:truncate: Drop the first ``start`` elements of the club.
:mutate: Apply a named mutation.
:random_mutation: Pick a mutation site and kind with a seeded generator.

"""

import logging

from .club import Copy, Fundamental
from .csequence import ExplicitSequence, check_coherence
from .errors import BuilderError

LOG = logging.getLogger("hiwalks.mutation")

THIN = "thin"
TRUNCATE = "truncate"
KINDS = (THIN, TRUNCATE)


def _site(seq, index):
    index = tuple(index)
    if not index or not seq.index_valid(index):
        raise BuilderError("cannot mutate at %r" % (index,))
    parent = seq.club_of(index[1:])
    if not parent.is_acc_point(index[0]):
        raise BuilderError("%s is not an accumulation point of %s"
                           % (index[0], parent))
    return index, parent


def thin(seq, index, start=1):
    """Replace ``C(index)`` by the ``start``-th tail of the fundamental
    sequence of ``index[0]``, read inside the parent club.

    On interval parents this is ``fs(α, from=start)``.
    """
    index, parent = _site(seq, index)
    club = Copy(Fundamental(parent.rank(index[0]), start), parent)
    return _override(seq, index, club)


def truncate(seq, index, start=1):
    """Replace ``C(index)`` by ``C(index)`` without its first ``start``
    elements.

    On maximal sequences this is ``interval(α, from=start)``.
    """
    index, _ = _site(seq, index)
    if start < 1:
        raise BuilderError("truncation must drop at least one element")
    club = seq.club_of(index)
    if club.order_type() <= start:
        raise BuilderError("%s has fewer than %i elements" % (club, start))
    return _override(seq, index, club.above(club.element_at(start)))


def _override(seq, index, club):
    LOG.debug("mutating %r at %r to %s", seq, index, club)
    overrides = dict(getattr(seq, "overrides", {}))
    overrides[index] = club
    base = seq.base if isinstance(seq, ExplicitSequence) else seq
    return ExplicitSequence(seq.n, seq.domain, overrides, base=base,
                            base_ref=getattr(seq, "base_ref", None),
                            named=getattr(seq, "named", None))


MUTATIONS = {THIN: thin, TRUNCATE: truncate}


def mutate(seq, index, kind, start=1):
    if kind not in MUTATIONS:
        raise BuilderError("unknown mutation %r" % kind)
    return MUTATIONS[kind](seq, index, start)


def random_mutation(seq, rng, window=None, universe=None):
    """Mutate ``seq`` at a random plus-index whose first entry lies in the
    accumulation set of the coherence scan.

    Returns:
        Tuple[ExplicitSequence, tuple, str]: The mutant, the site and the
        mutation kind.

    Raises:
        BuilderError: If the scan finds no mutation site.
    """
    report = check_coherence(seq, window, universe)
    if universe is None:
        universe = seq.landmarks(report.window)
    x_set = set(report.x_set)
    sites = [index for index in seq.plus_indices(
        [x for x in universe if x < report.window]) if index[0] in x_set]
    if not sites:
        raise BuilderError("no accumulation point to mutate below %s"
                           % report.window)
    index = rng.choice(sites)
    kind = rng.choice(KINDS)
    return mutate(seq, index, kind, rng.randint(1, 3)), index, kind
