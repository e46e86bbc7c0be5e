# coding=utf-8
"""Characteristics read off walk trees.

Contents
--------

:rho2_n: Signed node count of a walk.
:resh_n: Signed sum of the label tails of a walk.
:varpi: Sum of coefficients.
:project_pi: Drop a final ``δ`` from basis tuples inside a club.
:family_alternating_sum: Alternating sum of ``resh_n`` over the faces of a
    tuple.
:classical_rho2: Number of steps of the classical walk.

"""

from . import ordinal as ords
from .errors import TupleError
from .group import ZERO_ELEMENT, FreeAbelianElement
from .walks import DEFAULT_CAP, walk


def rho2_n(seq, sign, alpha, gammas, cap=DEFAULT_CAP):
    """Sum of the node signs of ``walk(seq, sign, α, γ)``."""
    tree = walk(seq, sign, alpha, gammas, cap)
    return sum(node_sign for node_sign, _ in tree.nodes.values())


def resh_n(seq, alpha, gammas, sign=1, cap=DEFAULT_CAP):
    """Sum over the nodes of the walk of ``sign * [label[2:]]``."""
    tree = walk(seq, sign, alpha, gammas, cap)
    return FreeAbelianElement((label[2:], node_sign)
                              for node_sign, label in tree.nodes.values())


def varpi(element):
    return element.augmentation()


def project_pi(element, delta, club):
    """Send ``[γ + (δ,)]`` to ``[γ]`` when every entry of ``γ`` lies in
    ``club``, and every other basis tuple to 0."""
    delta = ords.ordinal(delta)
    kept = []
    for key, coeff in element.items():
        if key and key[-1] == delta and all(club.member(x)
                                            for x in key[:-1]):
            kept.append((key[:-1], coeff))
    return FreeAbelianElement(kept)


def family_alternating_sum(seq, betas, xi, cap=DEFAULT_CAP):
    """``Σ (-1)^i resh_n(seq, ξ, β without β[i])`` over ``i <= n``.

    Raises:
        TupleError: If ``betas`` is not strictly increasing or ``ξ`` is not
            below ``betas[0]``.
    """
    betas = ords.check_tuple(tuple(ords.ordinal(b) for b in betas),
                             ords.STRICT)
    xi = ords.ordinal(xi)
    if len(betas) < 2:
        raise TupleError("a family needs at least two entries")
    if xi >= betas[0]:
        raise TupleError("%s is not below %s" % (xi, betas[0]))
    total = ZERO_ELEMENT
    for i in range(len(betas)):
        face = resh_n(seq, xi, ords.remove_index(betas, i), cap=cap)
        total = total + face if i % 2 == 0 else total - face
    return total


def classical_rho2(seq, beta, gamma):
    """Steps of the walk ``γ > min(C(γ) ∖ β) > ...`` down to ``β``.

    The walk uses the clubs ``C((γ,))`` of the first level of ``seq`` and
    stops early when a club has nothing at or above ``β``.
    """
    beta = ords.ordinal(beta)
    gamma = ords.ordinal(gamma)
    if beta > gamma:
        raise TupleError("%s is above %s" % (beta, gamma))
    steps = 0
    while gamma != beta:
        gamma = seq.club_of((gamma,)).min_above(beta)
        if gamma is None:
            break
        steps += 1
    return steps
