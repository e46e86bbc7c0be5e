# coding=utf-8
"""Finitely supported integer combinations of ordinal tuples.

Contents
--------

:FreeAbelianElement: An element of the free abelian group on ordinal tuples.
:ZERO_ELEMENT: The neutral element.
:basis: The basis element of one tuple, with a coefficient.
:group_add: Sum of two elements.

"""

from . import ordinal as ords


class FreeAbelianElement(object):
    """A map from ordinal tuples to nonzero integers.

    Zero coefficients are never stored, so two elements are equal exactly
    when their supports and coefficients are.

    Args:
        terms (Union[Dict, Iterable[Tuple[tuple, int]]]): Tuple and
            coefficient pairs; repeated tuples are summed.
    """

    def __init__(self, terms=()):
        self._terms = {}
        if isinstance(terms, dict):
            terms = terms.items()
        for key, coeff in terms:
            self._accumulate(tuple(key), coeff)

    def _accumulate(self, key, coeff):
        if not coeff:
            return
        total = self._terms.get(key, 0) + coeff
        if total:
            self._terms[key] = total
        else:
            del self._terms[key]

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def support(self):
        """Tuples with nonzero coefficient, largest first."""
        return sorted(self._terms, reverse=True)

    def items(self):
        return [(key, self._terms[key]) for key in self.support()]

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        result = FreeAbelianElement(self._terms)
        for key, coeff in other._terms.items():
            result._accumulate(key, coeff)
        return result

    def __neg__(self):
        return FreeAbelianElement((k, -c) for k, c in self._terms.items())

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return FreeAbelianElement((key, k * c) for key, c in self._terms.items())

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FreeAbelianElement):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def augmentation(self):
        """Sum of the coefficients."""
        return sum(self._terms.values())

    def to_list(self):
        return [{"tuple": [str(x) for x in key], "coeff": coeff}
                for key, coeff in self.items()]

    @classmethod
    def from_list(cls, data):
        return cls((tuple(ords.parse_ordinal(x) for x in entry["tuple"]),
                    entry["coeff"]) for entry in data)

    def __str__(self):
        if not self._terms:
            return "0"
        return " ".join("%+i[%s]" % (coeff, ",".join(str(x) for x in key))
                        for key, coeff in self.items())

    def __repr__(self):
        return "FreeAbelianElement(%s)" % self


ZERO_ELEMENT = FreeAbelianElement()


def basis(key, coeff=1):
    return FreeAbelianElement([(key, coeff)])


def group_add(a, b):
    return a + b
