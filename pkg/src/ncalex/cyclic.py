"""Series modulo cyclic rotation of monomials.

Each cyclic word is represented by its lexicographically least rotation.
The quotient is only an abelian group, so no product is defined.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import ArityError
from .nc_series import Monomial, NCSeries, format_series, monomial_key

Scalar = Union[int, Fraction]


def least_rotation(s: tuple) -> int:
    """Booth's algorithm: start index of the least rotation of ``s``."""
    n = len(s)
    if n == 0:
        return 0
    doubled = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def necklace_canonical(m: Monomial) -> Monomial:
    m = tuple(m)
    k = least_rotation(m)
    return m[k:] + m[:k]


class CyclicSeries:
    __slots__ = ("_terms", "order", "g")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, order: int = 8, g: int = 1):
        acc: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            key = necklace_canonical(tuple(m))
            if len(key) > order:
                continue
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c}
        self.order = order
        self.g = g

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, m) -> Fraction:
        return self._terms.get(necklace_canonical(tuple(m)), Fraction(0))

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def _check(self, other: "CyclicSeries") -> None:
        if (self.order, self.g) != (other.order, other.g):
            raise ArityError(
                f"cyclic series mismatch: (N={self.order}, g={self.g}) vs (N={other.order}, g={other.g})"
            )

    def __add__(self, other: "CyclicSeries") -> "CyclicSeries":
        if not isinstance(other, CyclicSeries):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return CyclicSeries(acc, self.order, self.g)

    def __neg__(self) -> "CyclicSeries":
        return CyclicSeries({m: -c for m, c in self._terms.items()}, self.order, self.g)

    def __sub__(self, other: "CyclicSeries") -> "CyclicSeries":
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return CyclicSeries({m: c * scalar for m, c in self._terms.items()}, self.order, self.g)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicSeries):
            return NotImplemented
        return cyc_equal(self, other)

    def __hash__(self):
        return hash((self.order, self.g, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"CyclicSeries({format_series(self._terms, self.g)}, N={self.order})"

    def __str__(self) -> str:
        return format_series(self._terms, self.g)


def cyc_project(a: NCSeries) -> CyclicSeries:
    return CyclicSeries(a.terms, a.order, a.g)


def cyc_equal(a: CyclicSeries, b: CyclicSeries) -> bool:
    a._check(b)
    return a._terms == b._terms
