"""Truncated power series in noncommuting variables ``h_1, ..., h_g``.

A monomial is a tuple of letters in ``1..g``; the empty tuple is the
constant monomial.  Series carry their truncation order ``N`` and every
product discards terms of degree above ``N``.  Group ring elements enter
through the Magnus map ``t_k -> 1 + h_k``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from .errors import ArityError, DomainError, InvalidGeneratorError, NonUnitError
from .group_algebra import GroupRingElement

Monomial = tuple  # tuple[int, ...]
Scalar = Union[int, Fraction]


def monomial_key(m: Monomial) -> tuple:
    """Sort key: degree first, then lexicographic."""
    return (len(m), m)


class NCSeries:
    __slots__ = ("_terms", "order", "g")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, order: int = 8, g: int = 1):
        if order < 1:
            raise DomainError(f"truncation order must be >= 1, got {order}")
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(k) for k in m)
            if any(k < 1 or k > g for k in m):
                raise InvalidGeneratorError(f"monomial {m} uses a letter outside 1..{g}")
            if len(m) > order:
                continue
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self.order = order
        self.g = g

    @classmethod
    def _raw(cls, terms: dict, order: int, g: int) -> "NCSeries":
        self = object.__new__(cls)
        self._terms = {m: c for m, c in terms.items() if c and len(m) <= order}
        self.order = order
        self.g = g
        return self

    @classmethod
    def constant(cls, c: Scalar, order: int, g: int) -> "NCSeries":
        return cls({(): c}, order, g)

    @classmethod
    def one(cls, order: int, g: int) -> "NCSeries":
        return cls.constant(1, order, g)

    @classmethod
    def zero(cls, order: int, g: int) -> "NCSeries":
        return cls({}, order, g)

    @classmethod
    def variable(cls, k: int, order: int, g: int) -> "NCSeries":
        return cls({(k,): 1}, order, g)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, m: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def _check(self, other: "NCSeries") -> None:
        if self.order != other.order or self.g != other.g:
            raise ArityError(
                f"series mismatch: (N={self.order}, g={self.g}) vs (N={other.order}, g={other.g})"
            )

    def _coerce(self, other):
        if isinstance(other, NCSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NCSeries.constant(other, self.order, self.g)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return NCSeries._raw(acc, self.order, self.g)

    __radd__ = __add__

    def __neg__(self):
        return NCSeries._raw({m: -c for m, c in self._terms.items()}, self.order, self.g)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NCSeries._raw({m: c * other for m, c in self._terms.items()}, self.order, self.g)
        if isinstance(other, NCSeries):
            return ns_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "NCSeries":
        if n < 0:
            return ns_invert(self) ** (-n)
        out = NCSeries.one(self.order, self.g)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCSeries.constant(other, self.order, self.g)
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.order, self.g) == (other.order, other.g) and self._terms == other._terms

    def __hash__(self):
        return hash((self.order, self.g, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def truncate(self, order: int) -> "NCSeries":
        return NCSeries._raw(dict(self._terms), order, self.g)

    def __repr__(self) -> str:
        return f"NCSeries({format_series(self._terms, self.g)}, N={self.order})"


def format_monomial(m: Monomial, g: int) -> str:
    if not m:
        return "1"
    names = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        name = "h" if g == 1 else f"h{m[i]}"
        names.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return " ".join(names)


def format_series(terms: Mapping[Monomial, Fraction], g: int) -> str:
    """Human-readable rendering, e.g. ``h + 1/2 h^2``."""
    if not terms:
        return "0"
    out = []
    for m, c in sorted(terms.items(), key=lambda mc: monomial_key(mc[0])):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = format_monomial(m, g)
        else:
            body = f"{a} {format_monomial(m, g)}"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def ns_mul(a: NCSeries, b: NCSeries) -> NCSeries:
    a._check(b)
    N = a.order
    acc: dict[Monomial, Fraction] = {}
    for ma, ca in a._terms.items():
        room = N - len(ma)
        if room < 0:
            continue
        for mb, cb in b._terms.items():
            if len(mb) <= room:
                m = ma + mb
                acc[m] = acc.get(m, Fraction(0)) + ca * cb
    return NCSeries._raw(acc, N, a.g)


@lru_cache(maxsize=None)
def _letter_image(letter: int, order: int, g: int) -> NCSeries:
    k = abs(letter)
    if letter > 0:
        return NCSeries._raw({(): Fraction(1), (k,): Fraction(1)}, order, g)
    return NCSeries._raw({(k,) * j: Fraction((-1) ** j) for j in range(order + 1)}, order, g)


def magnus_embed(a: GroupRingElement, order: int) -> NCSeries:
    """Image of a group ring element under ``t_k -> 1 + h_k``, truncated."""
    if order < 1:
        raise DomainError(f"truncation order must be >= 1, got {order}")
    out = NCSeries.zero(order, a.g)
    for w, c in a.items():
        img = NCSeries.one(order, a.g)
        for letter in w.letters:
            img = ns_mul(img, _letter_image(letter, order, a.g))
        out = out + img * c
    return out


def ns_invert(a: NCSeries) -> NCSeries:
    c = a.constant_term
    if not c:
        raise NonUnitError("series with zero constant term is not invertible")
    # a = c(1 - u)  =>  a^-1 = c^-1 (1 + u + u^2 + ...)
    u = NCSeries.one(a.order, a.g) - a * (1 / c)
    total = NCSeries.one(a.order, a.g)
    power = NCSeries.one(a.order, a.g)
    for _ in range(a.order):
        power = ns_mul(power, u)
        total = total + power
    return total * (1 / c)


def ns_log(a: NCSeries) -> NCSeries:
    if a.constant_term != 1:
        raise DomainError(f"log needs constant term 1, got {a.constant_term}")
    u = a - 1
    total = NCSeries.zero(a.order, a.g)
    power = NCSeries.one(a.order, a.g)
    for n in range(1, a.order + 1):
        power = ns_mul(power, u)
        total = total + power * Fraction((-1) ** (n + 1), n)
    return total


def ns_exp(a: NCSeries) -> NCSeries:
    if a.constant_term != 0:
        raise DomainError(f"exp needs constant term 0, got {a.constant_term}")
    total = NCSeries.one(a.order, a.g)
    power = NCSeries.one(a.order, a.g)
    for n in range(1, a.order + 1):
        power = ns_mul(power, a)
        total = total + power * Fraction(1, factorial(n))
    return total


def abelianize(a: NCSeries) -> NCSeries:
    """Commutative image: letters of every monomial sorted ascending."""
    acc: dict[Monomial, Fraction] = {}
    for m, c in a._terms.items():
        key = tuple(sorted(m))
        acc[key] = acc.get(key, Fraction(0)) + c
    return NCSeries._raw(acc, a.order, a.g)
