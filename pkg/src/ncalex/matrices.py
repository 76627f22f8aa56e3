"""Matrices over the free group ring and over its completion, and the invariant chi.

``chi(W)`` is the cyclic class of ``tr log(W (eps W)^-1)``, where ``eps``
sends every group element to 1.  ``log`` uses the ordinary Mercator series
``sum (-1)**(n+1) X**n / n``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .cyclic import CyclicSeries
from .errors import ArityError, DomainError, NonUnitError
from .group_algebra import GroupRingElement, gr_augment, gr_mul, gr_star
from .kernels import Grading, grading, magnus_word_dense, series_matmul
from .linalg import identity, rational_inverse, unimodular
from .nc_series import NCSeries


def _as_element(x, g: int) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        if x.g != g:
            raise ArityError(f"entry has g={x.g}, matrix has g={g}")
        return x
    return GroupRingElement.scalar(x, g)


class LambdaMatrix:
    """Square matrix over the rational group ring of a free group."""

    __slots__ = ("entries", "n", "g")

    def __init__(self, rows: Iterable[Iterable], g: int):
        entries = tuple(tuple(_as_element(x, g) for x in row) for row in rows)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise DomainError("matrix must be square")
        self.entries = entries
        self.n = n
        self.g = g

    @classmethod
    def identity(cls, n: int, g: int) -> "LambdaMatrix":
        return cls(identity(n), g)

    @classmethod
    def diagonal(cls, diag: Sequence, g: int) -> "LambdaMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], g)

    def __getitem__(self, ij) -> GroupRingElement:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[GroupRingElement]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        return self.g == other.g and self.entries == other.entries

    def __hash__(self):
        return hash((self.g, self.entries))

    def _check(self, other: "LambdaMatrix") -> None:
        if self.g != other.g:
            raise ArityError(f"generator counts differ: {self.g} vs {other.g}")

    def __add__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check(other)
        return LambdaMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.g)

    def __sub__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check(other)
        return LambdaMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.g)

    def __neg__(self) -> "LambdaMatrix":
        return LambdaMatrix([[-a for a in r] for r in self.entries], self.g)

    def __matmul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check(other)
        if self.n != other.n:
            raise DomainError(f"size mismatch: {self.n} vs {other.n}")
        cols = list(zip(*other.entries))
        zero = GroupRingElement({}, self.g)
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + gr_mul(a, b)
                out_row.append(acc)
            out.append(out_row)
        return LambdaMatrix(out, self.g)

    def scale(self, c) -> "LambdaMatrix":
        return LambdaMatrix([[a * c for a in r] for r in self.entries], self.g)

    def direct_sum(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check(other)
        n, m = self.n, other.n
        rows = [list(r) + [0] * m for r in self.entries]
        rows += [[0] * n + list(r) for r in other.entries]
        return LambdaMatrix(rows, self.g)

    def lift(self, g: int) -> "LambdaMatrix":
        return LambdaMatrix([[a.lift(g) for a in r] for r in self.entries], g)

    def star(self) -> "LambdaMatrix":
        return mat_star(self)

    def __repr__(self) -> str:
        return "LambdaMatrix(" + repr([[repr(a) for a in r] for r in self.entries]) + f", g={self.g})"


def block_matrix(blocks: Sequence[Sequence[LambdaMatrix]]) -> LambdaMatrix:
    g = blocks[0][0].g
    rows = []
    for brow in blocks:
        for i in range(brow[0].n):
            rows.append([x for b in brow for x in b.entries[i]])
    return LambdaMatrix(rows, g)


def mat_star(A: LambdaMatrix) -> LambdaMatrix:
    return LambdaMatrix([[gr_star(A.entries[j][i]) for j in range(A.n)] for i in range(A.n)], A.g)


def is_hermitian(A: LambdaMatrix) -> bool:
    return A == mat_star(A)


def mat_augment(A: LambdaMatrix, strict: bool = False) -> list[list]:
    """Entrywise augmentation; ``strict`` rejects non-integer results."""
    out = []
    for row in A.entries:
        out_row = []
        for a in row:
            e = gr_augment(a)
            if e.denominator == 1:
                out_row.append(int(e))
            elif strict:
                raise DomainError(f"augmentation {e} of entry {a!r} is not an integer")
            else:
                out_row.append(e)
        out.append(out_row)
    return out


class SeriesMatrix:
    """Square matrix over truncated noncommutative series.

    Stored as ``num / den`` with ``num`` an integer array of shape
    ``(n, n, M)`` in the graded layout of :mod:`ncalex.kernels` and ``den`` a
    positive integer, reduced so that ``gcd(num, den) == 1``.
    """

    __slots__ = ("num", "den", "g", "order", "grading")

    def __init__(self, num: np.ndarray, den: int, g: int, order: int):
        gr = grading(g, order)
        num = np.asarray(num, dtype=object)
        if num.ndim != 3 or num.shape[0] != num.shape[1] or num.shape[2] != gr.total:
            raise DomainError(f"bad numerator shape {num.shape} for g={g}, N={order}")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if den != 1 and num.size:
            d = gcd(den, *(int(x) for x in num.flat))
            if d > 1:
                num = num // d
                den //= d
        self.num = num
        self.den = den
        self.g = g
        self.order = order
        self.grading = gr

    @property
    def n(self) -> int:
        return self.num.shape[0]

    @classmethod
    def zeros(cls, n: int, g: int, order: int) -> "SeriesMatrix":
        return cls(np.zeros((n, n, grading(g, order).total), dtype=object), 1, g, order)

    @classmethod
    def identity(cls, n: int, g: int, order: int) -> "SeriesMatrix":
        num = np.zeros((n, n, grading(g, order).total), dtype=object)
        for i in range(n):
            num[i, i, 0] = 1
        return cls(num, 1, g, order)

    @classmethod
    def from_rational(cls, M: Sequence[Sequence], g: int, order: int) -> "SeriesMatrix":
        n = len(M)
        fr = [[Fraction(x) for x in row] for row in M]
        den = lcm(1, *(x.denominator for row in fr for x in row))
        num = np.zeros((n, n, grading(g, order).total), dtype=object)
        for i in range(n):
            for j in range(n):
                num[i, j, 0] = int(fr[i][j] * den)
        return cls(num, den, g, order)

    @classmethod
    def from_lambda(cls, A: LambdaMatrix, order: int) -> "SeriesMatrix":
        """Magnus image ``t_k -> 1 + h_k`` of a group ring matrix."""
        gr = grading(A.g, order)
        den = lcm(1, *(c.denominator for row in A.entries for a in row for _, c in a.items()))
        num = np.zeros((A.n, A.n, gr.total), dtype=object)
        for i, row in enumerate(A.entries):
            for j, a in enumerate(row):
                for w, c in a.items():
                    num[i, j] += int(c * den) * magnus_word_dense(w.letters, gr)
        return cls(num, den, A.g, order)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[NCSeries]]) -> "SeriesMatrix":
        first = rows[0][0]
        g, order = first.g, first.order
        gr = grading(g, order)
        n = len(rows)
        den = 1
        for row in rows:
            for s in row:
                if (s.g, s.order) != (g, order):
                    raise ArityError("entries must share g and N")
                den = lcm(den, *(c.denominator for _, c in s.items()))
        num = np.zeros((n, n, gr.total), dtype=object)
        for i, row in enumerate(rows):
            for j, s in enumerate(row):
                for m, c in s.items():
                    num[i, j, gr.index(m)] = int(c * den)
        return cls(num, den, g, order)

    def entry(self, i: int, j: int) -> NCSeries:
        mons = self.grading.monomials
        vec = self.num[i, j]
        terms = {mons[k]: Fraction(int(vec[k]), self.den) for k in np.flatnonzero(vec)}
        return NCSeries._raw(terms, self.order, self.g)

    def entries(self) -> list[list[NCSeries]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def constant_part(self) -> list[list[Fraction]]:
        return [[Fraction(int(self.num[i, j, 0]), self.den) for j in range(self.n)] for i in range(self.n)]

    def _check(self, other: "SeriesMatrix") -> None:
        if (self.g, self.order, self.n) != (other.g, other.order, other.n):
            raise ArityError(
                f"series matrices differ: (g={self.g}, N={self.order}, n={self.n}) "
                f"vs (g={other.g}, N={other.order}, n={other.n})"
            )

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        den = lcm(self.den, other.den)
        num = self.num * (den // self.den) + other.num * (den // other.den)
        return SeriesMatrix(num, den, self.g, self.order)

    def __neg__(self) -> "SeriesMatrix":
        return SeriesMatrix(-self.num, self.den, self.g, self.order)

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return self + (-other)

    def scale(self, c) -> "SeriesMatrix":
        c = Fraction(c)
        return SeriesMatrix(self.num * c.numerator, self.den * c.denominator, self.g, self.order)

    def __matmul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        num = series_matmul(self.num, other.num, self.grading)
        return SeriesMatrix(num, self.den * other.den, self.g, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        if (self.g, self.order, self.num.shape) != (other.g, other.order, other.num.shape):
            return False
        # both sides are reduced, so equal values have equal (num, den)
        return self.den == other.den and bool(np.all(self.num == other.num))

    def is_zero(self) -> bool:
        return not self.num.any()

    def trace(self) -> NCSeries:
        vec = np.zeros(self.grading.total, dtype=object)
        for i in range(self.n):
            vec = vec + self.num[i, i]
        mons = self.grading.monomials
        terms = {mons[k]: Fraction(int(vec[k]), self.den) for k in np.flatnonzero(vec)}
        return NCSeries._raw(terms, self.order, self.g)

    def trace_cyclic(self) -> CyclicSeries:
        vec = np.zeros(self.grading.total, dtype=object)
        for i in range(self.n):
            vec = vec + self.num[i, i]
        canon = self.grading.cyclic_index
        acc = np.zeros(self.grading.total, dtype=object)
        for k in np.flatnonzero(vec):
            acc[canon[k]] += vec[k]
        mons = self.grading.monomials
        terms = {mons[k]: Fraction(int(acc[k]), self.den) for k in np.flatnonzero(acc)}
        return CyclicSeries(terms, self.order, self.g)

    def direct_sum(self, other: "SeriesMatrix") -> "SeriesMatrix":
        if (self.g, self.order) != (other.g, other.order):
            raise ArityError("direct sum needs equal g and N")
        den = lcm(self.den, other.den)
        n, m = self.n, other.n
        num = np.zeros((n + m, n + m, self.grading.total), dtype=object)
        num[:n, :n] = self.num * (den // self.den)
        num[n:, n:] = other.num * (den // other.den)
        return SeriesMatrix(num, den, self.g, self.order)

    def block(self, rows: slice, cols: slice) -> "SeriesMatrix":
        return SeriesMatrix(self.num[rows, cols], self.den, self.g, self.order)

    def __repr__(self) -> str:
        return f"SeriesMatrix(n={self.n}, g={self.g}, N={self.order}, den={self.den})"


def series_block_matrix(blocks: Sequence[Sequence[SeriesMatrix]]) -> SeriesMatrix:
    first = blocks[0][0]
    den = lcm(*(b.den for row in blocks for b in row))
    rows = [np.concatenate([b.num * (den // b.den) for b in brow], axis=1) for brow in blocks]
    return SeriesMatrix(np.concatenate(rows, axis=0), den, first.g, first.order)


def _constant_inverse(A: SeriesMatrix) -> SeriesMatrix:
    try:
        inv = rational_inverse(A.constant_part())
    except NonUnitError:
        raise NonUnitError("constant-term matrix is singular") from None
    return SeriesMatrix.from_rational(inv, A.g, A.order)


def series_mat_inverse(A: SeriesMatrix) -> SeriesMatrix:
    """Inverse modulo degree N: ``(eps A)^-1 * sum_k (I - A (eps A)^-1)**k``."""
    e_inv = _constant_inverse(A)
    eye = SeriesMatrix.identity(A.n, A.g, A.order)
    y = eye - A @ e_inv
    total = eye
    power = eye
    for _ in range(A.order):
        power = power @ y
        if power.is_zero():
            break
        total = total + power
    return e_inv @ total


def _log_of_unipotent_part(A: SeriesMatrix) -> SeriesMatrix:
    x = A @ _constant_inverse(A) - SeriesMatrix.identity(A.n, A.g, A.order)
    total = SeriesMatrix.zeros(A.n, A.g, A.order)
    power = None
    for k in range(1, A.order + 1):
        power = x if power is None else power @ x
        if power.is_zero():
            break
        total = total + power.scale(Fraction((-1) ** (k + 1), k))
    return total


def log_plus(A: SeriesMatrix) -> SeriesMatrix:
    """``log(A (eps A)^-1)``; the series stops at degree N since the argument is unipotent."""
    return _log_of_unipotent_part(A)


def _check_chi_domain(constant: list[list], permissive: bool) -> None:
    if permissive:
        return
    if not unimodular(constant):
        raise DomainError(f"augmentation {constant} is not invertible over Z")


def chi_series(A: SeriesMatrix, permissive: bool = False) -> CyclicSeries:
    """chi of a matrix already over the completion."""
    _check_chi_domain(A.constant_part(), permissive)
    return log_plus(A).trace_cyclic()


def chi(A: LambdaMatrix, order: int, permissive: bool = False) -> CyclicSeries:
    """Cyclic class of ``tr log(A (eps A)^-1)`` truncated at degree ``order``.

    By default ``eps A`` must be an integer matrix of determinant +-1.
    ``permissive=True`` accepts any rationally invertible augmentation and is
    meant for internal identity checks.
    """
    if order < 1:
        raise DomainError(f"truncation order must be >= 1, got {order}")
    _check_chi_domain(mat_augment(A), permissive)
    return log_plus(SeriesMatrix.from_lambda(A, order)).trace_cyclic()
