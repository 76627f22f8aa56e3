"""Seifert matrices of knots and the surgery matrix built from them.

A genus-k Seifert matrix ``A`` is taken in the alternating band basis
(x-bands first, then y-bands), so ``A - A^T = [[0, I], [-I, 0]]``.  From it:

* ``L = A - [[0, I], [0, 0]]`` is the symmetric band linking matrix,
* ``W = [[L, I], [I, B]]`` with ``B = [[0, xI], [x'I, 0]]``, ``x = t - 1``,
  ``x' = t^-1 - 1``, is a Hermitian matrix over Z[t, t^-1],
* ``Z = A (A - A^T)^-1`` and ``X = xI`` give ``chi_delta(A) = chi(I + XZ)``.

Everything here is for knots (one generator).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .cyclic import CyclicSeries
from .errors import SeifertBasisError
from .group_algebra import GroupRingElement
from .linalg import mat_mul, rational_inverse, transpose
from .matrices import LambdaMatrix, SeriesMatrix, block_matrix, chi, mat_augment, series_block_matrix
from .nc_series import NCSeries


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def symplectic(k: int) -> list[list[int]]:
    """``[[0, I], [-I, 0]]`` of size 2k."""
    n = 2 * k
    J = [[0] * n for _ in range(n)]
    for i in range(k):
        J[i][k + i] = 1
        J[k + i][i] = -1
    return J


def validate_seifert(A: Sequence[Sequence[int]]) -> SeifertMatrix:
    rows = [list(r) for r in A]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SeifertBasisError("Seifert matrix must be square")
    if n % 2:
        raise SeifertBasisError(f"Seifert matrix must have even size, got {n}")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise SeifertBasisError(f"Seifert entries must be integers, got {x!r}")
    J = symplectic(n // 2)
    for i in range(n):
        for j in range(n):
            d = rows[i][j] - rows[j][i]
            if d != J[i][j]:
                raise SeifertBasisError(
                    f"A - A^T has entry {d} at ({i + 1}, {j + 1}); expected {J[i][j]} "
                    "for the alternating band basis"
                )
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def compute_Z(A: SeifertMatrix) -> list[list[Fraction]]:
    """``Z = A (A - A^T)^-1``, exact."""
    if A.size == 0:
        return []
    return mat_mul(A.rows(), rational_inverse(symplectic(A.genus)))


def _t(letter: int = 1) -> GroupRingElement:
    return GroupRingElement.word([letter], 1)


def x_elements() -> tuple[GroupRingElement, GroupRingElement]:
    """``x = t - 1`` and ``x' = t^-1 - 1``."""
    return _t(1) - 1, _t(-1) - 1


def band_linking(A: SeifertMatrix) -> list[list[int]]:
    k = A.genus
    L = A.rows()
    for i in range(k):
        L[i][k + i] -= 1
    return L


@dataclass(frozen=True)
class SurgeryData:
    L: list = field(hash=False)
    B: LambdaMatrix
    W: LambdaMatrix
    X: LambdaMatrix


def _scalar_blocks(k: int, a, b, c, d) -> LambdaMatrix:
    """``[[aI, bI], [cI, dI]]`` over Z[F], k x k blocks."""
    n = 2 * k
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i][i] = a
        rows[i][k + i] = b
        rows[k + i][i] = c
        rows[k + i][k + i] = d
    return LambdaMatrix(rows, 1)


def build_W(A: SeifertMatrix) -> SurgeryData:
    k = A.genus
    x, xb = x_elements()
    L = band_linking(A)
    Lm = LambdaMatrix(L, 1)
    B = _scalar_blocks(k, 0, x, xb, 0)
    eye = LambdaMatrix.identity(2 * k, 1)
    W = block_matrix([[Lm, eye], [eye, B]]) if k else LambdaMatrix([], 1)
    X = LambdaMatrix.diagonal([x] * (2 * k), 1)
    return SurgeryData(L=L, B=B, W=W, X=X)


def i_minus_BL(A: SeifertMatrix) -> LambdaMatrix:
    data = build_W(A)
    n = 2 * A.genus
    return LambdaMatrix.identity(n, 1) - data.B @ LambdaMatrix(data.L, 1)


def i_plus_XZ(A: SeifertMatrix) -> LambdaMatrix:
    x, _ = x_elements()
    Z = compute_Z(A)
    n = A.size
    return LambdaMatrix([[int(i == j) + x * Z[i][j] for j in range(n)] for i in range(n)], 1)


def chi_delta(A: SeifertMatrix, order: int) -> CyclicSeries:
    """``chi(I + XZ)``; the augmentation of ``I + XZ`` is the identity."""
    return chi(i_plus_XZ(A), order, permissive=True)


def unit_block_chi(A: SeifertMatrix, order: int) -> CyclicSeries:
    """chi of ``[[0, -I], [t^-1 I, 0]]``, which equals ``genus * chi([[t^-1]])``."""
    M = _scalar_blocks(A.genus, 0, -1, _t(-1), 0)
    return chi(M, order)


@dataclass(frozen=True)
class PathwayReport:
    order: int
    chi_W: CyclicSeries
    chi_I_minus_BL: CyclicSeries
    chi_delta: CyclicSeries
    unit_term: CyclicSeries
    structural_identity: bool

    @property
    def w_equals_ibl(self) -> bool:
        return self.chi_W == self.chi_I_minus_BL

    @property
    def ibl_equals_delta(self) -> bool:
        return self.chi_I_minus_BL == self.chi_delta

    @property
    def all_equal(self) -> bool:
        return self.w_equals_ibl and self.ibl_equals_delta

    @property
    def factorization_holds(self) -> bool:
        """``chi(I - BL) = chi([[0,-I],[t^-1 I,0]]) + chi(I + XZ)``."""
        return self.chi_I_minus_BL == self.unit_term + self.chi_delta

    @property
    def consistent(self) -> bool:
        return self.structural_identity and self.w_equals_ibl and self.factorization_holds


def structural_identity(A: SeifertMatrix, order: int) -> bool:
    """Check ``W (eps W)^-1 == [[I, 0], [B, I - BL]]`` over the completion."""
    data = build_W(A)
    n = 2 * A.genus
    if n == 0:
        return True
    W = SeriesMatrix.from_lambda(data.W, order)
    eps_inv = SeriesMatrix.from_rational(rational_inverse(mat_augment(data.W)), 1, order)
    lhs = W @ eps_inv
    eye = SeriesMatrix.identity(n, 1, order)
    rhs = series_block_matrix([
        [eye, SeriesMatrix.zeros(n, 1, order)],
        [SeriesMatrix.from_lambda(data.B, order), SeriesMatrix.from_lambda(i_minus_BL(A), order)],
    ])
    return lhs == rhs


def compare_pathways(A: SeifertMatrix, order: int) -> PathwayReport:
    return PathwayReport(
        order=order,
        chi_W=chi(build_W(A).W, order),
        chi_I_minus_BL=chi(i_minus_BL(A), order),
        chi_delta=chi_delta(A, order),
        unit_term=unit_block_chi(A, order),
        structural_identity=structural_identity(A, order),
    )


# --- Alexander polynomial -------------------------------------------------

def _padd(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return _trim(out)


def _pneg(p):
    return [-c for c in p]


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pdiv_exact(p, q):
    p = list(p)
    q = _trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    out = [0] * max(len(p) - len(q) + 1, 0)
    for i in range(len(p) - len(q), -1, -1):
        c, r = divmod(p[i + len(q) - 1], q[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        for j, b in enumerate(q):
            p[i + j] -= c * b
    if any(_trim(p)):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_det(M: list[list[list[int]]]) -> list[int]:
    """Bareiss determinant over Z[t]; entries are coefficient lists, low degree first."""
    n = len(M)
    if n == 0:
        return [1]
    a = [[_trim(e) for e in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _padd(_pmul(a[i][j], a[k][k]), _pneg(_pmul(a[i][k], a[k][j])))
                a[i][j] = _pdiv_exact(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else _pneg(det)


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Integer polynomial in ``t``; ``coeffs[i]`` multiplies ``t**i``."""

    coeffs: tuple[int, ...]

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def substitute_one_plus_h(self, order: int) -> NCSeries:
        """The polynomial at ``t = 1 + h``, truncated at degree ``order``."""
        terms: dict[tuple, int] = {}
        for i, c in enumerate(self.coeffs):
            for j in range(min(i, order) + 1):
                terms[(1,) * j] = terms.get((1,) * j, 0) + c * comb(i, j)
        return NCSeries(terms, order, 1)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def alexander(A: SeifertMatrix) -> AlexanderPolynomial:
    """``det(t A - A^T)``; takes the value 1 at ``t = 1``."""
    rows = A.rows()
    At = transpose(rows) if rows else []
    M = [[[-At[i][j], rows[i][j]] for j in range(A.size)] for i in range(A.size)]
    return AlexanderPolynomial(tuple(poly_det(M)))


def random_seifert(rng: random.Random, genus: int, bound: int = 3) -> SeifertMatrix:
    """Random valid Seifert matrix with entries in ``[-bound, bound]``."""
    n = 2 * genus
    L = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            hi = bound - 1 if (i < genus and j == i + genus) else bound
            L[i][j] = L[j][i] = rng.randint(-bound, hi)
    for i in range(genus):
        L[i][genus + i] += 1
    return validate_seifert(L)


TREFOIL = validate_seifert([[-1, 1], [0, -1]])
FIGURE_EIGHT = validate_seifert([[1, 1], [0, -1]])
UNKNOT = validate_seifert([])
