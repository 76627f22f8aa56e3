"""Simple stable congruence moves on Hermitian group-ring matrices.

Indices in moves are 1-based, matching the JSON move format.  A move acts
on ``A`` either by a block sum with ``(+-1)``, by removing such a block, or
by ``A -> P A P*`` where ``P`` is elementary (identity plus one
off-diagonal entry) or diagonal with a single ``+-word`` on the diagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Union

from .cyclic import cyc_equal
from .errors import MoveError, NotHermitianError
from .group_algebra import GroupRingElement, GroupWord, gr_mul, gr_star, reduce_word
from .matrices import LambdaMatrix, chi, is_hermitian, mat_augment
from .linalg import unimodular


@dataclass(frozen=True)
class Stabilize:
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise MoveError(f"stabilization sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class Destabilize:
    index: int


@dataclass(frozen=True)
class ElementaryCongruence:
    i: int
    j: int
    lam: GroupRingElement

    def __post_init__(self):
        if self.i == self.j:
            raise MoveError("elementary congruence needs i != j")


@dataclass(frozen=True)
class DiagonalCongruence:
    i: int
    sign: int
    word: GroupWord

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise MoveError(f"diagonal unit sign must be +1 or -1, got {self.sign}")

    @property
    def unit(self) -> GroupRingElement:
        return GroupRingElement({self.word: self.sign}, self.word.g)


Move = Union[Stabilize, Destabilize, ElementaryCongruence, DiagonalCongruence]
MoveSequence = list  # list[Move]


def _check_domain(A: LambdaMatrix) -> None:
    if not is_hermitian(A):
        raise NotHermitianError("moves apply to Hermitian matrices only")
    if not unimodular(mat_augment(A)):
        raise MoveError("augmentation of the matrix is not invertible over Z")


def _check_index(A: LambdaMatrix, k: int) -> int:
    if not 1 <= k <= A.n:
        raise MoveError(f"index {k} out of range 1..{A.n}")
    return k - 1


def can_destabilize(A: LambdaMatrix, k: int) -> bool:
    """True iff row/column ``k`` (1-based) is a split ``(+-1)`` block."""
    if not 1 <= k <= A.n:
        return False
    i = k - 1
    if A[i, i] not in (GroupRingElement.scalar(1, A.g), GroupRingElement.scalar(-1, A.g)):
        return False
    return all(not A[i, j] and not A[j, i] for j in range(A.n) if j != i)


def _apply(A: LambdaMatrix, m: Move) -> LambdaMatrix:
    g = A.g
    rows = A.rows()
    if isinstance(m, Stabilize):
        return A.direct_sum(LambdaMatrix([[m.sign]], g))
    if isinstance(m, Destabilize):
        if not can_destabilize(A, m.index):
            raise MoveError(f"entry {m.index} is not a split +-1 block")
        i = m.index - 1
        return LambdaMatrix([[x for c, x in enumerate(r) if c != i] for r_i, r in enumerate(rows) if r_i != i], g)
    if isinstance(m, ElementaryCongruence):
        i, j = _check_index(A, m.i), _check_index(A, m.j)
        lam = m.lam
        if lam.g != g:
            raise MoveError(f"lambda has g={lam.g}, matrix has g={g}")
        # P = I + lam E_ij ;  rows: r_i += lam r_j ; then cols: c_i += c_j lam*
        rows[i] = [a + gr_mul(lam, b) for a, b in zip(rows[i], rows[j])]
        lam_star = gr_star(lam)
        for r in rows:
            r[i] = r[i] + gr_mul(r[j], lam_star)
        return LambdaMatrix(rows, g)
    if isinstance(m, DiagonalCongruence):
        i = _check_index(A, m.i)
        u = m.unit
        if u.g != g:
            raise MoveError(f"unit has g={u.g}, matrix has g={g}")
        rows[i] = [gr_mul(u, a) for a in rows[i]]
        u_star = gr_star(u)
        for r in rows:
            r[i] = gr_mul(r[i], u_star)
        return LambdaMatrix(rows, g)
    raise MoveError(f"unknown move {m!r}")


def apply_move(A: LambdaMatrix, m: Move) -> LambdaMatrix:
    _check_domain(A)
    return _apply(A, m)


def apply_sequence(A: LambdaMatrix, seq: Sequence[Move]) -> LambdaMatrix:
    _check_domain(A)
    for m in seq:
        A = _apply(A, m)
    return A


def _random_word(rng: random.Random, g: int, max_len: int) -> GroupWord:
    raw = [rng.choice([1, -1]) * rng.randint(1, g) for _ in range(rng.randint(0, max_len))]
    return reduce_word(raw, g)


def _random_lambda(rng: random.Random, g: int, max_len: int) -> GroupRingElement:
    while True:
        terms: dict[GroupWord, int] = {}
        for _ in range(rng.randint(1, 2)):
            w = _random_word(rng, g, max_len)
            terms[w] = terms.get(w, 0) + rng.choice([-2, -1, 1, 2])
        lam = GroupRingElement(terms, g)
        if lam:
            return lam


def random_move_sequence(seed: int, length: int, max_word_len: int, start: LambdaMatrix) -> list[Move]:
    """Deterministic pseudorandom moves, each applicable at its turn on ``start``.

    The walk tracks the evolving matrix so destabilizations are only emitted
    when a split block exists, and stops stabilizing once the matrix has
    grown three past its starting size.
    """
    if length < 0:
        raise MoveError("length must be nonnegative")
    rng = random.Random(seed)
    g = start.g
    A = start
    seq: list[Move] = []
    while len(seq) < length:
        splits = [k for k in range(1, A.n + 1) if can_destabilize(A, k)]
        kinds = ["elementary", "elementary", "diagonal"]
        if A.n < start.n + 3:
            kinds.append("stabilize")
        if splits:
            kinds.append("destabilize")
        kind = rng.choice(kinds)
        if (kind == "elementary" and A.n < 2) or A.n == 0:
            kind = "stabilize"
        if kind == "stabilize":
            m: Move = Stabilize(rng.choice([1, -1]))
        elif kind == "destabilize":
            m = Destabilize(rng.choice(splits))
        elif kind == "elementary":
            i, j = rng.sample(range(1, A.n + 1), 2)
            m = ElementaryCongruence(i, j, _random_lambda(rng, g, max_word_len))
        else:
            m = DiagonalCongruence(rng.randint(1, A.n), rng.choice([1, -1]), _random_word(rng, g, max_word_len))
        A = _apply(A, m)
        seq.append(m)
    return seq


def verify_chi_invariance(A: LambdaMatrix, seq: Sequence[Move], order: int) -> bool:
    B = apply_sequence(A, seq)
    return cyc_equal(chi(A, order), chi(B, order))
