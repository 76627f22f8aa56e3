"""Dense graded layout for truncated series and the series-matrix product kernel.

A series in ``g`` noncommuting letters truncated at degree ``N`` is stored
as a flat vector: degree ``d`` occupies a block of ``g**d`` slots starting
at ``offsets[d]``, and the monomial ``(i_1, ..., i_d)`` sits at the base-g
number ``(i_1 - 1)...(i_d - 1)`` inside its block.  With that layout the
product of a degree-p slot ``a`` and a degree-q slot ``b`` lands at slot
``a * g**q + b`` of degree ``p + q``.

Matrices of series are arrays of shape ``(rows, cols, M)`` holding Python
integers (object dtype).  The product kernel runs in int64 whenever a
cheap a-priori bound rules out overflow, and on object arrays otherwise.
The int64 kernel is compiled with numba unless ``NCALEX_DISABLE_NUMBA`` is
set to a non-empty value other than ``0``, in which case a numpy
tensordot path is used.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .cyclic import necklace_canonical

INT64_SAFE = 2**62

_disabled = os.environ.get("NCALEX_DISABLE_NUMBA", "") not in ("", "0")
try:
    if _disabled:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    HAVE_NUMBA = False

_backend = "numba" if HAVE_NUMBA else "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Switch the int64 kernel between ``"numba"`` and ``"numpy"``."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    _backend = name


class Grading:
    """Index bookkeeping for the dense layout at fixed ``(g, N)``."""

    def __init__(self, g: int, order: int):
        self.g = g
        self.order = order
        self.sizes = np.array([g**d for d in range(order + 1)], dtype=np.int64)
        self.offsets = np.zeros(order + 2, dtype=np.int64)
        self.offsets[1:] = np.cumsum(self.sizes)
        self.total = int(self.offsets[-1])

    def __eq__(self, other):
        return isinstance(other, Grading) and (self.g, self.order) == (other.g, other.order)

    def __hash__(self):
        return hash((self.g, self.order))

    def block(self, d: int) -> slice:
        return slice(int(self.offsets[d]), int(self.offsets[d + 1]))

    def index(self, m: tuple) -> int:
        pos = 0
        for k in m:
            pos = pos * self.g + (k - 1)
        return int(self.offsets[len(m)]) + pos

    @property
    def monomials(self) -> list[tuple]:
        return _monomials(self.g, self.order)

    @property
    def cyclic_index(self) -> np.ndarray:
        """Slot of the necklace-canonical rotation of each slot's monomial."""
        return _cyclic_index(self.g, self.order)

    @property
    def reverse_index(self) -> np.ndarray:
        return _reverse_index(self.g, self.order)


@lru_cache(maxsize=None)
def grading(g: int, order: int) -> Grading:
    return Grading(g, order)


@lru_cache(maxsize=None)
def _monomials(g: int, order: int) -> list[tuple]:
    out: list[tuple] = [()]
    level: list[tuple] = [()]
    for _ in range(order):
        level = [m + (k,) for m in level for k in range(1, g + 1)]
        out.extend(level)
    return out


@lru_cache(maxsize=None)
def _cyclic_index(g: int, order: int) -> np.ndarray:
    gr = grading(g, order)
    idx = np.array([gr.index(necklace_canonical(m)) for m in _monomials(g, order)], dtype=np.int64)
    idx.setflags(write=False)
    return idx


@lru_cache(maxsize=None)
def _reverse_index(g: int, order: int) -> np.ndarray:
    gr = grading(g, order)
    idx = np.array([gr.index(tuple(reversed(m))) for m in _monomials(g, order)], dtype=np.int64)
    idx.setflags(write=False)
    return idx


def max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _matmul_numpy(A: np.ndarray, B: np.ndarray, gr: Grading) -> np.ndarray:
    n, m, _ = A.shape
    p = B.shape[1]
    R = np.zeros((n, p, gr.total), dtype=A.dtype)
    N = gr.order
    blocks_a = [A[:, :, gr.block(d)] for d in range(N + 1)]
    blocks_b = [B[:, :, gr.block(d)] for d in range(N + 1)]
    live_a = [bool(x.any()) for x in blocks_a]
    live_b = [bool(x.any()) for x in blocks_b]
    for dp in range(N + 1):
        if not live_a[dp]:
            continue
        for dq in range(N + 1 - dp):
            if not live_b[dq]:
                continue
            prod = np.tensordot(blocks_a[dp], blocks_b[dq], axes=([1], [0]))
            prod = prod.transpose(0, 2, 1, 3).reshape(n, p, -1)
            R[:, :, gr.block(dp + dq)] += prod
    return R


if HAVE_NUMBA:

    @njit(cache=True)
    def _matmul_int64_numba(A, B, offsets, sizes, N):  # pragma: no cover - compiled
        n, m, total = A.shape
        p = B.shape[1]
        R = np.zeros((n, p, total), dtype=np.int64)
        for dp in range(N + 1):
            op = offsets[dp]
            sp = sizes[dp]
            for dq in range(N + 1 - dp):
                oq = offsets[dq]
                sq = sizes[dq]
                orr = offsets[dp + dq]
                for a in range(sp):
                    for i in range(n):
                        for j in range(m):
                            x = A[i, j, op + a]
                            if x == 0:
                                continue
                            base = orr + a * sq
                            for b in range(sq):
                                for k in range(p):
                                    y = B[j, k, oq + b]
                                    if y != 0:
                                        R[i, k, base + b] += x * y
        return R


def series_matmul(A: np.ndarray, B: np.ndarray, gr: Grading) -> np.ndarray:
    """Exact product of two integer series matrices in the dense layout."""
    inner = A.shape[1]
    bound = max_abs(A) * max_abs(B) * max(inner, 1) * (gr.order + 1)
    if bound < INT64_SAFE:
        a64 = A.astype(np.int64)
        b64 = B.astype(np.int64)
        if _backend == "numba":
            R = _matmul_int64_numba(a64, b64, gr.offsets, gr.sizes, gr.order)
        else:
            R = _matmul_numpy(a64, b64, gr)
        return R.astype(object)
    return _matmul_numpy(A.astype(object), B.astype(object), gr)


def right_mul_letter(v: np.ndarray, letter: int, gr: Grading) -> np.ndarray:
    """``v * (1 + h_k)`` or ``v * (1 + h_k)**-1`` along the last axis."""
    g, N = gr.g, gr.order
    k = abs(letter) - 1
    out = v.copy()
    if letter > 0:
        for d in range(N):
            dst = gr.block(d + 1)
            out[..., dst.start + k:dst.stop:g] += v[..., gr.block(d)]
    else:
        # w (1 + h_k) = v  =>  w_{d+1} = v_{d+1} - w_d h_k
        for d in range(N):
            dst = gr.block(d + 1)
            out[..., dst.start + k:dst.stop:g] -= out[..., gr.block(d)]
    return out


@lru_cache(maxsize=65536)
def _magnus_word(letters: tuple, g: int, order: int) -> np.ndarray:
    gr = grading(g, order)
    if not letters:
        v = np.zeros(gr.total, dtype=object)
        v[0] = 1
    else:
        v = right_mul_letter(_magnus_word(letters[:-1], g, order).copy(), letters[-1], gr)
    v.setflags(write=False)
    return v


def magnus_word_dense(letters: tuple, gr: Grading) -> np.ndarray:
    """Dense Magnus image of a reduced word (read-only, cached)."""
    return _magnus_word(tuple(letters), gr.g, gr.order)
