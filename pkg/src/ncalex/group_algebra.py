"""Free groups and their rational group rings.

Words are tuples of nonzero signed generator indices: ``k`` stands for
``t_k`` and ``-k`` for its inverse.  Every word is kept freely reduced, so
equality is structural and words can be used as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ArityError, InvalidGeneratorError

Scalar = Union[int, Fraction]


def _check_g(a, b) -> None:
    if a.g != b.g:
        raise ArityError(f"generator counts differ: {a.g} vs {b.g}")


def reduce_word(raw: Iterable[int], g: int) -> "GroupWord":
    """Freely reduce ``raw`` (a stack pass, so nested cancellations collapse)."""
    if g < 1:
        raise InvalidGeneratorError(f"generator count must be positive, got {g}")
    out: list[int] = []
    for letter in raw:
        letter = int(letter)
        if letter == 0 or abs(letter) > g:
            raise InvalidGeneratorError(f"letter {letter} not in 1..{g} up to sign")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return GroupWord._make(tuple(out), g)


@dataclass(frozen=True, order=True)
class GroupWord:
    letters: tuple[int, ...]
    g: int

    def __init__(self, letters: Iterable[int] = (), g: int = 1):
        w = reduce_word(letters, g)
        object.__setattr__(self, "letters", w.letters)
        object.__setattr__(self, "g", g)

    @classmethod
    def _make(cls, letters: tuple[int, ...], g: int) -> "GroupWord":
        # trusted constructor: letters already reduced and in range
        self = object.__new__(cls)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "g", g)
        return self

    @classmethod
    def identity(cls, g: int) -> "GroupWord":
        return cls._make((), g)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return word_mul(self, other)

    def inverse(self) -> "GroupWord":
        return word_inverse(self)

    def __repr__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"t{abs(k)}" + ("^-1" if k < 0 else "") for k in self.letters)


def word_mul(a: GroupWord, b: GroupWord) -> GroupWord:
    _check_g(a, b)
    left = list(a.letters)
    right = b.letters
    i = 0
    while left and i < len(right) and left[-1] == -right[i]:
        left.pop()
        i += 1
    return GroupWord._make(tuple(left) + right[i:], a.g)


def word_inverse(a: GroupWord) -> GroupWord:
    return GroupWord._make(tuple(-k for k in reversed(a.letters)), a.g)


class GroupRingElement:
    """Finite rational combination of words in the free group on ``g`` letters.

    Immutable; ``terms`` maps :class:`GroupWord` to a nonzero ``Fraction``.
    """

    __slots__ = ("_terms", "g", "_hash")

    def __init__(self, terms: Mapping[GroupWord, Scalar] | None = None, g: int = 1):
        clean: dict[GroupWord, Fraction] = {}
        for w, c in (terms or {}).items():
            if w.g != g:
                raise ArityError(f"word {w!r} has g={w.g}, expected {g}")
            c = Fraction(c)
            if c:
                clean[w] = clean.get(w, Fraction(0)) + c
                if not clean[w]:
                    del clean[w]
        self._terms = clean
        self.g = g
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[GroupWord, Fraction], g: int) -> "GroupRingElement":
        self = object.__new__(cls)
        self._terms = {w: c for w, c in terms.items() if c}
        self.g = g
        self._hash = None
        return self

    @classmethod
    def scalar(cls, c: Scalar, g: int) -> "GroupRingElement":
        return cls({GroupWord.identity(g): c}, g)

    @classmethod
    def word(cls, letters: Iterable[int], g: int, coeff: Scalar = 1) -> "GroupRingElement":
        return cls({reduce_word(letters, g): coeff}, g)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Scalar, Iterable[int]]], g: int) -> "GroupRingElement":
        """Build from ``(coeff, letters)`` pairs; repeated words are summed."""
        acc: dict[GroupWord, Fraction] = {}
        for c, letters in pairs:
            w = reduce_word(letters, g)
            acc[w] = acc.get(w, Fraction(0)) + Fraction(c)
        return cls._raw(acc, g)

    @property
    def terms(self) -> dict[GroupWord, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def lift(self, g: int) -> "GroupRingElement":
        """Reinterpret in the free group on ``g >= self.g`` generators."""
        if g < self.g:
            raise ArityError(f"cannot lift from g={self.g} down to g={g}")
        return GroupRingElement._raw({GroupWord._make(w.letters, g): c for w, c in self._terms.items()}, g)

    def _coerce(self, other) -> "GroupRingElement":
        if isinstance(other, GroupRingElement):
            _check_g(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return GroupRingElement.scalar(other, self.g)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return GroupRingElement._raw(acc, self.g)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw({w: -c for w, c in self._terms.items()}, self.g)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElement._raw({w: c * other for w, c in self._terms.items()}, self.g)
        if isinstance(other, GroupRingElement):
            return gr_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GroupRingElement.scalar(other, self.g)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.g == other.g and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.g, frozenset(self._terms.items())))
        return self._hash

    def star(self) -> "GroupRingElement":
        return gr_star(self)

    def augment(self) -> Fraction:
        return gr_augment(self)

    def sorted_items(self) -> list[tuple[GroupWord, Fraction]]:
        return sorted(self._terms.items(), key=lambda wc: (len(wc[0].letters), wc[0].letters))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            if not w.letters:
                parts.append(str(c))
            elif c == 1:
                parts.append(repr(w))
            elif c == -1:
                parts.append(f"-{w!r}")
            else:
                parts.append(f"{c}*{w!r}")
        return " + ".join(parts).replace("+ -", "- ")


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _check_g(a, b)
    acc: dict[GroupWord, Fraction] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = word_mul(wa, wb)
            acc[w] = acc.get(w, Fraction(0)) + ca * cb
    return GroupRingElement._raw(acc, a.g)


def gr_star(a: GroupRingElement) -> GroupRingElement:
    return GroupRingElement._raw({word_inverse(w): c for w, c in a._terms.items()}, a.g)


def gr_augment(a: GroupRingElement) -> Fraction:
    return sum(a._terms.values(), Fraction(0))
