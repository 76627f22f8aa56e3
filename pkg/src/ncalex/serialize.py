"""JSON encoding of matrices, Seifert data, move sequences and chi values.

Rationals travel as strings (``"3"``, ``"-1/2"``); group ring elements as
lists of ``{"coeff", "word"}`` objects sorted by word length and then
lexicographically.  ``dumps`` is canonical: equal values give identical
bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cyclic import CyclicSeries
from .errors import NcalexError
from .group_algebra import GroupRingElement, GroupWord, reduce_word
from .matrices import LambdaMatrix
from .moves import DiagonalCongruence, Destabilize, ElementaryCongruence, Move, Stabilize
from .seifert import SeifertMatrix, validate_seifert

FORMAT_VERSION = 1


class ParseError(NcalexError, ValueError):
    """Input does not match the JSON schema."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def fraction_to_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_fraction(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {x!r}") from None
    raise ParseError(f"rationals must be strings or integers, got {x!r}")


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def _word(x: Any, g: int) -> GroupWord:
    if not isinstance(x, list):
        raise ParseError(f"word must be a list of signed indices, got {x!r}")
    try:
        return reduce_word([_int(k, "word letter") for k in x], g)
    except ValueError as e:
        raise ParseError(str(e)) from None


def _version(data: Any) -> None:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if data.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {data.get('version')!r}; expected {FORMAT_VERSION}")


def element_to_json(a: GroupRingElement) -> list:
    return [{"coeff": fraction_to_str(c), "word": list(w.letters)} for w, c in a.sorted_items()]


def element_from_json(x: Any, g: int) -> GroupRingElement:
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return GroupRingElement.scalar(parse_fraction(x), g)
    if not isinstance(x, list):
        raise ParseError(f"group ring element must be a list of terms, got {x!r}")
    pairs = []
    for term in x:
        if not isinstance(term, dict) or set(term) != {"coeff", "word"}:
            raise ParseError(f"term must have exactly 'coeff' and 'word', got {term!r}")
        pairs.append((parse_fraction(term["coeff"]), _word(term["word"], g).letters))
    return GroupRingElement.from_pairs(pairs, g)


def lambda_matrix_to_json(A: LambdaMatrix) -> dict:
    return {
        "version": FORMAT_VERSION,
        "g": A.g,
        "n": A.n,
        "entries": [[element_to_json(a) for a in row] for row in A.entries],
    }


def lambda_matrix_from_json(data: Any) -> LambdaMatrix:
    _version(data)
    if "entries" not in data:
        raise ParseError("lambda-matrix payload needs 'entries'")
    g = _int(data.get("g"), "g")
    if g < 1:
        raise ParseError(f"g must be positive, got {g}")
    rows = data["entries"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("'entries' must be a list of rows")
    n = _int(data.get("n", len(rows)), "n")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"'entries' is not a {n}x{n} matrix")
    return LambdaMatrix([[element_from_json(x, g) for x in row] for row in rows], g)


def seifert_to_json(A: SeifertMatrix) -> dict:
    return {"version": FORMAT_VERSION, "seifert": A.rows()}


def seifert_from_json(data: Any) -> SeifertMatrix:
    """Parse and validate; a wrong band basis raises ``SeifertBasisError``."""
    _version(data)
    rows = data.get("seifert")
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("'seifert' must be a 2D integer array")
    rows = [[_int(x, "Seifert entry") for x in r] for r in rows]
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("'seifert' must be square")
    return validate_seifert(rows)


def move_to_json(m: Move) -> dict:
    if isinstance(m, Stabilize):
        return {"stabilize": m.sign}
    if isinstance(m, Destabilize):
        return {"destabilize": m.index}
    if isinstance(m, ElementaryCongruence):
        return {"elementary": {"i": m.i, "j": m.j, "lambda": element_to_json(m.lam)}}
    if isinstance(m, DiagonalCongruence):
        return {"diagonal": {"i": m.i, "sign": m.sign, "word": list(m.word.letters)}}
    raise TypeError(f"not a move: {m!r}")


def move_from_json(x: Any, g: int) -> Move:
    if not isinstance(x, dict) or len(x) != 1:
        raise ParseError(f"move must be a single-key object, got {x!r}")
    (kind, body), = x.items()
    try:
        if kind == "stabilize":
            return Stabilize(_int(body, "stabilize sign"))
        if kind == "destabilize":
            return Destabilize(_int(body, "destabilize index"))
        if kind == "elementary":
            if not isinstance(body, dict):
                raise ParseError("elementary move body must be an object")
            return ElementaryCongruence(
                _int(body.get("i"), "i"), _int(body.get("j"), "j"), element_from_json(body.get("lambda"), g)
            )
        if kind == "diagonal":
            if not isinstance(body, dict):
                raise ParseError("diagonal move body must be an object")
            return DiagonalCongruence(
                _int(body.get("i"), "i"), _int(body.get("sign", 1), "sign"), _word(body.get("word", []), g)
            )
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None
    raise ParseError(f"unknown move kind {kind!r}")


def moves_to_json(seq: list[Move], g: int | None = None) -> dict:
    out: dict = {"version": FORMAT_VERSION}
    if g is not None:
        out["g"] = g
    out["moves"] = [move_to_json(m) for m in seq]
    return out


def moves_from_json(data: Any, g: int) -> list[Move]:
    """Parse a move sequence; ``g`` comes from the matrix unless the file pins it."""
    _version(data)
    if "g" in data and _int(data["g"], "g") != g:
        raise ParseError(f"move file declares g={data['g']} but the matrix has g={g}")
    moves = data.get("moves")
    if not isinstance(moves, list):
        raise ParseError("'moves' must be a list")
    return [move_from_json(m, g) for m in moves]


def cyclic_to_json(c: CyclicSeries) -> dict:
    return {
        "order": c.order,
        "terms": [{"coeff": fraction_to_str(v), "cycle": list(m)} for m, v in c.sorted_items()],
    }


def cyclic_from_json(data: Any, g: int | None = None) -> CyclicSeries:
    if not isinstance(data, dict) or "order" not in data or "terms" not in data:
        raise ParseError("cyclic series needs 'order' and 'terms'")
    order = _int(data["order"], "order")
    terms: dict[tuple, Fraction] = {}
    for t in data["terms"]:
        cyc = tuple(_int(k, "cycle letter") for k in t["cycle"])
        terms[cyc] = terms.get(cyc, Fraction(0)) + parse_fraction(t["coeff"])
    if g is None:
        g = max((k for m in terms for k in m), default=1)
    if any(k < 1 or k > g for m in terms for k in m):
        raise ParseError(f"cycle letters must lie in 1..{g}")
    return CyclicSeries(terms, order, g)

