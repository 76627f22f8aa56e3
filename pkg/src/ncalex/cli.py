"""Command-line front end.

Exit codes: 0 success, 1 parse/schema error, 2 precondition violation,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .errors import ArityError, DomainError, InvalidGeneratorError, NonUnitError
from .linalg import bareiss_det
from .matrices import chi, is_hermitian, mat_augment
from .moves import apply_sequence, random_move_sequence, verify_chi_invariance
from .seifert import alexander, chi_delta, compare_pathways
from .serialize import (
    ParseError,
    cyclic_to_json,
    dumps,
    fraction_to_str,
    lambda_matrix_from_json,
    lambda_matrix_to_json,
    moves_from_json,
    seifert_from_json,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3
DEFAULT_ORDER = 8


class InvariantBreach(Exception):
    pass


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from None


def _order(args, data=None) -> int:
    order = args.order
    if order is None and isinstance(data, dict) and "order" in data:
        order = data["order"]
    order = DEFAULT_ORDER if order is None else order
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise ParseError(f"order must be a positive integer, got {order!r}")
    return order


def _emit_cyclic(name: str, value) -> None:
    print(dumps(cyclic_to_json(value)))
    print(f"{name} = {value}")


def cmd_chi(args) -> int:
    data = _load(args.file)
    A = lambda_matrix_from_json(data)
    _emit_cyclic("chi", chi(A, _order(args, data), permissive=args.permissive_augmentation))
    return EXIT_OK


def cmd_chi_delta(args) -> int:
    data = _load(args.file)
    S = seifert_from_json(data)
    _emit_cyclic("chi_delta", chi_delta(S, _order(args, data)))
    return EXIT_OK


def cmd_alexander(args) -> int:
    S = seifert_from_json(_load(args.file))
    print(alexander(S))
    return EXIT_OK


def cmd_compare_pathways(args) -> int:
    data = _load(args.file)
    S = seifert_from_json(data)
    r = compare_pathways(S, _order(args, data))
    report = {
        "order": r.order,
        "chi_W": cyclic_to_json(r.chi_W)["terms"],
        "chi_I_minus_BL": cyclic_to_json(r.chi_I_minus_BL)["terms"],
        "chi_I_plus_XZ": cyclic_to_json(r.chi_delta)["terms"],
        "unit_term": cyclic_to_json(r.unit_term)["terms"],
        "structural_identity": r.structural_identity,
        "W_equals_I_minus_BL": r.w_equals_ibl,
        "I_minus_BL_equals_I_plus_XZ": r.ibl_equals_delta,
        "factorization_holds": r.factorization_holds,
    }
    print(dumps(report))
    print(f"chi(W)      = {r.chi_W}")
    print(f"chi(I-BL)   = {r.chi_I_minus_BL}")
    print(f"chi(I+XZ)   = {r.chi_delta}")
    print(f"unit term   = {r.unit_term}")
    print(f"W (eps W)^-1 == [[I,0],[B,I-BL]]: {r.structural_identity}")
    print(f"chi(W) == chi(I-BL): {r.w_equals_ibl}")
    print(f"chi(I-BL) == unit term + chi(I+XZ): {r.factorization_holds}")
    print(f"chi(I-BL) == chi(I+XZ): {r.ibl_equals_delta}")
    ok = r.all_equal if args.strict else r.consistent
    if not ok:
        raise InvariantBreach("pathway mismatch")
    return EXIT_OK


def cmd_apply_moves(args) -> int:
    A = lambda_matrix_from_json(_load(args.matrix))
    seq = moves_from_json(_load(args.moves), A.g)
    print(dumps(lambda_matrix_to_json(apply_sequence(A, seq))))
    return EXIT_OK


def cmd_fuzz_moves(args) -> int:
    data = _load(args.file)
    A = lambda_matrix_from_json(data)
    order = _order(args, data)
    ok = 0
    for trial in range(args.count):
        seq = random_move_sequence(args.seed * 1_000_003 + trial, args.length, args.max_word_len, A)
        if verify_chi_invariance(A, seq, order):
            ok += 1
        else:
            print(f"trial {trial}: chi changed", file=sys.stderr)
    print(f"{ok}/{args.count} invariant")
    if ok != args.count:
        raise InvariantBreach("chi not invariant under moves")
    return EXIT_OK


def cmd_check(args) -> int:
    A = lambda_matrix_from_json(_load(args.file))
    aug = mat_augment(A)
    integral = all(getattr(x, "denominator", 1) == 1 for row in aug for x in row)
    det = bareiss_det(aug) if integral else None
    print(f"hermitian: {str(is_hermitian(A)).lower()}")
    print("augmentation: " + dumps([[fraction_to_str(x) for x in row] for row in aug]))
    print(f"determinant: {det if integral else 'non-integral augmentation'}")
    print(f"unimodular: {str(integral and abs(det) == 1).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncalex", description="Noncommutative Alexander invariant of boundary links.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_order(sp):
        sp.add_argument("--order", type=int, default=None, help=f"truncation degree N (default {DEFAULT_ORDER})")
        return sp

    sp = with_order(sub.add_parser("chi", help="chi of a group-ring matrix"))
    sp.add_argument("file")
    sp.add_argument("--permissive-augmentation", action="store_true",
                    help="accept any rationally invertible augmentation (identity checks only)")
    sp.set_defaults(func=cmd_chi)

    sp = with_order(sub.add_parser("chi-delta", help="chi(I + XZ) of a Seifert matrix"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_chi_delta)

    sp = sub.add_parser("alexander", help="det(tA - A^T) of a Seifert matrix")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_alexander)

    sp = with_order(sub.add_parser("compare-pathways", help="chi(W), chi(I-BL), chi(I+XZ) for a Seifert matrix"))
    sp.add_argument("file")
    sp.add_argument("--strict", action="store_true", help="also require chi(I-BL) == chi(I+XZ)")
    sp.set_defaults(func=cmd_compare_pathways)

    sp = sub.add_parser("apply-moves", help="apply a move sequence to a Hermitian matrix")
    sp.add_argument("matrix")
    sp.add_argument("moves")
    sp.set_defaults(func=cmd_apply_moves)

    sp = with_order(sub.add_parser("fuzz-moves", help="check chi under random congruence moves"))
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--length", type=int, default=10)
    sp.add_argument("--max-word-len", type=int, default=2)
    sp.set_defaults(func=cmd_fuzz_moves)

    sp = sub.add_parser("check", help="Hermitian and unimodularity report")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ArityError, InvalidGeneratorError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, NonUnitError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantBreach as e:
        print(f"invariant breach: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
