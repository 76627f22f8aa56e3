import json
import random
from pathlib import Path

import pytest

from ncalex import GroupRingElement, LambdaMatrix, random_move_sequence
from ncalex.cli import main
from ncalex.seifert import TREFOIL, build_W, random_seifert
from ncalex.serialize import (
    ParseError,
    cyclic_from_json,
    cyclic_to_json,
    dumps,
    element_from_json,
    element_to_json,
    lambda_matrix_from_json,
    lambda_matrix_to_json,
    moves_from_json,
    moves_to_json,
    parse_fraction,
    seifert_from_json,
    seifert_to_json,
)
from ncalex.seifert import chi_delta

from gen import random_element, random_lambda_unimodular, start_library

DATA = Path(__file__).resolve().parent.parent / "data"


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fraction_parsing():
    assert parse_fraction("-3/6") == parse_fraction(-1) / 2
    assert parse_fraction(4) == 4
    for bad in ("x", 1.5, True, None, "1/0"):
        with pytest.raises(ParseError):
            parse_fraction(bad)


def test_round_trips():
    rng = random.Random(1)
    for _ in range(30):
        a = random_element(rng, 3)
        assert element_from_json(json.loads(dumps(element_to_json(a))), 3) == a
    for A in start_library() + [random_lambda_unimodular(rng, 3, 2)]:
        data = json.loads(dumps(lambda_matrix_to_json(A)))
        assert lambda_matrix_from_json(data) == A
        seq = random_move_sequence(5, 6, 2, A)
        assert moves_from_json(json.loads(dumps(moves_to_json(seq, A.g))), A.g) == seq
    for genus in range(4):
        S = random_seifert(rng, genus)
        assert seifert_from_json(json.loads(dumps(seifert_to_json(S)))) == S
    c = chi_delta(TREFOIL, 6)
    assert cyclic_from_json(json.loads(dumps(cyclic_to_json(c))), 1) == c


def test_cyclic_output_ordering():
    c = chi_delta(TREFOIL, 3)
    assert dumps(cyclic_to_json(c)) == (
        '{"order":3,"terms":[{"coeff":"1","cycle":[1]},{"coeff":"1/2","cycle":[1,1]},'
        '{"coeff":"-2/3","cycle":[1,1,1]}]}'
    )


def test_documented_move_format_parses():
    data = {"version": 1, "moves": [
        {"stabilize": 1},
        {"elementary": {"i": 1, "j": 2, "lambda": [{"coeff": "1", "word": [1]}]}},
        {"diagonal": {"i": 1, "sign": 1, "word": [1]}},
    ]}
    seq = moves_from_json(data, 1)
    assert len(seq) == 3 and seq[1].lam == GroupRingElement.word([1], 1)


@pytest.mark.parametrize("bad", [
    {"version": 2, "g": 1, "n": 1, "entries": [[[]]]},
    {"version": 1, "g": 1, "n": 2, "entries": [[[]]]},
    {"version": 1, "g": 1, "n": 1, "entries": [[[{"coeff": "1", "word": [2]}]]]},
    {"version": 1, "g": 1, "n": 1, "entries": [[[{"coeff": 1.5, "word": []}]]]},
    {"version": 1, "entries": [[[]]]},
])
def test_bad_lambda_payloads(bad):
    with pytest.raises(ParseError):
        lambda_matrix_from_json(bad)


def test_chi_command_and_determinism(capsys):
    code, out1, _ = run(capsys, "chi", "--order", "6", str(DATA / "trefoil-W.json"))
    assert code == 0
    code, out2, _ = run(capsys, "chi", "--order", "6", str(DATA / "trefoil-W.json"))
    assert out1 == out2
    first = json.loads(out1.splitlines()[0])
    assert first["order"] == 6
    assert first["terms"][0] == {"coeff": "1", "cycle": [1, 1]}
    assert out1.splitlines()[1].startswith("chi = h^2 - h^3")


def test_chi_delta_command(capsys):
    code, out, _ = run(capsys, "chi-delta", "--order", "2", str(DATA / "trefoil-seifert.json"))
    assert code == 0
    assert json.loads(out.splitlines()[0])["terms"] == [
        {"coeff": "1", "cycle": [1]}, {"coeff": "1/2", "cycle": [1, 1]},
    ]


def test_alexander_command(capsys):
    assert run(capsys, "alexander", str(DATA / "trefoil-seifert.json"))[1].strip() == "t^2 - t + 1"
    assert run(capsys, "alexander", str(DATA / "figure-eight-seifert.json"))[1].strip() == "-t^2 + 3*t - 1"


def test_compare_pathways_command(capsys):
    code, out, _ = run(capsys, "compare-pathways", "--order", "6", str(DATA / "trefoil-seifert.json"))
    assert code == 0
    report = json.loads(out.splitlines()[0])
    assert report["W_equals_I_minus_BL"] and report["structural_identity"] and report["factorization_holds"]
    assert report["I_minus_BL_equals_I_plus_XZ"] is False
    code, _, _ = run(capsys, "compare-pathways", "--strict", "--order", "6", str(DATA / "trefoil-seifert.json"))
    assert code == 3


def test_unknot_pathways_strict(tmp_path, capsys):
    path = write(tmp_path, "unknot.json", {"version": 1, "seifert": []})
    assert run(capsys, "compare-pathways", "--strict", path)[0] == 0


def test_fuzz_command(capsys):
    code, out, _ = run(capsys, "fuzz-moves", "--seed", "7", "--count", "20", "--length", "10", "--order", "5",
                       str(DATA / "start.json"))
    assert code == 0
    assert out.strip() == "20/20 invariant"


def test_apply_moves_command(capsys, tmp_path):
    code, out, _ = run(capsys, "apply-moves", str(DATA / "start.json"), str(DATA / "moves.json"))
    assert code == 0
    B = lambda_matrix_from_json(json.loads(out))
    assert B.n == 4
    path = write(tmp_path, "B.json", out)
    code, out, _ = run(capsys, "check", path)
    assert "hermitian: true" in out and "unimodular: true" in out


def test_check_command_reports_failure(tmp_path, capsys):
    A = LambdaMatrix([[2, GroupRingElement.word([1], 1)], [GroupRingElement.word([1], 1), 3]], 1)
    path = write(tmp_path, "A.json", lambda_matrix_to_json(A))
    code, out, _ = run(capsys, "check", path)
    assert code == 0
    assert "hermitian: false" in out and "determinant: 5" in out and "unimodular: false" in out


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "chi", write(tmp_path, "bad.json", "{not json"))[0] == 1
    assert run(capsys, "chi", str(tmp_path / "missing.json"))[0] == 1
    non_unimodular = lambda_matrix_to_json(LambdaMatrix([[2]], 1))
    assert run(capsys, "chi", write(tmp_path, "two.json", non_unimodular))[0] == 2
    assert run(capsys, "chi", "--permissive-augmentation", write(tmp_path, "two2.json", non_unimodular))[0] == 0
    assert run(capsys, "chi-delta", write(tmp_path, "s.json", {"version": 1, "seifert": [[0, 0], [0, 0]]}))[0] == 2
    non_herm = lambda_matrix_to_json(LambdaMatrix([[GroupRingElement.word([1], 1)]], 1))
    moves = write(tmp_path, "m.json", {"version": 1, "moves": [{"stabilize": 1}]})
    assert run(capsys, "apply-moves", write(tmp_path, "nh.json", non_herm), moves)[0] == 2
    assert run(capsys, "apply-moves", str(DATA / "start.json"),
               write(tmp_path, "d.json", {"version": 1, "moves": [{"destabilize": 1}]}))[0] == 2
    assert run(capsys, "apply-moves", str(DATA / "start.json"),
               write(tmp_path, "u.json", {"version": 1, "moves": [{"twist": 1}]}))[0] == 1


def test_trefoil_W_file_matches_builder():
    data = json.loads((DATA / "trefoil-W.json").read_text())
    assert lambda_matrix_from_json(data) == build_W(TREFOIL).W
