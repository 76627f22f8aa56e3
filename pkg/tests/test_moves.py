import pytest

from ncalex import (
    DiagonalCongruence,
    Destabilize,
    ElementaryCongruence,
    GroupRingElement,
    GroupWord,
    LambdaMatrix,
    Stabilize,
    apply_move,
    apply_sequence,
    chi,
    is_hermitian,
    mat_augment,
    random_move_sequence,
    unimodular,
    verify_chi_invariance,
)
from ncalex.errors import MoveError, NotHermitianError
from ncalex.moves import can_destabilize

from gen import start_library


def t(*letters, g=1):
    return GroupRingElement.word(letters, g)


def congruence_oracle(A, P):
    return P @ A @ P.star()


def test_stabilize_example():
    A = LambdaMatrix([[t(1) + t(-1) - 1]], 1)
    assert apply_move(A, Stabilize(1)) == LambdaMatrix([[t(1) + t(-1) - 1, 0], [0, 1]], 1)


def test_diagonal_example():
    assert apply_move(LambdaMatrix([[1]], 1), DiagonalCongruence(1, 1, GroupWord([1], 1))) == LambdaMatrix([[1]], 1)


def test_elementary_example_against_direct_product():
    eye = LambdaMatrix.identity(2, 1)
    P = LambdaMatrix([[1, t(1)], [0, 1]], 1)
    expected = congruence_oracle(eye, P)
    assert expected == LambdaMatrix([[2, t(1)], [t(-1), 1]], 1)
    assert apply_move(eye, ElementaryCongruence(1, 2, t(1))) == expected


def test_moves_match_direct_products_on_random_input():
    for A in start_library():
        for seed in range(10):
            m = random_move_sequence(seed, 1, 2, A)[0]
            if isinstance(m, ElementaryCongruence):
                rows = [[int(r == c) for c in range(A.n)] for r in range(A.n)]
                rows[m.i - 1][m.j - 1] = m.lam
                P = LambdaMatrix(rows, A.g)
            elif isinstance(m, DiagonalCongruence):
                P = LambdaMatrix.diagonal([m.unit if k == m.i - 1 else 1 for k in range(A.n)], A.g)
            else:
                continue
            assert apply_move(A, m) == congruence_oracle(A, P)


def test_destabilize_inverts_stabilize():
    for A in start_library():
        for sign in (1, -1):
            B = apply_move(A, Stabilize(sign))
            assert apply_move(B, Destabilize(B.n)) == A


def test_invalid_moves():
    A = LambdaMatrix([[2, t(1)], [t(-1), 1]], 1)
    with pytest.raises(MoveError):
        apply_move(A, Destabilize(2))
    with pytest.raises(MoveError):
        apply_move(A, Destabilize(3))
    with pytest.raises(MoveError):
        apply_move(A, ElementaryCongruence(1, 3, t(1)))
    with pytest.raises(MoveError):
        ElementaryCongruence(1, 1, t(1))
    with pytest.raises(MoveError):
        Stabilize(2)
    with pytest.raises(NotHermitianError):
        apply_move(LambdaMatrix([[t(1)]], 1), Stabilize(1))
    with pytest.raises(MoveError):
        apply_move(LambdaMatrix([[2]], 1), Stabilize(1))


def test_random_sequence_basics():
    A = start_library()[1]
    assert random_move_sequence(7, 0, 2, A) == []
    assert random_move_sequence(7, 10, 2, A) == random_move_sequence(7, 10, 2, A)
    seq = random_move_sequence(7, 10, 2, A)
    assert len(seq) == 10
    # every move is applicable at its turn and preserves the domain
    B = A
    for m in seq:
        if isinstance(m, Destabilize):
            assert can_destabilize(B, m.index)
        B = apply_move(B, m)
        assert is_hermitian(B) and unimodular(mat_augment(B))


def test_random_sequences_preserve_hermitian_and_unimodular():
    for k, A in enumerate(start_library()):
        for seed in range(15):
            B = apply_sequence(A, random_move_sequence(100 * k + seed, 8, 2, A))
            assert is_hermitian(B)
            assert unimodular(mat_augment(B))


def test_verify_examples():
    A = LambdaMatrix([[t(1) + t(-1) - 1]], 1)
    assert verify_chi_invariance(A, [], 6)
    assert verify_chi_invariance(A, [Stabilize(-1)], 6)
    g = 2
    I2 = LambdaMatrix.identity(2, g)
    seq = [DiagonalCongruence(1, 1, GroupWord([1], g)), ElementaryCongruence(2, 1, 1 - t(2, g=g))]
    # direct double computation
    B = apply_sequence(I2, seq)
    assert B != I2
    assert chi(B, 6) == chi(I2, 6)
    assert verify_chi_invariance(I2, seq, 6)


def test_chi_invariance_fuzz_small():
    for k, A in enumerate(start_library()):
        for seed in range(8):
            assert verify_chi_invariance(A, random_move_sequence(31 * k + seed, 6, 2, A), 5)
