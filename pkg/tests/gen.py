"""Seeded random objects and an independent sparse oracle for chi."""

from fractions import Fraction

from ncalex import GroupRingElement, LambdaMatrix, NCSeries, cyc_project, magnus_embed, ns_mul
from ncalex.seifert import TREFOIL, build_W


def random_word_letters(rng, g, max_len):
    return [rng.choice([1, -1]) * rng.randint(1, g) for _ in range(rng.randint(0, max_len))]


def random_element(rng, g, max_terms=4, max_len=3, coeff=3):
    pairs = [(rng.randint(-coeff, coeff), random_word_letters(rng, g, max_len)) for _ in range(rng.randint(0, max_terms))]
    return GroupRingElement.from_pairs(pairs, g)


def random_unimodular_int(rng, n, steps=None):
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        op = rng.random()
        if n >= 2 and op < 0.7:
            i, j = rng.sample(range(n), 2)
            c = rng.choice([-2, -1, 1, 2])
            M[i] = [a + c * b for a, b in zip(M[i], M[j])]
        elif n >= 2 and op < 0.85:
            i, j = rng.sample(range(n), 2)
            M[i], M[j] = M[j], M[i]
        else:
            i = rng.randrange(n)
            M[i] = [-a for a in M[i]]
    return M


def random_lambda_unimodular(rng, n, g, max_len=2, max_terms=2):
    """Random matrix over Z[F] whose augmentation is a random unimodular matrix."""
    U = random_unimodular_int(rng, n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            pairs = [(rng.randint(-2, 2), random_word_letters(rng, g, max_len)) for _ in range(rng.randint(0, max_terms))]
            total = sum(c for c, _ in pairs)
            pairs.append((U[i][j] - total, random_word_letters(rng, g, max_len)))
            row.append(GroupRingElement.from_pairs(pairs, g))
        rows.append(row)
    return LambdaMatrix(rows, g)


def random_series(rng, g, order, terms=6, coeff=3, constant=None):
    out = {}
    for _ in range(terms):
        d = rng.randint(1, order)
        out[tuple(rng.randint(1, g) for _ in range(d))] = rng.randint(-coeff, coeff)
    out[()] = constant if constant is not None else rng.randint(-coeff, coeff)
    return NCSeries(out, order, g)


def start_library(g=2):
    t1 = GroupRingElement.word([1], g)
    t1i = GroupRingElement.word([-1], g)
    t2 = GroupRingElement.word([2], g)
    t2i = GroupRingElement.word([-2], g)
    return [
        LambdaMatrix([[t1 + t1i - 1]], g),
        LambdaMatrix.identity(2, g),
        LambdaMatrix([[2, t1], [t1i, 1]], g),
        LambdaMatrix([[1, t2 - 1, 0], [t2i - 1, 1, t1], [0, t1i, 2]], g),
        build_W(TREFOIL).W.lift(g),
    ]


# --- sparse oracle: matrices as nested lists of NCSeries ------------------

def _smul(A, B):
    n = len(A)
    return [[sum((ns_mul(A[i][k], B[k][j]) for k in range(n)), A[0][0] * 0) for j in range(n)] for i in range(n)]


def naive_chi(A: LambdaMatrix, order: int):
    """chi via dict-based series and Fraction Gauss-Jordan, no dense kernel."""
    from ncalex.linalg import rational_inverse
    from ncalex.matrices import mat_augment

    n, g = A.n, A.g
    S = [[magnus_embed(A[i, j], order) for j in range(n)] for i in range(n)]
    E = rational_inverse(mat_augment(A))
    Einv = [[NCSeries.constant(E[i][j], order, g) for j in range(n)] for i in range(n)]
    X = _smul(S, Einv)
    for i in range(n):
        X[i][i] = X[i][i] - 1
    total = NCSeries.zero(order, g)
    P = X
    for k in range(1, order + 1):
        tr = sum((P[i][i] for i in range(n)), NCSeries.zero(order, g))
        total = total + tr * Fraction((-1) ** (k + 1), k)
        P = _smul(P, X)
    return cyc_project(total)

