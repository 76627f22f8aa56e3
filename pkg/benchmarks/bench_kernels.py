"""Compare the numba and numpy backends of the dense series kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the raw graded matrix product at a few sizes and an end-to-end chi
computation, once per backend, and checks that both give identical results.
"""

import argparse
import random
import sys
import time
from pathlib import Path

import numpy as np

from ncalex import chi, kernels
from ncalex.kernels import grading, series_matmul

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from gen import random_lambda_unimodular  # noqa: E402


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def matmul_case(g, order, n):
    rng = random.Random(g * 1000 + order * 10 + n)
    gr = grading(g, order)
    shape = (n, n, gr.total)
    A = np.array([rng.randint(-3, 3) for _ in range(int(np.prod(shape)))], dtype=object).reshape(shape)
    B = np.array([rng.randint(-3, 3) for _ in range(int(np.prod(shape)))], dtype=object).reshape(shape)
    return f"matmul g={g} N={order} n={n}", lambda: series_matmul(A, B, gr)


def chi_case(g, order, n):
    rng = random.Random(17)
    mats = [random_lambda_unimodular(rng, n, g) for _ in range(5)]
    return f"chi x5 g={g} N={order} n={n}", lambda: [chi(M, order) for M in mats]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    cases = [
        matmul_case(2, 6, 4),
        matmul_case(2, 8, 8),
        matmul_case(3, 5, 6),
        chi_case(2, 6, 3),
        chi_case(2, 8, 3),
    ]
    old = kernels.get_backend()
    if "numba" in backends:
        # compile outside the timed region
        kernels.set_backend("numba")
        cases[0][1]()
    print(f"{'case':<26}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    try:
        for name, fn in cases:
            row, results = [], []
            for b in backends:
                kernels.set_backend(b)
                t, out = best_of(fn, args.repeat)
                row.append(t)
                results.append(out)
            if len(results) == 2:
                same = (np.array_equal(*results) if isinstance(results[0], np.ndarray) else results[0] == results[1])
                if not same:
                    raise SystemExit(f"backends disagree on {name}")
            line = f"{name:<26}" + "".join(f"{t * 1e3:>10.2f}ms" for t in row)
            if len(row) == 2:
                line += f"{row[0] / row[1]:>11.2f}x"
            print(line)
    finally:
        kernels.set_backend(old)


if __name__ == "__main__":
    main()
