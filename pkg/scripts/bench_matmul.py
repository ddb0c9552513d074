"""Time sparse evidential matmul on random networks of growing size.

    python scripts/bench_matmul.py --sizes 100 200 400 --degree 5
"""

import argparse
import random
import time

from epl import EvidenceMatrix, EvidenceTuple, matmul


def random_slice(n, degree, rng):
    entries = {}
    for i in range(n):
        for j in rng.sample(range(n), min(degree, n)):
            entries[(i, j)] = EvidenceTuple(rng.randint(1, 5), rng.randint(0, 3))
    return EvidenceMatrix(n, entries)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>6} {'nnz':>8} {'out nnz':>9} {'best s':>9}")
    for n in args.sizes:
        a = random_slice(n, args.degree, rng)
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = matmul(a, a)
            best = min(best, time.perf_counter() - t0)
        print(f"{n:>6} {a.nnz:>8} {out.nnz:>9} {best:>9.4f}")


if __name__ == "__main__":
    main()
