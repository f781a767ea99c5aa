"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row checks that both backends return the same result before timing.
"""

import argparse
import random
import time

from permlab import kernels
from permlab.scalars import field_parse


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = random.Random(1)
    F3, F5 = field_parse("F3"), field_parse("F5")
    a3, m3 = F3.tables()
    a5, m5 = F5.tables()
    rows14 = [[rng.randrange(1009) for _ in range(14)] for _ in range(14)]
    yield "ryser_mod 14x14 mod 1009", lambda k: k.ryser_mod(rows14, 1009)
    yield "variety_dfs I_2(2,3) F7", lambda k: k.variety_dfs(2, 2, 3, 7, *field_parse("F7").tables(), 0, 0, -1)[:2]
    yield "variety_dfs I_2(2,2) F5", lambda k: k.variety_dfs(2, 2, 2, 5, a5, m5, 0, 0, -1)[:2]
    yield "variety_dfs I_3(3,4) F3", lambda k: k.variety_dfs(3, 3, 4, 3, a3, m3, 0, 0, -1)[:2]
    # rows x_1 + k x_j for every j and k: no witness, so the search is exhaustive
    wit = [[1] + [k if c == j else 0 for c in range(1, 7)] for j in range(1, 7) for k in range(1, 5)]
    yield "find_witness no-witness 24x7 F5", lambda k: k.find_witness(wit, 5, a5, m5, 0)
    batch = [[[rng.randrange(5) for _ in range(6)] for _ in range(5)] for _ in range(2000)]
    yield "find_witness 2000 random 5x6 F5", lambda k: [k.find_witness(A, 5, a5, m5, 0) for A in batch]
    yield "nowitness_sweep d=2 n=3 F3", lambda k: k.nowitness_sweep(2, 3, 3, a3, m3)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = kernels.backend_module("python")
    try:
        cy = kernels.backend_module("cython")
    except ImportError:
        print("compiled kernels are not built; nothing to compare")
        return
    print("%-34s %12s %12s %9s" % ("kernel", "python s", "cython s", "speedup"))
    for name, fn in cases():
        tp, rp = _best(lambda: fn(py), args.repeat)
        tc, rc = _best(lambda: fn(cy), args.repeat)
        if rp != rc:
            raise SystemExit("backends disagree on %s" % name)
        print("%-34s %12.4f %12.4f %8.1fx" % (name, tp, tc, tp / tc if tc else float("inf")))


if __name__ == "__main__":
    main()
