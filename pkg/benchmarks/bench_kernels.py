"""Compare the compiled and pure-Python mod-p row reduction kernels.

    python benchmarks/bench_kernels.py [--sizes 50 100 200] [--p 101] [--repeat 3]
"""

import argparse
import time

import numpy as np

from findom import _kernel_py

try:
    from findom import _kernel
except ImportError:
    _kernel = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    if _kernel is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print("%6s %12s %12s %8s" % ("n", "python [s]", "compiled [s]", "speedup"))
    for n in args.sizes:
        M = rng.integers(0, args.p, size=(n, n + n // 2), dtype=np.int64)
        tp, ref = best_of(lambda: _kernel_py.rref_modp(M, args.p), args.repeat)
        if _kernel is None:
            print("%6d %12.4f %12s %8s" % (n, tp, "-", "-"))
            continue
        tc, out = best_of(lambda: _kernel.rref_modp(M, args.p), args.repeat)
        same = np.array_equal(np.asarray(ref[0]), np.asarray(out[0])) and \
            list(ref[1]) == list(out[1])
        print("%6d %12.4f %12.4f %7.1fx%s" % (n, tp, tc, tp / tc, "" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
