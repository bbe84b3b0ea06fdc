"""Time the numba and numpy paths of the hot kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import os
import timeit

import numpy as np

from verlinde import _kernels
from verlinde.liealg import bracket_support


def _cases():
    forced = bracket_support(18, 37).forced()
    weights = np.array([w for c in range(1, 30, 2) for w in range(-c, c + 1, 2)], dtype=np.int64)

    def support():
        return _kernels.support_table(40, 101)

    def closed():
        return _kernels.closed_masks(forced, 18)

    def power():
        return _kernels.power_char(weights, 8, 1)

    return {"support_table(n=40, p=101)": support, "closed_masks(n=18)": closed, "power_char(d=8, sym)": power}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        print("numba is not installed; only the numpy path can run")
    cases = _cases()
    print(f"{'kernel':30s} {'numba (ms)':>12s} {'numpy (ms)':>12s} {'speed-up':>9s}")
    for name, fn in cases.items():
        times = {}
        for mode in ("numba", "numpy"):
            if mode == "numba" and not _kernels.NUMBA_AVAILABLE:
                continue
            os.environ["VERLINDE_NO_NUMBA"] = "1" if mode == "numpy" else "0"
            ref = fn()  # warm-up, includes JIT compilation
            times[mode] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1000
            if mode == "numpy" and "numba" in times:
                os.environ["VERLINDE_NO_NUMBA"] = "0"
                other = fn()
                a = ref[0] if isinstance(ref, tuple) else ref
                b = other[0] if isinstance(other, tuple) else other
                assert np.array_equal(a, b), f"{name}: paths disagree"
        nb, np_ = times.get("numba"), times["numpy"]
        ratio = f"{np_ / nb:8.1f}x" if nb else "       -"
        print(f"{name:30s} {nb if nb is not None else float('nan'):12.2f} {np_:12.2f} {ratio}")


if __name__ == "__main__":
    main()
