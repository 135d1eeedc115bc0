"""Time the compiled and pure-Python multiplication kernels side by side.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run the same workloads; results are checked for equality
before timings are reported.
"""

import argparse
import timeit
from contextlib import contextmanager

from pwmirror.poly import _kernels_py, kernels, parse_poly, period_sequence, power

try:
    from pwmirror.poly import _kernels as _compiled
except ImportError:
    _compiled = None


@contextmanager
def backend(module):
    saved = kernels.mul_packed, kernels.mul_tuple
    kernels.mul_packed, kernels.mul_tuple = module.mul_packed, module.mul_tuple
    try:
        yield
    finally:
        kernels.mul_packed, kernels.mul_tuple = saved


def workloads():
    f22 = parse_poly("(x+1)^2*(y+1)^2/(x*y*z) + z", ("x", "y", "z"))
    dense = parse_poly("x + y + z + w + 1/x + 1/y + 1/z + 1/w + x*y*z*w", ("x", "y", "z", "w"))
    wide = parse_poly("(1 + x + y)^3 / (x*y) + x^5*y^-7", ("x", "y"))
    return {
        "periods f22, n<=40": lambda: period_sequence(f22, 40),
        "periods 4-var, n<=14": lambda: period_sequence(dense, 14),
        "periods 4-var pruned, n<=14": lambda: period_sequence(dense, 14, prune=True),
        "power 2-var ^60": lambda: power(wide, 60),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _compiled is None:
        print("compiled extension not built; only the Python kernel is available")
    print(f"{'workload':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads().items():
        with backend(_kernels_py):
            ref = fn()
            t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if _compiled is None:
            print(f"{name:32} {t_py:10.4f} {'-':>11} {'-':>8}")
            continue
        with backend(_compiled):
            assert fn() == ref, name
            t_c = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        print(f"{name:32} {t_py:10.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
