"""Compare the compiled and pure-Python kernel backends.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""
import argparse
import timeit

import numpy as np

from negamma import _pykernels
from negamma import coefficients
from negamma.special import gamma_star

try:
    from negamma import _kernels
except ImportError:
    _kernels = None


def build(module):
    original = coefficients.kernels.CoeffKernel
    coefficients.kernels.CoeffKernel = module.CoeffKernel
    try:
        return coefficients.build_table().kernel
    finally:
        coefficients.kernels.CoeffKernel = original


def cases(module):
    kernel = build(module)
    a = 100.25
    zs = np.linspace(90.0, 110.0, 1000)
    gs = gamma_star(a)
    xs = np.linspace(-8.0, 8.0, 1000)
    return {
        "eval_c (Laurent, n=6)": (lambda: kernel.eval_c(6, 2.5, 3.1), 1),
        "eval_c (Maclaurin, n=6)": (lambda: kernel.eval_c(6, 0.7, 1.0), 1),
        "series order 6": (lambda: kernel.series(0.4, 0.45, a, 6, True), 1),
        "gtilde_many 1000 points": (lambda: kernel.gtilde_many(a, gs, zs, 6), 1000),
        "dawson 1000 points": (lambda: [module.dawson(float(x)) for x in xs], 1000),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = {"python": _pykernels}
    if _kernels is not None:
        backends["cython"] = _kernels
    timings = {}
    for name, module in backends.items():
        for case, (fn, per_call) in cases(module).items():
            number, _ = timeit.Timer(fn).autorange()
            best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            timings.setdefault(case, {})[name] = best / per_call
    print(f"{'case':<26}{'python ns/pt':>14}{'cython ns/pt':>14}{'speedup':>9}")
    for case, t in timings.items():
        py = t["python"] * 1e9
        cy = t.get("cython")
        if cy is None:
            print(f"{case:<26}{py:14.1f}{'n/a':>14}{'':>9}")
        else:
            print(f"{case:<26}{py:14.1f}{cy * 1e9:14.1f}{py / (cy * 1e9):8.1f}x")


if __name__ == "__main__":
    main()
