"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import sys
import timeit
from math import pi

from quasiboson import _backend
from quasiboson import _pykernels as py

CASES = [
    ("Delta S alpha integral, nu=3", "quad_named", (py.HYD_ALPHA, 3.0, 0.0, 0.0, pi, 1e-10, 1e-10, 2000)),
    ("Delta S alpha integral, nu=7.3", "quad_named", (py.HYD_ALPHA, 7.3, 0.0, 0.0, pi, 1e-10, 1e-10, 2000)),
    ("radial entropy integral, n=6 l=2", "quad_named", (py.HYD_X_ENTROPY, 6.0, 2.0, -1.0, 1.0, 1e-10, 1e-10, 2000)),
    ("Legendre entropy integral, l=6 m=3", "quad_named", (py.LEGENDRE_ENTROPY, 6.0, 3.0, -1.0, 1.0, 1e-10, 1e-10, 2000)),
    ("log I_nu(z), nu=9 z=40", "log_bessel_i", (9, 40.0)),
    ("Gegenbauer C^3_20(0.3)", "gegenbauer", (3.0, 20, 0.3)),
]


def best_time(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    ext = _backend.compiled_kernels
    if ext is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'kernel':40s} {'python':>12s} {'cython':>12s} {'speedup':>8s}  same")
    for label, name, call in CASES:
        t_py = best_time(getattr(py, name), call, args.repeat)
        t_c = best_time(getattr(ext, name), call, args.repeat)
        same = getattr(py, name)(*call) == getattr(ext, name)(*call)
        print(f"{label:40s} {t_py * 1e6:10.1f}us {t_c * 1e6:10.1f}us {t_py / t_c:7.1f}x  {same}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
