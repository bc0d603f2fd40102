"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is timed on identical inputs under every available backend; the
best of ``--repeat`` runs is reported together with the speedup.
"""
import argparse
import timeit

import numpy as np

from interpfit import _backend


def cases(rng):
    x20 = np.sort(rng.uniform(-1, 1, 20))
    y20 = np.sin(3 * x20)
    dy20 = 3 * np.cos(3 * x20)
    knots = np.cumsum(rng.uniform(0.1, 1.0, 2001))
    vals = np.sin(knots)
    grid = np.linspace(-1, 1, 2001)
    x60 = np.sort(rng.uniform(-1, 1, 60))
    y60 = np.cos(x60)

    def spline_build(k):
        k.natural_spline(knots, vals)

    def spline_eval(k):
        b, c, d = k.natural_spline(knots, vals)
        t = np.linspace(knots[0], knots[-1], 20001)
        return lambda: k.spline_eval(knots, vals, b, c, d, t, 0)

    return [
        ("natural_spline (2001 knots)", lambda k: (lambda: spline_build(k))),
        ("spline_eval (20001 points)", spline_eval),
        ("lagrange_eval (20 nodes, 2001 points)", lambda k: (lambda: k.lagrange_eval(x20, y20, grid))),
        ("hermite_eval (20 nodes, 2001 points)", lambda k: (lambda: k.hermite_eval(x20, y20, dy20, grid))),
        ("divided_differences (60 nodes)", lambda k: (lambda: k.divided_differences(x60, y60))),
        ("neville (60 nodes)", lambda k: (lambda: k.neville(x60, y60, 0.123))),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    names = _backend.available()
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, make in cases(rng):
        best = []
        for name in names:
            fn = make(_backend.get(name))
            number = max(1, int(0.2 / max(timeit.timeit(fn, number=1), 1e-7)))
            best.append(min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number)
        row = f"{label:40s}" + "".join(f"{t * 1e3:10.3f}ms" for t in best)
        if len(best) > 1:
            row += f"{best[0] / best[1]:11.1f}x"
        print(row)
    if len(names) == 1:
        print("compiled backend not built; only the fallback was timed")


if __name__ == "__main__":
    main()
