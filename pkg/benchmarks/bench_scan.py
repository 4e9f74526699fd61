"""Compare the compiled and pure-Python lattice scans.

Scans the A6 constraint systems for orders 6 and 12 over cubes [-R, R]^k,
far larger than the boxes Fourier-Motzkin produces, so the inner loop
dominates. Usage: python benchmarks/bench_scan.py [--radius R] [--repeat N]
"""

import argparse
import time

from helpsolver import scan
from helpsolver.bounds import Box
from helpsolver.constraints import build_rows, variable_space
from helpsolver.solver import Solver
from helpsolver.tables import load_bundled


def cases(radius):
    g = load_bundled("a6")
    solver = Solver(g)
    for n in (6, 12):
        space = variable_space(g, n)
        for datum in solver.enumerate_power_data(n):
            rows = build_rows(g, n, datum)
            box = Box(space.variables, tuple((-radius, radius) for _ in space.variables))
            yield n, rows, box


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--radius", type=int, default=20)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    work = list(cases(args.radius))
    backends = ["python"] + (["cython"] if scan.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing pure Python only")
    results, timings = {}, {}
    for backend in backends:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = [scan.integer_points(rows, box, backend=backend) for _, rows, box in work]
            best = min(best, time.perf_counter() - t0)
        results[backend], timings[backend] = out, best
    points = sum(box.size // (2 * args.radius + 1) for _, _, box in work)
    print(f"{len(work)} systems, {points} lattice points (radius {args.radius})")
    for backend in backends:
        print(f"  {backend:7s} {timings[backend] * 1e3:9.1f} ms")
    if len(backends) == 2:
        assert results["python"] == results["cython"], "backends disagree"
        print(f"  speedup {timings['python'] / timings['cython']:.1f}x, identical results")


if __name__ == "__main__":
    main()
