"""Compiled vs pure-Python integer row reduction on d3 matrices.

    python3 benchmarks/bench_echelon.py [--degrees 8 10 12] [--repeat 3]

Both backends must return identical pivots and reduced rows; the script exits
non-zero if they differ.
"""

import argparse
import sys
import time

from moduli_kappa import _echelon_py
from moduli_kappa.linalg import integer_rows
from moduli_kappa.serre_kernel import d3_matrix, mg_spec, vd_spec

try:
    from moduli_kappa import _echelon
except ImportError:
    _echelon = None


def best_time(fn, rows, ncols, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        work = [list(r) for r in rows]
        start = time.perf_counter()
        pivots = fn(work, ncols)
        best = min(best, time.perf_counter() - start)
        result = (pivots, work)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", type=int, nargs="+", default=[8, 10, 12])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _echelon is None:
        print("compiled extension not built; run 'pip install -e . --no-build-isolation'")
        return 1

    top = max(args.degrees)
    specs = [("V_3", vd_spec(3, top)), ("V_5", vd_spec(5, top)), ("M_5", mg_spec(5, top))]
    print(f"{'spec':5} {'deg':>3} {'shape':>11} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    mismatches = 0
    for label, spec in specs:
        for k in args.degrees:
            rows = integer_rows(d3_matrix(spec, k))
            ncols = len(rows[0])
            tc, rc = best_time(_echelon.rref_int, rows, ncols, args.repeat)
            tp, rp = best_time(_echelon_py.rref_int, rows, ncols, args.repeat)
            same = rc == rp
            mismatches += not same
            shape = f"{len(rows)}x{ncols}"
            flag = "" if same else "  MISMATCH"
            print(f"{label:5} {k:>3} {shape:>11} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.1f}x{flag}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
