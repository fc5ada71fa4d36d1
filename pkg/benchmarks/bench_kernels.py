#!/usr/bin/env python3
"""Time the point-scan kernels on both execution paths.

The kernels module picks its evaluation loop at import time: a numba
``@njit`` routine when numba is importable, else (or under
``QUARTICFIBRES_PURE_NUMPY=1``) a vectorised numpy implementation.
Because the choice is frozen at import, each path runs in a fresh
interpreter; this driver launches both and prints a small table.

Usage: python3 benchmarks/bench_kernels.py [--m 8] [--reps 5]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
from time import perf_counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def _workload(m: int):
    from quarticfibres.fibres import specialize_fibre
    from quarticfibres.finitefield import FieldSpec

    spec = FieldSpec(m)
    g = min(2, spec.field().q - 1)
    curve = specialize_fibre("pi3", (g, 1, g, 0), spec)
    return curve.form, spec.field()


def run_worker(m: int, reps: int) -> None:
    from quarticfibres import kernels

    form, gf = _workload(m)
    kernels.scan_singular_points(form, gf)  # warm-up (JIT compile)
    times = []
    for _ in range(reps):
        t0 = perf_counter()
        singular = kernels.scan_singular_points(form, gf)
        zeros = kernels.scan_zero_points(form, gf)
        times.append(perf_counter() - t0)
    print(json.dumps({
        "path": "numba" if kernels.USING_NUMBA else "numpy",
        "points": int((gf.q ** 3 - 1) // (gf.q - 1)),
        "zeros": len(zeros),
        "singular": len(singular),
        "best": min(times),
        "mean": sum(times) / len(times),
    }))


def launch(pure_numpy: bool, m: int, reps: int) -> dict:
    env = dict(os.environ)
    if pure_numpy:
        env["QUARTICFIBRES_PURE_NUMPY"] = "1"
    else:
        env.pop("QUARTICFIBRES_PURE_NUMPY", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__),
         "--worker", "--m", str(m), "--reps", str(reps)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=8,
                    help="field size GF(2^m) for the scan (default 8)")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        run_worker(args.m, args.reps)
        return 0

    rows = [launch(pure_numpy, args.m, args.reps)
            for pure_numpy in (False, True)]
    print(f"singular + zero scan of a quartic over P^2(GF(2^{args.m})),"
          f" {rows[0]['points']} points, best of {args.reps}")
    for r in rows:
        print(f"  {r['path']:<6} best {r['best'] * 1e3:8.2f} ms   "
              f"mean {r['mean'] * 1e3:8.2f} ms   "
              f"({r['zeros']} zeros, {r['singular']} singular)")
    if rows[0]["path"] == rows[1]["path"]:
        print("  (numba unavailable: both rows ran the numpy path)")
    else:
        print(f"  speedup x{rows[1]['best'] / rows[0]['best']:.2f}")
    if rows[0]["singular"] != rows[1]["singular"] or \
            rows[0]["zeros"] != rows[1]["zeros"]:
        print("  MISMATCH between paths", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
