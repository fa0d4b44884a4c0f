"""Time the hot paths under both kernel backends.

The backend is fixed at import time, so each backend runs in its own
subprocess (``Z4SD_NUMBA=1`` / ``Z4SD_NUMBA=0``).  Every workload runs
once to warm up (numba compilation) and is then timed.

    python3 benchmarks/bench_kernels.py [--repeat N] [--only NAME ...]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    from z4sd import catalog, gf2
    from z4sd.constructions import run_lift_search
    from z4sd.search import _SWE_CACHE, bounded_search, s_invariant, split_histogram
    from z4sd.z4 import residue

    d24 = catalog.get("D_24_1")
    g24 = residue(d24)
    r48 = residue(catalog.get("D_48"))
    d48 = catalog.get("D_48")

    def enum24():
        _SWE_CACHE.clear()
        split_histogram(d24)

    return {
        "enumerate D_24_1 (2^24 words)": enum24,
        "S_9,4 of D_24_1": lambda: s_invariant(d24, 9, 4),
        "weight distribution G24": lambda: gf2.weight_distribution(g24),
        "covering radius G24": lambda: gf2.covering_radius(g24, "exact"),
        "Brouwer-Zimmermann [48,24]": lambda: gf2.min_weight(r48, "brouwer_zimmermann"),
        "bounded search D_48 (4e5, 8 info sets)": lambda: bounded_search(d48, 400_000, info_sets=8),
        "lift search G24, 20 trials": lambda: run_lift_search(g24, 20, 0, 10),
    }


def _child(repeat: int, only: list[str]) -> None:
    from z4sd import BACKEND

    out = {"backend": BACKEND, "times": {}}
    for name, fn in _workloads().items():
        if only and not any(o.lower() in name.lower() for o in only):
            continue
        fn()
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out["times"][name] = best
    print(json.dumps(out))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", nargs="*", default=[], help="substring filters on workload names")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.child:
        _child(args.repeat, args.only)
        return 0

    results = {}
    for flag in ("1", "0"):
        env = dict(os.environ, Z4SD_NUMBA=flag)
        cmd = [sys.executable, __file__, "--child", "--repeat", str(args.repeat)]
        if args.only:
            cmd += ["--only", *args.only]
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        if proc.returncode:
            sys.stderr.write(proc.stderr)
            return 1
        data = json.loads(proc.stdout.strip().splitlines()[-1])
        results[data["backend"]] = data["times"]

    names = list(next(iter(results.values())))
    width = max(len(n) for n in names)
    print(f"{'workload':<{width}}  {'numba s':>9}  {'numpy s':>9}  {'speedup':>7}")
    for n in names:
        a = results.get("numba", {}).get(n, float("nan"))
        b = results.get("numpy", {}).get(n, float("nan"))
        print(f"{n:<{width}}  {a:9.4f}  {b:9.4f}  {b / a:7.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
