"""Compare the numba-compiled kernels with the pure Python/numpy fallback.

Each backend runs in its own subprocess, since the backend is fixed at import
time by DOMEDGE_DISABLE_NUMBA. Values must agree; timings exclude JIT warm-up.

    python benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
from domedge import backend_name, families as fam
from domedge.solver import chi_dom_exact, gamma_numbers

def cases():
    yield fam.join(fam.path(4), fam.path(4))
    yield fam.join(fam.star(3), fam.path(3))
    yield fam.corona(fam.cycle(3), fam.path(3))
    yield fam.corona(fam.path(3), fam.path(3))
    yield fam.subdivide(fam.star(4), 4)
    yield fam.wheel(10)
    yield fam.complete(6)
    yield fam.friendship(6)

repeat = int(sys.argv[1])
chi_dom_exact(fam.cycle(5)); gamma_numbers(fam.cycle(5))  # compile / warm up
rows = []
for G in cases():
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        r = chi_dom_exact(G)
        d = gamma_numbers(G)
        best = min(best, time.perf_counter() - t)
    rows.append({"graph": str(G), "m": G.m, "chi": r.value, "status": r.status,
                 "nodes": r.stats.nodes, "gamma_t": d.gamma_t_prime, "seconds": best})
print(json.dumps({"backend": backend_name(), "rows": rows}))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ, DOMEDGE_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    t0 = time.perf_counter()
    jit = run(False, args.repeat)
    py = run(True, args.repeat)
    mismatch = 0
    print(f"{'graph':42s} {'m':>3s} {'chi':>4s} {'nodes':>7s} {jit['backend']:>10s} {py['backend']:>10s} {'speedup':>8s}")
    for a, b in zip(jit["rows"], py["rows"]):
        same = (a["chi"], a["nodes"], a["gamma_t"]) == (b["chi"], b["nodes"], b["gamma_t"])
        mismatch += not same
        speed = b["seconds"] / a["seconds"] if a["seconds"] > 0 else float("inf")
        print(f"{a['graph'][:42]:42s} {a['m']:3d} {a['chi']:4d} {a['nodes']:7d} "
              f"{a['seconds']:10.5f} {b['seconds']:10.5f} {speed:7.1f}x{'' if same else '  MISMATCH'}")
    print(f"total wall time {time.perf_counter() - t0:.1f}s; mismatches: {mismatch}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
