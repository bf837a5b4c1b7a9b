"""Benchmark: compiled versus pure-Python elimination kernel.

Times the full n=7, k=8 quadric prolongation (whose inner loop is the
sparse integer eliminator) and a synthetic dense-ish kernel computation,
once per backend.  The script re-executes itself in a subprocess with
LEVITANAKA_PURE=1 so each backend is selected at import time, exactly as
in production.

Run:  python benchmarks/bench_elimination.py
"""

import json
import os
import random
import subprocess
import sys
import time


def synthetic_rows(seed, nrows, ncols, density, scale=9):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        cols = sorted(rng.sample(range(ncols), max(1, int(density * ncols))))
        pairs = [(c, rng.randint(-scale, scale)) for c in cols]
        pairs = [(c, v) for c, v in pairs if v]
        if pairs:
            rows.append(([c for c, _ in pairs], [v for _, v in pairs]))
    return rows


def run_measurements():
    from levitanaka import elimination
    from levitanaka.prolongation import prolong
    from levitanaka.quadric import extract_components

    out = {"backend": elimination.BACKEND}

    start = time.monotonic()
    h = extract_components(7, [[(2, 1)], [(3, 2)], [(2, 4), (5, 1)],
                               [(2, 6), (7, 1)]])
    result = prolong(h.build_m_minus())
    out["quadric_prolongation_s"] = round(time.monotonic() - start, 3)
    out["quadric_dims"] = sorted(result.degree_dims.items())

    rows = synthetic_rows(3, 500, 320, density=0.04, scale=3)
    start = time.monotonic()
    basis = elimination.kernel_basis(rows, 320)
    out["synthetic_kernel_s"] = round(time.monotonic() - start, 3)
    out["synthetic_kernel_dim"] = len(basis)
    return out


def main():
    if os.environ.get("BENCH_CHILD"):
        print(json.dumps(run_measurements()))
        return
    reports = []
    for pure in ("", "1"):
        env = dict(os.environ, BENCH_CHILD="1")
        if pure:
            env["LEVITANAKA_PURE"] = "1"
        else:
            env.pop("LEVITANAKA_PURE", None)
        proc = subprocess.run([sys.executable, os.path.abspath(__file__)],
                              env=env, capture_output=True, text=True,
                              check=True)
        reports.append(json.loads(proc.stdout.strip().splitlines()[-1]))
    compiled, pure = reports
    assert compiled["quadric_dims"] == pure["quadric_dims"]
    assert compiled["synthetic_kernel_dim"] == pure["synthetic_kernel_dim"]
    print(f"{'case':<28}{compiled['backend']:>12}{pure['backend']:>12}{'speedup':>10}")
    for key in ("quadric_prolongation_s", "synthetic_kernel_s"):
        c = compiled[key]
        p = pure[key]
        ratio = p / c if c else float("inf")
        print(f"{key:<28}{c:>11.3f}s{p:>11.3f}s{ratio:>9.2f}x")
    print("outputs identical across backends")


if __name__ == "__main__":
    main()
