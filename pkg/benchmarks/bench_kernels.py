"""Compare the compiled and pure-Python spin kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N] [--json]
"""
from __future__ import annotations

import argparse
import json
import time

import numpy as np

from indmod.fforacle import kernels
from indmod.fforacle.checks import extension_vector
from indmod.fforacle.field import ambient_field
from indmod.fforacle.modules import make_h0

# (label, p, N, m, seed vector builder)
CASES = [
    ("H0(14) over F_16, v_0", 2, 4, 14, lambda m: [1] + [0] * m),
    ("H0(26) over F_27, v_13", 3, 3, 26, lambda m: [0] * 13 + [1] + [0] * (m - 13)),
    ("H0(62) over F_64, v_0(2)", 2, 6, 62, lambda m: extension_vector(0, 2, 6, 1)),
    ("H0(79) over F_81, v_0(3)", 3, 4, 79, lambda m: extension_vector(0, 3, 4, 1)),
]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(repeat: int) -> list[dict]:
    rows = []
    backends = kernels.available_backends()
    for label, p, N, m, seed in CASES:
        F = ambient_field(p, N)
        M = make_h0(m, F, check=False)
        gens = M.gen_stack()
        seeds = np.array([seed(m)], dtype=np.int64)
        row: dict = {"case": label, "dim": m + 1}
        dims = set()
        for name in backends:
            spin = kernels.get_backend(name).spin
            dims.add(spin(gens, seeds, F.exp, F.log, F.zech, F.p).shape[0])
            row[name] = _time(lambda: spin(gens, seeds, F.exp, F.log, F.zech, F.p), repeat)
        row["spin_dim"] = dims.pop() if len(dims) == 1 else sorted(dims)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"backends: {', '.join(kernels.available_backends())} (default {kernels.BACKEND})")
    print(f"{'case':28} {'dim':>4} {'spin':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'-':>10}"
        sp = f"{r['speedup']:8.1f}" if "speedup" in r else f"{'-':>8}"
        print(f"{r['case']:28} {r['dim']:4d} {r['spin_dim']!s:>5} {r['python']:10.4f} {cy} {sp}")


if __name__ == "__main__":
    main()
