"""Benchmark the exhaustive spectrum kernels: numba-jitted vs pure Python.

The backend is chosen by the CYCLEMOD_NO_NUMBA environment variable at
import time, so each backend runs in its own subprocess.  Run directly:

    python3 benchmarks/bench_oracle.py
"""

import json
import os
import statistics
import subprocess
import sys
import time

CASES = [
    ("K8 cycles", "complete_graph(8)"),
    ("K9 cycles", "complete_graph(9)"),
    ("K5,5 cycles", "complete_bipartite(5, 5)"),
    ("C12^2 cycles", "Graph(12, [(i, (i + s) % 12) for i in range(12) for s in (1, 2)])"),
]

WORKER = r"""
import json, sys, time
from cyclemod.graph import Graph, complete_graph, complete_bipartite
from cyclemod.oraclekern import cycle_length_set, using_numba

expr = sys.argv[1]
g = eval(expr)
cycle_length_set(g)  # warm-up (jit compilation, caches)
times = []
for _ in range(5):
    t0 = time.perf_counter()
    cycle_length_set(g)
    times.append(time.perf_counter() - t0)
print(json.dumps({"numba": using_numba(), "times": times}))
"""


def run(expr, no_numba):
    env = dict(os.environ)
    if no_numba:
        env["CYCLEMOD_NO_NUMBA"] = "1"
    else:
        env.pop("CYCLEMOD_NO_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, expr],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    print(f"{'case':<14} {'python (ms)':>12} {'numba (ms)':>12} {'speedup':>8}")
    for name, expr in CASES:
        py = run(expr, no_numba=True)
        nb = run(expr, no_numba=False)
        t_py = statistics.median(py["times"]) * 1000
        t_nb = statistics.median(nb["times"]) * 1000
        tag = "" if nb["numba"] else "  (numba unavailable: same backend)"
        speed = t_py / t_nb if t_nb > 0 else float("inf")
        print(f"{name:<14} {t_py:>12.2f} {t_nb:>12.2f} {speed:>7.1f}x{tag}")


if __name__ == "__main__":
    main()
