"""Compare the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the backend is fixed at
import time by ``CFCONN_DISABLE_NUMBA``. The numba timings exclude the
first (compiling) call.

    python benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from cfconn._accel import backend
from cfconn.enumerate import check_conjecture_3_1, check_theorem_1_1
from cfconn.exact import exact_cfc, exact_ranking, exact_vcfc
from cfconn.graph import cycle_graph, path_graph, star_graph
from cfconn.treecolor import color_tree
from cfconn.verify import is_cf_vertex_connected

repeat = int(sys.argv[1])
p512 = path_graph(512)
c512 = color_tree(p512)
workloads = {
    "exact_vcfc(P_10)": lambda: exact_vcfc(path_graph(10)),
    "exact_cfc(K_1,9)": lambda: exact_cfc(star_graph(10)),
    "exact_ranking(C_10)": lambda: exact_ranking(cycle_graph(10)),
    "exact_vcfc(C_10)": lambda: exact_vcfc(cycle_graph(10)),
    "tree cfc sweep n=8": lambda: check_conjecture_3_1(8),
    "graph sweep n=5": lambda: check_theorem_1_1(5),
    "verify tree P_512": lambda: is_cf_vertex_connected(p512, c512),
}
out = {"backend": backend(), "times": {}}
for name, fn in workloads.items():
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run_backend(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("CFCONN_DISABLE_NUMBA", None)
    if disable:
        env["CFCONN_DISABLE_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed runs per workload (best is kept)")
    args = parser.parse_args(argv)

    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if fast["backend"] != "numba":
        print("numba unavailable; both runs used the Python fallback", file=sys.stderr)

    print(f"{'workload':<22}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:<22}{t_fast:>11.4f}s{t_slow:>11.4f}s{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
