"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per (workload, backend) with the best wall time and the
speedup of the compiled kernel.  Both backends must return identical
results; the script exits non-zero if they do not.
"""

import argparse
import sys
import time

from coverpebble import kernels
from coverpebble.graph import complete_graph, cycle_graph, hypercube, path_graph
from coverpebble.oracle import _coef
from coverpebble.pebbling import singleton_values, stacking_number


def search_case(g, w, d, prune):
    args = (g.vertex_count, g.arcs, _coef(g), singleton_values(g.dist, w), w, d, prune, 10**8, None)
    return lambda backend: kernels.search(*args, backend=backend)


def table_case(g, w):
    sn, _ = stacking_number(g.dist, w)
    return lambda backend: kernels.cover_table(g.vertex_count, g.arcs, w, sn, backend=backend)


WORKLOADS = [
    # 26 pebbles is one short of the Q3 stacking number: the search must exhaust
    ("search Q3 worst, no prune", search_case(hypercube(3), (1,) * 8, (26,) + (0,) * 7, False)),
    ("search C6 w=2, no prune", search_case(cycle_graph(6), (2,) * 6, (10, 10, 10, 0, 0, 0), False)),
    ("search K5 w=2, prune", search_case(complete_graph(5), (2,) * 5, (6, 6, 6, 0, 0), True)),
    ("table C5 w=2", table_case(cycle_graph(5), (2,) * 5)),
    ("table P5 w=(1,2,1,2,1)", table_case(path_graph(5), (1, 2, 1, 2, 1))),
]


def best_time(fn, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
    status = 0
    for name, fn in WORKLOADS:
        times = {}
        results = {}
        for backend in backends:
            times[backend], results[backend] = best_time(fn, backend, args.repeat)
            print(f"{name:<28} {backend:<7} {times[backend] * 1e3:10.2f} ms")
        if len(results) == 2:
            same = results["python"] == results["cython"]
            print(f"{name:<28} speedup {times['python'] / times['cython']:9.1f}x  {'ok' if same else 'MISMATCH'}")
            status |= not same
    return status


if __name__ == "__main__":
    sys.exit(main())
