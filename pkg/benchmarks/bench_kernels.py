"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from annideal import kernels
from annideal.graphs import build_ag_graph, build_zero_divisor_graph, diameter, girth
from annideal.ideals import ExplicitLattice
from annideal.ring import build_ring

CASES = [
    ("ideal enumeration", "Z2 x Z2 x Z2 x Z2 x Z2 x Z2"),
    ("ideal enumeration", "Z4 x Z4 x Z4"),
    ("ideal enumeration", "Z8 x Z8 x Z4"),
    ("diameter+girth, Gamma", "Z2 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2"),
    ("diameter+girth, Gamma", "Z4 x Z4 x Z4 x Z4"),
    ("diameter+girth, AG", "Z8 x Z8 x Z4"),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def run_case(kind, spec, k):
    ring = build_ring(spec)
    if kind == "ideal enumeration":
        return lambda: len(ExplicitLattice(ring, kernel=k))
    if kind.endswith("Gamma"):
        graph = build_zero_divisor_graph(ring)
    else:
        graph = build_ag_graph(ExplicitLattice(ring))
    graph.kernel_adjacency(k)
    return lambda: (diameter(graph, k), girth(graph, k))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    names = kernels.available()
    if "cython" not in names:
        print("compiled kernels not built; only the python timings are shown")
    print(f"{'case':<24} {'ring':<40} " + " ".join(f"{n:>10}" for n in names) + "   speedup")
    for kind, spec in CASES:
        row, outs = [], []
        for name in names:
            sec, out = best_of(run_case(kind, spec, kernels.get(name)), args.repeat)
            row.append(sec)
            outs.append(out)
        assert all(o == outs[0] for o in outs), f"{spec}: backends disagree {outs}"
        speed = f"{row[0] / row[-1]:8.1f}x" if len(row) > 1 else ""
        print(f"{kind:<24} {spec:<40} " + " ".join(f"{s * 1e3:8.1f}ms" for s in row) + f"  {speed}")


if __name__ == "__main__":
    main()
