"""Compare the compiled and pure-Python kernels on the same workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from exact3 import Multigraph, _backend
from exact3.families import harary, petersen


def _flat(g: Multigraph) -> list[int]:
    _, mat = g.to_matrix()
    return [x for row in mat for x in row]


def _random_exact_like(rng: random.Random, n: int) -> Multigraph:
    edges = [(i, (i + 1) % n, 1) for i in range(n)]
    edges += [(i, rng.randrange(n), 1) for i in range(n)]
    return Multigraph(range(n), [(u, v, r) for u, v, r in edges if u != v])


def workloads():
    rng = random.Random(0)
    graphs = [petersen(), harary(3, 12)] + [_random_exact_like(rng, 14) for _ in range(30)]
    return [(g.order, _flat(g)) for g in graphs]


def bench(impl, cases, repeat):
    out = {}
    t = time.perf_counter()
    for _ in range(repeat):
        for n, f in cases:
            impl.canon(n, f, None)
    out["canon"] = time.perf_counter() - t
    t = time.perf_counter()
    for _ in range(repeat):
        for n, f in cases:
            impl.flow_tree(n, f, -1)
    out["flow_tree"] = time.perf_counter() - t
    t = time.perf_counter()
    for _ in range(repeat):
        for n, f in cases:
            impl.flow_tree(n, f, 4)
    out["flow_tree_capped"] = time.perf_counter() - t
    small = [(n, f) for n, f in cases if n <= 12]
    t = time.perf_counter()
    for _ in range(max(1, repeat // 10)):
        for n, f in small:
            impl.min_cut_masks(n, f)
    out["min_cut_masks"] = time.perf_counter() - t
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    impls = _backend.available()
    if "compiled" not in impls:
        print("compiled extension not built; only the Python kernels are timed")
    cases = workloads()
    results = {name: bench(impl, cases, args.repeat) for name, impl in sorted(impls.items())}
    names = sorted(results)
    print(f"{'kernel':<18}" + "".join(f"{n:>12}" for n in names) +
          ("     speedup" if len(names) == 2 else ""))
    for key in results[names[0]]:
        row = f"{key:<18}" + "".join(f"{results[n][key]:>11.3f}s" for n in names)
        if len(names) == 2:
            row += f"{results['python'][key] / results['compiled'][key]:>11.1f}x"
        print(row)

    if len(names) == 2:
        print("\nend to end: enumerate every class of order <= 8")
        for name in names:
            env = dict(os.environ, EXACT3_PURE_PYTHON="1" if name == "python" else "0")
            t = time.perf_counter()
            subprocess.run([sys.executable, "-m", "exact3", "enumerate", "--max-n", "8",
                            "--count-only"], env=env, check=True, capture_output=True)
            print(f"{name:<18}{time.perf_counter() - t:>11.2f}s")


if __name__ == "__main__":
    main()
