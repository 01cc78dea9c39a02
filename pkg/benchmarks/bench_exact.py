"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_exact.py [--sizes 6 7 8] [--graphs 3] [--seed 0]

Reports the median wall time per kernel and backend, and checks that both
backends return identical results.
"""

from __future__ import annotations

import argparse
import statistics
import time

from blockradio import kernels
from blockradio.families import random_block_graph
from blockradio.radio import exact_radio_number


def _time(fn, repeat: int) -> float:
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def _csr(g):
    indptr, indices = [0], []
    for nbrs in g.adj:
        indices.extend(sorted(nbrs))
        indptr.append(len(indices))
    return indptr, indices


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 7, 8])
    ap.add_argument("--graphs", type=int, default=3, help="random graphs per size")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    names = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(names)} (active: {kernels.backend_name()})")
    print(f"{'kernel':<10} {'p':>4} " + " ".join(f"{n:>12}" for n in names) + f" {'speedup':>9}")
    for p in args.sizes:
        graphs = [random_block_graph(args.seed + i, p, 3) for i in range(args.graphs)]
        rows = {"exact": {}, "bfs": {}}
        for name in names:
            kern = kernels.get_backend(name)
            rows["exact"][name] = _time(lambda: [exact_radio_number(g, g.distances, max_p=p, backend=name) for g in graphs], args.repeat)
            big = random_block_graph(args.seed, 40 * p, 4)
            csr = _csr(big)
            rows["bfs"][name] = _time(lambda: kern.bfs_all(*csr, big.p), args.repeat)
        results = {name: [exact_radio_number(g, g.distances, max_p=p, backend=name).rn for g in graphs] for name in names}
        if len({tuple(v) for v in results.values()}) != 1:
            raise SystemExit(f"backends disagree at p={p}: {results}")
        for kernel, times in rows.items():
            label = p if kernel == "exact" else 40 * p
            speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else f"{'-':>9}"
            print(f"{kernel:<10} {label:>4} " + " ".join(f"{times[n] * 1e3:10.2f}ms" for n in names) + f" {speed}")


if __name__ == "__main__":
    main()
