"""Compare the compiled and pure-Python independence-number kernels.

Runs the two workloads that dominate suite time — single-graph alpha on
circulants and the exhaustive alpha(G[H]) = alpha(G)alpha(H) scan — under
both backends and prints a table.  Select a backend globally with
``CIRCSHELL_KERNELS=numba`` or ``CIRCSHELL_KERNELS=python``; this script
drives both explicitly.

Usage::

    python3 benchmarks/bench_kernels.py [--nmax 4]

The scan grid defaults to all labeled graphs with up to 4 vertices
(4356 ordered pairs); ``--nmax 5`` reproduces the full suite workload
(1.2M pairs; expect minutes on the pure-Python side).
"""

from __future__ import annotations

import argparse
import time

from circshell import kernels
from circshell.graphs import CirculantSpec, circulant
from circshell.suites import labeled_graphs

CIRCULANTS = ("C16(1,4,8)", "C20(1,5,10)", "C24(1,6,12)", "C32(1,8,16)")


def bench_alpha() -> list[tuple[str, float, float, int]]:
    rows = []
    for name in CIRCULANTS:
        g = circulant(CirculantSpec.parse(name))
        adj = list(g.adjacency_masks)
        t = time.perf_counter()
        value = kernels.alpha_py(g.n, adj)
        t_py = time.perf_counter() - t
        if kernels.HAVE_NUMBA:
            kernels.alpha(g.n, adj)  # warm the JIT before timing
            t = time.perf_counter()
            got = kernels.alpha(g.n, adj)
            t_nb = time.perf_counter() - t
            assert got == value
        else:
            t_nb = float("nan")
        rows.append((f"alpha {name}", t_py, t_nb, value))
    return rows


def bench_scan(nmax: int) -> list[tuple[str, float, float, int]]:
    gs = []
    for n in range(1, nmax + 1):
        gs.extend(labeled_graphs(n))
    ns = [g.n for g in gs]
    adjs = [list(g.adjacency_masks) for g in gs]
    pairs = len(gs) ** 2

    t = time.perf_counter()
    bad_py = kernels.alpha_product_scan_py(ns, adjs)
    t_py = time.perf_counter() - t
    if kernels.HAVE_NUMBA:
        kernels.alpha_product_failures(ns, adjs)  # warm the JIT
        t = time.perf_counter()
        bad_nb = kernels.alpha_product_failures(ns, adjs)
        t_nb = time.perf_counter() - t
        assert sorted(bad_py) == sorted(bad_nb)
    else:
        t_nb = float("nan")
    return [(f"product scan n<={nmax} ({pairs} pairs)", t_py, t_nb, len(bad_py))]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=4,
                    help="max vertices for the product-scan grid (default 4)")
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        print("numba not importable; timing the pure-Python backend only\n")

    rows = bench_alpha() + bench_scan(args.nmax)
    w = max(len(r[0]) for r in rows)
    print(f"{'workload':<{w}}  {'python':>10}  {'numba':>10}  {'speedup':>8}")
    for label, t_py, t_nb, _ in rows:
        speed = f"{t_py / t_nb:8.1f}x" if t_nb == t_nb and t_nb > 0 else "     n/a"
        print(f"{label:<{w}}  {t_py:>9.4f}s  {t_nb:>9.4f}s  {speed}")


if __name__ == "__main__":
    main()
