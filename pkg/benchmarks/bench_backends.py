#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-numpy fallback.

Generates a preferential-attachment graph, then times the hot paths through
both kernel modules: the all-pairs scoring sweep, the whole-graph
neighborhood bound, and a batch of aborted BFS runs. A full top-k solve is
also run end to end in a subprocess per backend, selected the same way users
select it: the TOPCENT_BACKEND environment variable. Integer outputs must
match exactly between backends; timings show what the compiled path buys.

    python benchmarks/bench_backends.py --n 20000 --deg 10 --k 10
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

import topcent as tc
import topcent._kernels_numpy as numpy_kernels

try:
    import topcent._kernels_numba as numba_kernels
except ImportError:
    numba_kernels = None


def pa_graph(rng, n, m_att):
    edges = []
    repeated = list(range(m_att))
    for v in range(m_att, n):
        targets = set()
        while len(targets) < m_att:
            t = repeated[int(rng.integers(0, len(repeated)))]
            if t != v:
                targets.add(t)
        for t in targets:
            edges.append((v, t))
            repeated.append(t)
        repeated.extend([v] * m_att)
    return tc.Graph.from_edges(edges, n=n)


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_kernels(k, g, reach, repeat):
    ip, ix, n = g.indptr, g.indices, g.n
    deg = g.out_degrees().astype(np.int64)
    rows = {}
    rows["score sweep (n BFS)"], tables = timed(
        lambda: k.sum_all_closeness(ip, ix, n), repeat)
    rows["neighborhood bound"], nb = timed(
        lambda: k.nb_exact(ip, ix, deg, reach.exact, n, True), repeat)
    base = np.maximum(deg - 1, 0)
    order = np.argsort(-deg)[:64]

    def cut_loop():
        total = 0
        for v in order:
            out = k.bfs_cut_closeness(ip, ix, base, n, int(v), int(reach.exact[v]),
                                      int(reach.exact[v]), True, 1, 2,
                                      False, 0.0, True)
            total += out[3]
        return total

    rows["64 aborted BFS"], _ = timed(cut_loop, repeat)
    return rows, (tables[0], nb[0])


def end_to_end_child(n, deg, k):
    rng = np.random.default_rng(1)
    g = pa_graph(rng, n, max(1, deg // 2))
    tc.topk(g, k, "nbcut")  # warm-up: compilation / cache loading
    t0 = time.perf_counter()
    res = tc.topk(g, k, "nbcut")
    elapsed = time.perf_counter() - t0
    top = ";".join(f"{e.label}:{e.score:.12g}" for e in res.entries[:3])
    print(f"{elapsed:.4f} {top}")


def run_end_to_end(backend, n, deg, k):
    env = dict(os.environ, TOPCENT_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, __file__, "--child", "--n", str(n),
         "--deg", str(deg), "--k", str(k)],
        env=env, capture_output=True, text=True, check=True)
    elapsed, top = out.stdout.strip().split(" ", 1)
    return float(elapsed), top


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--deg", type=int, default=10)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.child:
        end_to_end_child(args.n, args.deg, args.k)
        return

    rng = np.random.default_rng(1)
    g = pa_graph(rng, args.n, max(1, args.deg // 2))
    reach = tc.reach_info(g)
    print(f"graph: n={g.n} m={g.m} avg deg={2 * g.m / g.n:.1f}")

    backends = [("numpy", numpy_kernels)]
    if numba_kernels is not None:
        bench_kernels(numba_kernels, g, reach, 1)  # compile before timing
        backends.append(("numba", numba_kernels))
    else:
        print("numba unavailable; benchmarking the fallback only")

    results, checks = {}, {}
    for name, mod in backends:
        results[name], checks[name] = bench_kernels(mod, g, reach, args.repeat)

    for name, _ in backends:
        elapsed, top = run_end_to_end(name, args.n, args.deg, args.k)
        results[name][f"topk nbcut k={args.k} (subprocess)"] = elapsed
        results[name].setdefault("_top", top)

    if len(backends) == 2:
        assert (checks["numpy"][0] == checks["numba"][0]).all(), "sum-distance mismatch"
        assert (checks["numpy"][1] == checks["numba"][1]).all(), "bound mismatch"
        assert results["numpy"]["_top"] == results["numba"]["_top"], "ranking mismatch"
        print("outputs identical across backends")

    names = [n for n, _ in backends]
    labels = [l for l in results[names[0]] if not l.startswith("_")]
    width = max(len(l) for l in labels) + 2
    header = "kernel".ljust(width) + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label in labels:
        line = label.ljust(width)
        for n in names:
            line += f"{results[n][label] * 1000:>10.1f}ms"
        if len(names) == 2:
            line += f"{results['numpy'][label] / results['numba'][label]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
