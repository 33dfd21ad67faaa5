"""Compare the numba and numpy kernel backends on the two hot paths.

    python benchmarks/bench_kernels.py [--n 7] [--k 3] [--repeat 3] [--limit 50]

Workloads: rainbow reachability from every source under random colourings,
and the k-colouring decision search on every order-n graph of diameter <= k.
Compilation (or the on-disk cache load) is timed separately; results from
both backends are checked for equality before any timing is reported.
"""
import argparse
import time

import numpy as np

from rainbowconn import _kernels
from rainbowconn.enumeration import enumerate_connected
from rainbowconn.graph_core import diameter
from rainbowconn.rc_solver import search_order


def edge_arrays(g, order=None):
    edges = order if order is not None else g.edges
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    return eu, ev


def reach_jobs(graphs, k, seed):
    rng = np.random.default_rng(seed)
    jobs = []
    for g in graphs:
        eu, ev = edge_arrays(g)
        ptr, nbr, eid = _kernels.csr(g.n, eu, ev)
        colors = rng.integers(1, k + 1, size=g.m).astype(np.int64)
        jobs.append((g.n, eu, ev, ptr, nbr, eid, colors))
    return jobs


def run_reach(jobs, k, backend):
    out = []
    for n, eu, ev, ptr, nbr, eid, colors in jobs:
        for s in range(n):
            out.append(_kernels.reach(s, n, eu, ev, ptr, nbr, eid, colors, k, backend=backend))
    return out


def search_jobs(graphs):
    jobs = []
    for g in graphs:
        order, nb = search_order(g)
        eu, ev = edge_arrays(g, order)
        jobs.append((g.n, eu, ev, nb))
    return jobs


def run_search(jobs, k, backend):
    return [_kernels.search(n, eu, ev, nb, k, 10 ** 9, backend=backend)[:2] for n, eu, ev, nb in jobs]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        times.append(time.perf_counter() - t0)
    return min(times), res


def same(a, b):
    return all(np.array_equal(x, y) for x, y in zip(a, b)) and len(a) == len(b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--limit", type=int, default=50, help="max graphs per workload")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    graphs = list(enumerate_connected(args.n))
    close = [g for g in graphs if diameter(g) <= args.k][:args.limit]
    rj = reach_jobs(graphs[:args.limit], args.k, args.seed)
    sj = search_jobs(close)

    t0 = time.perf_counter()
    run_reach(rj[:1], args.k, "numba")
    run_search(sj[:1], args.k, "numba")
    warm = time.perf_counter() - t0
    print(f"n={args.n} k={args.k}: {len(rj)} reach graphs, {len(sj)} search graphs")
    print(f"numba first call (compile or cache load): {warm:.2f}s")

    rows = []
    for name, run, jobs in (("reach", run_reach, rj), ("search", run_search, sj)):
        t_nb, r_nb = best_of(lambda: run(jobs, args.k, "numba"), args.repeat)
        t_np, r_np = best_of(lambda: run(jobs, args.k, "numpy"), args.repeat)
        if name == "search":
            ok = [a[0] == b[0] and np.array_equal(a[1], b[1]) for a, b in zip(r_nb, r_np)]
            agree = all(ok) and len(ok) == len(jobs)
        else:
            agree = same(r_nb, r_np)
        if not agree:
            raise SystemExit(f"{name}: backends disagree")
        rows.append((name, t_nb, t_np))

    print(f"{'workload':<8} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, t_nb, t_np in rows:
        print(f"{name:<8} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
