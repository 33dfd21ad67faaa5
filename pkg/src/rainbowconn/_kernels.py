"""Hot loops: rainbow reachability over (vertex, colour-subset) states and the
backtracking search over edge colourings.

Two backends share one search driver:

* ``numba``: scalar loops compiled with ``@njit``; reachability keeps, per
  vertex, an antichain of minimal used-colour masks (dominance pruning).
* ``numpy``: the same driver interpreted, with reachability done as a dense
  boolean fixpoint over ``(vertex, mask)`` using vectorised mask updates.

The backend is fixed at import time by ``RAINBOW_JIT`` ("0"/"false"/"no"
selects numpy). Colours are ``1..k``; ``0`` marks an uncoloured edge, which
is treated as a wildcard that never clashes with anything.
"""
from __future__ import annotations

import os
import types

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("RAINBOW_JIT", "1").lower() not in ("0", "false", "no", "off")
BACKEND = "numba" if USE_NUMBA else "numpy"

FEASIBLE = 1
INFEASIBLE = 0
BUDGET_EXCEEDED = 2

# colour masks live in int64 words; keep the state space desk-sized
MAX_SEARCH_COLORS = 24


def _reach_numba_impl(src, n, eu, ev, ptr, nbr, eid, colors, k):
    cap = 8
    minm = np.empty((n, cap), dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    qcap = 64
    qv = np.empty(qcap, dtype=np.int64)
    qm = np.empty(qcap, dtype=np.int64)
    head = 0
    tail = 0
    minm[src, 0] = 0
    cnt[src] = 1
    qv[0] = src
    qm[0] = 0
    tail = 1
    seen = np.zeros(n, dtype=np.bool_)
    seen[src] = True
    nseen = 1
    while head < tail and nseen < n:
        v = qv[head]
        mask = qm[head]
        head += 1
        alive = False
        for j in range(cnt[v]):
            if minm[v, j] == mask:
                alive = True
                break
        if not alive:
            continue
        for p in range(ptr[v], ptr[v + 1]):
            w = nbr[p]
            c = colors[eid[p]]
            if c > 0:
                bit = np.int64(1) << (c - 1)
                if mask & bit:
                    continue
                nm = mask | bit
            else:
                nm = mask
            dominated = False
            for j in range(cnt[w]):
                x = minm[w, j]
                if x & nm == x:
                    dominated = True
                    break
            if dominated:
                continue
            # drop supersets of nm, then append nm
            kept = 0
            for j in range(cnt[w]):
                x = minm[w, j]
                if x & nm != nm:
                    minm[w, kept] = x
                    kept += 1
            if kept == cap:
                grown = np.empty((n, cap * 2), dtype=np.int64)
                grown[:, :cap] = minm
                minm = grown
                cap *= 2
            minm[w, kept] = nm
            cnt[w] = kept + 1
            if not seen[w]:
                seen[w] = True
                nseen += 1
            if tail == qcap:
                if head > 0:
                    live = tail - head
                    qv[:live] = qv[head:tail].copy()
                    qm[:live] = qm[head:tail].copy()
                    tail = live
                    head = 0
                if tail == qcap:
                    gv = np.empty(qcap * 2, dtype=np.int64)
                    gm = np.empty(qcap * 2, dtype=np.int64)
                    gv[:qcap] = qv
                    gm[:qcap] = qm
                    qv = gv
                    qm = gm
                    qcap *= 2
            qv[tail] = w
            qm[tail] = nm
            tail += 1
    return seen


def reach_numpy(src, n, eu, ev, ptr, nbr, eid, colors, k):
    """Vertices reachable from ``src`` by a rainbow walk (dense fixpoint)."""
    present = np.unique(colors[colors > 0])
    pos = np.full(k + 1, -1, dtype=np.int64)
    pos[present] = np.arange(present.size)
    size = 1 << present.size
    masks = np.arange(size, dtype=np.int64)
    reach = np.zeros((n, size), dtype=bool)
    reach[src, 0] = True
    free = [masks[(masks >> b & 1) == 0] for b in range(present.size)]
    changed = True
    while changed:
        changed = False
        for e in range(eu.size):
            u, v, c = eu[e], ev[e], colors[e]
            for a, b in ((u, v), (v, u)):
                if c == 0:
                    new = reach[a] & ~reach[b]
                    if new.any():
                        reach[b] |= new
                        changed = True
                else:
                    bit = pos[c]
                    lo = free[bit]
                    hi = lo | (1 << bit)
                    new = reach[a, lo] & ~reach[b, hi]
                    if new.any():
                        reach[b, hi] |= reach[a, lo]
                        changed = True
    return reach.any(axis=1)


def _reaches_all_template(src, n, eu, ev, ptr, nbr, eid, colors, k):
    r = reach_from(src, n, eu, ev, ptr, nbr, eid, colors, k)
    for t in range(n):
        if not r[t]:
            return False
    return True


def _bind(fn, **names):
    # copy of fn whose free globals are rebound; lets one search body serve both backends
    g = dict(fn.__globals__)
    g.update(names)
    return types.FunctionType(fn.__code__, g, fn.__name__, fn.__defaults__, fn.__closure__)


def search_core(n, eu, ev, ptr, nbr, eid, nbridge, k, node_limit):
    """Depth-first search for a rainbow connected colouring with <= k colours.

    Edges are taken in array order; the first ``nbridge`` are bridges and get
    the forced colours ``1..nbridge``. Every later edge may use at most one
    more than the largest colour seen so far, which removes colour-permutation
    symmetry exactly. Returns ``(status, colors, nodes, leaves)``.
    """
    m = eu.shape[0]
    colors = np.zeros(m, dtype=np.int64)
    if nbridge > k:
        return INFEASIBLE, colors, 0, 0
    for i in range(nbridge):
        colors[i] = i + 1
    for s in range(n):
        if not reaches_all(s, n, eu, ev, ptr, nbr, eid, colors, k):
            return INFEASIBLE, colors, 0, 0
    if nbridge == m:
        return FEASIBLE, colors, 0, 1
    maxc = np.zeros(m + 1, dtype=np.int64)
    maxc[nbridge] = nbridge
    nodes = 0
    leaves = 0
    i = nbridge
    while True:
        c = colors[i] + 1
        limit = min(k, maxc[i] + 1)
        if c > limit:
            colors[i] = 0
            i -= 1
            if i < nbridge:
                return INFEASIBLE, colors, nodes, leaves
            continue
        colors[i] = c
        nodes += 1
        if nodes > node_limit:
            return BUDGET_EXCEEDED, colors, nodes, leaves
        ok = reaches_all(eu[i], n, eu, ev, ptr, nbr, eid, colors, k)
        if ok:
            ok = reaches_all(ev[i], n, eu, ev, ptr, nbr, eid, colors, k)
        if not ok:
            continue
        if i == m - 1:
            leaves += 1
            full = True
            for s in range(n):
                if not reaches_all(s, n, eu, ev, ptr, nbr, eid, colors, k):
                    full = False
                    break
            if full:
                return FEASIBLE, colors, nodes, leaves
        else:
            maxc[i + 1] = max(maxc[i], c)
            i += 1
            colors[i] = 0


_reaches_all_numpy = _bind(_reaches_all_template, reach_from=reach_numpy)
_search_numpy = _bind(search_core, reaches_all=_reaches_all_numpy)

if HAVE_NUMBA:
    reach_numba = njit(cache=True)(_reach_numba_impl)
    _reaches_all_numba = njit(cache=True)(_bind(_reaches_all_template, reach_from=reach_numba))
    _search_numba = njit(cache=True)(_bind(search_core, reaches_all=_reaches_all_numba))
else:  # pragma: no cover
    reach_numba = None


def csr(n: int, eu: np.ndarray, ev: np.ndarray):
    """Adjacency in CSR form: ``nbr[ptr[v]:ptr[v+1]]`` with matching edge ids."""
    deg = np.zeros(n, dtype=np.int64)
    np.add.at(deg, eu, 1)
    np.add.at(deg, ev, 1)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=ptr[1:])
    nbr = np.empty(ptr[-1], dtype=np.int64)
    eid = np.empty(ptr[-1], dtype=np.int64)
    fill = ptr[:-1].copy()
    for e in range(eu.size):
        for a, b in ((eu[e], ev[e]), (ev[e], eu[e])):
            nbr[fill[a]] = b
            eid[fill[a]] = e
            fill[a] += 1
    return ptr, nbr, eid


def reach(src, n, eu, ev, ptr, nbr, eid, colors, k, backend: str | None = None):
    if (backend or BACKEND) == "numba":
        return reach_numba(src, n, eu, ev, ptr, nbr, eid, colors, k)
    return reach_numpy(src, n, eu, ev, ptr, nbr, eid, colors, k)


def search(n, eu, ev, nbridge, k, node_limit, backend: str | None = None):
    """Run the colouring search on edge arrays; dispatches on backend."""
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    ptr, nbr, eid = csr(n, eu, ev)
    if (backend or BACKEND) == "numba":
        status, colors, nodes, leaves = _search_numba(
            n, eu, ev, ptr, nbr, eid, nbridge, k, node_limit)
    else:
        status, colors, nodes, leaves = _search_numpy(
            n, eu, ev, ptr, nbr, eid, nbridge, k, node_limit)
    return int(status), colors, int(nodes), int(leaves)
