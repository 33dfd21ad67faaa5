"""Brute-force reference implementations used only by the tests.

None of these share code paths with the package beyond the ``Graph``
container: paths are enumerated explicitly, colourings exhaustively,
isomorphism classes by permutation minimisation or networkx.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb, factorial

import networkx as nx
import numpy as np


def simple_paths(g, s, t, max_len=None):
    """All simple s-t paths as tuples of edge indices into ``g.edges``."""
    idx = {e: i for i, e in enumerate(g.edges)}
    out = []
    stack = [(s, [s], [])]
    while stack:
        v, verts, eds = stack.pop()
        if v == t:
            out.append(tuple(eds))
            continue
        if max_len is not None and len(eds) >= max_len:
            continue
        for w in range(g.n):
            if g.has_edge(v, w) and w not in verts:
                stack.append((w, verts + [w], eds + [idx[(min(v, w), max(v, w))]]))
    return out


def rainbow_pair_by_paths(g, colors, s, t):
    for p in simple_paths(g, s, t):
        cs = [colors[e] for e in p]
        if len(set(cs)) == len(cs):
            return True
    return False


def rainbow_connected_by_paths(g, colors):
    return all(rainbow_pair_by_paths(g, colors, s, t)
               for s in range(g.n) for t in range(s + 1, g.n))


def all_colorings_feasible(g, k):
    """Is there any colouring of g's edges with colours 0..k-1 that is rainbow connected?

    Vectorised over all k**m colourings; only paths of at most k edges can be rainbow.
    """
    m = g.m
    if g.n <= 1:
        return True
    cols = np.array(list(product(range(k), repeat=m)), dtype=np.int8).reshape(-1, m)
    ok = np.ones(cols.shape[0], dtype=bool)
    for s in range(g.n):
        for t in range(s + 1, g.n):
            any_path = np.zeros(cols.shape[0], dtype=bool)
            for p in simple_paths(g, s, t, max_len=k):
                rb = np.ones(cols.shape[0], dtype=bool)
                for a, b in combinations(p, 2):
                    rb &= cols[:, a] != cols[:, b]
                any_path |= rb
            ok &= any_path
            if not ok.any():
                return False
    return bool(ok.any())


def rc_brute(g, k_max=None):
    k_max = g.m if k_max is None else k_max
    for k in range(1, k_max + 1):
        if all_colorings_feasible(g, k):
            return k
    return None


def bridges_by_deletion(g):
    base = nx.number_connected_components(to_nx(g))
    out = []
    for e in g.edges:
        h = to_nx(g)
        h.remove_edge(*e)
        if nx.number_connected_components(h) > base:
            out.append(e)
    return sorted(out)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def diameter_bfs(g):
    return nx.diameter(to_nx(g)) if g.n > 1 else 0


def perm_canon(n, edges):
    """Minimum sorted edge tuple over all vertex permutations (n <= 6)."""
    best = None
    for p in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def labeled_connected_classes(n):
    """Connected isomorphism classes of order n via brute force over all labelled graphs."""
    pairs = list(combinations(range(n), 2))
    if n <= 5:
        seen = set()
        for mask in range(1 << len(pairs)):
            es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(es)
            if n > 0 and nx.is_connected(h):
                seen.add(perm_canon(n, es))
        return len(seen)
    # n = 6: bucket by WL hash, then pairwise isomorphism inside buckets
    buckets: dict[str, list] = {}
    for mask in range(1 << len(pairs)):
        es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(es) < n - 1:
            continue
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(es)
        if not nx.is_connected(h):
            continue
        key = nx.weisfeiler_lehman_graph_hash(h) + str(sorted(d for _, d in h.degree()))
        reps = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return sum(len(v) for v in buckets.values())


def atlas_connected(n):
    """Connected graphs of order n from networkx's graph atlas (n <= 7)."""
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and (n == 0 or nx.is_connected(h))]


def labeled_connected_count(n):
    """Labelled connected graphs on n vertices, by the usual inclusion recurrence."""
    total = [2 ** comb(k, 2) for k in range(n + 1)]
    conn = [0] * (n + 1)
    for k in range(1, n + 1):
        conn[k] = total[k] - sum(comb(k - 1, j - 1) * conn[j] * total[k - j] for j in range(1, k))
    return conn[n]


def orbit_sum(graphs, n):
    """Sum of n!/|Aut(G)|; equals labeled_connected_count(n) iff the list hits each class once."""
    out = 0
    for g in graphs:
        h = to_nx(g)
        auts = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
        out += factorial(n) // auts
    return out
