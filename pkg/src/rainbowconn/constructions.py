"""Named graphs with explicit rainbow colourings, chiefly the cycle bouquet G_d(n).

G_d(n) glues ``q`` cycles of length ``d`` at a hub vertex and hangs
``pendant_count`` leaves off the hub, for ``n`` vertices and
``n - 2 + ceil(n / (d - 1))`` edges in total.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import ceil

from .graph_core import (Edge, Graph, GraphError, complete_graph, cycle_graph, from_edge_list,
                         path_graph, star_graph)
from .rainbow_verify import EdgeColoring, is_rainbow_connected


@dataclass(frozen=True)
class GdnPlan:
    n: int
    d: int
    q: int
    pendant_count: int
    hub: int = 0
    # pendant colours actually used, and whether the exhaustive fallback was needed
    pendant_colors: tuple[int, ...] = ()
    fallback_used: bool = False


def gdn_plan(n: int, d: int) -> GdnPlan:
    if d < 3 or d >= ceil(n / 2):
        raise GraphError(f"G_d(n) needs 3 <= d < ceil(n/2); got n={n}, d={d}")
    q = ceil(n / (d - 1)) - 1
    r = n - q * (d - 1)
    # r leaves would overshoot the order by one; r - 1 gives exactly n vertices
    return GdnPlan(n=n, d=d, q=q, pendant_count=r - 1)


def color_gdn_cycle(cycle_edges: list[Edge], d: int) -> list[int]:
    """Colours for one cycle listed as a closed walk from the hub.

    Walking forward from the hub the edges get 1, 2, ...; walking backward
    they get d, d-1, ...; the two runs meet at ceil(d/2).
    """
    if len(cycle_edges) != d:
        raise GraphError(f"cycle has {len(cycle_edges)} edges, expected {d}")
    colors = [0] * d
    half = ceil(d / 2)
    for i in range(half):
        colors[i] = i + 1
    for j in range(d - half):
        colors[d - 1 - j] = d - j
    return colors


def build_gdn(n: int, d: int) -> tuple[Graph, EdgeColoring, GdnPlan]:
    plan = gdn_plan(n, d)
    hub = plan.hub
    pairs: list[Edge] = []
    color_of: dict[Edge, int] = {}
    nxt = 1
    for _ in range(plan.q):
        ring = [hub] + list(range(nxt, nxt + d - 1)) + [hub]
        nxt += d - 1
        walk = [(ring[i], ring[i + 1]) for i in range(d)]
        for (a, b), c in zip(walk, color_gdn_cycle(walk, d)):
            e = (min(a, b), max(a, b))
            pairs.append(e)
            color_of[e] = c
    leaves = list(range(nxt, nxt + plan.pendant_count))
    for leaf in leaves:
        pairs.append((hub, leaf))
    g = from_edge_list(n, pairs)
    if g.n != n or nxt + plan.pendant_count != n:
        raise AssertionError("vertex count drifted from n")

    def attempt(pend_colors) -> EdgeColoring:
        full = dict(color_of)
        for leaf, c in zip(leaves, pend_colors):
            full[(hub, leaf)] = c
        return EdgeColoring(d, full)

    default = tuple(range(2, 2 + plan.pendant_count))
    if all(c <= d - 1 for c in default):
        col = attempt(default)
        if is_rainbow_connected(g, col):
            return g, col, _with(plan, default, False)
    for combo in product(range(1, d + 1), repeat=plan.pendant_count):
        col = attempt(combo)
        if is_rainbow_connected(g, col):
            return g, col, _with(plan, combo, True)
    raise AssertionError(f"no pendant colouring verifies for n={n}, d={d}")


def _with(plan: GdnPlan, pend: tuple[int, ...], fallback: bool) -> GdnPlan:
    return GdnPlan(plan.n, plan.d, plan.q, plan.pendant_count, plan.hub, tuple(pend), fallback)


NAMED_KINDS = ("path", "cycle", "complete", "star")


def build_named(kind: str, n: int) -> tuple[Graph, EdgeColoring]:
    """Path, cycle, complete graph or star on ``n`` vertices with a standard rainbow colouring."""
    if kind == "path":
        if n < 1:
            raise GraphError("path needs n >= 1")
        g = path_graph(n)
        return g, EdgeColoring.from_sequence(g, range(1, g.m + 1), k=g.m)
    if kind == "star":
        if n < 1:
            raise GraphError("star needs n >= 1")
        g = star_graph(n - 1)
        return g, EdgeColoring.from_sequence(g, range(1, g.m + 1), k=g.m)
    if kind == "complete":
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        g = complete_graph(n)
        return g, EdgeColoring(1 if g.m else 0, {e: 1 for e in g.edges})
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        g = cycle_graph(n)
        walk = [(i, (i + 1) % n) for i in range(n)]
        colors = color_gdn_cycle(walk, n)
        return g, EdgeColoring(n, {(min(a, b), max(a, b)): c for (a, b), c in zip(walk, colors)})
    raise GraphError(f"unknown kind {kind!r}; expected one of {NAMED_KINDS}")
