"""Exact rainbow connection number by exhaustive colouring search."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graph_core import DisconnectedGraphError, Edge, Graph, GraphError, bridges, diameter
from .rainbow_verify import EdgeColoring

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide; the answer is unknown."""

    def __init__(self, msg: str, stats: "SearchStats | None" = None):
        super().__init__(msg)
        self.stats = stats


def default_budget() -> int:
    raw = os.environ.get("RAINBOW_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class SearchStats:
    nodes: int = 0
    colorings_tested: int = 0
    elapsed: float = 0.0

    def add(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.colorings_tested += other.colorings_tested
        self.elapsed += other.elapsed


@dataclass(frozen=True)
class RcResult:
    rc: int
    witness: EdgeColoring
    stats: SearchStats = field(compare=False)
    # k values proven infeasible on the way up, for the exhaustion record
    refuted: tuple[int, ...] = ()


def rc_lower_bound(g: Graph) -> int:
    """max(diameter, number of bridges)."""
    if g.n < 2:
        raise GraphError("lower bound needs n >= 2")
    if not g.is_connected():
        raise DisconnectedGraphError("rc is undefined for a disconnected graph")
    return max(diameter(g), len(bridges(g)))


def search_order(g: Graph) -> tuple[list[Edge], int]:
    """Edge order for the search: sorted bridges first, then BFS edge order from vertex 0."""
    br = bridges(g)
    listed = set(br)
    order = list(br)
    seen = [False] * g.n
    queue = [0] if g.n else []
    if queue:
        seen[0] = True
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in g.neighbors(u):
            e = (u, w) if u < w else (w, u)
            if e not in listed:
                listed.add(e)
                order.append(e)
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return order, len(br)


def _run(g: Graph, k: int, budget: int, backend: str | None):
    order, nbridge = search_order(g)
    eu = np.array([e[0] for e in order], dtype=np.int64)
    ev = np.array([e[1] for e in order], dtype=np.int64)
    t0 = time.perf_counter()
    status, colors, nodes, leaves = _kernels.search(g.n, eu, ev, nbridge, k, budget, backend=backend)
    stats = SearchStats(nodes, leaves, time.perf_counter() - t0)
    coloring = None
    if status == _kernels.FEASIBLE:
        coloring = EdgeColoring(k, {e: int(c) for e, c in zip(order, colors)})
    return status, coloring, stats


def is_k_rainbow_connectable(g: Graph, k: int, budget: int | None = None,
                             backend: str | None = None, stats: SearchStats | None = None
                             ) -> EdgeColoring | None:
    """A rainbow connected colouring with at most ``k`` colours, or ``None``.

    ``None`` is a proof of absence: the search is exhaustive modulo colour
    renaming. Raises :class:`SearchBudgetExceeded` rather than guessing.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    if not g.is_connected():
        raise DisconnectedGraphError("rc is undefined for a disconnected graph")
    if k > _kernels.MAX_SEARCH_COLORS:
        raise GraphError(f"k={k} exceeds the search guard of {_kernels.MAX_SEARCH_COLORS}")
    budget = default_budget() if budget is None else budget
    status, coloring, run_stats = _run(g, k, budget, backend)
    if stats is not None:
        stats.add(run_stats)
    if status == _kernels.BUDGET_EXCEEDED:
        raise SearchBudgetExceeded(f"node budget {budget} exhausted at k={k}", run_stats)
    return coloring


def rc_exact(g: Graph, k_max: int | None = None, budget: int | None = None,
             backend: str | None = None) -> RcResult:
    """rc(g) with a witness, trying k upward from :func:`rc_lower_bound`."""
    if not g.is_connected():
        raise DisconnectedGraphError("rc is undefined for a disconnected graph")
    if g.n == 1:
        return RcResult(0, EdgeColoring(0, {}), SearchStats())
    lb = rc_lower_bound(g)
    if k_max is None:
        k_max = g.m
    if k_max < lb:
        raise GraphError(f"k_max={k_max} is below the lower bound {lb}")
    stats = SearchStats()
    refuted = []
    for k in range(lb, k_max + 1):
        col = is_k_rainbow_connectable(g, k, budget=budget, backend=backend, stats=stats)
        if col is not None:
            return RcResult(k, col, stats, tuple(refuted))
        refuted.append(k)
    raise GraphError(f"no rainbow colouring with <= {k_max} colours (rc > k_max)")
