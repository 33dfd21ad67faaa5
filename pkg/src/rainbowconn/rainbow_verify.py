"""Edge colourings, rainbow path search and rainbow-connectivity certificates."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .graph_core import DisconnectedGraphError, Edge, Graph, GraphError, _norm

MAX_COLORS = 24


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Total colouring of a graph's edges with colours in ``1..k``."""

    k: int
    assignment: Mapping[Edge, int]

    def __post_init__(self):
        if self.k < 0:
            raise ColoringError(f"negative colour count {self.k}")
        for e, c in self.assignment.items():
            if not 1 <= c <= self.k:
                raise ColoringError(f"colour {c} on edge {e} outside 1..{self.k}")

    @classmethod
    def from_sequence(cls, g: Graph, colors: Sequence[int], k: int | None = None) -> "EdgeColoring":
        """Colouring given as a list aligned with ``g.edges``."""
        colors = [int(c) for c in colors]
        if len(colors) != g.m:
            raise ColoringError(f"{len(colors)} colours for {g.m} edges")
        if k is None:
            k = max(colors, default=0)
        return cls(k, dict(zip(g.edges, colors)))

    def color(self, u: int, v: int) -> int:
        return self.assignment[_norm(u, v)]

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def aligned(self, g: Graph) -> list[int]:
        """Colours in ``g.edges`` order; raises unless the colouring is total on ``g``."""
        extra = set(self.assignment) - set(g.edges)
        if extra:
            raise ColoringError(f"coloured pair {min(extra)} is not an edge of the graph")
        try:
            return [self.assignment[e] for e in g.edges]
        except KeyError as exc:
            raise ColoringError(f"edge {exc.args[0]} has no colour") from None


@dataclass(frozen=True)
class RainbowCertificate:
    """One rainbow path per unordered vertex pair ``(s, t)`` with ``s < t``."""

    paths: Mapping[tuple[int, int], tuple[int, ...]]

    def __len__(self):
        return len(self.paths)


@dataclass(frozen=True)
class RainbowCheck:
    certificate: RainbowCertificate | None = None
    failing_pair: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.failing_pair is None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _bit_neighbors(g: Graph, col: EdgeColoring) -> list[list[tuple[int, int]]]:
    if col.k > MAX_COLORS:
        raise ColoringError(f"k={col.k} exceeds the state-space guard of {MAX_COLORS} colours")
    colors = col.aligned(g)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), c in zip(g.edges, colors):
        bit = 1 << (c - 1)
        nbrs[u].append((v, bit))
        nbrs[v].append((u, bit))
    return nbrs


def _loop_erase(walk: list[int]) -> tuple[int, ...]:
    path: list[int] = []
    where: dict[int, int] = {}
    for v in walk:
        if v in where:
            cut = where[v]
            for x in path[cut + 1:]:
                del where[x]
            del path[cut + 1:]
        else:
            where[v] = len(path)
            path.append(v)
    return tuple(path)


def _rainbow_search(nbrs, n: int, s: int, target: int | None = None) -> dict[int, tuple[int, ...]]:
    # BFS over (vertex, used-colour mask) keeping only minimal masks per vertex
    minimal: list[list[int]] = [[] for _ in range(n)]
    minimal[s].append(0)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(s, 0): None}
    hit: dict[int, tuple[int, int]] = {s: (s, 0)}
    q = deque([(s, 0)])
    while q and len(hit) < n:
        v, mask = q.popleft()
        if mask not in minimal[v]:
            continue
        for w, bit in nbrs[v]:
            if mask & bit:
                continue
            nm = mask | bit
            if any(x & nm == x for x in minimal[w]):
                continue
            minimal[w] = [x for x in minimal[w] if x & nm != nm]
            minimal[w].append(nm)
            parent[(w, nm)] = (v, mask)
            q.append((w, nm))
            if w not in hit:
                hit[w] = (w, nm)
                if w == target:
                    q.clear()
                    break
    paths = {}
    for t, state in hit.items():
        walk = []
        while state is not None:
            walk.append(state[0])
            state = parent[state]
        paths[t] = _loop_erase(walk[::-1])
    return paths


def _check_vertex(g: Graph, v: int, name: str):
    if not 0 <= v < g.n:
        raise GraphError(f"{name}={v} out of range for n={g.n}")


def exists_rainbow_path(g: Graph, col: EdgeColoring, s: int, t: int) -> tuple[int, ...] | None:
    """A shortest rainbow s-t path as a vertex tuple, or ``None`` if there is none."""
    _check_vertex(g, s, "s")
    _check_vertex(g, t, "t")
    nbrs = _bit_neighbors(g, col)
    return _rainbow_search(nbrs, g.n, s, target=t).get(t)


def is_rainbow_connected(g: Graph, col: EdgeColoring) -> RainbowCheck:
    """Certificate for every pair, or the lexicographically first pair lacking a rainbow path."""
    if not g.is_connected():
        raise DisconnectedGraphError("rainbow connectivity requires a connected graph")
    nbrs = _bit_neighbors(g, col)
    cert = {}
    for s in range(g.n - 1):
        found = _rainbow_search(nbrs, g.n, s)
        for t in range(s + 1, g.n):
            if t not in found:
                return RainbowCheck(failing_pair=(s, t))
            cert[(s, t)] = found[t]
    return RainbowCheck(certificate=RainbowCertificate(cert))


def is_rainbow_coloring(g: Graph, col: EdgeColoring, backend: str | None = None) -> bool:
    """Decision-only variant backed by the compiled reachability kernel."""
    if col.k > MAX_COLORS:
        raise ColoringError(f"k={col.k} exceeds the state-space guard of {MAX_COLORS} colours")
    if g.n <= 1:
        return True
    colors = np.asarray(col.aligned(g), dtype=np.int64)
    # compact colour ids so the kernel mask width is the number of colours in use
    _, colors = np.unique(colors, return_inverse=True)
    colors = colors.astype(np.int64) + 1
    eu = np.array([e[0] for e in g.edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.edges], dtype=np.int64)
    ptr, nbr, eid = _kernels.csr(g.n, eu, ev)
    k = int(colors.max(initial=0))
    for s in range(g.n):
        if not _kernels.reach(s, g.n, eu, ev, ptr, nbr, eid, colors, k, backend=backend).all():
            return False
    return True


def check_certificate(g: Graph, col: EdgeColoring, cert: RainbowCertificate) -> Verdict:
    """Re-validate a certificate from scratch, independent of how it was built."""
    for s in range(g.n):
        for t in range(s + 1, g.n):
            path = cert.paths.get((s, t))
            if path is None:
                return Verdict(False, f"pair ({s}, {t}) missing")
            if len(path) < 2 or path[0] != s or path[-1] != t:
                return Verdict(False, f"path for ({s}, {t}) has wrong endpoints")
            seen = set()
            for a, b in zip(path, path[1:]):
                if not (0 <= a < g.n and 0 <= b < g.n) or a == b or not g.has_edge(a, b):
                    return Verdict(False, f"({a}, {b}) on path for ({s}, {t}) is not an edge")
                c = col.assignment.get(_norm(a, b))
                if c is None:
                    return Verdict(False, f"edge ({a}, {b}) is uncoloured")
                if c in seen:
                    return Verdict(False, f"colour {c} repeats on path for ({s}, {t})")
                seen.add(c)
    return Verdict(True)


# --- coloring file format -----------------------------------------------------

def format_coloring(g: Graph, col: EdgeColoring) -> str:
    lines = [f"k={col.k}"] + [f"{u} {v} {c}" for (u, v), c in zip(g.edges, col.aligned(g))]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Parse ``k=<int>`` followed by ``u v c`` lines; every edge exactly once."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or not rows[0].startswith("k="):
        raise ColoringError("colouring file must start with 'k=<int>'")
    try:
        k = int(rows[0][2:])
    except ValueError:
        raise ColoringError(f"bad colour count line {rows[0]!r}") from None
    assignment: dict[Edge, int] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        parts = row.split()
        if len(parts) != 3:
            raise ColoringError(f"line {lineno}: expected 'u v c'")
        try:
            u, v, c = (int(x) for x in parts)
        except ValueError:
            raise ColoringError(f"line {lineno}: non-integer field") from None
        e = _norm(u, v)
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
            raise ColoringError(f"line {lineno}: ({u}, {v}) is not an edge of the graph")
        if e in assignment:
            raise ColoringError(f"line {lineno}: edge {e} coloured twice")
        assignment[e] = c
    missing = [e for e in g.edges if e not in assignment]
    if missing:
        raise ColoringError(f"edge {missing[0]} has no colour")
    return EdgeColoring(k, assignment)
