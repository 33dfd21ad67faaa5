"""Isomorph-free generation of connected graphs and graph6 ingestion.

Canonical labels come from a small individualisation-refinement search
(equitable refinement seeded by the degree partition, automorphism pruning
from coinciding leaves). Generation is McKay-style canonical augmentation by
one vertex: a child is kept only when the new vertex is equivalent to the
child's canonical deletion vertex, so each class arrives from exactly one
parent class.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .graph_core import Graph, GraphError, graph6_decode, graph6_encode

CANON_MAX_ORDER = 16
GENERATOR_MAX_ORDER = 9


class EnumerationError(ValueError):
    pass


def _popcount(x: int) -> int:
    return x.bit_count()


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    cells = [c[:] for c in cells]
    queue = list(range(len(cells)))
    while queue:
        w = queue.pop(0)
        if w >= len(cells):
            continue
        wmask = 0
        for v in cells[w]:
            wmask |= 1 << v
        out: list[list[int]] = []
        split_any = False
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault(_popcount(adj[v] & wmask), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split_any = True
            for key in sorted(groups):
                out.append(groups[key])
        if split_any:
            cells = out
            queue = list(range(len(cells)))
    return cells


def _leaf_cert(adj: Sequence[int], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for v in lab:
        row = 0
        bits = adj[v]
        while bits:
            low = bits & -bits
            row |= 1 << pos[low.bit_length() - 1]
            bits ^= low
        rows.append(row)
    return tuple(rows)


class _Canon:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.best: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def run(self, cells: list[list[int]]):
        self._search(_refine(self.adj, cells), [])

    def _orbit_reps(self, cell: list[int], prefix: list[int]) -> list[int]:
        # union-find over automorphisms that fix the current prefix pointwise
        parent = {v: v for v in range(self.n)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in cell]

    def _search(self, cells: list[list[int]], prefix: list[int]):
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            lab = [c[0] for c in cells]
            cert = _leaf_cert(self.adj, lab)
            if self.best is None or cert > self.best:
                self.best, self.best_lab = cert, lab
            elif cert == self.best:
                # both labellings give the same graph: their quotient is an automorphism
                g = [0] * self.n
                for a, b in zip(lab, self.best_lab):
                    g[a] = b
                if any(g[v] != v for v in range(self.n)):
                    self.autos.append(g)
            return
        done_roots: set[int] = set()
        idx = cells.index(target)
        for v in sorted(target):
            roots = self._orbit_reps(target, prefix)
            root_of = dict(zip(target, roots))
            if root_of[v] in {root_of[u] for u in done_roots}:
                continue
            done_roots.add(v)
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            self._search(_refine(self.adj, child), prefix + [v])


def canonical_labeling(g: Graph, mark: int | None = None) -> list[int]:
    """Vertex order (position -> vertex) of the canonical form.

    ``mark`` individualises one vertex first, giving a canonical form of the
    rooted graph; two vertices are in the same automorphism orbit iff their
    rooted forms coincide.
    """
    if g.n > CANON_MAX_ORDER:
        raise EnumerationError(f"canonical form supports n <= {CANON_MAX_ORDER}")
    if g.n == 0:
        return []
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        if v != mark:
            by_deg.setdefault(g.degree(v), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    if mark is not None:
        cells = [[mark]] + cells
    c = _Canon(g.adj)
    c.run(cells)
    return c.best_lab


def canonical_graph(g: Graph, mark: int | None = None) -> Graph:
    lab = canonical_labeling(g, mark)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant label: graph6 bytes of the canonically relabelled graph."""
    return graph6_encode(canonical_graph(g)).encode("ascii")


def _rooted_form(g: Graph, v: int) -> bytes:
    return graph6_encode(canonical_graph(g, mark=v)).encode("ascii")


# --- generation -----------------------------------------------------------------

def _noncut_vertices(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    out = []
    for v in range(n):
        allowed = full & ~(1 << v)
        start = 0 if v else 1
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                nxt |= adj[low.bit_length() - 1]
                bits ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        if seen == allowed:
            out.append(v)
    return out


def _invariant(adj: Sequence[int], v: int) -> tuple:
    deg = [_popcount(a) for a in adj]
    nb = sorted(deg[u] for u in range(len(adj)) if adj[v] >> u & 1)
    return (deg[v], nb)


def _accept(child: Graph, new: int) -> bool:
    """Is ``new`` in the orbit of the canonical deletion vertex of ``child``?"""
    candidates = _noncut_vertices(child.adj)
    inv = {v: _invariant(child.adj, v) for v in candidates}
    best = min(inv.values())
    if inv[new] != best:
        return False
    tied = [v for v in candidates if inv[v] == best]
    if len(tied) == 1:
        return True
    lab = canonical_labeling(child)
    pos = {v: i for i, v in enumerate(lab)}
    chosen = max(tied, key=pos.__getitem__)
    if chosen == new:
        return True
    return _rooted_form(child, new) == _rooted_form(child, chosen)


def _children(parent: Graph, m_lo: int, m_hi: int) -> Iterator[Graph]:
    n = parent.n
    seen: set[bytes] = set()
    for size in range(1, n + 1):
        if not m_lo <= parent.m + size <= m_hi:
            continue
        for nbrs in combinations(range(n), size):
            child = Graph(n + 1, parent.edges + tuple((u, n) for u in nbrs))
            if not _accept(child, n):
                continue
            canon = canonical_graph(child)
            key = graph6_encode(canon)
            if key in seen:
                continue
            seen.add(key)
            yield canon


def _generate(n: int, m_min: int, m_max: int) -> Iterator[Graph]:
    level = [Graph(1, ())]
    for order in range(2, n + 1):
        remaining = n - order
        # every later vertex adds between 1 and (its order - 1) edges
        grow_min = remaining
        grow_max = sum(range(order, n))
        lo = m_min - grow_max
        hi = m_max - grow_min
        nxt = []
        for parent in level:
            nxt.extend(_children(parent, lo, hi))
        level = nxt
    yield from level


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    m_min: int | None = None
    m_max: int | None = None
    source: str | Path | None = None  # None = internal generator, else a graph6 file

    def bounds(self) -> tuple[int, int]:
        lo = self.n - 1 if self.m_min is None else self.m_min
        hi = comb(self.n, 2) if self.m_max is None else self.m_max
        return max(lo, self.n - 1, 0), min(hi, comb(self.n, 2))

    def validate(self):
        if self.n < 1:
            raise EnumerationError("n must be >= 1")
        lo, hi = self.bounds()
        if self.m_min is not None and self.m_min > comb(self.n, 2):
            raise EnumerationError("m_min exceeds C(n,2)")
        if self.m_max is not None and self.m_max < self.n - 1:
            raise EnumerationError("m_max below n-1: no connected graph fits")
        if self.m_min is not None and self.m_max is not None and self.m_min > self.m_max:
            raise EnumerationError("m_min > m_max")


_cache: dict[tuple[int, int, int], tuple[Graph, ...]] = {}


def enumerate_connected(q: EnumerationQuery | int, by_edges: bool = True) -> Iterator[Graph]:
    """Connected graphs of order ``q.n`` up to isomorphism, canonical representatives.

    With ``by_edges`` the stream is sorted by edge count (stable within a
    tier), which lets callers stop at the first tier that succeeds.
    """
    if isinstance(q, int):
        q = EnumerationQuery(q)
    q.validate()
    lo, hi = q.bounds()
    if q.source is not None:
        graphs = _from_file(q.source, q.n, lo, hi)
    else:
        if q.n > GENERATOR_MAX_ORDER:
            raise EnumerationError(
                f"internal generator is capped at n={GENERATOR_MAX_ORDER}; supply a graph6 file")
        key = (q.n, lo, hi)
        if key not in _cache:
            _cache[key] = tuple(_generate(q.n, lo, hi))
        graphs = _cache[key]
    if by_edges:
        graphs = sorted(graphs, key=lambda g: g.m)
    yield from graphs


_file_cache: dict[tuple[str, float, int], tuple[Graph, ...]] = {}


def _from_file(path, n: int, lo: int, hi: int) -> list[Graph]:
    # canonicalise and dedup once per (file, mtime, n); tiers then filter by m
    p = Path(path)
    key = (str(p.resolve()), p.stat().st_mtime, n)
    if key not in _file_cache:
        out = []
        seen = set()
        for g in read_graph6_stream(p):
            if g.n != n or not g.is_connected():
                continue
            canon = canonical_graph(g)
            label = graph6_encode(canon)
            if label not in seen:
                seen.add(label)
                out.append(canon)
        _file_cache[key] = tuple(out)
    return [g for g in _file_cache[key] if lo <= g.m <= hi]


def read_graph6_stream(path: str | Path) -> Iterator[Graph]:
    """Decode a graph6 file line by line; errors name the offending line."""
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield graph6_decode(line)
            except GraphError as exc:
                raise EnumerationError(f"{path}:{lineno}: {exc}") from None


def write_graph6_stream(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
            count += 1
    return count
