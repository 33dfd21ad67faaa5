"""Simple undirected graphs, structural queries and graph6 / edge-list I/O.

Vertices are ``0..n-1``. Adjacency is kept as one int bitmask per vertex so
adjacency tests and neighbourhood intersections are constant time for the
desk-scale orders this package targets.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_ORDER = 32
GRAPH6_MAX_ORDER = 62

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph data or a query whose precondition fails."""


class DisconnectedGraphError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``. Build
    instances with :func:`from_edge_list` unless the input is already
    normalised.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        bits = self.adj[v]
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return _reach_mask(self.adj, 0, (1 << self.n) - 1) == (1 << self.n) - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple(sorted(_norm(perm[u], perm[v]) for u, v in self.edges)))

    def without_edge(self, e: Edge) -> "Graph":
        e = _norm(*e)
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled to ``0..len-1``; also returns the old ids."""
        old = sorted(vertices)
        new = {v: i for i, v in enumerate(old)}
        es = tuple(sorted((new[u], new[v]) for u, v in self.edges if u in new and v in new))
        return Graph(len(old), es), old

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs, dropping duplicates and rejecting loops."""
    if n < 0:
        raise GraphError(f"negative order {n}")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds supported maximum {MAX_ORDER}")
    es = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex index out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        es.add(_norm(u, v))
    return Graph(n, tuple(sorted(es)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _reach_mask(adj: Sequence[int], src: int, allowed: int) -> int:
    seen = 1 << src
    frontier = seen
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
    return seen


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach_mask(g.adj, v, left)
        left &= ~comp
        out.append([u for u in range(g.n) if comp >> u & 1])
    return out


def eccentricity(g: Graph, v: int) -> int:
    full = (1 << g.n) - 1
    seen = frontier = 1 << v
    dist = 0
    while seen != full:
        nxt = 0
        bits = frontier
        while bits:
            low = bits & -bits
            nxt |= g.adj[low.bit_length() - 1]
            bits ^= low
        nxt &= ~seen
        if not nxt:
            raise DisconnectedGraphError("graph is disconnected (infinite diameter)")
        seen |= nxt
        frontier = nxt
        dist += 1
    return dist


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; 0 for a single vertex."""
    if g.n == 0:
        raise GraphError("empty graph has no diameter")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected (infinite diameter)")
    return max(eccentricity(g, v) for v in range(g.n))


def distances_from(g: Graph, src: int) -> list[int]:
    """BFS hop distances, -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def _lowlink(g: Graph) -> tuple[list[Edge], list[int]]:
    # iterative DFS; returns (bridges, articulation points)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    cut = set()
    timer = 0
    nbrs = [g.neighbors(v) for v in range(n)]
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.append(_norm(parent, v))
                    if parent != root and low[v] >= disc[parent]:
                        cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return sorted(bridges), sorted(cut)


def bridges(g: Graph) -> list[Edge]:
    """Cut edges of ``g`` in sorted order (single DFS low-link pass)."""
    return _lowlink(g)[0]


def articulation_points(g: Graph) -> list[int]:
    return _lowlink(g)[1]


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    order: int
    diameter: int
    kind: str  # "trivial" | "complete" | "2-edge-connected"
    own_bridges: int

    @property
    def trivial(self) -> bool:
        return self.kind == "trivial"


@dataclass(frozen=True)
class BridgeDecomposition:
    bridges: tuple[Edge, ...]
    components: tuple[Component, ...]

    @property
    def k(self) -> int:
        return len(self.bridges)

    @property
    def nontrivial(self) -> list[Component]:
        return [c for c in self.components if not c.trivial]

    @property
    def k1(self) -> int:
        return len(self.nontrivial)

    @property
    def k2(self) -> int:
        return len(self.components) - self.k1


def bridge_decomposition(g: Graph) -> BridgeDecomposition:
    """Delete all bridges and classify the remaining components.

    A nontrivial component is labelled ``complete`` when it is a clique of
    order >= 3, else ``2-edge-connected``. ``own_bridges`` is recomputed on
    the component itself so callers can confirm it is bridgeless.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("bridge decomposition requires a connected graph")
    br = bridges(g)
    br_set = set(br)
    rest = Graph(g.n, tuple(e for e in g.edges if e not in br_set))
    comps = []
    for vs in components(rest):
        sub, _ = g.induced(vs)
        if len(vs) == 1:
            kind = "trivial"
        elif is_complete(sub) and len(vs) >= 3:
            kind = "complete"
        else:
            kind = "2-edge-connected"
        comps.append(Component(tuple(vs), len(vs), diameter(sub), kind, len(bridges(sub))))
    return BridgeDecomposition(tuple(br), tuple(comps))


# --- graph6 -------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Standard graph6 short form (n <= 62), without trailing newline."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"graph6 long form (n={n} > 62) is not supported")
    bits = []
    for j in range(1, n):
        a = g.adj[j]
        for i in range(j):
            bits.append(a >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} out of graph6 range 63..126")
    if s[0] == "~":
        raise Graph6Error("graph6 long form (n > 62) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    pos = 0
    vals = [ord(c) - 63 for c in body]
    for j in range(1, n):
        for i in range(j):
            if vals[pos // 6] >> (5 - pos % 6) & 1:
                edges.append((i, j))
            pos += 1
    if nbits % 6 and vals and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(sorted(edges)))


# --- edge-list text -----------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise GraphError(f"bad integer in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("each edge line must hold exactly two vertices")
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def read_graph(text: str) -> Graph:
    """Parse either a graph6 line or an edge-list document."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2:
        return parse_edge_list(text)
    return graph6_decode(first)
