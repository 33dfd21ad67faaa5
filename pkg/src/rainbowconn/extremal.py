"""t(n, d): the fewest edges an order-n graph with rc <= d can have.

Graphs are scanned tier by tier in ascending edge count. Inside a tier they
are cut into fixed-size batches in canonical order; batches may run on a
process pool, but results are consumed in order and the scan stops after
the first batch holding a feasible graph, so the witness and the tallies do
not depend on the worker count.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .bounds import bound_report, eq1_min_max_degree, sandwich_check
from .enumeration import EnumerationQuery, enumerate_connected
from .graph_core import Graph, bridges, diameter, graph6_decode, graph6_encode, max_degree
from .rainbow_verify import EdgeColoring
from .rc_solver import SearchBudgetExceeded, is_k_rainbow_connectable

BATCH_SIZE = 64
OUTCOMES = ("feasible", "infeasible", "skip_diameter", "skip_bridges", "skip_degree")


class ExtremalSearchError(RuntimeError):
    def __init__(self, msg: str, tallies=None):
        super().__init__(msg)
        self.tallies = tallies or {}


def default_workers() -> int:
    raw = os.environ.get("RAINBOW_WORKERS")
    return max(1, int(raw)) if raw else 1


@dataclass
class ExtremalResult:
    n: int
    d: int
    t_value: int
    witness: Graph
    witness_coloring: EdgeColoring
    graphs_tested: int
    tallies: dict[int, dict[str, int]] = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "d": self.d,
            "t": self.t_value,
            "witness_graph6": graph6_encode(self.witness),
            "witness_coloring": [[u, v, self.witness_coloring.assignment[(u, v)]]
                                 for u, v in self.witness.edges],
            "graphs_tested": self.graphs_tested,
            "tallies": {str(m): dict(t) for m, t in sorted(self.tallies.items())},
        }


def classify(g: Graph, d: int, budget: int | None = None) -> tuple[str, dict | None]:
    """Outcome for one graph: a pre-filter skip, infeasible, or feasible with colours."""
    if g.n > 1 and diameter(g) > d:
        return "skip_diameter", None
    if len(bridges(g)) > d:
        return "skip_bridges", None
    if d == 2 and g.n >= 2 and max_degree(g) < eq1_min_max_degree(g.n):
        return "skip_degree", None
    if g.n == 1:
        return "feasible", {}
    col = is_k_rainbow_connectable(g, d, budget=budget)
    if col is None:
        return "infeasible", None
    return "feasible", dict(col.assignment)


def _run_batch(args):
    g6s, d, budget = args
    out = []
    for s in g6s:
        try:
            out.append(classify(graph6_decode(s), d, budget))
        except SearchBudgetExceeded:
            out.append(("budget", None))
    return out


class _Checkpoint:
    """Line log: ``n d m batch outcome=count ... [witness=<index>]`` per finished batch."""

    def __init__(self, path, n: int, d: int):
        self.path = Path(path) if path else None
        self.done: dict[tuple[int, int], dict[str, int]] = {}
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                parts = line.split()
                if len(parts) < 4 or int(parts[0]) != n or int(parts[1]) != d:
                    continue
                counts = {}
                for kv in parts[4:]:
                    key, val = kv.split("=")
                    counts[key] = int(val)
                if "witness" not in counts:
                    self.done[(int(parts[2]), int(parts[3]))] = counts
        self.n, self.d = n, d

    def record(self, m: int, batch: int, counts: dict[str, int], witness: int | None = None):
        if not self.path:
            return
        fields = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        extra = f" witness={witness}" if witness is not None else ""
        with open(self.path, "a") as fh:
            fh.write(f"{self.n} {self.d} {m} {batch} {fields}{extra}\n")


def compute_tnd(n: int, d: int, source: str | Path | None = None, workers: int | None = None,
                budget: int | None = None, checkpoint: str | Path | None = None) -> ExtremalResult:
    """Exact t(n, d) with a witness graph and colouring."""
    if n < 2 or not 1 <= d <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= d <= n-1; got n={n}, d={d}")
    workers = default_workers() if workers is None else workers
    ckpt = _Checkpoint(checkpoint, n, d)
    tallies: dict[int, dict[str, int]] = {}
    tested = 0
    seen_any = False
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(n - 1, comb(n, 2) + 1):
            tier = list(enumerate_connected(EnumerationQuery(n, m, m, source=source)))
            if not tier:
                continue
            seen_any = True
            counts = tallies.setdefault(m, {k: 0 for k in OUTCOMES})
            batches = [tier[i:i + BATCH_SIZE] for i in range(0, len(tier), BATCH_SIZE)]
            todo = [b for b in range(len(batches)) if (m, b) not in ckpt.done]
            for b in range(len(batches)):
                if (m, b) in ckpt.done:
                    for key, val in ckpt.done[(m, b)].items():
                        counts[key] = counts.get(key, 0) + val
                    tested += len(batches[b])
            jobs = [([graph6_encode(g) for g in batches[b]], d, budget) for b in todo]
            results = pool.map(_run_batch, jobs) if pool else map(_run_batch, jobs)
            for b, res in zip(todo, results):
                batch_counts = {k: 0 for k in OUTCOMES}
                for idx, (outcome, colors) in enumerate(res):
                    if outcome == "budget":
                        counts["budget"] = counts.get("budget", 0) + 1
                        raise ExtremalSearchError(
                            f"search budget exhausted at m={m}, batch {b}", tallies)
                    batch_counts[outcome] += 1
                    counts[outcome] += 1
                    tested += 1
                    if outcome == "feasible":
                        g = batches[b][idx]
                        ckpt.record(m, b, batch_counts, witness=idx)
                        return ExtremalResult(n, d, m, g, EdgeColoring(d, colors), tested, tallies)
                ckpt.record(m, b, batch_counts)
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    if not seen_any:
        raise ExtremalSearchError(f"source yielded no connected graphs of order {n}")
    raise ExtremalSearchError(f"no graph of order {n} has rc <= {d} in the source", tallies)


@dataclass
class TableCell:
    n: int
    d: int
    t: int | None
    lower: int | None = None
    upper: int | None = None
    exact: int | None = None
    sandwich: str = ""
    error: str | None = None
    record: dict | None = None

    def gaps(self) -> tuple[int | None, int | None]:
        if self.t is None:
            return None, None
        lo = None if self.lower is None else self.t - self.lower
        hi = None if self.upper is None else self.upper - self.t
        return lo, hi


def tnd_table(n_range, d_range=None, source=None, workers=None, budget=None) -> list[TableCell]:
    """t(n, d) for each cell with its bound sandwich; failures become error cells."""
    cells = []
    for n in n_range:
        ds = range(1, n) if d_range is None else [d for d in d_range if 1 <= d <= n - 1]
        for d in ds:
            rep = bound_report(n, d)
            try:
                res = compute_tnd(n, d, source=source, workers=workers, budget=budget)
            except (ExtremalSearchError, ValueError) as exc:
                cells.append(TableCell(n, d, None, rep.lower(), rep.upper(), error=str(exc)))
                continue
            sw = sandwich_check(n, d, res.t_value)
            if not sw.passed:
                status = "VIOLATED"
            elif sw.exact is not None:
                status = "exact"
            elif sw.t_value in (sw.lower, sw.upper):
                status = "tight"
            else:
                status = "between"
            cells.append(TableCell(n, d, res.t_value, sw.lower, sw.upper, sw.exact, status,
                                   record=res.to_record()))
    return cells
