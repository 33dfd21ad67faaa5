"""Closed-form bounds on t(n, d) and per-graph checks of the bridge-decomposition argument.

t(n, d) is the least edge count of an order-n graph with rainbow connection
number at most d. Every evaluator here is plain arithmetic; the floor n - 1
(a connected graph needs a spanning tree) marks lower bounds as vacuous.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import ceil, comb, floor, log2

from .graph_core import DisconnectedGraphError, Graph, GraphError, bridge_decomposition


class BoundRangeError(ValueError):
    pass


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    direction: str  # "lower" | "upper" | "exact"
    status: str = "valid"  # "valid" | "out-of-range" | "vacuous"


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    entries: tuple[BoundEntry, ...]

    def applicable(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.status == "valid"]

    def lower(self) -> int:
        """Best valid lower bound, never below n - 1."""
        vals = [self.n - 1] + [math.ceil(e.value - 1e-9) for e in self.applicable()
                               if e.direction in ("lower", "exact")]
        return max(vals)

    def upper(self) -> int | None:
        vals = [math.floor(e.value + 1e-9) for e in self.applicable() if e.direction in ("upper", "exact")]
        return min(vals) if vals else None


def theorem1_entries(n: int, d: int) -> list[BoundEntry]:
    """The known exact values and upper bounds whose range contains (n, d)."""
    if n < 2 or not 1 <= d <= n - 1:
        raise BoundRangeError(f"need n >= 2 and 1 <= d <= n-1; got n={n}, d={d}")
    out = []
    if d == 1:
        out.append(BoundEntry("thm1(i)", comb(n, 2), "exact"))
    if d == 2:
        fl = floor(log2(n))
        out.append(BoundEntry("thm1(ii)", (n + 1) * fl - 2 ** fl - 2, "upper"))
    if d == 3:
        out.append(BoundEntry("thm1(iii)", 2 * n - 5, "upper"))
    if 4 <= d and 2 * d < n - 1:
        out.append(BoundEntry("thm1(iv)", n - 1 + _cdiv(n - 2, d - 2), "upper"))
    if n <= 2 * d and d <= n - 2:
        out.append(BoundEntry("thm1(v)", n, "exact"))
    if d == n - 1:
        out.append(BoundEntry("thm1(vi)", n - 1, "exact"))
    return out


def eval_theorem1(n: int, d: int) -> BoundReport:
    return BoundReport(n, d, tuple(theorem1_entries(n, d)))


@dataclass(frozen=True)
class Prop1Value:
    value: float
    vacuous: bool


def eval_prop1_lower(n: int) -> Prop1Value:
    """n log2 n - 4 n log2 log2 n - 2 n, flagged vacuous below n - 1."""
    if n < 4:
        raise BoundRangeError("the t(n,2) lower bound needs n >= 4")
    lg = log2(n)
    val = n * lg - 4 * n * log2(lg) - 2 * n
    return Prop1Value(round(val, 3), val < n - 1)


def _prop_range(n: int, d: int):
    if not 3 <= d < _cdiv(n, 2):
        raise BoundRangeError(f"need 3 <= d < ceil(n/2); got n={n}, d={d}")


def eval_prop2_lower(n: int, d: int) -> int:
    _prop_range(n, d)
    return n - d - 3 + _cdiv(n - 1, d)


def eval_prop3_upper(n: int, d: int) -> int:
    _prop_range(n, d)
    return n - 2 + _cdiv(n, d - 1)


def eval_jarry_laugier(n: int, p: int) -> int:
    """Minimum size of a 2-edge-connected order-n graph with diameter p."""
    if p < 2:
        raise BoundRangeError("diameter p must be >= 2")
    if n < 3:
        raise BoundRangeError("n must be >= 3")
    a = _cdiv(n * p - (2 * p + 1), p - 1)
    if p % 2:
        return a
    return min(a, _cdiv((n - 1) * (p + 1), p))


def eval_jl_simplified(n: int, p: int) -> int:
    if p < 2:
        raise BoundRangeError("diameter p must be >= 2")
    if n < 3:
        raise BoundRangeError("n must be >= 3")
    return n - 2 + _cdiv(n - 2, p)


def eq1_min_max_degree(n: int) -> int:
    """Smallest max degree compatible with diameter <= 2: ceil(sqrt(n - 1))."""
    if n < 2:
        raise BoundRangeError("n must be >= 2")
    r = math.isqrt(n - 1)
    return r if r * r == n - 1 else r + 1


def bound_report(n: int, d: int) -> BoundReport:
    """Every bound that speaks about t(n, d), with applicability flags."""
    entries = theorem1_entries(n, d)
    if d == 2:
        if n >= 4:
            p1 = eval_prop1_lower(n)
            entries.append(BoundEntry("prop1", p1.value, "lower", "vacuous" if p1.vacuous else "valid"))
        else:
            entries.append(BoundEntry("prop1", float("nan"), "lower", "out-of-range"))
    if 3 <= d < _cdiv(n, 2):
        lo = eval_prop2_lower(n, d)
        entries.append(BoundEntry("prop2", lo, "lower", "vacuous" if lo < n - 1 else "valid"))
        entries.append(BoundEntry("prop3", eval_prop3_upper(n, d), "upper"))
    else:
        entries.append(BoundEntry("prop2", float("nan"), "lower", "out-of-range"))
        entries.append(BoundEntry("prop3", float("nan"), "upper", "out-of-range"))
    return BoundReport(n, d, tuple(entries))


@dataclass(frozen=True)
class SandwichResult:
    passed: bool
    lower: int
    upper: int | None
    exact: int | None
    t_value: int

    def __bool__(self):
        return self.passed


def sandwich_check(n: int, d: int, t_value: int) -> SandwichResult:
    """Is ``t_value`` consistent with every applicable bound (exact clauses included)?"""
    rep = bound_report(n, d)
    exact = [int(e.value) for e in rep.applicable() if e.direction == "exact"]
    lo = rep.lower()
    hi = rep.upper()
    ok = lo <= t_value and (hi is None or t_value <= hi)
    if exact:
        ok = ok and all(t_value == x for x in exact)
    return SandwichResult(ok, lo, hi, exact[0] if exact else None, t_value)


# --- decomposition chain -------------------------------------------------------

@dataclass
class Prop2Report:
    d: int
    k: int
    k1: int
    k2: int
    bridges_ok: bool
    trichotomy_ok: bool
    diameters_ok: bool
    chain_ok: bool
    chain_rhs_own_diam: int
    chain_rhs_d: int
    edges: int
    components: list[tuple[int, int, str]] = field(default_factory=list)  # (order, diameter, kind)

    @property
    def ok(self) -> bool:
        return self.bridges_ok and self.trichotomy_ok and self.diameters_ok and self.chain_ok

    def __bool__(self):
        return self.ok


class PreconditionError(ValueError):
    pass


def prop2_decomposition_check(g: Graph, d: int, coloring=None, budget: int | None = None) -> Prop2Report:
    """Check the bridge-deletion argument on one graph with rc(g) <= d.

    The precondition is certified either by ``coloring`` (verified here) or
    by running the solver. Sub-checks: bridge count <= d; each nontrivial
    component is bridgeless and complete of order >= 3 or of diameter >= 2;
    component diameters <= d; and
    e(g) >= k + sum(n_i - 2 + ceil((n_i - 2) / d_i)).
    """
    from .rainbow_verify import is_rainbow_connected
    from .rc_solver import is_k_rainbow_connectable

    if not g.is_connected():
        raise DisconnectedGraphError("decomposition check needs a connected graph")
    if coloring is not None:
        if coloring.colors_used() > d or not is_rainbow_connected(g, coloring):
            raise PreconditionError("supplied colouring does not certify rc <= d")
    elif g.n > 1 and is_k_rainbow_connectable(g, d, budget=budget) is None:
        raise PreconditionError(f"rc(g) > {d}")

    dec = bridge_decomposition(g)
    comps = dec.nontrivial
    trich = all(c.own_bridges == 0 and
                ((c.kind == "complete" and c.order >= 3) or (c.kind == "2-edge-connected" and c.diameter >= 2))
                for c in comps)
    diam_ok = all(c.diameter <= d for c in comps)
    rhs_own = dec.k + sum(c.order - 2 + _cdiv(c.order - 2, c.diameter) for c in comps)
    rhs_d = dec.k + sum(c.order - 2 + _cdiv(c.order - 2, d) for c in comps)
    return Prop2Report(
        d=d, k=dec.k, k1=dec.k1, k2=dec.k2,
        bridges_ok=dec.k <= d,
        trichotomy_ok=trich,
        diameters_ok=diam_ok,
        chain_ok=g.m >= rhs_own and rhs_own >= rhs_d,
        chain_rhs_own_diam=rhs_own,
        chain_rhs_d=rhs_d,
        edges=g.m,
        components=[(c.order, c.diameter, c.kind) for c in dec.components],
    )
