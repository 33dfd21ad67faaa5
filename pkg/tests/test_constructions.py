from math import ceil

import pytest

from oracles import rainbow_connected_by_paths
from rainbowconn.constructions import build_gdn, build_named, color_gdn_cycle, gdn_plan
from rainbowconn.graph_core import GraphError, diameter
from rainbowconn.rainbow_verify import is_rainbow_connected
from rainbowconn.rc_solver import rc_exact


@pytest.mark.parametrize("n,d,q,pendants,m", [
    (7, 3, 3, 0, 9),
    (13, 4, 4, 0, 16),
    (8, 3, 3, 1, 10),
])
def test_examples(n, d, q, pendants, m):
    g, col, plan = build_gdn(n, d)
    assert (plan.q, plan.pendant_count) == (q, pendants)
    assert g.n == n and g.m == m
    assert is_rainbow_connected(g, col)
    assert rainbow_connected_by_paths(g, col.aligned(g))


def test_hub_degree_triangle_bouquet():
    g, _, plan = build_gdn(7, 3)
    assert g.degree(plan.hub) == 6


GRID = [(n, d) for d in range(3, 7) for n in range(3, 15) if d < ceil(n / 2)]


@pytest.mark.parametrize("n,d", GRID)
def test_plan_and_graph_invariants(n, d):
    g, col, plan = build_gdn(n, d)
    assert plan.q == ceil(n / (d - 1)) - 1
    assert 1 + plan.q * (d - 1) + plan.pendant_count == n
    assert 0 <= plan.pendant_count <= d - 2
    assert g.n == n and g.m == n - 2 + ceil(n / (d - 1))
    assert g.degree(plan.hub) == 2 * plan.q + plan.pendant_count
    assert diameter(g) <= d
    assert col.colors_used() <= d
    assert is_rainbow_connected(g, col)
    assert not plan.fallback_used


def test_rc_reported_not_asserted_equal():
    # only rc <= d is promised; the exact value is informational
    g, _, _ = build_gdn(8, 3)
    assert rc_exact(g, k_max=3).rc <= 3


@pytest.mark.parametrize("d,expected", [
    (3, [1, 2, 3]),
    (4, [1, 2, 3, 4]),
    (5, [1, 2, 3, 4, 5]),
])
def test_cycle_colours(d, expected):
    # listed in walk order; read backwards from the hub they run d, d-1, ...
    walk = [(i, (i + 1) % d) for i in range(d)]
    colors = color_gdn_cycle(walk, d)
    assert colors == expected
    assert sorted(colors) == list(range(1, d + 1))


@pytest.mark.parametrize("d", range(3, 12))
def test_cycle_colouring_is_bijection(d):
    walk = [(i, (i + 1) % d) for i in range(d)]
    assert sorted(color_gdn_cycle(walk, d)) == list(range(1, d + 1))


def test_cycle_wrong_length():
    with pytest.raises(GraphError):
        color_gdn_cycle([(0, 1), (1, 2), (2, 0)], 4)


@pytest.mark.parametrize("n,d", [(8, 5), (8, 4), (10, 2), (6, 3)])
def test_out_of_range(n, d):
    with pytest.raises(GraphError):
        gdn_plan(n, d)


class TestNamed:
    def test_path(self):
        g, col = build_named("path", 5)
        assert g.m == 4 and col.colors_used() == 4
        assert is_rainbow_connected(g, col)

    def test_complete(self):
        g, col = build_named("complete", 6)
        assert g.m == 15 and col.colors_used() == 1

    def test_cycle(self):
        g, col = build_named("cycle", 6)
        assert all(1 <= c <= 6 for c in col.assignment.values())
        assert is_rainbow_connected(g, col)

    def test_star(self):
        g, col = build_named("star", 5)
        assert g.m == 4 and is_rainbow_connected(g, col)

    @pytest.mark.parametrize("kind,n", [("cycle", 2), ("path", 0), ("wheel", 5)])
    def test_invalid(self, kind, n):
        with pytest.raises(GraphError):
            build_named(kind, n)
