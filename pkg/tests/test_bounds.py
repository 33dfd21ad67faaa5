import math

import pytest

from oracles import to_nx
from rainbowconn.bounds import (BoundRangeError, PreconditionError, bound_report, eq1_min_max_degree,
                                eval_jarry_laugier, eval_jl_simplified, eval_prop1_lower, eval_prop2_lower,
                                eval_prop3_upper, eval_theorem1, prop2_decomposition_check, sandwich_check)
from rainbowconn.graph_core import bridges, cycle_graph, diameter, path_graph, star_graph
from rainbowconn.rc_solver import is_k_rainbow_connectable


def entry(report, name):
    (e,) = [e for e in report.entries if e.name == name]
    return e


class TestKnownValues:
    def test_d1(self):
        e = entry(eval_theorem1(4, 1), "thm1(i)")
        assert (e.value, e.direction) == (6, "exact")

    def test_clause_v(self):
        e = entry(eval_theorem1(6, 3), "thm1(v)")
        assert (e.value, e.direction) == (6, "exact")

    def test_clause_iv(self):
        e = entry(eval_theorem1(20, 4), "thm1(iv)")
        assert (e.value, e.direction) == (28, "upper")

    def test_clause_iv_strict_range(self):
        # 2d < n - 1 is strict: n = 9, d = 4 is excluded
        assert not [e for e in eval_theorem1(9, 4).entries if e.name == "thm1(iv)"]

    def test_clause_vi(self):
        assert entry(eval_theorem1(10, 9), "thm1(vi)").value == 9

    def test_range(self):
        with pytest.raises(BoundRangeError):
            eval_theorem1(5, 5)
        with pytest.raises(BoundRangeError):
            eval_theorem1(5, 0)

    @pytest.mark.parametrize("n", range(2, 30))
    def test_applicability_rederivable(self, n):
        for d in range(1, n):
            names = {e.name for e in eval_theorem1(n, d).entries}
            assert ("thm1(i)" in names) == (d == 1)
            assert ("thm1(ii)" in names) == (d == 2)
            assert ("thm1(iii)" in names) == (d == 3)
            assert ("thm1(iv)" in names) == (4 <= d and 2 * d < n - 1)
            assert ("thm1(v)" in names) == (n <= 2 * d <= 2 * n - 4)
            assert ("thm1(vi)" in names) == (d == n - 1)


class TestProp1:
    def test_n16(self):
        # 16*4 - 4*16*log2(4) - 32 = 64 - 128 - 32
        p = eval_prop1_lower(16)
        assert p.value == -96 and p.vacuous

    def test_n1024(self):
        n = 1024
        ref = n * 10 - 4 * n * math.log2(10) - 2 * n
        p = eval_prop1_lower(n)
        assert p.value == pytest.approx(ref, abs=1e-3) and p.vacuous

    def test_n2_20(self):
        n = 2 ** 20
        ref = n * 20 - 4 * n * math.log2(20) - 2 * n
        p = eval_prop1_lower(n)
        assert p.value == pytest.approx(ref, abs=1e-3)
        assert p.value > 0
        assert p.vacuous == (ref < n - 1)

    def test_domain(self):
        with pytest.raises(BoundRangeError):
            eval_prop1_lower(3)

    def test_report_flags(self):
        assert entry(bound_report(16, 2), "prop1").status == "vacuous"


@pytest.mark.parametrize("n,d,expected", [(20, 4, 18), (8, 3, 5), (100, 5, 112)])
def test_prop2(n, d, expected):
    assert eval_prop2_lower(n, d) == expected


def test_prop2_vacuous_entry():
    assert entry(bound_report(8, 3), "prop2").status == "vacuous"


@pytest.mark.parametrize("n,d,expected", [(8, 3, 10), (13, 4, 16), (20, 4, 25)])
def test_prop3(n, d, expected):
    assert eval_prop3_upper(n, d) == expected


@pytest.mark.parametrize("n,d", [(8, 4), (8, 2), (10, 5)])
def test_prop_range(n, d):
    with pytest.raises(BoundRangeError):
        eval_prop2_lower(n, d)
    with pytest.raises(BoundRangeError):
        eval_prop3_upper(n, d)


@pytest.mark.parametrize("n,p,expected", [(10, 3, 12), (10, 2, 14), (6, 2, 7)])
def test_jarry_laugier(n, p, expected):
    assert eval_jarry_laugier(n, p) == expected


@pytest.mark.parametrize("n,p,expected", [(10, 2, 12), (10, 3, 11), (5, 2, 5)])
def test_jl_simplified(n, p, expected):
    assert eval_jl_simplified(n, p) == expected


def test_jl_simplified_never_exceeds_full_formula():
    # the full formula is n - 2 + ceil((n - 3) / (p - 1)), which dominates iff n >= p + 2
    for n in range(4, 201):
        for p in range(2, 21):
            assert eval_jl_simplified(n, p) <= eval_jarry_laugier(n, p), (n, p)


def test_jl_order_three_exception():
    # no 2-edge-connected graph on 3 vertices has diameter >= 2, so nothing is lost here
    for p in range(2, 21):
        assert (eval_jl_simplified(3, p), eval_jarry_laugier(3, p)) == (2, 1)


def test_jl_domain():
    with pytest.raises(BoundRangeError):
        eval_jarry_laugier(10, 1)
    with pytest.raises(BoundRangeError):
        eval_jl_simplified(10, 1)


@pytest.mark.parametrize("n,expected", [(2, 1), (10, 3), (17, 4), (5, 2), (26, 5)])
def test_eq1(n, expected):
    assert eq1_min_max_degree(n) == expected
    assert eq1_min_max_degree(n) == math.ceil(math.sqrt(n - 1))


def test_two_edge_connected_graphs_meet_jarry_laugier(graphs_by_order):
    for n in range(3, 8):
        for g in graphs_by_order[n]:
            if bridges(g):
                continue
            p = diameter(g)
            if p >= 2:
                assert g.m >= eval_jarry_laugier(n, p), g.edges


class TestDecomposition:
    def test_two_triangles(self, two_triangles):
        r = prop2_decomposition_check(two_triangles, 3)
        assert r.ok and r.k == 1
        assert sorted(c[:2] for c in r.components) == [(3, 1), (3, 1)]
        assert r.chain_rhs_own_diam == 5 and r.edges == 7

    def test_c8(self):
        r = prop2_decomposition_check(cycle_graph(8), 4)
        assert r.ok and r.k == 0
        assert r.chain_rhs_own_diam == 8 == r.chain_rhs_d

    def test_star(self):
        r = prop2_decomposition_check(star_graph(3), 3)
        assert r.ok and r.k == 3 and r.chain_rhs_own_diam == 3

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            prop2_decomposition_check(path_graph(5), 3)

    def test_supplied_colouring_checked(self):
        g = cycle_graph(8)
        col = is_k_rainbow_connectable(g, 4)
        assert prop2_decomposition_check(g, 4, coloring=col).ok
        with pytest.raises(PreconditionError):
            prop2_decomposition_check(g, 3, coloring=col)


class TestSandwich:
    def test_8_3(self):
        for t in range(7, 11):
            r = sandwich_check(8, 3, t)
            assert r.passed and r.lower == 7 and r.upper == 10
        assert not sandwich_check(8, 3, 11)
        assert not sandwich_check(8, 3, 6)

    def test_exact_clause(self):
        assert sandwich_check(6, 3, 6)
        assert not sandwich_check(6, 3, 7)

    def test_9_4_uses_prop_range(self):
        # 2d < n here, so clause (v) is out and the propositions apply
        r = sandwich_check(9, 4, 9)
        assert r.passed and r.exact is None
        assert r.upper == eval_prop3_upper(9, 4)


def test_report_lower_upper():
    rep = bound_report(20, 4)
    assert rep.lower() == 19  # prop2 gives 18, below the tree floor
    assert rep.upper() == 25
