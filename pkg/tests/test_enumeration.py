import random

import networkx as nx
import pytest

from oracles import atlas_connected, labeled_connected_classes
from rainbowconn.enumeration import (EnumerationError, EnumerationQuery, canonical_form, enumerate_connected,
                                     read_graph6_stream, write_graph6_stream)
from rainbowconn.graph_core import from_edge_list, graph6_encode, path_graph, star_graph


def shuffled(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


class TestCanonicalForm:
    def test_relabelled_path(self):
        p = path_graph(4)
        assert canonical_form(p) == canonical_form(from_edge_list(4, [(2, 0), (0, 3), (3, 1)]))

    def test_path_vs_star(self):
        assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))

    def test_all_graphs_on_four_vertices(self):
        graphs = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 4]
        assert len(graphs) == 11
        labels = {canonical_form(from_edge_list(4, h.edges())) for h in graphs}
        assert len(labels) == 11

    def test_invariant_under_relabelling(self, graphs_by_order):
        for g in graphs_by_order[6] + graphs_by_order[7][::7]:
            base = canonical_form(g)
            for seed in range(3):
                assert canonical_form(shuffled(g, seed)) == base

    def test_agrees_with_isomorphism_on_atlas(self):
        # every pair of distinct atlas graphs of order 6 must get different labels
        graphs = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 6]
        labels = [canonical_form(from_edge_list(6, h.edges())) for h in graphs]
        assert len(set(labels)) == len(graphs)

    def test_symmetric_graphs(self):
        # highly symmetric inputs exercise automorphism pruning
        cube = nx.hypercube_graph(3)
        g = from_edge_list(8, [(int("".join(map(str, u)), 2), int("".join(map(str, v)), 2)) for u, v in cube.edges()])
        assert canonical_form(g) == canonical_form(shuffled(g, 1))
        pet = nx.petersen_graph()
        p = from_edge_list(10, pet.edges())
        assert canonical_form(p) == canonical_form(shuffled(p, 5))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_counts_against_labelled_brute_force(n, expected):
    assert labeled_connected_classes(n) == expected
    assert len(list(enumerate_connected(n))) == expected


def test_counts_n6_n7(graphs_by_order):
    assert len(graphs_by_order[6]) == labeled_connected_classes(6) == 112
    assert len(graphs_by_order[7]) == len(atlas_connected(7)) == 853


def test_enumeration_matches_atlas_classes(graphs_by_order):
    for n in range(1, 8):
        ours = {canonical_form(g) for g in graphs_by_order[n]}
        theirs = {canonical_form(from_edge_list(n, h.edges())) for h in atlas_connected(n)}
        assert ours == theirs


def test_stream_properties(graphs_by_order):
    for n in range(1, 8):
        labels = [canonical_form(g) for g in graphs_by_order[n]]
        assert len(labels) == len(set(labels))
        assert all(g.is_connected() for g in graphs_by_order[n])
        ms = [g.m for g in graphs_by_order[n]]
        assert ms == sorted(ms)


def test_edge_window():
    only = list(enumerate_connected(EnumerationQuery(3, 3, 3)))
    assert len(only) == 1 and only[0].m == 3
    window = list(enumerate_connected(EnumerationQuery(6, 6, 8)))
    full = [g for g in enumerate_connected(6) if 6 <= g.m <= 8]
    assert [graph6_encode(g) for g in window] == [graph6_encode(g) for g in full]


def test_deterministic():
    a = [graph6_encode(g) for g in enumerate_connected(EnumerationQuery(6))]
    from rainbowconn import enumeration
    enumeration._cache.clear()
    b = [graph6_encode(g) for g in enumerate_connected(EnumerationQuery(6))]
    assert a == b


def test_generator_cap():
    with pytest.raises(EnumerationError):
        list(enumerate_connected(10))


def test_bad_query():
    with pytest.raises(EnumerationError):
        list(enumerate_connected(EnumerationQuery(4, 5, 4)))


class TestGraph6Stream:
    def test_three_lines(self, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text("D?{\n@\nBw\n")
        assert [g.n for g in read_graph6_stream(f)] == [5, 1, 3]

    def test_bad_line_reports_number(self, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text("D?{\nD?\n@\n")
        with pytest.raises(EnumerationError, match=":2:"):
            list(read_graph6_stream(f))

    def test_roundtrip_n5(self, tmp_path, graphs_by_order):
        f = tmp_path / "n5.g6"
        write_graph6_stream(f, graphs_by_order[5])
        back = [canonical_form(g) for g in read_graph6_stream(f)]
        assert back == [canonical_form(g) for g in graphs_by_order[5]]

    def test_file_source_dedups(self, tmp_path, graphs_by_order):
        f = tmp_path / "dup.g6"
        gs = graphs_by_order[5]
        write_graph6_stream(f, gs + [shuffled(g, 2) for g in gs])
        got = list(enumerate_connected(EnumerationQuery(5, source=f)))
        assert len(got) == 21
        assert {canonical_form(g) for g in got} == {canonical_form(g) for g in gs}
