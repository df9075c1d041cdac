from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from foldedodd.graphs import (
    UNREACHABLE, AntipodeError, DoubleOddLabel, Graph, all_pairs_distances, antipodal_map,
    bipartite_double, complete_bipartite, complete_graph, covering_projection, cycle_graph,
    double_odd_graph, folded_double_odd, odd_graph, parity_flip, path_graph, petersen_graph,
    single_source_distances, verify_covering_map,
)
from foldedodd.serialize import graph_from_edge_list, graph_from_json, graph_to_edge_list, graph_to_json
from oracles import brute_covering_check, odd_graph_from_sets, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1)], labels=[DoubleOddLabel(1, 0), DoubleOddLabel(1, 0)])


def test_odd_graph_k2_is_triangle():
    g = odd_graph(2)
    assert (g.n, g.num_edges, g.regular_degree()) == (3, 3, 2)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_odd_graph_matches_set_construction(k):
    subsets, edges = odd_graph_from_sets(k)
    g = odd_graph(k)
    assert g.n == len(subsets) == comb(2 * k - 1, k - 1)
    assert set(g.edges()) == edges
    assert g.regular_degree() == k
    # labels use bit i-1 for element i
    assert [lab.subset for lab in g.labels] == [sum(1 << (x - 1) for x in s) for s in subsets]


def test_odd_graph_small_counts():
    g3, g4 = odd_graph(3), odd_graph(4)
    assert (g3.n, g3.num_edges, g3.regular_degree()) == (10, 15, 3)
    assert all_pairs_distances(g3).diameter == 2
    assert (g4.n, g4.num_edges, g4.regular_degree()) == (35, 70, 4)


@pytest.mark.parametrize("k", [1, 0, -3])
def test_odd_graph_domain(k):
    with pytest.raises(ValueError):
        odd_graph(k)
    with pytest.raises(ValueError):
        folded_double_odd(k)


def test_double_of_triangle_is_hexagon():
    d = bipartite_double(complete_graph(3))
    assert nx.is_isomorphic(to_nx(d), nx.cycle_graph(6))


def test_double_of_hexagon_is_two_hexagons():
    d = bipartite_double(cycle_graph(6))
    comps = list(nx.connected_components(to_nx(d)))
    assert len(comps) == 2 and all(len(c) == 6 for c in comps)
    assert not d.is_connected()


def test_double_of_petersen():
    d = bipartite_double(odd_graph(3))
    assert (d.n, d.num_edges, d.regular_degree()) == (20, 30, 3)
    assert all_pairs_distances(d).diameter == 5


def test_double_vertex_order():
    d = double_odd_graph(3)
    half = d.n // 2
    assert [lab.parity for lab in d.labels] == [0] * half + [1] * half
    masks = [lab.subset for lab in d.labels[:half]]
    assert masks == sorted(masks) == [lab.subset for lab in d.labels[half:]]


def test_folded_k2_is_k33():
    f = folded_double_odd(2)
    assert (f.n, f.num_edges, f.regular_degree()) == (6, 9, 3)
    assert nx.is_isomorphic(to_nx(f), nx.complete_bipartite_graph(3, 3))


def test_folded_k3_counts():
    f = folded_double_odd(3)
    assert (f.n, f.num_edges, f.regular_degree()) == (20, 40, 4)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_folded_degree_and_parts(k):
    f = folded_double_odd(k)
    assert f.regular_degree() == k + 1
    assert f.is_bipartite()
    half = f.n // 2
    for u, w in f.edges():
        assert (u < half) != (w < half)


@given(graphs())
def test_double_is_bipartite_and_keeps_degrees(g):
    d = bipartite_double(g)
    assert d.is_bipartite()
    assert d.degrees() == g.degrees() * 2


@given(graphs())
def test_double_connectivity_follows_bipartiteness(g):
    if not g.is_connected() or g.n < 2:
        return
    assert bipartite_double(g).is_connected() == (not g.is_bipartite())


def test_distances_small():
    assert all_pairs_distances(cycle_graph(6)).diameter == 3
    assert all_pairs_distances(complete_graph(3)).diameter == 1


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_double_odd_diameter(k):
    assert all_pairs_distances(double_odd_graph(k)).diameter == 2 * k - 1


@given(graphs())
def test_distances_agree_with_networkx(g):
    dt = all_pairs_distances(g)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u in range(g.n):
        for w in range(g.n):
            assert dt.dist[u, w] == ref[u].get(w, UNREACHABLE)
    assert dt.connected == g.is_connected()
    assert (dt.dist == dt.dist.T).all() and (np.diag(dt.dist) == 0).all()


@given(graphs(), st.data())
def test_triangle_inequality_sampled(g, data):
    dt = all_pairs_distances(g)
    u, x, w = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    assert dt.dist[u, w] <= dt.dist[u, x] + dt.dist[x, w]


def test_all_pairs_matches_single_source():
    g = double_odd_graph(3)
    dt = all_pairs_distances(g)
    for s in range(g.n):
        assert dt.dist[s].tolist() == single_source_distances(g, s)


def test_disconnected_sentinel():
    g = Graph.from_edges(3, [(0, 1)])
    dt = all_pairs_distances(g)
    assert not dt.connected
    assert dt.dist[0, 2] == UNREACHABLE > g.n
    assert dt.diameter == 1


def test_antipodal_hexagon():
    assert antipodal_map(cycle_graph(6)) == (3, 4, 5, 0, 1, 2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_antipodal_double_odd_is_parity_flip(k):
    g = double_odd_graph(k)
    anti = antipodal_map(g)
    assert anti == parity_flip(g)
    assert all(anti[anti[u]] == u != anti[u] for u in range(g.n))
    for u, w in g.edges():
        assert g.has_edge(anti[u], anti[w])


def test_antipodal_petersen_fails():
    with pytest.raises(AntipodeError) as info:
        antipodal_map(petersen_graph())
    assert info.value.count == 6
    assert info.value.vertex == 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_double_covers_odd(k):
    g, h, f = double_odd_graph(k), odd_graph(k), covering_projection(k)
    assert verify_covering_map(g, h, f)
    assert brute_covering_check(g, h, f)


@given(graphs())
def test_identity_is_covering(g):
    assert verify_covering_map(g, g, list(range(g.n)))


def test_hexagon_onto_triangle():
    c6, k3 = cycle_graph(6), complete_graph(3)
    antipodal_collapse = [u % 3 for u in range(6)]
    adjacent_collapse = [u // 2 for u in range(6)]
    assert verify_covering_map(c6, k3, antipodal_collapse)
    bad = verify_covering_map(c6, k3, adjacent_collapse)
    assert not bad and bad.reason == "not a homomorphism"
    assert bad.evidence["edge"] == [0, 1]
    assert brute_covering_check(c6, k3, antipodal_collapse)
    assert not brute_covering_check(c6, k3, adjacent_collapse)


def test_covering_rejects_non_surjective_and_non_local():
    p3 = path_graph(3)
    k2 = complete_graph(2)
    v = verify_covering_map(p3, k2, [0, 1, 0])
    assert not v and v.reason == "not injective on a neighbourhood"
    v = verify_covering_map(complete_graph(2), complete_graph(3), [0, 1])
    assert not v and v.reason == "not surjective"


@pytest.mark.parametrize("g", [folded_double_odd(3), odd_graph(3), complete_bipartite(2, 3), Graph.from_edges(4, [])])
def test_round_trip_formats(g):
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_from_edge_list(graph_to_edge_list(g)).rows == g.rows


def test_json_layout():
    text = graph_to_json(folded_double_odd(2))
    assert '"edges": [[0, 3], [0, 4], [0, 5], [1, 3]' in text
    assert '{"parity": 0, "subset": 1}' in text
    assert graph_to_edge_list(complete_graph(3)) == "# n=3\n0 1\n0 2\n1 2\n"
