import pytest

from foldedodd.drg import (
    IntersectionArray, bipartite_double_drg_criterion, compare_arrays, double_odd_intersection_matrix,
    intersection_array, intersection_matrix, predicted_double_odd_array, predicted_odd_array,
    replay_refutation,
)
from foldedodd.exact import char_poly, integer_roots
from foldedodd.graphs import (
    Graph, all_pairs_distances, bipartite_double, complete_graph, cycle_graph, double_odd_graph,
    odd_graph, path_graph, petersen_graph,
)


def arr(b, c):
    return IntersectionArray(tuple(b), tuple(c))


def test_array_validation():
    with pytest.raises(ValueError):
        arr([3, 2], [1])
    with pytest.raises(ValueError):
        arr([3], [0])
    with pytest.raises(ValueError):
        arr([2, 2], [1, 3])  # a_2 < 0
    a = arr([3, 2], [1, 1])
    assert (a.k, a.d, a.a) == (3, 2, (0, 0, 2))
    assert a.to_json() == {"b": [3, 2], "c": [1, 1], "k": 3, "d": 2}


def test_computed_arrays():
    assert intersection_array(petersen_graph()) == arr([3, 2], [1, 1])
    assert intersection_array(double_odd_graph(3)) == arr([3, 2, 2, 1, 1], [1, 1, 2, 2, 3])
    assert intersection_array(cycle_graph(6)) == arr([2, 1, 1], [1, 1, 2])
    assert intersection_array(complete_graph(3)) == arr([2], [1])


def test_path_is_refuted_with_replayable_witness():
    g = path_graph(4)
    ref = intersection_array(g)
    assert not ref
    assert ref.witness["r"] == 0
    assert replay_refutation(g, ref)


def test_regular_non_drg_is_refuted():
    # triangular prism: 3-regular, b_1 depends on the edge type
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    ref = intersection_array(prism)
    assert not ref and ref.witness["r"] == 1
    assert replay_refutation(prism, ref)


def test_disconnected_raises():
    with pytest.raises(ValueError):
        intersection_array(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_predicted_odd_examples():
    assert predicted_odd_array(3) == arr([3, 2], [1, 1]) and predicted_odd_array(3).a[-1] == 2
    assert predicted_odd_array(4) == arr([4, 3, 3], [1, 1, 2]) and predicted_odd_array(4).a[-1] == 2
    two = predicted_odd_array(2)
    assert two == arr([2, 1], [1, 1]) and two.a[-1] == 1


def test_k2_odd_array_is_a_reported_mismatch():
    cmp = compare_arrays(intersection_array(odd_graph(2)), predicted_odd_array(2))
    assert not cmp["match"]
    assert cmp["length_mismatch"] == {"computed_d": 1, "predicted_d": 2}


@pytest.mark.parametrize("k", [3, 4, 5])
def test_odd_arrays_match_prediction(k):
    assert intersection_array(odd_graph(k)) == predicted_odd_array(k)
    assert predicted_odd_array(k).d == k - 1


@pytest.mark.parametrize("k", [6, 7, 8, 9])
def test_predicted_odd_pattern_ends(k):
    p = predicted_odd_array(k)
    assert p.d == k - 1
    assert p.a[-1] == (k // 2 if k % 2 == 0 else (k + 1) // 2)
    assert all(x == 0 for x in p.a[:-1])


def test_predicted_double_examples():
    assert predicted_double_odd_array(2) == arr([2, 1, 1], [1, 1, 2])
    assert predicted_double_odd_array(3) == arr([3, 2, 2, 1, 1], [1, 1, 2, 2, 3])
    for k in range(2, 12):
        p = predicted_double_odd_array(k)
        assert p.d == 2 * k - 1 and not any(p.a)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_double_odd_arrays(k):
    computed = intersection_array(double_odd_graph(k))
    assert computed == predicted_double_odd_array(k)
    assert computed.d == all_pairs_distances(double_odd_graph(k)).diameter == 2 * k - 1


def test_bipartite_double_criterion():
    pet = bipartite_double_drg_criterion(arr([3, 2], [1, 1]))
    assert pet and pet.evidence == {"a": [0, 0, 2], "predicted_double_diameter": 5}
    k3 = bipartite_double_drg_criterion(arr([2], [1]))
    assert k3 and k3.evidence["a"] == [0, 1] and k3.evidence["predicted_double_diameter"] == 3
    assert all_pairs_distances(cycle_graph(6)).diameter == 3
    c5 = bipartite_double_drg_criterion(intersection_array(cycle_graph(5)))
    assert c5 and c5.evidence["a"] == [0, 0, 1]
    assert all_pairs_distances(bipartite_double(cycle_graph(5))).diameter == 5
    assert not bipartite_double_drg_criterion(arr([6, 4], [1, 2]))  # a_1 = 1


def test_intersection_matrices():
    assert intersection_matrix(predicted_double_odd_array(2)).tolist() == [
        [0, 2, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 2, 0]]
    assert intersection_matrix(arr([3, 2], [1, 1])).tolist() == [[0, 3, 0], [1, 0, 2], [0, 1, 2]]
    assert intersection_matrix(arr([1], [1])).tolist() == [[0, 1], [1, 0]]


@pytest.mark.parametrize("k", range(2, 13))
def test_lemma_roots(k):
    roots = integer_roots(char_poly(double_odd_intersection_matrix(k)), k)
    assert roots.residual == 0
    assert roots.pairs == tuple((r, 1) for r in sorted(s * (k - i) for i in range(k) for s in (1, -1)))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_intersection_matrix_roots_are_graph_eigenvalues(k):
    from foldedodd.exact import integral_spectrum
    roots = integer_roots(char_poly(double_odd_intersection_matrix(k)), k)
    assert set(roots.eigenvalues) == set(integral_spectrum(double_odd_graph(k)).eigenvalues)
