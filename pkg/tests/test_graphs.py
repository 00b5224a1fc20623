"""Graph construction, parametric families and cut/neighbour metrics."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolab import (
    Graph,
    build_graph,
    cartesian_product,
    complement,
    common_neighbor_stats,
    cut_metrics,
    distances,
    generate,
    gm_switch,
    graph_power,
    induced_subgraph,
)


def _isomorphic(g, h):
    """Brute-force isomorphism test, fine for n <= 8."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges()):
            return True
    return False


def _random_graph(n, edge_bits):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p, keep in zip(pairs, edge_bits) if keep]
    return build_graph(n, edges)


# -- construction and validation --------------------------------------------


def test_build_graph_basic():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.num_edges == 3
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]


def test_build_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(-1, [])


def test_from_adjacency_round_trip(k4):
    assert Graph.from_adjacency(k4.adjacency_matrix()) == k4
    with pytest.raises(ValueError):
        Graph.from_adjacency([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        Graph.from_adjacency([[1, 0], [0, 0]])


def test_graph_equality_ignores_name(k4):
    assert k4 == generate("complete", 4).relabel("other")
    assert hash(k4) == hash(generate("complete", 4))


def test_edges_listing(c6):
    assert sorted(c6.edges()) == [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]


# -- parametric families -----------------------------------------------------


def test_complete_and_regularity(k4):
    assert k4.n == 4 and k4.num_edges == 6
    assert k4.is_regular() and k4.regularity() == 3
    p3 = generate("path", 3)
    assert not p3.is_regular() and p3.regularity() is None


def test_hamming_degenerate_is_complete():
    assert generate("hamming", 1, 4) == generate("complete", 4)


def test_hamming_hypercube_match():
    assert generate("hypercube", 3) == generate("hamming", 3, 2)


def test_johnson_5_2():
    j = generate("johnson", 5, 2)
    assert j.n == 10
    assert j.regularity() == 6


def test_complete_bipartite():
    g = generate("complete_bipartite", 3, 4)
    assert g.n == 7 and g.num_edges == 12
    assert sorted(set(g.degrees())) == [3, 4]


def test_complete_split_shape():
    g = generate("complete_split", 3, 2)
    assert g.n == 5
    # the clique plus the join accounts for every edge
    assert g.num_edges == 3 + 3 * 2
    assert not g.has_edge(3, 4)


def test_grassmann_small():
    # J_2(3,1) is the complete graph on the 7 points of the Fano-plane dual
    g = generate("grassmann", 2, 3, 1)
    assert g.n == 7
    assert g.regularity() == 6
    with pytest.raises(ValueError):
        generate("grassmann", 4, 4, 2)


def test_unknown_family():
    with pytest.raises(ValueError, match="unsupported family"):
        generate("moebius_ladder", 5)


# -- products, powers, complements ------------------------------------------


def test_product_of_edges_is_square():
    k2 = generate("complete", 2)
    assert _isomorphic(cartesian_product(k2, k2), generate("cycle", 4))


def test_product_of_completes_is_hamming(k4):
    assert cartesian_product(k4, k4) == generate("hamming", 2, 4)


def test_product_of_k2s_is_hypercube():
    k2 = generate("complete", 2)
    g = k2
    for _ in range(3):
        g = cartesian_product(g, k2)
    assert g == generate("hypercube", 4)


def test_graph_power_cycle():
    assert graph_power(generate("cycle", 5), 2) == generate("complete", 5)


def test_graph_power_path():
    sq = graph_power(generate("path", 4), 2)
    assert sorted(sq.edges()) == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def test_graph_power_petersen(petersen):
    # diameter 2, so the square is complete
    assert graph_power(petersen, 2) == generate("complete", 10)
    assert graph_power(petersen, 1) == petersen
    with pytest.raises(ValueError):
        graph_power(petersen, 0)


def test_complement_c5_self():
    c5 = generate("cycle", 5)
    assert _isomorphic(complement(c5), c5)


def test_complement_hamming_regular():
    g = complement(generate("hamming", 2, 4))
    assert g.regularity() == 9


def test_complement_involution(c6):
    assert complement(complement(c6)) == c6


def test_induced_subgraph(petersen):
    sub = induced_subgraph(petersen, [0, 1, 2, 3, 4])
    assert sub.n == 5
    assert sub.num_edges == 5  # the outer cycle


# -- Godsil-McKay switching ---------------------------------------------------


def test_gm_switch_validation(k4):
    # K4 plus a pendant: the pendant sees 1 of the 4 clique vertices
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    with pytest.raises(ValueError, match="vertex 4 has 1 neighbours"):
        gm_switch(g, {0, 1, 2, 3})
    with pytest.raises(ValueError):
        gm_switch(k4, {0})  # odd size
    with pytest.raises(ValueError):
        gm_switch(k4, set())
    with pytest.raises(ValueError):
        gm_switch(k4, {0, 7})


def test_gm_switch_full_neighbourhood_is_noop(k4):
    # every outside vertex sees the whole set, so nothing flips
    assert gm_switch(k4, {0, 1}) == k4


def test_gm_switch_rewires():
    # star of centre 0 over {1,2} plus outside vertex 3 seeing exactly half
    g = build_graph(4, [(0, 1), (0, 2), (1, 3)])
    h = gm_switch(g, {1, 2})
    assert h.num_edges == g.num_edges
    assert h.has_edge(2, 3) and not h.has_edge(1, 3)
    # switching twice restores the original
    assert gm_switch(h, {1, 2}) == g


# -- distances ---------------------------------------------------------------


def test_distances_path():
    d = distances(generate("path", 3))
    assert d.connected and d.diameter == 2
    assert d.dist(0, 2) == 2
    assert [d.eccentricity(v) for v in range(3)] == [2, 1, 2]
    assert d.pairs_at(2) == [(0, 2)]


def test_distances_disconnected():
    d = distances(build_graph(4, [(0, 1), (2, 3)]))
    assert not d.connected
    assert d.dist(0, 2) == -1


def test_distances_petersen(petersen):
    d = distances(petersen)
    assert d.connected and d.diameter == 2
    assert len(d.pairs_at(1)) == 15
    assert len(d.pairs_at(2)) == 30


# -- cut metrics --------------------------------------------------------------


def test_cut_metrics_k4(k4):
    cm = cut_metrics(k4, {0, 1})
    assert cm.boundary == 4
    assert cm.expansion == Fraction(2)
    assert cm.sparsity == Fraction(1)
    assert cm.conductance == Fraction(2, 3)
    assert cm.volume == 6


def test_cut_metrics_c6(c6):
    cm = cut_metrics(c6, {0, 1, 2})
    assert cm.boundary == 2
    assert cm.expansion == Fraction(2, 3)
    assert cm.sparsity == Fraction(2, 9)
    assert cm.conductance == Fraction(1, 3)


def test_cut_metrics_petersen_outer(petersen):
    cm = cut_metrics(petersen, set(range(5)))
    assert cm.boundary == 5
    assert cm.expansion == Fraction(1)


def test_cut_metrics_large_side_conductance(c6):
    # conductance divides by the smaller side's volume
    cm = cut_metrics(c6, {0, 1, 2, 3})
    assert cm.conductance == Fraction(2, 4)
    assert cm.expansion == Fraction(2, 4)


def test_cut_metrics_isolated_side_conductance():
    g = build_graph(3, [(0, 1)])
    cm = cut_metrics(g, {2})
    assert cm.boundary == 0
    assert cm.conductance is None


def test_cut_metrics_validation(k4):
    with pytest.raises(ValueError):
        cut_metrics(k4, set())
    with pytest.raises(ValueError):
        cut_metrics(k4, {0, 1, 2, 3})
    with pytest.raises(ValueError):
        cut_metrics(k4, {0, 9})


# -- common neighbour statistics ----------------------------------------------


def test_neighbor_stats_c5():
    ns = common_neighbor_stats(generate("cycle", 5))
    assert (ns.max_adjacent, ns.min_adjacent) == (0, 0)
    assert (ns.max_nonadjacent, ns.min_distance2) == (1, 1)


def test_neighbor_stats_petersen(petersen):
    ns = common_neighbor_stats(petersen)
    assert (ns.max_adjacent, ns.min_adjacent) == (0, 0)
    assert (ns.max_nonadjacent, ns.min_distance2) == (1, 1)


def test_neighbor_stats_k4_minus_edge():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    ns = common_neighbor_stats(g)
    assert ns.max_adjacent == 2
    assert ns.min_adjacent == 1
    assert ns.max_nonadjacent == 2
    assert ns.min_distance2 == 2
    assert ns.argmax_nonadjacent == (2, 3)


def test_neighbor_stats_empty_classes(k4):
    ns = common_neighbor_stats(k4)
    assert ns.max_adjacent == 2
    assert ns.max_nonadjacent is None
    assert ns.min_distance2 is None


# -- properties ---------------------------------------------------------------


@given(st.integers(4, 9), st.data())
@settings(max_examples=60, deadline=None)
def test_boundary_complement_identity(n, data):
    bits = data.draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                              max_size=n * (n - 1) // 2))
    g = _random_graph(n, bits)
    size = data.draw(st.integers(1, n - 1))
    subset = set(data.draw(st.permutations(range(n)))[:size])
    a = cut_metrics(g, subset)
    b = cut_metrics(complement(g), subset)
    assert a.boundary + b.boundary == len(subset) * (n - len(subset))
    # sparsity is expansion scaled by the far side
    assert a.sparsity == a.expansion / (n - len(subset))


@given(st.integers(3, 8), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_power_degree_monotone(n, t):
    g = generate("cycle", max(n, 3))
    gt = graph_power(g, t)
    assert gt.num_edges >= g.num_edges
    d = distances(g)
    for u, v in gt.edges():
        assert 1 <= d.dist(u, v) <= t
