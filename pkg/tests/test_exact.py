"""Exhaustive cut searches checked against the naive oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolab import Graph, build_graph, cut_metrics, generate, load_named
from isolab.exact import (
    BudgetError,
    SearchBudget,
    cheeger_exact,
    cut_at_size,
    find_tight_set,
    isoperimetric_exact,
    naive_cheeger,
    naive_cut_at_size,
    naive_isoperimetric,
    naive_sparsity,
    sparsity_exact,
    verify_tight,
)

_SMALL = [
    generate("complete", 5),
    generate("path", 7),
    generate("cycle", 9),
    generate("complete_bipartite", 3, 4),
    generate("hypercube", 3),
    generate("complete_split", 3, 4),
    build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]),
]


def _random_graph(n, bits):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, [p for p, keep in zip(pairs, bits) if keep])


# -- frozen values ------------------------------------------------------------


def test_isoperimetric_frozen(petersen):
    res = isoperimetric_exact(petersen)
    assert res.value == Fraction(1)
    assert res.certified
    assert res.boundary == res.size  # expansion 1 witness
    assert isoperimetric_exact(generate("complete_bipartite", 3, 4)).value == 2
    assert isoperimetric_exact(generate("hypercube", 3)).value == 1
    assert isoperimetric_exact(generate("hypercube", 4)).value == 1


def test_witness_is_consistent(petersen):
    res = isoperimetric_exact(petersen)
    cm = cut_metrics(petersen, res.witness)
    assert cm.boundary == res.boundary
    assert cm.expansion == res.value
    assert 1 <= res.size <= petersen.n // 2


def test_sparsity_frozen(c6):
    assert sparsity_exact(c6).value == Fraction(2, 9)
    assert sparsity_exact(generate("cycle", 8)).value == Fraction(1, 8)


def test_cheeger_frozen(k4):
    res = cheeger_exact(k4)
    assert res.value == Fraction(2, 3)
    assert res.size == 2


def test_cheeger_irregular_matches_naive():
    for g in (generate("path", 5), generate("complete_split", 2, 3),
              build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])):
        assert cheeger_exact(g).value == naive_cheeger(g)


def test_cut_at_size_frozen(c6):
    b, wit = cut_at_size(c6, 3)
    assert b == 2
    assert cut_metrics(c6, wit).boundary == 2
    assert cut_at_size(generate("hamming", 2, 3), 3)[0] == 6
    assert cut_at_size(generate("hypercube", 3), 4)[0] == 4
    with pytest.raises(ValueError):
        cut_at_size(c6, 0)
    with pytest.raises(ValueError):
        cut_at_size(c6, 6)


def test_disconnected_graph_zero():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    res = isoperimetric_exact(g)
    assert res.value == 0
    assert res.boundary == 0
    assert cut_metrics(g, res.witness).boundary == 0


# -- oracle agreement ---------------------------------------------------------


def test_small_graphs_match_naive():
    for g in _SMALL:
        assert isoperimetric_exact(g).value == naive_isoperimetric(g)
        assert sparsity_exact(g).value == naive_sparsity(g)
        assert cheeger_exact(g).value == naive_cheeger(g)


def test_cut_at_size_matches_naive():
    for g in _SMALL:
        for m in range(1, g.n):
            assert cut_at_size(g, m)[0] == naive_cut_at_size(g, m)


@given(st.integers(4, 8), st.data())
@settings(max_examples=40, deadline=None)
def test_random_graphs_match_naive(n, data):
    npairs = n * (n - 1) // 2
    bits = data.draw(st.lists(st.booleans(), min_size=npairs, max_size=npairs))
    g = _random_graph(n, bits)
    i = isoperimetric_exact(g).value
    sigma = sparsity_exact(g).value
    assert i == naive_isoperimetric(g)
    assert sigma == naive_sparsity(g)
    assert cheeger_exact(g).value == naive_cheeger(g)
    # sparsity sandwich: n*sigma/2 <= i <= n*sigma
    assert n * sigma <= 2 * i
    assert i <= n * sigma


# -- budgets ------------------------------------------------------------------


def test_budget_vertex_cap():
    foster = load_named("Foster Graph")
    with pytest.raises(BudgetError, match="budget allows up to 32"):
        isoperimetric_exact(foster)


def test_budget_time_cap_gives_uncertified():
    pappus = load_named("Pappus Graph")
    res = isoperimetric_exact(pappus, SearchBudget(max_n=64, max_seconds=1e-9))
    assert not res.certified
    assert res.skipped_sizes
    # the reported cut is real, so it upper-bounds the true value
    assert res.value >= isoperimetric_exact(pappus).value


def test_budget_too_small_graph():
    with pytest.raises(ValueError):
        isoperimetric_exact(build_graph(1, []))


# -- tight sets ---------------------------------------------------------------


def test_find_tight_set_q4(q4):
    sub = find_tight_set(q4, 8)
    assert sub is not None
    assert verify_tight(q4, sub, "gap")
    assert cut_metrics(q4, sub).expansion == Fraction(1)


def test_find_tight_set_none_for_switched_mate():
    from isolab.families import nds_demo

    mate = nds_demo().h
    assert find_tight_set(mate, 8) is None


def test_tight_sets_c6(c6):
    assert find_tight_set(c6, 3, "gap") is None
    tail = find_tight_set(c6, 3, "tail")
    assert tail == frozenset({0, 2, 4})
    assert verify_tight(c6, tail, "tail")
    assert not verify_tight(c6, {0, 1, 2}, "gap")


def test_verify_tight_examples(petersen, k4):
    assert verify_tight(k4, {0}, "tail")
    assert verify_tight(k4, {0}, "gap")
    assert verify_tight(petersen, frozenset(range(5)), "gap")
    assert not verify_tight(petersen, frozenset(range(5)), "tail")


def test_tight_set_validation(petersen):
    with pytest.raises(ValueError, match="kind"):
        find_tight_set(petersen, 5, "middle")
    with pytest.raises(ValueError, match="regular"):
        find_tight_set(generate("path", 4), 2)
    with pytest.raises(ValueError):
        find_tight_set(petersen, 0)
    assert not verify_tight(generate("path", 4), {0})
