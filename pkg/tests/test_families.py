"""Closed-form isoperimetric values for named families."""

from fractions import Fraction

import pytest

from isolab import generate
from isolab.exact import SearchBudget, isoperimetric_exact
from isolab.families import (
    exact_value,
    get_formula,
    list_families,
    nds_demo,
    verify_family,
)
from isolab.spectra import cospectral


def test_registry_lists_known_tags():
    tags = list_families()
    assert tags == sorted(tags)
    for tag in ("complete", "cycle", "hamming", "grassmann_4_2",
                "product_of_completes", "elliptic_quadric_5"):
        assert tag in tags


def test_exact_values_frozen():
    assert exact_value("complete", 7) == 4
    assert exact_value("path", 7) == Fraction(1, 3)
    assert exact_value("cycle", 10) == Fraction(2, 5)
    assert exact_value("complete_bipartite", 3, 4) == 2
    assert exact_value("hamming", 2, 3) == 2
    assert exact_value("hypercube", 4) == 1
    assert exact_value("product_of_completes", 3, 5, 7) == 2
    assert exact_value("complement_hyperbolic_quadric_3", 3) == 4
    assert exact_value("grassmann_4_2", 3) == 20


def test_domain_errors():
    with pytest.raises(ValueError):
        exact_value("grassmann_4_2", 2)
    with pytest.raises(ValueError):
        exact_value("cycle", 2)
    with pytest.raises(ValueError):
        exact_value("hamming", 0, 3)
    with pytest.raises(KeyError, match="unknown family"):
        exact_value("frobnicate", 3)


def test_formula_metadata():
    f = get_formula("hamming")
    assert f.params == "d q"
    assert f.realizable
    ell = get_formula("elliptic_quadric_5")
    assert not ell.realizable
    assert ell.build is None
    prod = get_formula("product_of_completes")
    assert prod.variadic


def test_formula_values_match_search():
    # every realizable formula should agree with the exhaustive search
    for tag, params in (("complete", (6,)), ("cycle", (10,)),
                        ("path", (5,)), ("hamming", (2, 3)),
                        ("hypercube", (4,)), ("complete_bipartite", (3, 4)),
                        ("product_of_completes", (2, 3))):
        f = get_formula(tag)
        g = f.build(*params)
        assert exact_value(tag, *params) == isoperimetric_exact(g).value


def test_verify_family_agrees():
    rep = verify_family("cycle", (10,))
    assert rep.agrees
    assert rep.formula == rep.searched == Fraction(2, 5)
    assert rep.skipped is None


def test_verify_family_budget_skip():
    rep = verify_family("grassmann_4_2", (3,))
    assert rep.skipped is not None
    assert "exceeds search budget" in rep.skipped
    assert rep.agrees is None


def test_verify_family_no_constructor():
    rep = verify_family("elliptic_quadric_5", (3,))
    assert rep.skipped == "no constructor for this family"


def test_verify_family_custom_budget():
    rep = verify_family("hypercube", (3,), budget=SearchBudget(max_n=8))
    assert rep.agrees


def test_nds_demo_pair():
    demo = nds_demo()
    assert demo.cospectral
    assert cospectral(demo.g, demo.h)
    assert demo.g != demo.h
    assert demo.g.n == demo.h.n == 16
    assert demo.g.regularity() == demo.h.regularity() == 4
    assert demo.i_g == 1
    assert demo.i_h == Fraction(5, 4)
    assert demo.g == generate("hypercube", 4)
