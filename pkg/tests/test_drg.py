"""Distance-regular graphs: arrays, intersection numbers, LP certificates."""

from fractions import Fraction

import pytest

from isolab import generate, load_named
from isolab.drg import (
    IntersectionArray,
    array_eigenvalues,
    detect_drg,
    drg_iso_lower,
    drg_sparsity_bound,
    intersection_numbers,
    lemma_identity_check,
    lp_linial_direct,
    primal_value,
    restricted_dual_certificate,
    singleton_certificate,
    wiener_index,
)
from isolab.exact import isoperimetric_exact, sparsity_exact

PETERSEN_ARRAY = "3,2;1,1"


# -- intersection arrays ------------------------------------------------------


def test_array_parsing_variants():
    base = IntersectionArray.from_string(PETERSEN_ARRAY)
    assert IntersectionArray.from_string("{3,2;1,1}") == base
    assert IntersectionArray.from_string("[3, 2; 1, 1]") == base
    assert str(base) == "{3,2;1,1}"
    assert base.diameter == 2
    assert base.valency == 3
    assert base.k_seq == (1, 3, 6)
    assert base.n == 10
    assert base.a == (0, 0, 2)


def test_array_parse_errors():
    with pytest.raises(ValueError, match="cannot parse"):
        IntersectionArray.from_string("3,2,1,1")
    with pytest.raises(ValueError, match="cannot parse"):
        IntersectionArray.from_string("a;b")
    with pytest.raises(ValueError):
        IntersectionArray((3, 0), (1, 1))
    with pytest.raises(ValueError):
        IntersectionArray((3, 2), (1,))


def test_array_eigenvalues_petersen():
    vals = array_eigenvalues(IntersectionArray.from_string(PETERSEN_ARRAY))
    assert [round(v, 6) for v in vals] == [3.0, 1.0, -2.0]


# -- detection ----------------------------------------------------------------


def test_detect_petersen(petersen):
    arr = detect_drg(petersen)
    assert str(arr) == "{3,2;1,1}"


def test_detect_dodecahedron(dodecahedron):
    assert str(detect_drg(dodecahedron)) == "{3,2,1,1,1;1,1,1,2,3}"


def test_detect_cycle(c6):
    assert str(detect_drg(c6)) == "{2,1,1;1,1,2}"


def test_detect_rejects_non_drg():
    assert detect_drg(load_named("Frucht graph")) is None
    assert detect_drg(generate("path", 4)) is None


def test_corpus_has_many_drgs(all_corpus):
    found = [name for name, g in all_corpus.items() if detect_drg(g) is not None]
    assert len(found) >= 10
    assert "Petersen graph" in found
    assert "Frucht graph" not in found


# -- intersection numbers and the counting identity ---------------------------


def test_intersection_numbers_frozen(petersen, c6):
    nums = intersection_numbers(petersen)
    assert nums.p[1][1][1] == 0
    assert nums.p[2][2][2] == 3
    assert nums.p[2][1][1] == 1
    nums6 = intersection_numbers(c6)
    assert nums6.p[2][1][1] == 1


def test_intersection_numbers_symmetry(petersen):
    nums = intersection_numbers(petersen)
    d = nums.diameter
    ks = nums.array.k_seq
    for h in range(d + 1):
        for i in range(d + 1):
            for j in range(d + 1):
                # p^h_{ij} = p^h_{ji}, and the row over j sums to k_i
                assert nums.p[h][i][j] == nums.p[h][j][i]
            assert sum(nums.p[h][i][j] for j in range(d + 1)) == ks[i]


def test_lemma_identity_on_detected_drgs(all_corpus):
    for name, g in all_corpus.items():
        if detect_drg(g) is not None:
            assert lemma_identity_check(g), name


# -- closed bounds ------------------------------------------------------------


def test_sparsity_bound_frozen(c6):
    assert drg_sparsity_bound(detect_drg(c6)) == Fraction(2, 9)
    pet = IntersectionArray.from_string(PETERSEN_ARRAY)
    assert drg_sparsity_bound(pet) == Fraction(1, 5)


def test_iso_lower_frozen(dodecahedron):
    pet = IntersectionArray.from_string(PETERSEN_ARRAY)
    assert drg_iso_lower(pet, 10) == Fraction(1)
    dod = detect_drg(dodecahedron)
    assert drg_iso_lower(dod, 20) == Fraction(3, 5)
    pap = detect_drg(load_named("Pappus Graph"))
    assert drg_iso_lower(pap, 18) == Fraction(27, 41)


def test_bounds_are_actually_lower_bounds(petersen, c6, dodecahedron):
    for g in (petersen, c6, dodecahedron):
        arr = detect_drg(g)
        assert drg_sparsity_bound(arr) <= sparsity_exact(g).value
        assert drg_iso_lower(arr, g.n) <= isoperimetric_exact(g).value


# -- LP certificates ----------------------------------------------------------


def test_primal_frozen(petersen, c6, k4):
    pr = primal_value(petersen)
    assert pr.value == Fraction(1, 5)
    assert pr.feasible
    assert pr.worst_violation <= 1e-9
    assert primal_value(c6).value == Fraction(2, 9)
    assert primal_value(k4).value == Fraction(1)


def test_dual_certificate_petersen(petersen):
    dc = restricted_dual_certificate(petersen)
    assert dc.psi == Fraction(1, 5)
    assert dc.y == (Fraction(1, 5),)
    assert dc.feasible and dc.all_positive
    assert dc.worst_violation <= 1e-9


def test_dual_certificate_more(c6, heawood):
    assert restricted_dual_certificate(c6).psi == Fraction(2, 9)
    assert restricted_dual_certificate(heawood).psi == Fraction(1, 9)


def test_direct_lp_petersen(petersen):
    sol = lp_linial_direct(petersen)
    assert sol.status == "optimal"
    assert abs(sol.objective - 0.2) < 1e-8


def test_direct_lp_is_lower_bound_on_sparsity():
    p3 = generate("path", 3)
    sol = lp_linial_direct(p3)
    assert sol.status == "optimal"
    assert sol.objective <= float(sparsity_exact(p3).value) + 1e-9


def test_direct_lp_caps(petersen):
    with pytest.raises(ValueError, match="capped at n=30"):
        lp_linial_direct(load_named("Dyck graph"))


def test_duality_closure_small(petersen, c6, heawood):
    for g in (petersen, c6, heawood):
        primal = primal_value(g).value
        dual = restricted_dual_certificate(g).psi
        direct = lp_linial_direct(g).objective
        assert primal == dual
        assert abs(float(primal) - direct) < 1e-8


# -- singleton approximation and Wiener index ---------------------------------


def test_singleton_certificate(petersen, dodecahedron):
    sc = singleton_certificate(petersen)
    assert sc.diameter == 2
    assert sc.sigma_upper == Fraction(1, 3)
    assert sc.sigma_ratio == 2
    assert sc.sigma_claim_ok and sc.iso_claim_ok
    sd = singleton_certificate(dodecahedron)
    assert sd.sigma_claim_ok and sd.iso_claim_ok
    with pytest.raises(ValueError):
        singleton_certificate(load_named("Frucht graph"))


def test_wiener_index(petersen):
    assert wiener_index(generate("path", 3)) == 4
    assert wiener_index(petersen) == 75
