"""Closed-form isoperimetric numbers for parametric graph families.

Each registry entry carries its exact rational value function, a domain
predicate enforcing the hypotheses under which the formula is proved (parity
and primality conditions come from spread existence in the underlying
geometries), and, where we can realize the graph, a constructor so the
formula can be checked against exhaustive search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .graphs import (
    Graph,
    cartesian_product,
    complement,
    generate,
    gm_switch,
)
from .spectra import cospectral


def _is_prime(n):
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


def _is_prime_power(n):
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True  # n itself is prime


@dataclass(frozen=True)
class FamilyFormula:
    """A family tag with its exact value, domain, and optional constructor."""

    tag: str
    params: str                 # human-readable parameter signature
    value_text: str             # the closed form, as text
    domain: object              # callable(*params) -> error message or None
    value: object               # callable(*params) -> Fraction
    build: object = None        # callable(*params) -> Graph, when realizable
    variadic: bool = False

    @property
    def realizable(self):
        return self.build is not None


def _dom_int_min(*mins):
    names = "nmq"

    def check(*args):
        for i, (a, lo) in enumerate(zip(args, mins)):
            if not isinstance(a, int) or a < lo:
                return f"{names[i] if i < 3 else 'parameter'} must be an integer >= {lo}"
        return None

    return check


def _dom_odd_pp(q):
    if not isinstance(q, int) or q < 3:
        return "q must be an integer >= 3"
    if q % 2 == 0:
        return "q must be odd"
    if not _is_prime_power(q):
        return "q must be a prime power"
    return None


def _dom_pp(q):
    if not isinstance(q, int) or q < 2:
        return "q must be an integer >= 2"
    if not _is_prime_power(q):
        return "q must be a prime power"
    return None


def _dom_odd_pp_spread(q):
    msg = _dom_odd_pp(q)
    if msg:
        return msg
    if not (_is_prime(q) or q % 3 in (0, 2)):
        return "q must be prime or satisfy q = 0,2 (mod 3)"
    return None


def _dom_factors(*qs):
    if not qs:
        return "need at least one factor"
    for q in qs:
        if not isinstance(q, int) or q < 2:
            return "every factor size must be an integer >= 2"
    return None


def _build_product_completes(*qs):
    g = generate("complete", qs[0])
    for q in qs[1:]:
        g = cartesian_product(g, generate("complete", q))
    return g


def _build_product_bipartite(*qs):
    g = generate("complete_bipartite", qs[0], qs[0])
    for q in qs[1:]:
        g = cartesian_product(g, generate("complete_bipartite", q, q))
    return g


def _dom_symplectic(r, q):
    if not isinstance(r, int) or r < 2:
        return "r must be an integer >= 2"
    return _dom_odd_pp(q)


_REGISTRY = {}


def _register(f: FamilyFormula):
    _REGISTRY[f.tag] = f


_register(FamilyFormula(
    "complete", "n", "ceil(n/2)",
    _dom_int_min(2),
    lambda n: Fraction(-(-n // 2)),
    lambda n: generate("complete", n),
))
_register(FamilyFormula(
    "path", "n", "1/floor(n/2)",
    _dom_int_min(2),
    lambda n: Fraction(1, n // 2),
    lambda n: generate("path", n),
))
_register(FamilyFormula(
    "cycle", "n", "2/floor(n/2)",
    _dom_int_min(3),
    lambda n: Fraction(2, n // 2),
    lambda n: generate("cycle", n),
))
_register(FamilyFormula(
    "complete_bipartite", "m n", "ceil(mn/2)/floor((m+n)/2)",
    _dom_int_min(1, 1),
    lambda m, n: Fraction(-(-(m * n) // 2), (m + n) // 2),
    lambda m, n: generate("complete_bipartite", m, n),
))
_register(FamilyFormula(
    "hypercube", "n", "1",
    _dom_int_min(1),
    lambda n: Fraction(1),
    lambda n: generate("hypercube", n),
))
_register(FamilyFormula(
    "hamming", "d q", "ceil(q/2)",
    _dom_int_min(1, 2),
    lambda d, q: Fraction(-(-q // 2)),
    lambda d, q: generate("hamming", d, q),
))
_register(FamilyFormula(
    "product_of_completes", "q1 q2 ...", "min_i ceil(q_i/2)",
    _dom_factors,
    lambda *qs: Fraction(min(-(-q // 2) for q in qs)),
    _build_product_completes,
    variadic=True,
))
_register(FamilyFormula(
    "product_of_bipartite", "q1 q2 ...", "min_i ceil(q_i^2/2)/q_i",
    _dom_factors,
    lambda *qs: min(Fraction(-(-(q * q) // 2), q) for q in qs),
    _build_product_bipartite,
    variadic=True,
))
_register(FamilyFormula(
    "grassmann_4_2", "q", "(q^2+1)(q+1)/2",
    _dom_odd_pp,
    lambda q: Fraction((q * q + 1) * (q + 1), 2),
    lambda q: generate("grassmann", q, 4, 2),
))
_register(FamilyFormula(
    "hyperbolic_quadric_3", "q", "ceil((q+1)/2)",
    _dom_pp,
    lambda q: Fraction(-(-(q + 1) // 2)),
    lambda q: generate("hamming", 2, q + 1),
))
_register(FamilyFormula(
    "elliptic_quadric_5", "q", "(q^3+1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q ** 3 + 1, 2),
))
_register(FamilyFormula(
    "parabolic_quadric_4", "q", "(q^2+1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q * q + 1, 2),
))
_register(FamilyFormula(
    "parabolic_quadric_6", "q", "(q^3+1)(q+1)/2",
    _dom_odd_pp_spread,
    lambda q: Fraction((q ** 3 + 1) * (q + 1), 2),
))
_register(FamilyFormula(
    "hyperbolic_quadric_7", "q", "(q^6-1)/(2(q-1))",
    _dom_odd_pp_spread,
    lambda q: Fraction(q ** 6 - 1, 2 * (q - 1)),
))
_register(FamilyFormula(
    "symplectic_dual_polar", "r q", "(q^r+1)(q^(r-1)-1)/(2(q-1))",
    _dom_symplectic,
    lambda r, q: Fraction((q ** r + 1) * (q ** (r - 1) - 1), 2 * (q - 1)),
))
_register(FamilyFormula(
    "complement_hyperbolic_quadric_3", "q", "(q^2-1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q * q - 1, 2),
    lambda q: complement(generate("hamming", 2, q + 1)),
))
_register(FamilyFormula(
    "complement_parabolic_quadric_4", "q", "q(q^2-1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q * (q * q - 1), 2),
))
_register(FamilyFormula(
    "complement_elliptic_quadric_5", "q", "q^2(q^2-1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q * q * (q * q - 1), 2),
))
_register(FamilyFormula(
    "complement_symplectic_3", "q", "q(q^2-1)/2",
    _dom_odd_pp,
    lambda q: Fraction(q * (q * q - 1), 2),
))


def list_families():
    return sorted(_REGISTRY)


def get_formula(tag) -> FamilyFormula:
    if tag not in _REGISTRY:
        raise KeyError(f"unknown family {tag!r}; known: {', '.join(list_families())}")
    return _REGISTRY[tag]


def exact_value(tag, *params) -> Fraction:
    """Closed-form i(G) for the family, or a domain error naming the condition."""
    f = get_formula(tag)
    msg = f.domain(*params)
    if msg:
        raise ValueError(f"{tag}{params}: {msg}")
    return f.value(*params)


@dataclass
class VerifyReport:
    tag: str
    params: tuple
    formula: Fraction
    searched: Fraction | None
    agrees: bool | None
    skipped: str | None = None


def verify_family(tag, params, budget: exact.SearchBudget | None = None) -> VerifyReport:
    """Realize the family member and compare the formula with exhaustive search."""
    f = get_formula(tag)
    params = tuple(params)
    val = exact_value(tag, *params)
    if not f.realizable:
        return VerifyReport(tag, params, val, None, None, "no constructor for this family")
    g = f.build(*params)
    budget = budget or exact.DEFAULT_BUDGET
    if g.n > budget.max_n:
        return VerifyReport(tag, params, val, None, None,
                            f"{g.n} vertices exceeds search budget (max_n={budget.max_n})")
    try:
        res = exact.isoperimetric_exact(g, budget)
    except exact.BudgetError as e:
        return VerifyReport(tag, params, val, None, None, str(e))
    return VerifyReport(tag, params, val, res.value, res.value == val)


@dataclass
class SpectrumDemo:
    """A cospectral pair with different isoperimetric numbers."""

    g: Graph
    h: Graph
    cospectral: bool
    i_g: Fraction
    i_h: Fraction


def nds_demo() -> SpectrumDemo:
    """The 4-cube against its switched mate: same spectrum, different i.

    Switching with respect to the neighborhood of a vertex preserves the
    spectrum but breaks the size-8 tight set, pushing i from 1 up to 5/4.
    """
    g = generate("hypercube", 4)
    u = list(g.neighbors(0))
    h = gm_switch(g, u)
    h = Graph(h.n, h.adj, name="Q4 switched mate")
    same = cospectral(g, h)
    i_g = exact.isoperimetric_exact(g).value
    i_h = exact.isoperimetric_exact(h).value
    return SpectrumDemo(g, h, same, i_g, i_h)
