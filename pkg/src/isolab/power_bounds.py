"""Spectral bounds on the isoperimetric number of graph powers.

A polynomial p of degree at most t turns adjacency-spectrum data of G into
bounds on i(G^t): with p_top = p(lambda_1),

    lower:  (p_top - Lambda(p)) / (2 W(p))     when W(p) > 0,
    upper:  ceil(n/2)/n * (p_top - lam(p)) / w(p)   when w(p) > 0,

where Lambda/lam are the max/min of p over the spectrum with one copy of
lambda_1 removed, W is the max off-diagonal entry of p(A), and w is the min
entry over pairs at distance 1..t.  For t = 2 the optimal polynomial is
known in closed form; for general t the optimum is found by sweeping small
LPs over candidate pinnings.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, common_neighbor_stats, distances, graph_power
from .simplex import LPProblem, solve
from .spectra import distinct_eigenvalues, eig_sym

SWEEP_SECONDS = 60.0
_CASE_TOL = 1e-9


@dataclass(frozen=True)
class Poly:
    """Real polynomial a_0 + a_1 x + ... stored low degree first."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")

    @property
    def degree(self):
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0.0:
            d -= 1
        return d

    def __call__(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return "Poly(" + ", ".join(f"{c:g}" for c in self.coeffs) + ")"


@dataclass
class PolyStats:
    """Spectral and entrywise data of p(A) needed by the power bounds."""

    p_top: float       # p at the Perron eigenvalue
    lam_max: float     # max of p over the spectrum minus one Perron copy
    lam_min: float     # min of the same
    w_max: float       # max off-diagonal entry of p(A)
    w_min: float       # min entry of p(A) over pairs at distance 1..t
    t: int


@dataclass
class PowerBound:
    kind: str                 # "lower" | "upper"
    t: int
    value: float | None
    witness: Poly | None
    components: dict = field(default_factory=dict)
    applicable: bool = True
    reason: str = ""
    cases: tuple = ()         # closed t=2 lower: all case tags that hold
    candidates: int = 0       # LP sweeps: candidates solved
    skipped: int = 0          # LP sweeps: infeasible/unbounded candidates
    partial: bool = False     # LP sweeps: time budget expired mid-sweep


def _require_regular(g: Graph):
    k = g.regularity()
    if k is None:
        raise ValueError("power bounds assume a regular graph")
    return k


def _require_connected(g: Graph):
    if not distances(g).connected:
        raise ValueError("power bounds assume a connected graph")


def matrix_powers(g: Graph, t: int):
    """[I, A, A^2, ..., A^t] as float64 arrays."""
    if t < 0:
        raise ValueError("power must be non-negative")
    a = g.adjacency_matrix()
    out = [np.eye(g.n)]
    for _ in range(t):
        out.append(out[-1] @ a)
    return out


def poly_matrix_stats(g: Graph, p: Poly, t: int | None = None) -> PolyStats:
    """Evaluate Lambda(p), lam(p), W(p), w(p) and p(lambda_1) on G."""
    _require_regular(g)
    _require_connected(g)
    if t is None:
        t = p.degree
    if p.degree > t:
        raise ValueError(f"polynomial degree {p.degree} exceeds power {t}")
    evals, _ = eig_sym(g.adjacency_matrix())
    top = float(evals[-1])
    rest = evals[:-1]
    pvals = [p(float(x)) for x in rest]
    powers = matrix_powers(g, max(t, p.degree))
    pa = sum(c * m for c, m in zip(p.coeffs, powers))
    off = pa[~np.eye(g.n, dtype=bool)]
    dm = distances(g).matrix
    near = (dm >= 1) & (dm <= t)
    w_min = float(pa[near].min()) if near.any() else math.inf
    return PolyStats(
        p_top=p(top),
        lam_max=max(pvals),
        lam_min=min(pvals),
        w_max=float(off.max()),
        w_min=w_min,
        t=t,
    )


def poly_lower_bound(g: Graph, t: int, p: Poly) -> PowerBound:
    """i(G^t) >= (p(lambda_1) - Lambda(p)) / (2 W(p)), if applicable."""
    stats = poly_matrix_stats(g, p, t)
    comp = {"p_top": stats.p_top, "lam_max": stats.lam_max, "w_max": stats.w_max}
    if stats.w_max <= 0:
        return PowerBound("lower", t, None, p, comp, False, "W(p) <= 0")
    if stats.p_top < stats.lam_max:
        return PowerBound("lower", t, None, p, comp, False,
                          "p(lambda_1) < Lambda(p)")
    value = (stats.p_top - stats.lam_max) / (2.0 * stats.w_max)
    return PowerBound("lower", t, value, p, comp)


def poly_upper_bound(g: Graph, t: int, p: Poly) -> PowerBound:
    """i(G^t) <= ceil(n/2)/n * (p(lambda_1) - lam(p)) / w(p), if applicable."""
    stats = poly_matrix_stats(g, p, t)
    comp = {"p_top": stats.p_top, "lam_min": stats.lam_min, "w_min": stats.w_min}
    if not math.isfinite(stats.w_min) or stats.w_min <= 0:
        return PowerBound("upper", t, None, p, comp, False, "w(p) <= 0")
    n = g.n
    value = math.ceil(n / 2) / n * (stats.p_top - stats.lam_min) / stats.w_min
    return PowerBound("upper", t, value, p, comp)


def closed_lower_t2(g: Graph) -> PowerBound:
    """Best possible lower bound on i(G^2) from the quadratic family.

    Case selection compares Lambda - lambda_n against M + lambda_2 and
    lambda_1; all cases holding within 1e-9 are reported, the value comes
    from the first applicable one.
    """
    _require_regular(g)
    _require_connected(g)
    ns = common_neighbor_stats(g)
    if ns.max_nonadjacent is None:
        raise ValueError("complete graph: the square adds nothing")
    big = ns.max_adjacent if ns.max_adjacent is not None else 0
    m = ns.max_nonadjacent
    evals, _ = eig_sym(g.adjacency_matrix())
    l1, l2, ln = float(evals[-1]), float(evals[-2]), float(evals[0])

    cases = []
    if big - ln <= m + l2 + _CASE_TOL:
        cases.append("i")
    if m + l2 <= big - ln + _CASE_TOL and big - ln <= l1 + _CASE_TOL:
        cases.append("ii")
    if max(l1, m + l2) <= big - ln + _CASE_TOL:
        cases.append("iii")

    first = cases[0]
    if first == "i":
        value = (l1 - l2) * (l1 + l2 + m - big) / (2.0 * m)
        p = Poly((0.0, m - big, 1.0))
    elif first == "ii":
        value = (l1 - ln) * (l1 + ln + m - big) / (2.0 * m)
        p = Poly((0.0, m - big, 1.0))
    else:
        value = (l1 - l2) * (l1 - ln) / (2.0 * (big - l2 - ln))
        p = Poly((0.0, -(l2 + ln), 1.0))
    comp = {"lambda_1": l1, "lambda_2": l2, "lambda_n": ln,
            "max_adjacent": big, "max_nonadjacent": m}
    return PowerBound("lower", 2, value, p, comp, cases=tuple(cases))


def closed_upper_t2(g: Graph) -> PowerBound:
    """Best possible upper bound on i(G^2) from the quadratic family."""
    _require_regular(g)
    dm = distances(g).matrix
    if not (dm == 2).any():
        raise ValueError("disjoint union of complete graphs: no distance-2 pair")
    ns = common_neighbor_stats(g)
    eta = ns.min_adjacent if ns.min_adjacent is not None else 0
    xi = ns.min_distance2
    evals, _ = eig_sym(g.adjacency_matrix())
    l1 = float(evals[-1])
    target = (eta - xi) / 2.0
    rest = [float(x) for x in evals[:-1]]
    li = min(rest, key=lambda x: (abs(x - target), x))
    n = g.n
    value = math.ceil(n / 2) / n * (l1 - li) * (l1 + li + xi - eta) / xi
    p = Poly((0.0, xi - eta, 1.0))
    comp = {"lambda_1": l1, "lambda_i": li, "min_adjacent": eta,
            "min_distance2": xi}
    return PowerBound("upper", 2, value, p, comp)


def _integer_tuples(powers, pairs):
    """Group vertex pairs by their ((A^0)_{uv}, ..., (A^t)_{uv}) tuple."""
    groups = {}
    for (u, v) in pairs:
        key = tuple(int(round(m[u, v])) for m in powers)
        groups.setdefault(key, (u, v))
    return groups


def _distinct_theta(g: Graph):
    evals, _ = eig_sym(g.adjacency_matrix())
    return [v for v, _ in distinct_eigenvalues(evals)]  # descending


def lp_lower_sweep(g: Graph, t: int, budget_seconds: float = SWEEP_SECONDS) -> PowerBound:
    """Best lower bound on i(G^t) over all degree-t polynomials, by LP sweep.

    One LP per (pinned entry tuple, pinned eigenvalue): W(p) = 1/2 attained
    at the pinned pair, Lambda(p) = 0 attained at the pinned eigenvalue.
    """
    _require_regular(g)
    _require_connected(g)
    if t < 1:
        raise ValueError("power must be at least 1")
    t0 = time.monotonic()
    n = g.n
    powers = matrix_powers(g, t)
    theta = _distinct_theta(g)
    d = len(theta) - 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    groups = _integer_tuples(powers, pairs)
    tuples = sorted(groups)

    best = None
    best_poly = None
    best_pin = None
    solved = 0
    skipped = 0
    partial = False
    for ell in range(1, d + 1):
        for key in tuples:
            if time.monotonic() - t0 > budget_seconds:
                partial = True
                break
            if all(k == 0 for k in key):
                skipped += 1  # pinning a zero tuple to 1/2 cannot be met
                continue
            rows = []
            for other in tuples:
                if other == key:
                    continue
                rows.append((other, "<=", 0.5))
            rows.append((key, "=", 0.5))
            for j, th in enumerate(theta):
                vec = [th ** i for i in range(t + 1)]
                if j == 0:
                    rows.append((vec, ">=", 0.0))
                elif j == ell:
                    rows.append((vec, "=", 0.0))
                else:
                    rows.append((vec, "<=", 0.0))
            obj = [theta[0] ** i for i in range(t + 1)]
            prob = LPProblem.from_rows(obj, rows, sense="max",
                                       free=range(t + 1))
            sol = solve(prob)
            if not sol.ok:
                skipped += 1
                continue
            solved += 1
            if best is None or sol.objective > best + 1e-12:
                best = sol.objective
                best_poly = Poly(sol.x)
                best_pin = (groups[key], ell)
        if partial:
            break
    if best is None:
        return PowerBound("lower", t, None, None, applicable=False,
                          reason="all sweep candidates infeasible",
                          skipped=skipped, partial=partial)
    comp = {"pinned_pair": best_pin[0], "pinned_eigenvalue_index": best_pin[1],
            "objective": best}
    return PowerBound("lower", t, best, best_poly, comp,
                      candidates=solved, skipped=skipped, partial=partial)


def lp_upper_sweep(g: Graph, t: int, budget_seconds: float = SWEEP_SECONDS) -> PowerBound:
    """Best upper bound on i(G^t) over all degree-t polynomials, by LP sweep.

    One LP per (pinned entry tuple, pinned eigenvalue): w(p) = 1 attained at
    the pinned pair (within distance t), lam(p) = 0 at the pinned eigenvalue.
    """
    _require_regular(g)
    _require_connected(g)
    if t < 1:
        raise ValueError("power must be at least 1")
    t0 = time.monotonic()
    n = g.n
    powers = matrix_powers(g, t)
    dm = distances(g).matrix
    theta = _distinct_theta(g)
    d = len(theta) - 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
             if 1 <= dm[u, v] <= t]
    groups = _integer_tuples(powers, pairs)
    tuples = sorted(groups)

    best = None
    best_poly = None
    best_pin = None
    solved = 0
    skipped = 0
    partial = False
    for ell in range(1, d + 1):
        for key in tuples:
            if time.monotonic() - t0 > budget_seconds:
                partial = True
                break
            rows = []
            for other in tuples:
                if other == key:
                    continue
                rows.append((other, ">=", 1.0))
            rows.append((key, "=", 1.0))
            for j, th in enumerate(theta):
                vec = [th ** i for i in range(t + 1)]
                if j == 0:
                    continue  # p(theta_0) is the objective, unconstrained
                if j == ell:
                    rows.append((vec, "=", 0.0))
                else:
                    rows.append((vec, ">=", 0.0))
            obj = [theta[0] ** i for i in range(t + 1)]
            prob = LPProblem.from_rows(obj, rows, sense="min",
                                       free=range(t + 1))
            sol = solve(prob)
            if not sol.ok:
                skipped += 1
                continue
            solved += 1
            if best is None or sol.objective < best - 1e-12:
                best = sol.objective
                best_poly = Poly(sol.x)
                best_pin = (groups[key], ell)
        if partial:
            break
    if best is None:
        return PowerBound("upper", t, None, None, applicable=False,
                          reason="all sweep candidates infeasible",
                          skipped=skipped, partial=partial)
    value = math.ceil(n / 2) / n * best
    comp = {"pinned_pair": best_pin[0], "pinned_eigenvalue_index": best_pin[1],
            "objective": best}
    return PowerBound("upper", t, value, best_poly, comp,
                      candidates=solved, skipped=skipped, partial=partial)


def fit_power_polynomial(g: Graph, t: int, tol: float = 1e-8) -> Poly | None:
    """Polynomial p of degree <= t with p(A) = A(G^t), when one exists.

    Solved entrywise by least squares over the stacked matrix powers;
    accepted only when the max-norm residual stays below tol.  Distance-
    regular graphs of diameter >= t always admit one.
    """
    _require_regular(g)
    powers = matrix_powers(g, t)
    target = graph_power(g, t).adjacency_matrix().ravel()
    cols = np.stack([m.ravel() for m in powers], axis=1)
    coeffs, *_ = np.linalg.lstsq(cols, target, rcond=None)
    resid = np.abs(cols @ coeffs - target).max()
    if resid >= tol:
        return None
    return Poly(coeffs)


@dataclass
class RelatedSpectraBounds:
    """Bounds on i(G^t) read off the spectrum of p(A) = A(G^t)."""

    lower: float
    upper_geometric: float
    upper_tail: float
    poly: Poly


def related_spectra_bounds(g: Graph, t: int) -> RelatedSpectraBounds | None:
    """When A(G^t) is a polynomial in A, bound i(G^t) from G's spectrum.

    The Laplacian gap of G^t is p(lambda_1) - Lambda(p) and its largest
    Laplacian eigenvalue is p(lambda_1) - lam(p), which feed the one-graph
    spectral bounds directly.  Returns None when no polynomial fits.
    """
    p = fit_power_polynomial(g, t)
    if p is None:
        return None
    stats = poly_matrix_stats(g, p, t)
    gap = stats.p_top - stats.lam_max
    lower = gap / 2.0
    upper_geometric = math.sqrt(max(stats.p_top ** 2 - stats.lam_max ** 2, 0.0))
    n = g.n
    upper_tail = math.ceil(n / 2) / n * (stats.p_top - stats.lam_min)
    return RelatedSpectraBounds(lower, upper_geometric, upper_tail, p)
