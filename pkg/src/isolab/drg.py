"""Distance-regular graph machinery: arrays, intersection numbers, and the
sparsity LP with its closed-form optimum.

A connected graph is distance-regular when the numbers c_i, a_i, b_i of
neighbours that a vertex v has at distance i-1, i, i+1 from u depend only on
i = d(u,v).  For such graphs the Linial-London-Rabinovich sparsity LP has
optimum k_1 / sum_j j*k_j, certified here three independent ways: the metric
primal point, a back-substituted restricted dual, and a direct simplex solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graphs import Graph, distances
from .simplex import LPProblem, check_feasible, solve

_DIRECT_CAP = 30  # lp_linial_direct: C(n,2) variables, 3*C(n,3) triangle rows


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0, ..., b_{D-1}; c_1, ..., c_D} with the derived sequences."""

    b: tuple
    c: tuple

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("need equal, positive numbers of b and c entries")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("intersection array entries must be positive")

    @property
    def diameter(self):
        return len(self.b)

    @property
    def valency(self):
        return self.b[0]

    @property
    def a(self):
        """a_0..a_D where a_i = k - b_i - c_i (b_D = 0, c_0 = 0)."""
        k = self.valency
        b = self.b + (0,)
        c = (0,) + self.c
        return tuple(k - b[i] - c[i] for i in range(self.diameter + 1))

    @property
    def k_seq(self):
        """k_0..k_D, the sizes of the distance classes."""
        ks = [Fraction(1)]
        for j in range(1, self.diameter + 1):
            ks.append(ks[-1] * self.b[j - 1] / self.c[j - 1])
        out = []
        for v in ks:
            if v.denominator != 1 or v <= 0:
                raise ValueError(f"non-integral distance class size {v}")
            out.append(int(v))
        return tuple(out)

    @property
    def n(self):
        return sum(self.k_seq)

    @classmethod
    def from_string(cls, text):
        """Parse "b0,b1,..;c1,c2,.." (spaces and {}/[] decoration allowed)."""
        clean = text.strip().strip("{}[]")
        try:
            bpart, cpart = clean.split(";")
            b = tuple(int(x) for x in bpart.replace(",", " ").split())
            c = tuple(int(x) for x in cpart.replace(",", " ").split())
        except ValueError as exc:
            raise ValueError(f"cannot parse intersection array {text!r}") from exc
        return cls(b, c)

    def __str__(self):
        bs = ",".join(str(x) for x in self.b)
        cs = ",".join(str(x) for x in self.c)
        return "{" + bs + ";" + cs + "}"


def _distance_masks(g: Graph, dm):
    """masks[u][i] = bitmask of vertices at distance i from u."""
    diam = int(dm.max())
    masks = []
    for u in range(g.n):
        row = [0] * (diam + 1)
        for v in range(g.n):
            row[dm[u, v]] |= 1 << v
        masks.append(row)
    return masks


def detect_drg(g: Graph):
    """Verified intersection array, or None if G is not distance-regular.

    The constants are read off one base vertex and then checked for every
    (vertex, vertex) pair at every distance.
    """
    info = distances(g)
    if not info.connected or g.n < 2:
        return None
    dm = info.matrix
    diam = info.diameter
    masks = _distance_masks(g, dm)
    b = [None] * diam
    c = [None] * (diam + 1)
    a = [None] * (diam + 1)
    for u in range(g.n):
        mu = masks[u]
        for v in range(g.n):
            i = int(dm[u, v])
            nb = g.adj[v]
            ci = (nb & mu[i - 1]).bit_count() if i >= 1 else 0
            ai = (nb & mu[i]).bit_count()
            bi = (nb & mu[i + 1]).bit_count() if i < diam else 0
            if i >= 1:
                if c[i] is None:
                    c[i] = ci
                elif c[i] != ci:
                    return None
            if a[i] is None:
                a[i] = ai
            elif a[i] != ai:
                return None
            if i < diam:
                if b[i] is None:
                    b[i] = bi
                elif b[i] != bi:
                    return None
    try:
        arr = IntersectionArray(tuple(b), tuple(c[1:]))
        if arr.n != g.n:
            return None
    except ValueError:
        return None
    return arr


@dataclass(frozen=True)
class IntersectionNumbers:
    """p[h][i][j] = #vertices at distances (i, j) from a pair at distance h."""

    array: IntersectionArray
    p: tuple  # nested (D+1)^3 tuple of ints

    @property
    def diameter(self):
        return self.array.diameter


def intersection_numbers(g: Graph, arr: IntersectionArray | None = None) -> IntersectionNumbers:
    """Count the p^h_{ij} on the graph and verify them on a second pair."""
    if arr is None:
        arr = detect_drg(g)
        if arr is None:
            raise ValueError("graph is not distance-regular")
    dm = distances(g).matrix
    diam = arr.diameter
    masks = _distance_masks(g, dm)

    def count(u, v):
        return tuple(
            tuple((masks[u][i] & masks[v][j]).bit_count()
                  for j in range(diam + 1))
            for i in range(diam + 1)
        )

    def find_pair(h, us, skip=None):
        for u in us:
            for v in range(g.n):
                if dm[u, v] == h and (u, v) != skip:
                    return (u, v)
        return None

    tensor = []
    for h in range(diam + 1):
        rep = find_pair(h, range(g.n))
        other = find_pair(h, range(g.n - 1, -1, -1), skip=rep)
        first = count(*rep)
        if other is not None and count(*other) != first:
            raise ValueError(
                f"intersection numbers differ between pairs at distance {h}; "
                "graph is not distance-regular"
            )
        tensor.append(first)

    nums = IntersectionNumbers(arr, tuple(tensor))
    _verify_tensor(nums)
    return nums


def _verify_tensor(nums: IntersectionNumbers):
    arr = nums.array
    d = arr.diameter
    ks = arr.k_seq
    p = nums.p
    for h in range(d + 1):
        for i in range(d + 1):
            for j in range(d + 1):
                if p[h][i][j] != p[h][j][i]:
                    raise ValueError(f"p^{h} is not symmetric at ({i},{j})")
                if ks[h] * p[h][i][j] != ks[i] * p[i][h][j]:
                    raise ValueError(
                        f"double-counting symmetry fails at h={h}, i={i}, j={j}"
                    )
            if sum(p[h][i]) != ks[i]:
                raise ValueError(f"row sum of p^{h}_{i},* is not k_{i}")


def lemma_identity_check(g_or_nums) -> bool:
    """Exact integer identity tying the p^h to the k-sequence.

    For every h >= 2:
        sum_{i=1}^{h-1} 2i * k_i * p^i_{h,h-i}  ==  h * k_h * sum_{i=1}^{h-1} p^h_{i,h-i}
    """
    nums = g_or_nums
    if isinstance(g_or_nums, Graph):
        nums = intersection_numbers(g_or_nums)
    arr = nums.array
    ks = arr.k_seq
    p = nums.p
    for h in range(2, arr.diameter + 1):
        lhs = sum(2 * i * ks[i] * p[i][h][h - i] for i in range(1, h))
        rhs = h * ks[h] * sum(p[h][i][h - i] for i in range(1, h))
        if lhs != rhs:
            return False
    return True


def drg_sparsity_bound(arr: IntersectionArray) -> Fraction:
    """sigma(G) >= k_1 / sum_j j*k_j, from the intersection array alone."""
    ks = arr.k_seq
    denom = sum(j * ks[j] for j in range(1, arr.diameter + 1))
    return Fraction(ks[1], denom)


def drg_iso_lower(arr: IntersectionArray, n: int) -> Fraction:
    """i(G) >= n*k_1 / (2 * sum_j j*k_j)."""
    if n != arr.n:
        raise ValueError(f"array accounts for {arr.n} vertices, got n={n}")
    ks = arr.k_seq
    denom = 2 * sum(j * ks[j] for j in range(1, arr.diameter + 1))
    return Fraction(n * ks[1], denom)


def array_eigenvalues(arr: IntersectionArray):
    """The D+1 distinct adjacency eigenvalues, decreasing.

    Multiplication by A acts on the distance-matrix basis through the
    tridiagonal matrix with rows a_i, superdiagonal b_i and subdiagonal
    c_{i+1}; its spectrum is exactly the distinct spectrum of A.
    """
    d = arr.diameter
    t = np.zeros((d + 1, d + 1))
    a = arr.a
    for i in range(d + 1):
        t[i, i] = a[i]
        if i < d:
            t[i, i + 1] = arr.b[i]
            t[i + 1, i] = arr.c[i]
    evals = np.linalg.eigvals(t)
    if np.abs(evals.imag).max() > 1e-9:
        raise ValueError("intersection matrix has non-real spectrum")
    return sorted((float(x) for x in evals.real), reverse=True)


def wiener_index(g: Graph) -> int:
    dm = distances(g)
    if not dm.connected:
        raise ValueError("Wiener index needs a connected graph")
    return int(dm.matrix.sum()) // 2


def _pair_index(n):
    pairs = list(combinations(range(n), 2))
    idx = {p: k for k, p in enumerate(pairs)}
    return pairs, idx


def _linial_problem(g: Graph):
    """The sparsity relaxation: min edge mass, total mass >= 1, metric rows."""
    n = g.n
    pairs, idx = _pair_index(n)
    nv = len(pairs)
    c = np.zeros(nv)
    for (u, v) in g.edges():
        c[idx[(min(u, v), max(u, v))]] = 1.0
    rows = [(np.ones(nv), ">=", 1.0)]
    for (u, v, w) in combinations(range(n), 3):
        e_uv, e_vw, e_uw = idx[(u, v)], idx[(v, w)], idx[(u, w)]
        for pos, neg in (((e_uv, e_vw), e_uw),
                         ((e_uv, e_uw), e_vw),
                         ((e_uw, e_vw), e_uv)):
            row = np.zeros(nv)
            row[pos[0]] = 1.0
            row[pos[1]] = 1.0
            row[neg] = -1.0
            rows.append((row, ">=", 0.0))
    return LPProblem.from_rows(c, rows, sense="min"), pairs, idx


@dataclass
class PrimalReport:
    value: Fraction
    feasible: bool
    worst_violation: float


def primal_value(g: Graph, check_lp: bool | None = None) -> PrimalReport:
    """Objective of the metric point x_uv = d(u,v)/W_G in the sparsity LP.

    The point is always feasible (graph metric satisfies the triangle rows
    and the masses sum to exactly 1), so its value |E|/W_G upper-bounds the
    LP optimum; for distance-regular graphs it attains it.
    """
    w = wiener_index(g)
    value = Fraction(g.num_edges, w)
    if check_lp is None:
        check_lp = g.n <= _DIRECT_CAP
    if check_lp:
        prob, pairs, _ = _linial_problem(g)
        dm = distances(g).matrix
        x = np.array([dm[u, v] / w for (u, v) in pairs])
        ok, worst, _ = check_feasible(prob, x)
        return PrimalReport(value, ok, worst)
    # too large for the explicit LP: verify the same rows combinatorially
    dm = distances(g).matrix
    worst = 0
    for (u, v, w3) in combinations(range(g.n), 3):
        duv, dvw, duw = int(dm[u, v]), int(dm[v, w3]), int(dm[u, w3])
        slack = min(duv + dvw - duw, duv + duw - dvw, duw + dvw - duv)
        worst = min(worst, slack)
    return PrimalReport(value, worst >= 0, float(max(0, -worst)))


def lp_linial_direct(g: Graph, max_rounds: int = 60):
    """Direct simplex optimum of the sparsity relaxation.

    Triangle rows are handled lazily: start from the rows that are tight at
    the graph-metric point (geodesic triples), solve, scan all 3*C(n,3) rows
    for violations, add the violated ones, repeat.  The returned point
    satisfies every row, so the optimum equals the full LP's.  Capped at
    n = 30; larger DRGs should use the restricted dual.
    """
    n = g.n
    if n > _DIRECT_CAP:
        raise ValueError(
            f"direct solve capped at n={_DIRECT_CAP}; use "
            "restricted_dual_certificate / drg_sparsity_bound instead"
        )
    info = distances(g)
    if not info.connected:
        raise ValueError("sparsity LP needs a connected graph")
    dm = info.matrix
    pairs, idx = _pair_index(n)
    nv = len(pairs)
    c = np.zeros(nv)
    for (u, v) in g.edges():
        c[idx[(min(u, v), max(u, v))]] = 1.0

    triples = list(combinations(range(n), 3))

    def triangle_row(ti, which):
        u, v, w = triples[ti]
        e_uv, e_vw, e_uw = idx[(u, v)], idx[(v, w)], idx[(u, w)]
        row = np.zeros(nv)
        if which == 0:
            row[e_uv] = row[e_vw] = 1.0
            row[e_uw] = -1.0
        elif which == 1:
            row[e_uv] = row[e_uw] = 1.0
            row[e_vw] = -1.0
        else:
            row[e_uw] = row[e_vw] = 1.0
            row[e_uv] = -1.0
        return row

    active = set()
    rows = [(np.ones(nv), ">=", 1.0)]
    for ti, (u, v, w) in enumerate(triples):
        duv, dvw, duw = int(dm[u, v]), int(dm[v, w]), int(dm[u, w])
        for which, tight in enumerate(
            (duv + dvw == duw, duv + duw == dvw, duw + dvw == duv)
        ):
            if tight:
                active.add((ti, which))
                rows.append((triangle_row(ti, which), ">=", 0.0))

    sol = None
    for _ in range(max_rounds):
        prob = LPProblem.from_rows(c, rows, sense="min")
        nrow = len(rows)
        sol = solve(prob, maxiter=200 * (nrow + nv))
        if not sol.ok:
            return sol
        x = sol.x
        violated = []
        for ti, (u, v, w) in enumerate(triples):
            xuv = x[idx[(u, v)]]
            xvw = x[idx[(v, w)]]
            xuw = x[idx[(u, w)]]
            for which, slack in enumerate(
                (xuv + xvw - xuw, xuv + xuw - xvw, xuw + xvw - xuv)
            ):
                if slack < -1e-9 and (ti, which) not in active:
                    violated.append((slack, ti, which))
        if not violated:
            return sol
        violated.sort(key=lambda t: t[0])
        for _, ti, which in violated[:300]:
            active.add((ti, which))
            rows.append((triangle_row(ti, which), ">=", 0.0))
    raise RuntimeError("constraint generation did not settle; increase max_rounds")


@dataclass
class DualCertificate:
    """Feasible point of the distance-restricted dual with the closed value."""

    psi: Fraction
    y: tuple  # y_2..y_D as Fractions
    feasible: bool
    worst_violation: float

    @property
    def all_positive(self):
        return all(v > 0 for v in self.y)


def restricted_dual_certificate(g: Graph) -> DualCertificate:
    """Back-substituted solution of the restricted dual of the sparsity LP.

    With psi = k_1 / sum_j j*k_j fixed, the last constraint determines y_D,
    and each earlier constraint determines the next y going downward:

        C_h (h>=2):  psi = (sum_{i<h} p^h_{i,h-i}) y_h - 2 sum_{i>h} p^h_{i,i-h} y_i
        C_1:         psi = 1 - 2 sum_{i>=2} p^1_{i,i-1} y_i

    All y_h come out positive and C_1 then holds automatically; both facts
    are re-verified here, exactly in rational arithmetic and numerically
    through the LP feasibility checker.
    """
    nums = intersection_numbers(g)
    arr = nums.array
    d = arr.diameter
    ks = arr.k_seq
    p = nums.p
    psi = drg_sparsity_bound(arr)
    y = {}
    for h in range(d, 1, -1):
        lead = sum(p[h][i][h - i] for i in range(1, h))
        tail = 2 * sum(p[h][i][i - h] * y[i] for i in range(h + 1, d + 1))
        y[h] = (psi + tail) / lead
    c1 = 1 - 2 * sum(p[1][i][i - 1] * y[i] for i in range(2, d + 1))
    exact_ok = (c1 == psi) and all(v > 0 for v in y.values())

    # the same point through the generic feasibility checker, as floats
    nv = d  # variables: psi, y_2..y_D
    rows = []
    row = np.zeros(nv)
    row[0] = 1.0
    for i in range(2, d + 1):
        row[i - 1] = 2.0 * p[1][i][i - 1]
    rows.append((row, "=", 1.0))
    for h in range(2, d + 1):
        row = np.zeros(nv)
        row[0] = 1.0
        row[h - 1] = -float(sum(p[h][i][h - i] for i in range(1, h)))
        for i in range(h + 1, d + 1):
            row[i - 1] = 2.0 * p[h][i][i - h]
        rows.append((row, "=", 0.0))
    prob = LPProblem.from_rows(np.zeros(nv), rows, sense="max", free=[0])
    point = [float(psi)] + [float(y[h]) for h in range(2, d + 1)]
    ok, worst, _ = check_feasible(prob, point)

    return DualCertificate(
        psi=psi,
        y=tuple(y[h] for h in range(2, d + 1)),
        feasible=exact_ok and ok,
        worst_violation=worst,
    )


@dataclass
class SingletonCertificate:
    """Approximation guarantee from cutting off a single vertex."""

    diameter: int
    sigma_upper: Fraction   # sigma({v}) = k/(n-1)
    sigma_lower: Fraction   # k/(D(n-1)), the weakened LP bound
    sigma_ratio: Fraction
    iso_upper: Fraction     # i({v}) = k
    iso_lower: Fraction     # n*k/(2 sum j*k_j)
    iso_ratio: Fraction

    @property
    def sigma_claim_ok(self):
        return self.sigma_ratio <= self.diameter

    @property
    def iso_claim_ok(self):
        return self.iso_ratio <= 2 * self.diameter


def singleton_certificate(g: Graph) -> SingletonCertificate:
    """A single vertex D-approximates sigma and 2D-approximates i on a DRG."""
    arr = detect_drg(g)
    if arr is None:
        raise ValueError("singleton certificate applies to distance-regular graphs")
    n = arr.n
    k = arr.valency
    d = arr.diameter
    sigma_upper = Fraction(k, n - 1)
    sigma_lower = Fraction(k, d * (n - 1))
    iso_upper = Fraction(k)
    iso_lower = drg_iso_lower(arr, n)
    return SingletonCertificate(
        diameter=d,
        sigma_upper=sigma_upper,
        sigma_lower=sigma_lower,
        sigma_ratio=sigma_upper / sigma_lower,
        iso_upper=iso_upper,
        iso_lower=iso_lower,
        iso_ratio=iso_upper / iso_lower,
    )
