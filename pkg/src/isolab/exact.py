"""Exact minimum-cut searches: isoperimetric number, Cheeger constant, sparsity.

All searches are exhaustive over subset-size classes, with two sound prunes
per class: a degree-sum bound on the boundary, and for connected regular
graphs the interlacing bound m * (n - m) / n * mu_2 rounded up.  Classes are
visited in order of most promising bound, and a class is skipped entirely
when its bound cannot beat the best cut found so far.  Seeding (BFS balls,
bipartition halves, local search) happens before any enumeration so the
prunes have something to bite on.

Results carry exact Fractions and the witnessing subset, plus enough
bookkeeping to tell whether the search was complete.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graphs import Graph, complement, cut_metrics
from .spectra import laplacian_spectrum

# enumerated subsets per second, deliberately conservative; used only to
# predict whether a class fits in the time budget before starting it
_EST_RATE = 4.0e7


class BudgetError(RuntimeError):
    """Raised when a search would exceed its budget before it starts."""


@dataclass(frozen=True)
class SearchBudget:
    max_n: int = 32
    max_seconds: float = 300.0


DEFAULT_BUDGET = SearchBudget()


@dataclass
class ExactCut:
    """Outcome of an exhaustive cut search."""

    value: Fraction
    witness: frozenset
    size: int
    boundary: int
    elapsed: float
    visited: int
    certified: bool = True
    skipped_sizes: tuple = ()
    pruned_sizes: tuple = ()

    def __repr__(self):  # keep reprs short, witnesses can be large
        return (
            f"ExactCut(value={self.value}, size={self.size}, "
            f"boundary={self.boundary}, certified={self.certified})"
        )


def _adj_arrays(g: Graph):
    adj = np.array(g.adj, dtype=np.uint64)
    deg = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    return adj, deg


def _mask_to_set(mask: int) -> frozenset:
    out = []
    v = 0
    m = int(mask)
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _boundary_of_mask(g: Graph, mask: int) -> int:
    # sum of degrees minus twice the inside edges; the inside-degree sum
    # below counts every inside edge once per endpoint
    b = 0
    for v in range(g.n):
        if (mask >> v) & 1:
            b += g.degree(v) - (g.adj[v] & mask).bit_count()
    return b


def _components(g: Graph):
    seen = 0
    comps = []
    full = (1 << g.n) - 1
    while seen != full:
        start = (~seen & full).bit_length() - 1
        frontier = 1 << start
        comp = frontier
        while frontier:
            nxt = 0
            m = frontier
            v = 0
            while m:
                if m & 1:
                    nxt |= g.adj[v]
                m >>= 1
                v += 1
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def _check_n(g: Graph, budget: SearchBudget):
    if g.n < 2:
        raise ValueError("cut searches need at least 2 vertices")
    limit = min(budget.max_n, 64)
    if g.n > limit:
        raise BudgetError(
            f"graph has {g.n} vertices, budget allows up to {limit}; "
            "raise SearchBudget.max_n to proceed"
        )


def _class_lower_bounds(g: Graph, mu2: float | None):
    """Integer lower bounds on the boundary at each subset size 1..n-1."""
    n = g.n
    degs = sorted(g.degree(v) for v in range(n))
    bounds = [0] * (n + 1)
    for m in range(1, n):
        # every chosen vertex has at least deg - (m - 1) edges leaving the set
        db = sum(max(d - (m - 1), 0) for d in degs[:m])
        lb = max(db, 1 if m < n else 0)
        if mu2 is not None:
            sb = m * (n - m) / n * mu2
            lb = max(lb, math.ceil(sb - 1e-9))
        bounds[m] = lb
    return bounds


def _bfs_order(g: Graph, start: int):
    order = [start]
    seen = 1 << start
    frontier = g.adj[start] & ~seen
    while frontier:
        verts = []
        m = frontier
        v = 0
        while m:
            if m & 1:
                verts.append(v)
            m >>= 1
            v += 1
        order.extend(verts)
        seen |= frontier
        nxt = 0
        for v in verts:
            nxt |= g.adj[v]
        frontier = nxt & ~seen
    return order


def _two_color(g: Graph):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            m = g.adj[u]
            v = 0
            while m:
                if m & 1:
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        stack.append(v)
                    elif color[v] == color[u]:
                        return None
                m >>= 1
                v += 1
    return color


def _local_search(g: Graph, mask: int):
    """Best-improvement swap descent keeping the subset size fixed."""
    n = g.n
    size = mask.bit_count()
    b = _boundary_of_mask(g, mask)
    for _ in range(200):
        best_delta = 0
        best_pair = None
        inside = [v for v in range(n) if (mask >> v) & 1]
        outside = [v for v in range(n) if not (mask >> v) & 1]
        for u in inside:
            mu = mask & ~(1 << u)
            du = g.degree(u) - 2 * (g.adj[u] & mu).bit_count()
            for w in outside:
                # dw is evaluated on the set without u, so no pair correction
                dw = g.degree(w) - 2 * (g.adj[w] & mu).bit_count()
                delta = dw - du
                if delta < best_delta:
                    best_delta = delta
                    best_pair = (u, w)
        if best_pair is None:
            break
        u, w = best_pair
        mask = (mask & ~(1 << u)) | (1 << w)
        b += best_delta
    return mask, b, size


def _seed_masks(g: Graph):
    """Deterministic candidate subsets of every size up to n // 2."""
    n = g.n
    half = n // 2
    best_at = {}

    def offer(mask):
        size = mask.bit_count()
        if not 1 <= size <= half:
            return
        b = _boundary_of_mask(g, mask)
        if size not in best_at or b < best_at[size][0]:
            best_at[size] = (b, mask)

    for start in range(n):
        order = _bfs_order(g, start)
        mask = 0
        for v in order[:half]:
            mask |= 1 << v
            offer(mask)
    color = _two_color(g)
    if color is not None:
        for c in (0, 1):
            mask = 0
            for v in range(n):
                if color[v] == c:
                    mask |= 1 << v
            offer(mask)
    # polish the most promising seeds in place
    for size in list(best_at):
        b, mask = best_at[size]
        mask2, b2, _ = _local_search(g, mask)
        offer(mask2)
    return best_at


def _run_classes(g: Graph, den_of, budget: SearchBudget, sizes=None):
    """Shared driver: minimize boundary/den_of(size) over subset sizes."""
    from ._kernels import class_min_boundary

    _check_n(g, budget)
    n = g.n
    t0 = time.monotonic()
    comps = _components(g)
    if len(comps) > 1:
        # unions of components give boundary 0; pick the smallest component
        mask = min(comps, key=lambda m: m.bit_count())
        size = mask.bit_count()
        return ExactCut(
            value=Fraction(0),
            witness=_mask_to_set(mask),
            size=size,
            boundary=0,
            elapsed=time.monotonic() - t0,
            visited=0,
        )

    mu2 = None
    if g.is_regular():
        mu2 = float(laplacian_spectrum(g)[1])
    bounds = _class_lower_bounds(g, mu2)
    if sizes is None:
        sizes = range(1, n // 2 + 1)
    sizes = list(sizes)

    seeds = _seed_masks(g)
    best_num = None
    best_den = None
    best_mask = None
    for size in sizes:
        if size in seeds:
            b, mask = seeds[size]
            num, den = b, den_of(size)
            if best_num is None or num * best_den < best_num * den:
                best_num, best_den, best_mask = num, den, mask

    adj, deg = _adj_arrays(g)
    order = sorted(sizes, key=lambda m: bounds[m] / den_of(m))
    visited = 0
    skipped = []
    pruned = []
    for m in order:
        den = den_of(m)
        if best_num is not None and bounds[m] * best_den >= best_num * den:
            pruned.append(m)
            continue
        if n % 2 == 0 and m == n // 2:
            # S and its complement have the same boundary, so fix vertex 0
            lo, mm = 1, m - 1
            base_mask, base_b = 1, g.degree(0)
        else:
            lo, mm = 0, m
            base_mask, base_b = 0, 0
        count = math.comb(n - lo, mm)
        elapsed = time.monotonic() - t0
        remaining = budget.max_seconds - elapsed
        if count / _EST_RATE > max(remaining, 0.0) * 1.25:
            skipped.append(m)
            continue
        bmin, wit, nvis = class_min_boundary(
            adj, deg, n, mm, lo, base_mask, base_b, bounds[m]
        )
        visited += int(nvis)
        bmin = int(bmin)
        if best_num is None or bmin * best_den < best_num * den:
            best_num, best_den, best_mask = bmin, den, int(wit)

    if best_mask is None:
        raise BudgetError("time budget exhausted before any class completed")
    return ExactCut(
        value=Fraction(best_num, best_den),
        witness=_mask_to_set(best_mask),
        size=best_mask.bit_count(),
        boundary=best_num,
        elapsed=time.monotonic() - t0,
        visited=visited,
        certified=not skipped,
        skipped_sizes=tuple(sorted(skipped)),
        pruned_sizes=tuple(sorted(pruned)),
    )


def isoperimetric_exact(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> ExactCut:
    """Exact isoperimetric number: min boundary/|S| over 1 <= |S| <= n/2."""
    return _run_classes(g, lambda m: m, budget)


def sparsity_exact(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> ExactCut:
    """Exact sparsity: min boundary/(|S| * |V - S|), symmetric in S."""
    n = g.n
    return _run_classes(g, lambda m: m * (n - m), budget)


def cheeger_exact(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> ExactCut:
    """Exact Cheeger constant: min boundary/vol(S) with vol(S) <= vol(V)/2."""
    from ._kernels import conductance_sparsity_scan

    _check_n(g, budget)
    k = g.regularity()
    if k is not None and k > 0:
        base = isoperimetric_exact(g, budget)
        return ExactCut(
            value=base.value / k,
            witness=base.witness,
            size=base.size,
            boundary=base.boundary,
            elapsed=base.elapsed,
            visited=base.visited,
            certified=base.certified,
            skipped_sizes=base.skipped_sizes,
            pruned_sizes=base.pruned_sizes,
        )
    t0 = time.monotonic()
    comps = _components(g)
    if len(comps) > 1:
        mask = min(comps, key=lambda m: _boundary_volume(g, m))
        return ExactCut(
            value=Fraction(0),
            witness=_mask_to_set(mask),
            size=mask.bit_count(),
            boundary=0,
            elapsed=time.monotonic() - t0,
            visited=0,
        )
    est = 2.0 ** (g.n - 1) / _EST_RATE
    if est > budget.max_seconds * 1.25:
        raise BudgetError(
            f"all-subsets scan over {g.n} vertices does not fit the time budget"
        )
    adj, deg = _adj_arrays(g)
    ch_num, ch_den, ch_wit, _, _, _ = conductance_sparsity_scan(adj, deg, g.n)
    return ExactCut(
        value=Fraction(int(ch_num), int(ch_den)),
        witness=_mask_to_set(int(ch_wit)),
        size=int(ch_wit).bit_count(),
        boundary=int(ch_num),
        elapsed=time.monotonic() - t0,
        visited=2 ** (g.n - 1) - 1,
    )


def _boundary_volume(g: Graph, mask: int) -> int:
    vol = 0
    for v in range(g.n):
        if (mask >> v) & 1:
            vol += g.degree(v)
    return vol


def cut_at_size(g: Graph, m: int, budget: SearchBudget = DEFAULT_BUDGET):
    """Exact minimum boundary over all subsets of a fixed size.

    Returns (boundary, witness frozenset).
    """
    from ._kernels import class_min_boundary

    _check_n(g, budget)
    n = g.n
    if not 1 <= m <= n - 1:
        raise ValueError(f"size must be between 1 and {n - 1}")
    mu2 = None
    if g.is_regular() and len(_components(g)) == 1:
        mu2 = float(laplacian_spectrum(g)[1])
    bounds = _class_lower_bounds(g, mu2)
    if n % 2 == 0 and m == n // 2:
        lo, mm, base_mask, base_b = 1, m - 1, 1, g.degree(0)
    else:
        lo, mm, base_mask, base_b = 0, m, 0, 0
    count = math.comb(n - lo, mm)
    if count / _EST_RATE > budget.max_seconds * 1.25:
        raise BudgetError(
            f"size-{m} class has {count} subsets, over the time budget"
        )
    adj, deg = _adj_arrays(g)
    bmin, wit, _ = class_min_boundary(
        adj, deg, n, mm, lo, base_mask, base_b, bounds[m]
    )
    return int(bmin), _mask_to_set(int(wit))


def find_tight_set(g: Graph, m: int, kind: str = "gap",
                   budget: SearchBudget = DEFAULT_BUDGET):
    """Search for a size-m set meeting the interlacing bound with equality.

    kind "gap": boundary equals m*(n-m)/n * mu_2 (the smallest possible);
    kind "tail": boundary equals m*(n-m)/n * mu_n (the largest possible).
    Returns the witness frozenset, or None when no such set exists.  The
    graph must be regular.
    """
    if kind not in ("gap", "tail"):
        raise ValueError("kind must be 'gap' or 'tail'")
    if not g.is_regular():
        raise ValueError("tight sets are defined for regular graphs")
    n = g.n
    if not 1 <= m <= n - 1:
        raise ValueError(f"size must be between 1 and {n - 1}")
    if kind == "tail":
        # max boundary in g is min boundary in the complement:
        # the two boundaries always add up to m * (n - m)
        sub = find_tight_set(complement(g), m, "gap", budget)
        return sub
    mu = laplacian_spectrum(g)
    mu2 = float(mu[1])
    target = m * (n - m) / n * mu2
    b_target = round(target)
    if abs(target - b_target) > 1e-6:
        return None  # boundaries are integers, equality is impossible
    from ._kernels import class_min_boundary

    _check_n(g, budget)
    if n % 2 == 0 and m == n // 2:
        lo, mm, base_mask, base_b = 1, m - 1, 1, g.degree(0)
    else:
        lo, mm, base_mask, base_b = 0, m, 0, 0
    adj, deg = _adj_arrays(g)
    bmin, wit, _ = class_min_boundary(
        adj, deg, n, mm, lo, base_mask, base_b, b_target
    )
    if int(bmin) == b_target:
        return _mask_to_set(int(wit))
    return None


def verify_tight(g: Graph, subset, kind: str = "gap", tol: float = 1e-8) -> bool:
    """Check that a subset meets the interlacing bound with equality."""
    if not g.is_regular():
        return False
    mu = laplacian_spectrum(g)
    target_mu = float(mu[1]) if kind == "gap" else float(mu[-1])
    s = len(subset)
    metrics = cut_metrics(g, subset)
    lhs = metrics.boundary / s
    rhs = (1 - s / g.n) * target_mu
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


# -- naive oracles ----------------------------------------------------------
# Independent reference implementations used by the tests.  They share no
# machinery with the kernels above: plain itertools enumeration and edge
# membership tests.


def _edge_list(g: Graph):
    return list(g.edges())


def naive_isoperimetric(g: Graph) -> Fraction:
    edges = _edge_list(g)
    best = None
    for m in range(1, g.n // 2 + 1):
        for sub in combinations(range(g.n), m):
            s = set(sub)
            b = sum(1 for (u, v) in edges if (u in s) != (v in s))
            val = Fraction(b, m)
            if best is None or val < best:
                best = val
    return best


def naive_cheeger(g: Graph) -> Fraction:
    edges = _edge_list(g)
    total = sum(g.degree(v) for v in range(g.n))
    best = None
    for m in range(1, g.n):
        for sub in combinations(range(g.n), m):
            s = set(sub)
            b = sum(1 for (u, v) in edges if (u in s) != (v in s))
            if b == 0:
                return Fraction(0)  # disconnected: 0 by convention
            vol = sum(g.degree(v) for v in s)
            if vol == 0 or 2 * vol > total:
                continue
            val = Fraction(b, vol)
            if best is None or val < best:
                best = val
    return best


def naive_sparsity(g: Graph) -> Fraction:
    edges = _edge_list(g)
    best = None
    for m in range(1, g.n):
        for sub in combinations(range(g.n), m):
            s = set(sub)
            b = sum(1 for (u, v) in edges if (u in s) != (v in s))
            val = Fraction(b, m * (g.n - m))
            if best is None or val < best:
                best = val
    return best


def naive_cut_at_size(g: Graph, m: int) -> int:
    edges = _edge_list(g)
    best = None
    for sub in combinations(range(g.n), m):
        s = set(sub)
        b = sum(1 for (u, v) in edges if (u in s) != (v in s))
        if best is None or b < best:
            best = b
    return best
