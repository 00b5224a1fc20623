"""Random split graphs: a clique, an independent set, and fair-coin cross
edges.  With both parts of size k, the isoperimetric number concentrates on
the minimum degree; the machinery here samples the model reproducibly,
verifies the small-set degree inequality exhaustively, and measures how often
i = delta together with the matching Laplacian upper-bound collapse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import exact
from ._kernels import class_min_boundary
from .graphs import Graph, build_graph
from .spectra import grone_merris_upper


@dataclass(frozen=True)
class SplitSample:
    graph: Graph
    k: int
    ell: int
    seed: object
    clique_part: frozenset
    independent_part: frozenset


def sample_split(k, ell, seed) -> SplitSample:
    """Clique on k vertices, independent set on ell, cross edges with prob 1/2.

    The coin flips come from a counter-based generator keyed by the seed and
    consumed in a fixed (clique vertex, independent vertex) order, so samples
    are reproducible regardless of how trials are scheduled.
    """
    if k < 1 or ell < 0:
        raise ValueError("need k >= 1 and ell >= 0")
    rng = np.random.Generator(np.random.Philox(key=seed))
    bits = rng.integers(0, 2, size=k * ell)
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    pos = 0
    for u in range(k):
        for v in range(k, k + ell):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    g = build_graph(k + ell, edges, name=f"split({k},{ell})")
    return SplitSample(
        graph=g,
        k=k,
        ell=ell,
        seed=seed,
        clique_part=frozenset(range(k)),
        independent_part=frozenset(range(k, k + ell)),
    )


@dataclass
class SmallSetReport:
    """Outcome of checking |dS|/|S| >= delta over all small S."""

    holds: bool | None          # None when the precondition fails
    precondition_met: bool
    delta: int
    max_size: int
    mode: str                   # "exhaustive" or "sampled"
    checked: int
    witness: frozenset | None = None   # a violating set, if one was found

    def __bool__(self):
        return bool(self.holds)


def lemma_small_set_check(sample: SplitSample, rng_seed=0) -> SmallSetReport:
    """Verify that every S with |S| <= k/2 has boundary ratio >= delta.

    Exhaustive when the graph has at most 24 vertices, otherwise a fixed
    number of random subsets per size.  Requires delta <= k/2; a larger
    minimum degree is reported as an unmet precondition, not a failure.
    """
    g = sample.graph
    k = sample.k
    delta = min(g.degrees())
    max_size = k // 2
    if delta > k / 2:
        return SmallSetReport(None, False, delta, max_size, "none", 0)

    n = g.n
    deg = np.array(g.degrees(), dtype=np.int64)
    adj = np.array(g.adj, dtype=np.uint64)
    checked = 0
    if n <= 24:
        for m in range(1, max_size + 1):
            # stop as soon as any set beats delta*m, i.e. bmin <= delta*m - 1
            bmin, wit, visited = class_min_boundary(
                adj, deg, n, m, 0, np.uint64(0), 0, delta * m - 1
            )
            checked += int(visited)
            if bmin < delta * m:
                return SmallSetReport(False, True, delta, max_size, "exhaustive",
                                      checked, frozenset(exact._mask_to_set(int(wit))))
        return SmallSetReport(True, True, delta, max_size, "exhaustive", checked)

    rng = np.random.Generator(np.random.Philox(key=rng_seed))
    per_size = 100_000 // max(1, max_size)
    for m in range(1, max_size + 1):
        for _ in range(per_size):
            subset = rng.choice(n, size=m, replace=False)
            mask = 0
            for v in subset:
                mask |= 1 << int(v)
            b = sum(g.degree(v) - (g.adj[v] & mask).bit_count() for v in subset)
            checked += 1
            if b < delta * m:
                return SmallSetReport(False, True, delta, max_size, "sampled",
                                      checked, frozenset(int(v) for v in subset))
    return SmallSetReport(True, True, delta, max_size, "sampled", checked)


def chernoff_tail(n, p, t) -> float:
    """Upper bound exp(-t^2 / (2np)) for P[X < np - t], X ~ Bin(n, p)."""
    if n < 1 or not 0 < p <= 1:
        raise ValueError("need n >= 1 and 0 < p <= 1")
    if not 0 <= t <= n * p / 2:
        raise ValueError(f"t must lie in [0, np/2] = [0, {n * p / 2}]")
    return math.exp(-t * t / (2 * n * p))


def exact_binomial_lower_tail(n, t, p=Fraction(1, 2)) -> Fraction:
    """P[X < np - t] for X ~ Bin(n, p), exactly."""
    p = Fraction(p)
    cut = n * p - t           # strict inequality: sum over j < cut
    total = Fraction(0)
    q = 1 - p
    for j in range(n + 1):
        if j >= cut:
            break
        total += comb(n, j) * p ** j * q ** (n - j)
    return total


@dataclass
class GmReport:
    gm_bound: float
    i: Fraction
    equal: bool


def gm_equality_check(g: Graph, i_value: Fraction | None = None,
                      budget: exact.SearchBudget | None = None) -> GmReport:
    """Laplacian partial-sum upper bound against exact i on one graph."""
    gm, _ = grone_merris_upper(g)
    if i_value is None:
        i_value = exact.isoperimetric_exact(g, budget or exact.DEFAULT_BUDGET).value
    return GmReport(gm, i_value, abs(gm - float(i_value)) <= 1e-6)


@dataclass
class TrialRecord:
    index: int
    delta: int
    i: Fraction
    equal: bool
    gm_bound: float
    gm_equal: bool
    small_set_holds: bool | None
    delta_envelope: float      # k/2 - sqrt(k log k)/2, the typical lower bound


@dataclass
class ExperimentResult:
    k: int
    trials: int
    seed: int
    mode: str
    fraction_equal: float
    mean_delta: float
    samples: list = field(default_factory=list)


def experiment_i_equals_delta(k, trials, seed, mode="auto",
                              budget: exact.SearchBudget | None = None) -> ExperimentResult:
    """Sample G_{k,k} repeatedly and measure how often i(G) = delta(G).

    Exact mode computes i by exhaustive search per trial (2k within the
    budget cap); heuristic mode only brackets i between the best sampled cut
    and the small-set bound, and is labelled as such in the result.
    """
    budget = budget or exact.DEFAULT_BUDGET
    if mode == "auto":
        mode = "exact" if 2 * k <= budget.max_n else "heuristic"
    envelope = k / 2 - math.sqrt(k * math.log(k)) / 2 if k > 1 else 0.0

    records = []
    equal_count = 0
    for t in range(trials):
        s = sample_split(k, k, seed=[seed, t])
        g = s.graph
        delta = min(g.degrees())
        small = lemma_small_set_check(s)
        if mode == "exact":
            i_val = exact.isoperimetric_exact(g, budget).value
        else:
            i_val = _heuristic_upper(g)
        eq = i_val == delta
        gm = gm_equality_check(g, i_val)
        equal_count += eq
        records.append(TrialRecord(
            index=t, delta=delta, i=i_val, equal=eq,
            gm_bound=gm.gm_bound, gm_equal=gm.equal,
            small_set_holds=small.holds, delta_envelope=envelope,
        ))
    return ExperimentResult(
        k=k, trials=trials, seed=seed, mode=mode,
        fraction_equal=equal_count / trials if trials else 0.0,
        mean_delta=sum(r.delta for r in records) / trials if trials else 0.0,
        samples=records,
    )


def _heuristic_upper(g: Graph) -> Fraction:
    """Best cut ratio over singletons and polished balanced seeds (upper bound)."""
    best = Fraction(min(g.degrees()))
    for m, (b, _mask) in exact._seed_masks(g).items():
        if 1 <= m <= g.n // 2:
            best = min(best, Fraction(b, m))
    return best
