"""Eigenvalue machinery and the classical spectral cut bounds.

Conventions: adjacency eigenvalues are reported in descending order
(lambda_1 >= ... >= lambda_n), Laplacian eigenvalues in ascending order
(mu_1 = 0 <= mu_2 <= ... <= mu_n), matching the usual statements of the
algebraic-connectivity bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import common_neighbor_stats, complement, cut_metrics

__all__ = [
    "eig_sym",
    "adjacency_spectrum",
    "laplacian_spectrum",
    "distinct_eigenvalues",
    "spectral_gap_bounds",
    "laplacian_tail_upper",
    "grone_merris_upper",
    "quotient_matrix",
    "interlace_bounds",
    "eta_lambda_check",
    "cospectral",
    "complement_spectrum_check",
]


def eig_sym(matrix, check_tol=1e-9):
    """Eigen-decomposition of a real symmetric matrix.

    Returns (values ascending, columns of eigenvectors).  Uses the LAPACK
    symmetric solver; the input is validated for symmetry first.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.T).max(initial=0.0) > check_tol * scale:
        raise ValueError("matrix is not symmetric")
    values, vectors = np.linalg.eigh(m)
    return values, vectors


def adjacency_spectrum(g):
    """Adjacency eigenvalues, descending."""
    values, _ = eig_sym(g.adjacency_matrix())
    return values[::-1].copy()


def laplacian_spectrum(g):
    """Laplacian eigenvalues, ascending (mu_1 = 0 for any graph)."""
    values, _ = eig_sym(g.laplacian_matrix())
    return values


def distinct_eigenvalues(values, tol=1e-6):
    """Group a sorted eigenvalue array into (value, multiplicity) pairs.

    Neighbouring entries closer than tol fall into one group; the reported
    value is the group mean.
    """
    vals = np.sort(np.asarray(values, dtype=np.float64))[::-1]
    groups = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or abs(vals[i] - vals[i - 1]) > tol:
            chunk = vals[start:i]
            groups.append((float(chunk.mean()), len(chunk)))
            start = i
    return groups


@dataclass
class GapBounds:
    lower: float
    upper: float
    mu2: float
    degenerate: bool


def spectral_gap_bounds(g):
    """Algebraic-connectivity sandwich: mu2/2 <= i(G) <= sqrt(mu2(2*dmax - mu2)).

    The upper bound degenerates (is not valid) when 2*dmax = mu2, which only
    happens for very small graphs such as K2; the flag records it.
    """
    mu = laplacian_spectrum(g)
    if g.n < 2:
        raise ValueError("need at least two vertices")
    mu2 = float(mu[1])
    dmax = max(g.degrees())
    rad = mu2 * (2 * dmax - mu2)
    degenerate = rad <= 0 or 2 * dmax - mu2 < 1e-12
    upper = math.sqrt(max(rad, 0.0))
    return GapBounds(lower=mu2 / 2.0, upper=upper, mu2=mu2, degenerate=degenerate or upper < mu2 / 2.0)


def laplacian_tail_upper(g):
    """Upper bound ceil(n/2)/n * mu_n, valid for regular graphs."""
    if not g.is_regular():
        raise ValueError("bound requires a regular graph")
    mu = laplacian_spectrum(g)
    return (math.ceil(g.n / 2) / g.n) * float(mu[-1])


def grone_merris_upper(g):
    """Degree-corrected Laplacian partial-sum upper bound.

    i(G) <= min over ceil(n/2) <= m < n of sum_{i=1..m} (mu_{n+1-i} - d_i)
    with the degree sequence sorted descending.  Returns (value, best m).
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    mu = laplacian_spectrum(g)
    mu_desc = mu[::-1]
    degs = sorted(g.degrees(), reverse=True)
    partial = np.cumsum(mu_desc - np.array(degs, dtype=np.float64))
    lo = math.ceil(n / 2)
    best_val, best_m = None, None
    for m in range(lo, n):
        v = float(partial[m - 1])
        if best_val is None or v < best_val:
            best_val, best_m = v, m
    return best_val, best_m


def quotient_matrix(matrix, partition, tol=1e-9):
    """Row-sum quotient of a symmetric matrix over a vertex partition.

    Returns (B, equitable) where B[r,s] is the average row sum from part r
    into part s, and equitable is True iff every row sum within each block is
    constant (within tol).
    """
    m = np.asarray(matrix, dtype=np.float64)
    n = m.shape[0]
    cover = sorted(v for part in partition for v in part)
    if cover != list(range(n)):
        raise ValueError("partition must cover 0..n-1 exactly once")
    parts = [np.asarray(sorted(p), dtype=np.intp) for p in partition]
    if any(len(p) == 0 for p in parts):
        raise ValueError("empty partition class")
    k = len(parts)
    b = np.zeros((k, k))
    equitable = True
    for r in range(k):
        for s in range(k):
            block = m[np.ix_(parts[r], parts[s])]
            sums = block.sum(axis=1)
            b[r, s] = sums.mean()
            if np.abs(sums - b[r, s]).max(initial=0.0) > tol:
                equitable = False
    return b, equitable


@dataclass
class InterlaceBounds:
    lower: float
    upper: float
    actual: Fraction | None = None
    tight_lower: bool = False
    tight_upper: bool = False
    equitable: bool = False


def interlace_bounds(g, subset, tol=1e-8):
    """Two-sided bound (1-s/n)mu_2 <= |bd(S)|/|S| <= (1-s/n)mu_n for regular g.

    Equality on either side forces {S, V-S} to be an equitable partition;
    when a bound is tight within tol the partition is checked and reported.
    """
    if not g.is_regular():
        raise ValueError("interlacing bound requires a regular graph")
    s = sorted(set(subset))
    if not 0 < len(s) < g.n:
        raise ValueError("subset must be nonempty and proper")
    mu = laplacian_spectrum(g)
    frac = 1.0 - len(s) / g.n
    lower = frac * float(mu[1])
    upper = frac * float(mu[-1])
    res = cut_metrics(g, s)
    actual = res.expansion
    a = float(actual)
    tight_lo = abs(a - lower) <= tol
    tight_hi = abs(a - upper) <= tol
    eq = False
    if tight_lo or tight_hi:
        rest = sorted(set(range(g.n)) - set(s))
        _, eq = quotient_matrix(g.adjacency_matrix(), [s, rest])
    return InterlaceBounds(
        lower=lower,
        upper=upper,
        actual=actual,
        tight_lower=tight_lo,
        tight_upper=tight_hi,
        equitable=eq,
    )


def eta_lambda_check(g):
    """Check min common neighbours over edges <= lambda_1 + lambda_n.

    Returns (eta, lambda_1 + lambda_n, holds).  Requires at least one edge.
    """
    stats = common_neighbor_stats(g)
    if stats.min_adjacent is None:
        raise ValueError("graph has no edges")
    lam = adjacency_spectrum(g)
    bound = float(lam[0] + lam[-1])
    eta = stats.min_adjacent
    return eta, bound, eta <= bound + 1e-9


def cospectral(g, h, tol=1e-7):
    """True iff adjacency and Laplacian spectra agree entrywise within tol."""
    if g.n != h.n:
        return False
    a_ok = bool(
        np.allclose(adjacency_spectrum(g), adjacency_spectrum(h), atol=tol, rtol=0)
    )
    l_ok = bool(
        np.allclose(laplacian_spectrum(g), laplacian_spectrum(h), atol=tol, rtol=0)
    )
    return a_ok and l_ok


def complement_spectrum_check(g, tol=1e-8):
    """Laplacian duality: mu_i(G) + mu_{n+2-i}(complement) = n for i >= 2."""
    mu = laplacian_spectrum(g)
    muc = laplacian_spectrum(complement(g))
    n = g.n
    worst = 0.0
    for i in range(1, n):  # ascending index i corresponds to mu_{i+1}
        s = mu[i] + muc[n - i]
        worst = max(worst, float(abs(s - n)))
    return worst <= tol, worst
