"""Numba kernels for exhaustive cut searches on graphs with n <= 64.

The adjacency lives in one uint64 word per vertex.  Fixed-size subsets are
enumerated in lexicographic order with incremental boundary updates (the
amortized cost per subset is a couple of popcounts); the all-subsets scans
use a Gray code so exactly one vertex flips per step.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def class_min_boundary(adj, deg, n, m, lo, base_mask, base_b, stop_at):
    """Minimum edge boundary over sets (base set) + (m vertices from [lo, n)).

    base_mask/base_b describe an already-selected set and its boundary.
    Stops early once a set with boundary <= stop_at is found (pass -1 to
    disable).  Returns (min boundary, witness mask, subsets visited).
    """
    S = np.uint64(base_mask)
    b = np.int64(base_b)
    if m == 0:
        return b, S, np.int64(1)
    comb = np.empty(m, dtype=np.int64)
    for i in range(m):
        v = lo + i
        b += deg[v] - 2 * _popcount(adj[v] & S)
        S |= _ONE << np.uint64(v)
        comb[i] = v
    bmin = b
    wit = S
    visited = np.int64(1)
    if bmin <= stop_at:
        return bmin, wit, visited
    last = m - 1
    top = n - 1
    while True:
        v = comb[last]
        if v < top:
            # fast path: advance the last slot by one
            S &= ~(_ONE << np.uint64(v))
            b -= deg[v] - 2 * _popcount(adj[v] & S)
            v += 1
            b += deg[v] - 2 * _popcount(adj[v] & S)
            S |= _ONE << np.uint64(v)
            comb[last] = v
        else:
            # general case: find the rightmost slot that can advance
            j = last - 1
            while j >= 0 and comb[j] == n - m + j:
                j -= 1
            if j < 0:
                break
            for l in range(last, j - 1, -1):
                u = comb[l]
                S &= ~(_ONE << np.uint64(u))
                b -= deg[u] - 2 * _popcount(adj[u] & S)
            base = comb[j] + 1
            for l in range(j, m):
                u = base + (l - j)
                b += deg[u] - 2 * _popcount(adj[u] & S)
                S |= _ONE << np.uint64(u)
                comb[l] = u
        visited += 1
        if b < bmin:
            bmin = b
            wit = S
            if bmin <= stop_at:
                break
    return bmin, wit, visited


@njit(cache=True)
def conductance_sparsity_scan(adj, deg, n):
    """One Gray-code pass over all subsets containing vertex 0.

    Both target ratios are symmetric under complementation, so fixing
    vertex 0 loses nothing.  Returns the minimizers of
    boundary / min(vol, total - vol) and boundary / (size * (n - size)) as
    (num, den, witness) triples packed in a flat tuple.
    """
    total = np.int64(0)
    for v in range(n):
        total += deg[v]
    S = _ONE
    size = np.int64(1)
    b = np.int64(deg[0])
    vol = np.int64(deg[0])
    ch_num, ch_den, ch_wit = b, min(vol, total - vol), S
    sp_num, sp_den, sp_wit = b, size * (n - size), S
    steps = (_ONE << np.uint64(n - 1)) - _ONE
    g = np.uint64(0)
    while g < steps:
        g += _ONE
        low = g & (np.uint64(0) - g)
        v = _popcount(low - _ONE) + 1  # vertex to flip (ids 1..n-1)
        bit = _ONE << np.uint64(v)
        if S & bit:
            S &= ~bit
            b -= deg[v] - 2 * _popcount(adj[v] & S)
            vol -= deg[v]
            size -= 1
        else:
            b += deg[v] - 2 * _popcount(adj[v] & S)
            S |= bit
            vol += deg[v]
            size += 1
        if size <= 0 or size >= n:
            continue
        d = min(vol, total - vol)
        if d > 0 and b * ch_den < ch_num * d:
            ch_num, ch_den, ch_wit = b, d, S
        d = size * (n - size)
        if b * sp_den < sp_num * d:
            sp_num, sp_den, sp_wit = b, d, S
    return ch_num, ch_den, ch_wit, sp_num, sp_den, sp_wit
