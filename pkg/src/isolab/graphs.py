"""Core graph type and combinatorial operations.

Graphs are simple, undirected and labelled 0..n-1.  Adjacency is stored as a
tuple of integer bitmasks, one per vertex, which keeps boundary counting and
BFS cheap (python ints have fast popcount via int.bit_count()).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "CutResult",
    "NeighborStats",
    "build_graph",
    "generate",
    "cartesian_product",
    "graph_power",
    "complement",
    "gm_switch",
    "induced_subgraph",
    "distances",
    "cut_metrics",
    "common_neighbor_stats",
]


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "adj", "name")

    def __init__(self, n, adj, name=""):
        self.n = n
        self.adj = tuple(adj)
        self.name = name

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges, name=""):
        return build_graph(n, edges, name=name)

    @classmethod
    def from_adjacency(cls, matrix, name=""):
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("loops are not supported")
        n = a.shape[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]]
        return build_graph(n, edges, name=name)

    # -- basic queries ------------------------------------------------------

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self.adj]

    @property
    def num_edges(self):
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v):
        m = self.adj[v]
        out = []
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    def edges(self):
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def is_regular(self):
        degs = self.degrees()
        return len(set(degs)) <= 1

    def regularity(self):
        """Common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def adjacency_matrix(self, dtype=np.float64):
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u in range(self.n):
            for v in self.neighbors(u):
                a[u, v] = 1
        return a

    def laplacian_matrix(self, dtype=np.float64):
        a = self.adjacency_matrix(dtype=dtype)
        return np.diag(a.sum(axis=1)) - a

    def relabel(self, name):
        return Graph(self.n, self.adj, name=name)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        label = self.name or "graph"
        return f"<Graph {label}: n={self.n}, m={self.num_edges}>"


def build_graph(n, edges, name=""):
    """Build a validated simple graph from an edge list.

    Raises ValueError on loops, duplicate edges or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, name=name)


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------


def _complete(n):
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], name=f"K{n}")


def _path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def _cycle(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def _complete_bipartite(m, n):
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return build_graph(m + n, edges, name=f"K{m},{n}")


def _hamming(d, q):
    """Hamming graph H(d,q): words of length d over a q-alphabet, adjacency
    iff Hamming distance one.  H(d,2) is the d-cube."""
    if d < 1 or q < 2:
        raise ValueError("hamming needs d >= 1 and q >= 2")
    n = q**d
    edges = []
    for x in range(n):
        digits = []
        t = x
        for _ in range(d):
            digits.append(t % q)
            t //= q
        for pos in range(d):
            base = x - digits[pos] * q**pos
            for c in range(digits[pos] + 1, q):
                edges.append((x, base + c * q**pos))
    return build_graph(n, edges, name=f"H({d},{q})")


def _hypercube(d):
    g = _hamming(d, 2)
    return g.relabel(f"Q{d}")


def _johnson(n, k):
    """Johnson graph J(n,k): k-subsets of an n-set, adjacent iff the
    intersection has size k-1."""
    if not (0 < k < n):
        raise ValueError("johnson needs 0 < k < n")
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        sset = set(s)
        for out in s:
            rest = sset - {out}
            for add in range(n):
                if add not in sset:
                    t = tuple(sorted(rest | {add}))
                    j = index[t]
                    if j > i:
                        edges.append((i, j))
    return build_graph(len(subsets), edges, name=f"J({n},{k})")


def _is_prime(q):
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _rref_subspaces(q, n, k):
    """All k-dimensional subspaces of GF(q)^n for prime q, each given by the
    row-reduced echelon basis (tuple of row tuples)."""
    out = []
    for pivots in itertools.combinations(range(n), k):
        free_cols = []
        for r in range(k):
            cols = [c for c in range(pivots[r] + 1, n) if c not in pivots]
            free_cols.append(cols)
        total_free = sum(len(c) for c in free_cols)
        for assignment in itertools.product(range(q), repeat=total_free):
            rows = []
            pos = 0
            for r in range(k):
                row = [0] * n
                row[pivots[r]] = 1
                for c in free_cols[r]:
                    row[c] = assignment[pos]
                    pos += 1
                rows.append(tuple(row))
            out.append(tuple(rows))
    return out


def _rank_mod(rows, q, n):
    mat = [list(r) for r in rows]
    rank = 0
    col = 0
    nrows = len(mat)
    while rank < nrows and col < n:
        piv = None
        for r in range(rank, nrows):
            if mat[r][col] % q:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], q - 2, q)
        mat[rank] = [(x * inv) % q for x in mat[rank]]
        for r in range(nrows):
            if r != rank and mat[r][col] % q:
                f = mat[r][col]
                mat[r] = [(a - f * b) % q for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def _grassmann(q, n, k):
    """Grassmann graph: k-subspaces of GF(q)^n, adjacent iff the intersection
    has dimension k-1.  Only prime q is supported."""
    if not _is_prime(q):
        raise ValueError(f"grassmann requires prime q, got {q}")
    if not (0 < k < n):
        raise ValueError("grassmann needs 0 < k < n")
    spaces = _rref_subspaces(q, n, k)
    nverts = len(spaces)
    edges = []
    for i in range(nverts):
        for j in range(i + 1, nverts):
            stacked = spaces[i] + spaces[j]
            if _rank_mod(stacked, q, n) == k + 1:
                edges.append((i, j))
    return build_graph(nverts, edges, name=f"J_{q}({n},{k})")


def _complete_split(clique, independent):
    """Complete split graph: a clique joined completely to an independent set."""
    if clique < 0 or independent < 0:
        raise ValueError("part sizes must be nonnegative")
    n = clique + independent
    edges = [(i, j) for i in range(clique) for j in range(i + 1, n)]
    return build_graph(n, edges, name=f"S({clique},{independent})")


_FAMILIES = {
    "complete": _complete,
    "path": _path,
    "cycle": _cycle,
    "complete_bipartite": _complete_bipartite,
    "hypercube": _hypercube,
    "hamming": _hamming,
    "johnson": _johnson,
    "grassmann": _grassmann,
    "complete_split": _complete_split,
}


def generate(family, *args, **kwargs):
    """Generate a named parametric family, e.g. generate('cycle', 10)."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unsupported family {family!r}; known: {sorted(_FAMILIES)}"
        ) from None
    return builder(*args, **kwargs)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def cartesian_product(g, h):
    """Cartesian product: (u1,u2) ~ (v1,v2) iff equal in one coordinate and
    adjacent in the other.  Vertex (u1,u2) maps to index u1*h.n + u2."""
    n = g.n * h.n
    edges = []
    for u1 in range(g.n):
        base = u1 * h.n
        for (a, b) in h.edges():
            edges.append((base + a, base + b))
    for (a, b) in g.edges():
        for u2 in range(h.n):
            edges.append((a * h.n + u2, b * h.n + u2))
    name = f"{g.name or 'G'} x {h.name or 'H'}"
    return build_graph(n, edges, name=name)


def distances(g):
    """All-pairs distances by BFS from every vertex (bitmask frontier)."""
    n = g.n
    full = (1 << n) - 1
    mat = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        seen = 1 << s
        frontier = 1 << s
        d = 0
        mat[s, s] = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= g.adj[b.bit_length() - 1]
                m ^= b
            nxt &= full & ~seen
            d += 1
            m = nxt
            while m:
                b = m & -m
                mat[s, b.bit_length() - 1] = d
                m ^= b
            seen |= nxt
            frontier = nxt
    return DistanceMatrix(mat)


@dataclass
class DistanceMatrix:
    """All-pairs distance matrix; -1 marks unreachable pairs."""

    matrix: np.ndarray

    @property
    def n(self):
        return self.matrix.shape[0]

    @property
    def connected(self):
        return bool((self.matrix >= 0).all())

    @property
    def diameter(self):
        """Largest finite distance (diameter of the graph if connected)."""
        return int(self.matrix.max())

    def dist(self, u, v):
        return int(self.matrix[u, v])

    def pairs_at(self, d):
        """Unordered pairs (u,v), u<v, at distance exactly d."""
        us, vs = np.nonzero(np.triu(self.matrix == d, k=1))
        return list(zip(us.tolist(), vs.tolist()))

    def eccentricity(self, v):
        return int(self.matrix[v].max())


def graph_power(g, t):
    """t-th power: u ~ v iff 1 <= d(u,v) <= t in g."""
    if t < 1:
        raise ValueError("power exponent must be >= 1")
    dm = distances(g).matrix
    close = (dm >= 1) & (dm <= t)
    adj = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in np.nonzero(close[u])[0]:
            row |= 1 << int(v)
        adj[u] = row
    name = f"{g.name}^{t}" if g.name else ""
    return Graph(g.n, adj, name=name)


def complement(g):
    full = (1 << g.n) - 1
    adj = [full & ~(m | (1 << v)) for v, m in enumerate(g.adj)]
    name = f"complement({g.name})" if g.name else ""
    return Graph(g.n, adj, name=name)


def induced_subgraph(g, vertices):
    """Induced subgraph on the given vertex collection (order preserved after
    sorting); returns the subgraph with vertices relabelled 0..k-1."""
    verts = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if g.has_edge(u, v):
                edges.append((pos[u], pos[v]))
    return build_graph(len(verts), edges)


def gm_switch(g, switch_set):
    """Godsil-McKay switching on a single cell.

    The cell U must have even size and every vertex outside U must have
    0, |U|/2 or |U| neighbours inside U.  Vertices outside U with exactly
    |U|/2 neighbours in U get their adjacencies to U complemented; everything
    else is unchanged.  The result is cospectral with the input.
    """
    u_set = sorted(set(switch_set))
    if any(not 0 <= v < g.n for v in u_set):
        raise ValueError("switching set out of range")
    size = len(u_set)
    if size == 0 or size % 2:
        raise ValueError("switching set must be nonempty of even size")
    u_mask = 0
    for v in u_set:
        u_mask |= 1 << v
    half = size // 2
    flip = []
    for w in range(g.n):
        if (u_mask >> w) & 1:
            continue
        deg_in = (g.adj[w] & u_mask).bit_count()
        if deg_in == half:
            flip.append(w)
        elif deg_in not in (0, size):
            raise ValueError(
                f"vertex {w} has {deg_in} neighbours in the switching set; "
                f"expected 0, {half} or {size}"
            )
    adj = list(g.adj)
    for w in flip:
        old = adj[w] & u_mask
        new = u_mask & ~old
        adj[w] = (adj[w] & ~u_mask) | new
        gained = new & ~old
        lost = old & ~new
        m = gained
        while m:
            b = m & -m
            adj[b.bit_length() - 1] |= 1 << w
            m ^= b
        m = lost
        while m:
            b = m & -m
            adj[b.bit_length() - 1] &= ~(1 << w)
            m ^= b
    name = f"gm_switch({g.name})" if g.name else ""
    return Graph(g.n, adj, name=name)


# ---------------------------------------------------------------------------
# cut metrics
# ---------------------------------------------------------------------------


@dataclass
class CutResult:
    """Exact cut statistics for one vertex subset."""

    size: int
    boundary: int
    volume: int
    expansion: Fraction  # |boundary| / |S|
    sparsity: Fraction  # |boundary| / (|S| * |V - S|)
    conductance: Fraction | None  # |boundary| / min(vol S, vol V-S); None if 0
    subset: frozenset = field(default_factory=frozenset)


def cut_metrics(g, subset):
    """Boundary size and the three cut ratios for a vertex subset.

    Ratios are exact fractions.  The subset must be nonempty and proper.
    """
    s_mask = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        s_mask |= 1 << v
    size = s_mask.bit_count()
    if size == 0 or size == g.n:
        raise ValueError("subset must be nonempty and proper")
    boundary = 0
    vol = 0
    m = s_mask
    while m:
        b = m & -m
        v = b.bit_length() - 1
        row = g.adj[v]
        vol += row.bit_count()
        boundary += (row & ~s_mask).bit_count()
        m ^= b
    total_vol = 2 * g.num_edges
    min_vol = min(vol, total_vol - vol)
    return CutResult(
        size=size,
        boundary=boundary,
        volume=vol,
        expansion=Fraction(boundary, size),
        sparsity=Fraction(boundary, size * (g.n - size)),
        conductance=Fraction(boundary, min_vol) if min_vol else None,
        subset=frozenset(subset),
    )


@dataclass
class NeighborStats:
    """Extremes of common-neighbour counts over vertex pairs.

    max_adjacent / min_adjacent range over adjacent pairs; max_nonadjacent
    ranges over all non-adjacent pairs (attained at distance two when any
    exists); min_distance2 ranges over pairs at distance exactly two.
    Fields are None when the relevant pair class is empty.
    """

    max_adjacent: int | None
    min_adjacent: int | None
    max_nonadjacent: int | None
    min_distance2: int | None
    argmax_adjacent: tuple | None = None
    argmax_nonadjacent: tuple | None = None


def common_neighbor_stats(g):
    dm = distances(g).matrix
    max_adj = min_adj = None
    max_non = None
    min_d2 = None
    arg_adj = arg_non = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                if max_adj is None or common > max_adj:
                    max_adj, arg_adj = common, (u, v)
                if min_adj is None or common < min_adj:
                    min_adj = common
            else:
                if max_non is None or common > max_non:
                    max_non, arg_non = common, (u, v)
                if dm[u, v] == 2 and (min_d2 is None or common < min_d2):
                    min_d2 = common
    return NeighborStats(
        max_adjacent=max_adj,
        min_adjacent=min_adj,
        max_nonadjacent=max_non,
        min_distance2=min_d2,
        argmax_adjacent=arg_adj,
        argmax_nonadjacent=arg_non,
    )
