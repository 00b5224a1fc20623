"""Build the named-graph corpus bundled with the package.

Every construction is validated before being written: vertex count, degree,
girth where it pins the graph, the intersection array for distance-regular
entries, isomorphism against networkx where it ships the same graph, and the
closed t=2 bound fingerprints for the power-bound comparison rows.

Usage: python3 tools/make_corpus.py [--out src/isolab/data/named.g6]
"""

from __future__ import annotations

import argparse
import itertools
import sys
from collections import deque

from isolab.drg import detect_drg
from isolab.graph6 import to_graph6
from isolab.graphs import Graph, build_graph, complement, generate, gm_switch
from isolab.power_bounds import closed_lower_t2, closed_upper_t2


def lcf_graph(shifts, reps, name):
    """Cubic graph from a Hamiltonian cycle plus LCF chord exponents."""
    seq = shifts * reps
    n = len(seq)
    es = set()
    for i in range(n):
        es.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
        j = (i + seq[i]) % n
        es.add((min(i, j), max(i, j)))
    g = build_graph(n, sorted(es), name=name)
    assert g.is_regular() and g.regularity() == 3, f"{name}: LCF gave degrees {set(g.degrees())}"
    return g


def quartic_cycle_chords(shifts, reps, name):
    """Hamiltonian cycle plus one outgoing chord i -> i+shift per vertex.

    When the chord map is a fixed-point-free bijection this yields a
    4-regular graph (used for the Folkman graph).
    """
    seq = shifts * reps
    n = len(seq)
    es = set()
    for i in range(n):
        es.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
        j = (i + seq[i]) % n
        es.add((min(i, j), max(i, j)))
    g = build_graph(n, sorted(es), name=name)
    assert g.is_regular() and g.regularity() == 4, f"{name}: degrees {set(g.degrees())}"
    return g


def generalized_petersen(n, k, name):
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, name=name)


def girth(g: Graph):
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def relabel_contiguous(edges, name):
    verts = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    return build_graph(len(verts), [(idx[a], idx[b]) for a, b in edges], name=name)


# ---------------------------------------------------------------- petersen dots


def petersen_dot_products():
    """The two 18-vertex snarks from gluing two Petersen graphs.

    Remove two independent edges (a,b), (c,d) from one copy and two adjacent
    vertices x ~ y from the other; join a,b to x's remaining neighbours and
    c,d to y's.  The inequivalent wirings give exactly two graphs up to
    isomorphism, separated here by their closed t=2 bound fingerprints.
    """
    pet = generalized_petersen(5, 2, "Petersen")
    e1 = (0, 1)
    results = {}
    edges_pet = [tuple(sorted(e)) for e in pet.edges()]
    for e2 in edges_pet:
        if set(e2) & {0, 1} or any(pet.has_edge(a, b) for a in e1 for b in e2):
            pass
        if set(e2) & {0, 1}:
            continue
        a, b = e1
        c, d = e2
        # second copy: delete the adjacent pair (0, 5) of GP(5,2)
        x, y = 0, 5
        xn = [v for v in pet.neighbors(x) if v != y]
        yn = [v for v in pet.neighbors(y) if v != x]
        for xi in (0, 1):
            for yi in (0, 1):
                edges = []
                for (u, v) in edges_pet:
                    if (u, v) in (tuple(sorted(e1)), tuple(sorted(e2))):
                        continue
                    edges.append((u, v))
                for (u, v) in edges_pet:
                    if x in (u, v) or y in (u, v):
                        continue
                    edges.append((u + 10, v + 10))
                edges.append((a, xn[xi] + 10))
                edges.append((b, xn[1 - xi] + 10))
                edges.append((c, yn[yi] + 10))
                edges.append((d, yn[1 - yi] + 10))
                g = relabel_contiguous(edges, "dot")
                if g.n != 18 or not g.is_regular() or g.regularity() != 3:
                    continue
                if girth(g) != 5:
                    continue
                lo = closed_lower_t2(g)
                hi = closed_upper_t2(g)
                key = (round(lo.value, 2), round(hi.value, 2))
                results.setdefault(key, g)
    return results


# ---------------------------------------------------------------- named builds


def build_coxeter():
    """Three heptagons with steps 1, 2, 4 plus a 7-spoke hub."""
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))            # a: step 1
        edges.append((7 + i, 7 + (i + 2) % 7))    # b: step 2
        edges.append((14 + i, 14 + (i + 4) % 7))  # c: step 4 (= {7/3})
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return build_graph(28, edges, name="Coxeter Graph")


def build_icosahedron():
    edges = []
    for i in range(5):
        edges += [(0, 1 + i), (11, 6 + i)]
        edges += [(1 + i, 1 + (i + 1) % 5), (6 + i, 6 + (i + 1) % 5)]
        edges += [(1 + i, 6 + i), (1 + i, 6 + (i - 1) % 5)]
    return build_graph(12, edges, name="Icosahedron")


def build_flower_snark():
    """J5: five claws, a 5-cycle on the hub-tips, a 10-cycle on the rest."""
    # vertices: hubs h_i = i, x_i = 5+i, y_i = 10+i, z_i = 15+i
    edges = []
    for i in range(5):
        edges += [(i, 5 + i), (i, 10 + i), (i, 15 + i)]
        edges.append((5 + i, 5 + (i + 1) % 5))
    for i in range(5):
        edges.append((10 + i, 10 + (i + 1) % 5 if i < 4 else 15))
    # y-run then z-run forming one 10-cycle: y0..y4 z0..z4 y0
    edges = [e for e in edges if not (e[0] >= 10 and e[1] >= 10)]
    ring = [10, 11, 12, 13, 14, 15, 16, 17, 18, 19]
    for i in range(10):
        edges.append((ring[i], ring[(i + 1) % 10]))
    return build_graph(20, edges, name="Flower Snark")


def build_tietze():
    """Petersen with one vertex expanded into a triangle."""
    pet = generalized_petersen(5, 2, "Petersen")
    nbrs = list(pet.neighbors(0))
    edges = [(u, v) for (u, v) in pet.edges() if 0 not in (u, v)]
    t = [10, 11, 12]
    edges += [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
    edges += [(t[i], nbrs[i]) for i in range(3)]
    return relabel_contiguous(edges, "Tietze Graph")


def build_clebsch():
    """Folded 5-cube on F_2^4: adjacency by unit vectors or the all-ones sum."""
    diffs = [0b0001, 0b0010, 0b0100, 0b1000, 0b1111]
    edges = [(x, x ^ d) for x in range(16) for d in diffs if x < (x ^ d)]
    return build_graph(16, edges, name="Clebsch graph")


def build_shrikhande():
    """Cayley graph of Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for x in range(4):
        for y in range(4):
            for (dx, dy) in conn:
                u = 4 * x + y
                v = 4 * ((x + dx) % 4) + (y + dy) % 4
                edges.add((min(u, v), max(u, v)))
    return build_graph(16, sorted(edges), name="Shrikhande graph")


def build_schlafli():
    """Complement of the line-intersection graph of a double six."""
    # vertices: a_i = i, b_i = 6+i, c_{ij} = 12 + index
    cidx = {}
    k = 12
    for i in range(6):
        for j in range(i + 1, 6):
            cidx[(i, j)] = k
            k += 1
    meets = set()
    for i in range(6):
        for j in range(6):
            if i != j:
                meets.add((min(i, 6 + j), max(i, 6 + j)))
    for (i, j), c in cidx.items():
        for m in (i, j):
            meets.add((min(m, c), max(m, c)))            # a_m meets c_ij
            meets.add((min(6 + m, c), max(6 + m, c)))    # b_m meets c_ij
    for (p, c1) in cidx.items():
        for (q, c2) in cidx.items():
            if c1 < c2 and not (set(p) & set(q)):
                meets.add((c1, c2))
    meet_graph = build_graph(27, sorted(meets), name="double-six meets")
    g = complement(meet_graph)
    return Graph(g.n, g.adj, name="Schlafli graph")


def build_hoffman_singleton():
    """Five pentagons and five pentagrams: (0,h,j) ~ (1,i,h*i+j mod 5)."""
    def vid(t, a, b):
        return t * 25 + a * 5 + b

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((vid(0, h, j), vid(0, h, (j + 1) % 5)))
            edges.append((vid(1, h, j), vid(1, h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((vid(0, h, j), vid(1, i, (h * i + j) % 5)))
    return build_graph(50, edges, name="Hoffman-Singleton graph")


def build_sylvester(hosi):
    """Hoffman-Singleton minus the closed neighbourhoods of an edge."""
    u, v = next(iter(hosi.edges()))
    drop = {u, v} | set(hosi.neighbors(u)) | set(hosi.neighbors(v))
    keep = [w for w in range(hosi.n) if w not in drop]
    idx = {w: i for i, w in enumerate(keep)}
    edges = [(idx[a], idx[b]) for (a, b) in hosi.edges() if a in idx and b in idx]
    return build_graph(36, edges, name="Sylvester Graph")


def build_klein7():
    """Coset graph of PSL(2,7) on the cosets of a 7-element subgroup.

    Adjacency by the unique symmetric 49-element double coset that yields a
    distance-regular graph; the intersection array is asserted below.
    """
    pts = list(range(7)) + ["inf"]
    pidx = {p: i for i, p in enumerate(pts)}

    def moebius(a, b, c, d):
        out = []
        for p in pts:
            if p == "inf":
                q = "inf" if c % 7 == 0 else (a * pow(c, 5, 7)) % 7
            else:
                den = (c * p + d) % 7
                if den == 0:
                    q = "inf"
                else:
                    q = ((a * p + b) * pow(den, 5, 7)) % 7
            out.append(pidx[q])
        return tuple(out)

    elems = set()
    for a, b, c, d in itertools.product(range(7), repeat=4):
        if (a * d - b * c) % 7 == 1:
            elems.add(moebius(a, b, c, d))
    elems = sorted(elems)
    assert len(elems) == 168

    def mul(f, g):
        return tuple(f[g[i]] for i in range(8))

    def inv(f):
        out = [0] * 8
        for i, fi in enumerate(f):
            out[fi] = i
        return tuple(out)

    t = moebius(1, 1, 0, 1)  # z -> z + 1
    P = []
    cur = tuple(range(8))
    for _ in range(7):
        P.append(cur)
        cur = mul(t, cur)
    assert len(set(P)) == 7

    def coset_key(g):
        return min(mul(p, g) for p in P)

    cosets = sorted({coset_key(g) for g in elems})
    assert len(cosets) == 24
    cidx = {c: i for i, c in enumerate(cosets)}

    seen = set()
    doubles = []
    for g in elems:
        if g in seen:
            continue
        dc = {mul(p1, mul(g, p2)) for p1 in P for p2 in P}
        seen |= dc
        doubles.append(dc)

    for dc in doubles:
        if len(dc) != 49 or {inv(g) for g in dc} != dc:
            continue
        edges = set()
        for ci, c in enumerate(cosets):
            for g in dc:
                other = cidx[coset_key(mul(g, c))]
                if other != ci:
                    edges.add((min(ci, other), max(ci, other)))
        g24 = build_graph(24, sorted(edges), name="Klein 7-regular Graph")
        if not (g24.is_regular() and g24.regularity() == 7):
            continue
        arr = detect_drg(g24)
        if arr is not None and str(arr) == "{7,4,1;1,2,7}":
            return g24
    raise RuntimeError("no double coset produced the 7-regular Klein graph")


def build_wells(clebsch):
    """Double cover of the Clebsch graph whose four-cycles all lift open.

    A two-fold cover is an edge signature sigma in GF(2)^E up to vertex
    switching.  The Wells graph has girth 5 while the Clebsch graph has
    girth 4, so sigma must sum to 1 on every 4-cycle.  Those constraints are
    linear; the solution classes modulo switching form a tiny affine space,
    and the one with the right intersection array is the Wells graph.
    """
    edges = sorted(tuple(sorted(e)) for e in clebsch.edges())
    eidx = {e: i for i, e in enumerate(edges)}
    ne = len(edges)

    # one 4-cycle per non-adjacent pair (mu = 2 common neighbours)
    rows = []
    for u in range(clebsch.n):
        for v in range(u + 1, clebsch.n):
            if clebsch.has_edge(u, v):
                continue
            common = [w for w in clebsch.neighbors(u) if clebsch.has_edge(w, v)]
            if len(common) != 2:
                continue
            w1, w2 = common
            mask = 0
            for e in ((u, w1), (w1, v), (v, w2), (w2, u)):
                mask ^= 1 << eidx[tuple(sorted(e))]
            rows.append(mask)

    # Gaussian elimination over GF(2); augmented bit at position ne
    pivots = {}
    for mask in rows:
        aug = mask | (1 << ne)
        for p, prow in pivots.items():
            if aug >> p & 1:
                aug ^= prow
        low = aug & ~(1 << ne)
        if low == 0:
            if aug:
                raise RuntimeError("odd-4-cycle constraints are inconsistent")
            continue
        p = (low & -low).bit_length() - 1
        for q in list(pivots):
            if pivots[q] >> p & 1:
                pivots[q] ^= aug
        pivots[p] = aug

    particular = 0
    for p, prow in pivots.items():
        if prow >> ne & 1:
            particular |= 1 << p

    free = [i for i in range(ne) if i not in pivots]
    kernel = []
    for f in free:
        vec = 1 << f
        for p, prow in pivots.items():
            if prow >> f & 1:
                vec |= 1 << p
        kernel.append(vec)

    # switching coboundaries: all edges at one vertex (a spanning set)
    cob_pivots = {}

    def reduce_mod(vec, table):
        for p, prow in table.items():
            if vec >> p & 1:
                vec ^= prow
        return vec

    for v in range(clebsch.n - 1):
        vec = 0
        for w in clebsch.neighbors(v):
            vec |= 1 << eidx[tuple(sorted((v, w)))]
        vec = reduce_mod(vec, cob_pivots)
        if vec:
            cob_pivots[(vec & -vec).bit_length() - 1] = vec

    transversal = []
    for vec in kernel:
        red = reduce_mod(vec, cob_pivots)
        red = reduce_mod(red, {(-t & t).bit_length() - 1: t for t in transversal})
        if red:
            transversal.append(red)
    assert len(transversal) <= 6, f"too many cover classes: 2^{len(transversal)}"

    for bits in range(1 << len(transversal)):
        sigma = particular
        for i, t in enumerate(transversal):
            if bits >> i & 1:
                sigma ^= t
        cover = set()
        for (u, v), i in eidx.items():
            s = sigma >> i & 1
            for eps in range(2):
                a, b = 2 * u + eps, 2 * v + (eps ^ s)
                cover.add((min(a, b), max(a, b)))
        g = build_graph(2 * clebsch.n, sorted(cover), name="Wells graph")
        arr = detect_drg(g)
        if arr is not None and str(arr) == "{5,4,1,1;1,1,4,5}":
            return g
    raise RuntimeError("no signing with odd 4-cycles produced the Wells graph")


def build_holt():
    """Half-transitive quartic graph on Z9 x Z3: (x,y) ~ (4x +- 1, y - 1)."""
    edges = set()
    for x in range(9):
        for y in range(3):
            u = 3 * x + y
            for sgn in (1, -1):
                v = 3 * ((4 * x + sgn) % 9) + (y - 1) % 3
                edges.add((min(u, v), max(u, v)))
    return build_graph(27, sorted(edges), name="Holt graph")


# ---------------------------------------------------------------- validation


def check_nx_iso(g: Graph, nx_graph, name):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert nx.is_isomorphic(h, nx.convert_node_labels_to_integers(nx_graph)), name


def fingerprint_t2(g):
    lo = closed_lower_t2(g)
    hi = closed_upper_t2(g)
    return round(lo.value, 2), round(hi.value, 2)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="src/isolab/data/named.g6")
    args = ap.parse_args()

    import networkx as nx

    corpus = {}

    def add(name, g, n=None, k=None, girth_=None, array=None, t2=None, nxg=None):
        if n is not None:
            assert g.n == n, f"{name}: n={g.n}, wanted {n}"
        if k is not None:
            assert g.is_regular() and g.regularity() == k, f"{name}: not {k}-regular"
        if girth_ is not None:
            got = girth(g)
            assert got == girth_, f"{name}: girth {got}, wanted {girth_}"
        if array is not None:
            arr = detect_drg(g)
            assert arr is not None and str(arr) == array, f"{name}: array {arr}"
        elif array is None and name not in ("Tetrahedron",):
            pass
        if t2 is not None:
            got = fingerprint_t2(g)
            assert abs(got[0] - t2[0]) <= 0.011 and abs(got[1] - t2[1]) <= 0.011, \
                f"{name}: t2 fingerprint {got}, wanted {t2}"
        if nxg is not None:
            check_nx_iso(g, nxg, name)
        corpus[name] = g
        arr = detect_drg(g)
        print(f"  {name}: n={g.n} m={g.num_edges} girth={girth(g)} "
              f"drg={arr if arr else '-'}")

    print("building corpus ...")

    add("Petersen graph", generalized_petersen(5, 2, "Petersen graph"),
        10, 3, 5, "{3,2;1,1}", nxg=nx.petersen_graph())
    add("Tetrahedron", generate("complete", 4), 4, 3, 3, nxg=nx.tetrahedral_graph())
    add("Octahedron", complement(build_graph(6, [(0, 1), (2, 3), (4, 5)])),
        6, 4, 3, "{4,1;1,4}", nxg=nx.octahedral_graph())
    add("Thomsen graph", generate("complete_bipartite", 3, 3), 6, 3, 4, "{3,2;1,3}")
    add("Hexahedron", generate("hypercube", 3), 8, 3, 4, "{3,2,1;1,2,3}")
    add("Icosahedron", build_icosahedron(), 12, 5, 3, "{5,2,1;1,2,5}",
        t2=(5.0, 6.0), nxg=nx.icosahedral_graph())
    add("Dodecahedron", generalized_petersen(10, 2, "Dodecahedron"), 20, 3, 5,
        "{3,2,1,1,1;1,1,1,2,3}", t2=(2.38, 6.0), nxg=nx.dodecahedral_graph())

    add("Bidiakis cube", lcf_graph([-6, 4, -4], 4, "Bidiakis cube"), 12, 3, 4,
        t2=(1.75, 6.0))
    add("Franklin graph", lcf_graph([5, -5], 6, "Franklin graph"), 12, 3, 4,
        t2=(2.13, 6.0))
    add("Frucht graph", lcf_graph([-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1,
        "Frucht graph"), 12, 3, 3, t2=(1.14, 6.12), nxg=nx.frucht_graph())
    add("Tietze Graph", build_tietze(), 12, 3, 3, t2=(2.04, 6.0))
    add("Durer graph", generalized_petersen(6, 2, "Durer graph"), 12, 3, 3,
        t2=(2.0, 6.0))
    add("Heawood graph", lcf_graph([5, -5], 7, "Heawood graph"), 14, 3, 6,
        "{3,2,2;1,1,3}", t2=(3.0, 5.71), nxg=nx.heawood_graph())
    add("Moebius-Kantor Graph", generalized_petersen(8, 3, "Moebius-Kantor Graph"),
        16, 3, 6, t2=(3.0, 6.0), nxg=nx.moebius_kantor_graph())
    add("Pappus Graph", lcf_graph([5, 7, -7, 7, -7, -5], 3, "Pappus Graph"),
        18, 3, 6, "{3,2,2,1;1,1,2,3}", t2=(3.0, 6.0), nxg=nx.pappus_graph())
    add("Desargues Graph", generalized_petersen(10, 3, "Desargues Graph"), 20, 3, 6,
        "{3,2,2,1,1;1,1,2,2,3}", t2=(3.0, 6.0), nxg=nx.desargues_graph())
    add("Flower Snark", build_flower_snark(), 20, 3, 5, t2=(2.83, 6.12))
    add("McGee graph", lcf_graph([12, 7, -7], 8, "McGee graph"), 24, 3, 7,
        t2=(3.0, 6.12))
    add("Nauru Graph", generalized_petersen(12, 5, "Nauru Graph"), 24, 3, 6,
        t2=(3.0, 6.0))
    add("F26A Graph", lcf_graph([-7, 7], 13, "F26A Graph"), 26, 3, 6,
        t2=(2.81, 6.07))
    add("Coxeter Graph", build_coxeter(), 28, 3, 7, "{3,2,2,1;1,1,1,2}",
        t2=(3.0, 6.0))
    add("Tutte-Coxeter graph", lcf_graph([-13, -9, 7, -7, 9, 13], 5,
        "Tutte-Coxeter graph"), 30, 3, 8, "{3,2,2,2;1,1,1,3}", t2=(3.0, 6.0))
    add("Dyck graph", lcf_graph([5, -5, 13, -13], 8, "Dyck graph"), 32, 3, 6,
        t2=(2.38, 6.0))

    hoffman = gm_switch(generate("hypercube", 4), list(generate("hypercube", 4).neighbors(0)))
    add("Hoffman Graph", Graph(hoffman.n, hoffman.adj, name="Hoffman Graph"),
        16, 4, 4, t2=(3.0, 10.0))

    add("Folkman Graph", quartic_cycle_chords([5, -7, -7, 5], 5, "Folkman Graph"),
        20, 4, 4, t2=(2.03, 10.0))
    add("Holt graph", build_holt(), 27, 4, 5, t2=(6.31, 10.13))

    dots = petersen_dot_products()
    print("  dot-product fingerprints:", sorted(dots))
    b1 = dots.get((1.98, 6.0))
    b2 = dots.get((1.86, 6.12))
    assert b1 is not None and b2 is not None, "Blanusa fingerprints missing"
    add("Blanusa First Snark Graph", Graph(b1.n, b1.adj, name="Blanusa First Snark Graph"),
        18, 3, 5, t2=(1.98, 6.0))
    add("Blanusa Second Snark Graph", Graph(b2.n, b2.adj, name="Blanusa Second Snark Graph"),
        18, 3, 5, t2=(1.86, 6.12))

    add("Clebsch graph", build_clebsch(), 16, 5, 4, "{5,4;1,2}")
    add("Shrikhande graph", build_shrikhande(), 16, 6, 3, "{6,3;1,2}")
    add("Schlafli graph", build_schlafli(), 27, 16, 3, "{16,5;1,8}")
    add("Klein 7-regular Graph", build_klein7(), 24, 7, 3, "{7,4,1;1,2,7}",
        t2=(10.5, 12.0))

    hosi = build_hoffman_singleton()
    add("Hoffman-Singleton graph", hosi, 50, 7, 5, "{7,6;1,1}")
    add("Sylvester Graph", build_sylvester(hosi), 36, 5, 5, "{5,4,2;1,1,4}",
        t2=(12.0, 15.0))

    clebsch = corpus["Clebsch graph"]
    add("Wells graph", build_wells(clebsch), 32, 5, 5, "{5,4,1,1;1,1,4,5}",
        t2=(11.38, 14.0))

    add("Foster Graph", lcf_graph([17, -9, 37, -37, 9, -17], 15, "Foster Graph"),
        90, 3, 10, "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}")

    print(f"\n{len(corpus)} graphs validated")
    lines = []
    for name, g in corpus.items():
        lines.append(f"# {name}")
        lines.append(to_graph6(g))
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    sys.exit(main())
