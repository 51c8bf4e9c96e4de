"""Brute-force oracles the fast paths are checked against.

Everything here is deliberately naive: permutation sweeps for isomorphism,
edge-subset enumeration for graph counting, matrix powers for walk counts.
Independence from the library's canonical-labelling code is the point; the
only shared ingredient is the backtracking matcher used as an isomorphism
test for graphs that are too large to sweep all permutations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from spexm.graphs import Graph
from spexm.patterns import explicit_pattern, contains


def relabel_key(n, rows, perm):
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    out = []
    for v in perm:
        acc = 0
        r = rows[v]
        while r:
            low = r & -r
            acc |= 1 << pos[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


def min_label_key(G: Graph):
    """Smallest relabelled adjacency tuple over all n! labelings (n <= 8)."""
    assert G.n <= 8, "permutation sweep only for tiny graphs"
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = relabel_key(G.n, G.rows, perm)
        if best is None or key < best:
            best = key
    return best


def brute_automorphisms(G: Graph):
    auts = []
    for perm in itertools.permutations(range(G.n)):
        if relabel_key(G.n, G.rows, list(perm)) == G.rows:
            # perm maps position i to vertex perm[i]; convert to vertex map
            auts.append(tuple(perm))
    return auts


def brute_vertex_orbits(G: Graph):
    n = G.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            img = 0
            r = G.rows[v]
            while r:
                low = r & -r
                img |= 1 << perm[low.bit_length() - 1]
                r ^= low
            if img != G.rows[perm[v]]:
                ok = False
                break
        if ok:
            for v in range(n):
                ra, rb = find(v), find(perm[v])
                if ra != rb:
                    parent[ra] = rb
    return tuple(sorted(find(v) for v in range(n)))


def isomorphic(G: Graph, H: Graph) -> bool:
    """Same order and size, then a subgraph embedding is an isomorphism."""
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    if G.m == 0:
        return True
    return contains(G, explicit_pattern(H)) if H.n <= 8 else _iso_backtrack(G, H)


def _iso_backtrack(G: Graph, H: Graph):
    n = G.n
    gdeg, hdeg = G.degrees(), H.degrees()
    image = [-1] * n

    def rec(i, used):
        if i == n:
            return True
        for gv in range(n):
            if used >> gv & 1 or gdeg[gv] != hdeg[i]:
                continue
            ok = True
            for j in range(i):
                if bool(H.rows[i] >> j & 1) != bool(G.rows[gv] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = gv
                if rec(i + 1, used | 1 << gv):
                    return True
        return False

    return rec(0, 0)


def connected_classes_by_edges(max_m: int):
    """All connected isomorphism classes with 1..max_m edges, by brute force.

    A connected graph with c edges has at most c+1 vertices, so subsets of
    K_{c+1}'s edge set cover everything; dedup is pairwise via the matcher.
    """
    out: dict[int, list[Graph]] = {c: [] for c in range(1, max_m + 1)}
    for c in range(1, max_m + 1):
        for v in range(2, c + 2):
            pairs = list(itertools.combinations(range(v), 2))
            if len(pairs) < c:
                continue
            for chosen in itertools.combinations(pairs, c):
                covered = set()
                for a, b in chosen:
                    covered.add(a)
                    covered.add(b)
                if len(covered) != v:
                    continue
                G = Graph.from_edges(v, chosen)
                from spexm.graphs import is_connected

                if not is_connected(G):
                    continue
                if not any(isomorphic(G, H) for H in out[c]):
                    out[c].append(G)
    return out


def class_counts_by_edges(max_m: int) -> dict[int, int]:
    """Isomorphism classes with exactly m edges, no isolated vertices:
    multisets of connected classes with edge counts summing to m."""
    connected = connected_classes_by_edges(max_m)
    sizes = [c for c in connected for _ in connected[c]]
    # dp over items with unlimited multiplicity (multiset counting)
    dp = [0] * (max_m + 1)
    dp[0] = 1
    for e in sizes:
        for total in range(e, max_m + 1):
            dp[total] += dp[total - e]
    return {m: dp[m] for m in range(1, max_m + 1)}


def rho_rayleigh_lower_bound(G: Graph, vec) -> float:
    num = 0.0
    den = 0.0
    for v in range(G.n):
        den += vec[v] * vec[v]
        r = G.rows[v]
        while r:
            low = r & -r
            num += vec[v] * vec[low.bit_length() - 1]
            r ^= low
    return num / den


def charpoly_by_minors(G: Graph):
    """det(xI - A) by cofactor expansion over Fraction-free polynomials.

    Exponential; fine for n <= 7.  Polynomials are coefficient lists, low
    degree first.
    """
    n = G.n

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    def poly_add(a, b):
        out = [0] * max(len(a), len(b))
        for i, ai in enumerate(a):
            out[i] += ai
        for i, bi in enumerate(b):
            out[i] += bi
        return out

    # matrix of polynomials: diagonal [0,1] (= x), off-diagonal [-a_ij]
    M = [[([0, 1] if i == j else [-(G.rows[i] >> j & 1)]) for j in range(n)] for i in range(n)]

    def det(rows_idx, cols_idx):
        if not rows_idx:
            return [1]
        i = rows_idx[0]
        total = [0]
        for pos, j in enumerate(cols_idx):
            entry = M[i][j]
            if entry == [0]:
                continue
            sub = det(rows_idx[1:], cols_idx[:pos] + cols_idx[pos + 1:])
            term = poly_mul(entry, sub)
            if pos % 2:
                term = [-t for t in term]
            total = poly_add(total, term)
        return total

    out = det(list(range(n)), list(range(n)))
    return tuple(out + [0] * (n + 1 - len(out)))
