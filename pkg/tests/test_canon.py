import itertools
import random

from oracles import brute_automorphisms, brute_vertex_orbits, min_label_key, relabel_key

from spexm.canon import canon_graph, canon_raw, canonical_form, pair_orbit, vertex_orbits
from spexm.graphs import Graph, build_family, complete_bipartite, cycle, path, rk, snk, star


def all_graphs(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for sub in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if sub >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, rows)


def group_closure_size(n, gens):
    from collections import deque

    ident = tuple(range(n))
    seen = {ident}
    dq = deque([ident])
    gens = [tuple(g) for g in gens]
    while dq:
        g = dq.popleft()
        for h in gens:
            c = tuple(h[g[i]] for i in range(n))
            if c not in seen:
                seen.add(c)
                dq.append(c)
    return len(seen)


def test_canonical_classes_exhaustive_small():
    """Canonical keys partition labelled graphs exactly like permutation
    equivalence, for every graph on up to 5 vertices."""
    for n in range(6):
        by_brute = {}
        for G in all_graphs(n):
            by_brute.setdefault(min_label_key(G) if n else (), set()).add(canon_graph(G).key)
        assert all(len(keys) == 1 for keys in by_brute.values())
        canon_keys = [next(iter(keys)) for keys in by_brute.values()]
        assert len(set(canon_keys)) == len(canon_keys)


def test_canonical_key_is_a_relabelling():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 10)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.45:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        res = canon_raw(n, rows)
        assert sorted(res.lab) == list(range(n))
        assert relabel_key(n, rows, list(res.lab)) == res.key


def test_isomorphism_invariance_random_relabellings():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 11)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        G = Graph(n, rows)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(G) == canonical_form(G.relabeled(perm))


def test_seven_vertex_sample_against_permutation_oracle():
    rng = random.Random(70)
    sample = []
    for _ in range(120):
        rows = [0] * 7
        for i in range(7):
            for j in range(i + 1, 7):
                if rng.random() < rng.choice([0.25, 0.5, 0.75]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        sample.append(Graph(7, rows))
    for G in sample:
        for H in sample:
            same = min_label_key(G) == min_label_key(H)
            assert (canonical_form(G) == canonical_form(H)) == same


def test_generators_are_automorphisms():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randint(2, 12)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        res = canon_raw(n, rows)
        for g in res.gens:
            for v in range(n):
                img = 0
                r = rows[v]
                while r:
                    low = r & -r
                    img |= 1 << g[low.bit_length() - 1]
                    r ^= low
                assert img == rows[g[v]]


def test_generators_generate_full_group_small():
    rng = random.Random(9)
    cases = list(all_graphs(4)) + list(all_graphs(5))
    for _ in range(120):
        n = rng.randint(6, 7)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < rng.choice([0.2, 0.5, 0.8]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        cases.append(Graph(n, rows))
    for spec in [star(6), snk(7, 3), complete_bipartite(3, 3), cycle(7), path(7), rk(2)]:
        cases.append(build_family(spec))
    for G in cases:
        res = canon_graph(G)
        assert group_closure_size(G.n, res.gens) == len(brute_automorphisms(G))


def test_orbits_match_brute_force():
    rng = random.Random(31)
    cases = [build_family(s) for s in (star(6), snk(7, 2), complete_bipartite(2, 4))]
    for _ in range(60):
        n = rng.randint(2, 7)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        cases.append(Graph(n, rows))
    for G in cases:
        res = canon_graph(G)
        assert tuple(sorted(vertex_orbits(G.n, res.gens))) == brute_vertex_orbits(G)


def test_high_symmetry_orbit_structure():
    # stars: hub orbit and leaf orbit; leaf pairs form one orbit
    G = build_family(star(12))
    res = canon_graph(G)
    orb = vertex_orbits(G.n, res.gens)
    assert len(set(orb)) == 2
    assert len(pair_orbit(res.gens, (1, 2))) == 12 * 11 // 2
    # disjoint edges: single vertex orbit, matched vs unmatched pair orbits
    k = 8
    rows = [1 << (i ^ 1) for i in range(2 * k)]
    res = canon_raw(2 * k, rows)
    orb = vertex_orbits(2 * k, res.gens)
    assert len(set(orb)) == 1
    assert len(pair_orbit(res.gens, (0, 1))) == k
    assert len(pair_orbit(res.gens, (0, 2))) == 2 * k * (2 * k - 2) // 2


def test_components_sorted_deterministically():
    # same multiset of components in any order gives one canonical form
    A = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    B = Graph.from_edges(5, [(3, 4), (0, 1), (1, 2)])
    assert canonical_form(A) == canonical_form(B)
