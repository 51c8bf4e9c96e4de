import itertools
import random

import pytest

from oracles import isomorphic

from spexm.graphs import (
    Graph,
    bits,
    book,
    build_family,
    complete_bipartite,
    complete_split,
    cycle,
    ct_plus,
    mask_of,
    path,
    snk,
    star,
)
from spexm.patterns import (
    Pattern,
    PatternError,
    book_pattern,
    clique_pattern,
    complete_bipartite_pattern,
    contains,
    ct_plus_pattern,
    cycle_pattern,
    explicit_pattern,
    find_cycle,
    free_of_all,
    is_cycle_witness,
    k2r_pattern,
    longest_path_in,
    missing_cycle_length,
    parse_pattern,
    path_pattern,
)

K4 = build_family(complete_split(4, 4))
K5 = build_family(complete_split(5, 5))
K33 = build_family(complete_bipartite(3, 3))
C5 = build_family(cycle(5))
C6 = build_family(cycle(6))
B2 = build_family(book(2))
B3 = build_family(book(3))


def test_cycle_lengths():
    assert contains(K4, cycle_pattern(3))
    assert contains(K4, cycle_pattern(4))
    assert not contains(K4, cycle_pattern(5))  # only four vertices
    assert not contains(K33, cycle_pattern(3))
    assert contains(K33, cycle_pattern(6))


def test_cycle_longer_than_order_absent():
    for G in (K4, C5, B3):
        for t in range(G.n + 1, G.n + 4):
            assert not contains(G, cycle_pattern(t))


def test_star_k22_free():
    for m in range(2, 12):
        assert not contains(build_family(star(m)), k2r_pattern(2))


def test_sporadic_equality_graphs_are_ct_plus_free():
    for n, k in [(7, 3), (8, 2), (9, 1)]:
        G = build_family(snk(n, k))
        assert not contains(G, ct_plus_pattern(3))
        assert not contains(G, ct_plus_pattern(4))


def test_books_and_ct_plus():
    assert contains(B2, book_pattern(2))
    assert contains(B2, ct_plus_pattern(3))  # B_2 is the triangle glued graph
    assert not contains(C5, book_pattern(1))
    assert free_of_all(C6, [ct_plus_pattern(3), ct_plus_pattern(4)])


def test_book_free_for_split_graph():
    assert not contains(build_family(complete_split(7, 2)), cycle_pattern(5))
    assert not contains(build_family(complete_split(7, 2)), cycle_pattern(6))


def test_triangle_or_c4_free_implies_ct_plus_free():
    # exhaustive over everything with <= 9 edges on <= 6 vertices
    pairs = list(itertools.combinations(range(6), 2))
    pats = [ct_plus_pattern(3), ct_plus_pattern(4)]
    rng = random.Random(1)
    for _ in range(3000):
        m = rng.randint(1, 9)
        G = Graph.from_edges(6, rng.sample(pairs, m))
        if not contains(G, cycle_pattern(3)) or not contains(G, cycle_pattern(4)):
            assert free_of_all(G, pats)


def test_fast_paths_agree_with_explicit_backtracking():
    rng = random.Random(17)
    pattern_pool = [
        (cycle_pattern(3), build_family(cycle(3))),
        (cycle_pattern(4), build_family(cycle(4))),
        (cycle_pattern(5), build_family(cycle(5))),
        (ct_plus_pattern(3), build_family(ct_plus(3))),
        (ct_plus_pattern(4), build_family(ct_plus(4))),
        (k2r_pattern(2), build_family(complete_bipartite(2, 2))),
        (complete_bipartite_pattern(2, 3), build_family(complete_bipartite(2, 3))),
        (book_pattern(2), build_family(book(2))),
        (clique_pattern(4), build_family(complete_split(4, 4))),
        (path_pattern(5), build_family(path(5))),
    ]
    for _ in range(250):
        n = rng.randint(3, 8)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < rng.choice([0.3, 0.6]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        G = Graph(n, rows)
        for fast, graph_form in pattern_pool:
            assert contains(G, fast) == contains(G, explicit_pattern(graph_form)), (
                sorted(G.edges()),
                str(fast),
            )


def test_monotone_under_edge_addition():
    rng = random.Random(29)
    pats = [cycle_pattern(4), ct_plus_pattern(3), book_pattern(2), clique_pattern(3)]
    for _ in range(200):
        n = rng.randint(4, 9)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.35:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        G = Graph(n, rows)
        nonedges = [(a, b) for a in range(n) for b in range(a + 1, n) if not G.has_edge(a, b)]
        if not nonedges:
            continue
        H = G.with_edge(*rng.choice(nonedges))
        for p in pats:
            if contains(G, p):
                assert contains(H, p)


def test_missing_cycle_length():
    assert missing_cycle_length(K5, 5) is None
    assert missing_cycle_length(K33, 4) == 3
    assert missing_cycle_length(B3, 6) == 5
    with pytest.raises(PatternError):
        missing_cycle_length(K5, 2)


def test_find_cycle_witnesses_validate():
    for G, t in [(K4, 3), (K4, 4), (K33, 4), (K33, 6), (C5, 5)]:
        cyc = find_cycle(G, t)
        assert cyc is not None and len(cyc) == t
        assert is_cycle_witness(G, cyc)
    assert find_cycle(K33, 5) is None
    assert not is_cycle_witness(K33, [0, 1, 2])


def test_longest_path_basics():
    tri = build_family(cycle(3))
    assert longest_path_in(tri, 0b111) == [0, 1, 2]
    assert longest_path_in(K4, 0b1111) == [0, 1, 2, 3]
    # induced set restricts the graph
    assert longest_path_in(K4, 0b0101) == [0, 2]
    with pytest.raises(PatternError):
        longest_path_in(K4, 0)
    with pytest.raises(PatternError):
        longest_path_in(Graph.empty(40), (1 << 40) - 1)


def test_longest_path_deterministic_lexicographic():
    G = build_family(cycle(6))
    p = longest_path_in(G, G.vertex_mask())
    assert p == min([p, list(reversed(p))])
    assert len(p) == 6


def test_dense_sets_carry_long_paths():
    """Edge count above (k - 1/2)|S| forces a path on 2k+1 vertices,
    checked by brute force on all graphs with <= 7 vertices."""
    rng = random.Random(41)
    for _ in range(400):
        n = rng.randint(2, 7)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        G = Graph(n, rows)
        S = G.vertex_mask()
        for k in (1, 2):
            if 2 * G.m > (2 * k - 1) * n:
                assert len(longest_path_in(G, S)) >= 2 * k + 1


def test_pattern_grammar_roundtrip():
    for text in ["C5", "C4+", "K2,4", "B3", "K4", "P7"]:
        assert str(parse_pattern(text)) == text
    g6p = parse_pattern("g6:D?{")
    assert g6p.kind == "explicit" and g6p.graph.n == 5
    with pytest.raises(PatternError):
        parse_pattern("")
    with pytest.raises(PatternError):
        parse_pattern("X9")
    with pytest.raises(PatternError):
        parse_pattern("C2")


def test_explicit_pattern_limits():
    big = build_family(cycle(9))
    with pytest.raises(PatternError):
        explicit_pattern(big)
    iso = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(PatternError):
        explicit_pattern(iso)
