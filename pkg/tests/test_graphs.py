import pytest

from spexm.graphs import (
    Graph,
    GraphError,
    bipartition,
    bits,
    book,
    build_family,
    common_neighbors,
    complete_bipartite,
    complete_split,
    components,
    ct_plus,
    cut_vertices,
    cycle,
    e_between,
    hts_rk,
    is_bipartite,
    is_book,
    is_complete,
    is_complete_bipartite,
    is_complete_regular_multipartite,
    is_complete_split,
    is_connected,
    is_snk,
    is_star,
    k1r_bullet_rk,
    mask_of,
    path,
    rk,
    second_neighborhood,
    snk,
    star,
)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, [0b01, 0b10])  # self loop
    with pytest.raises(GraphError):
        Graph(65, [0] * 65)
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_edge_count_cached():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert G.m == 3
    assert G.with_edge(0, 3).m == 4
    assert G.without_edge(1, 2).m == 2
    assert sorted(G.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_immutable():
    G = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(AttributeError):
        G.n = 5


# -- families ---------------------------------------------------------------


def test_star_shape():
    G = build_family(star(9))
    assert G.n == 10 and G.m == 9
    assert G.degree(0) == 9
    assert is_star(G)


def test_snk_counts():
    G = build_family(snk(7, 3))
    assert G.n == 7 and G.m == 9  # 6 star edges + 3 matching edges
    for n, k in [(5, 1), (9, 1), (8, 2), (9, 4)]:
        assert build_family(snk(n, k)).m == n - 1 + k


def test_snk_domain():
    with pytest.raises(GraphError):
        build_family(snk(6, 3))  # 2k > n-1


def test_complete_split_counts():
    for n, k in [(5, 2), (6, 2), (7, 3), (4, 4)]:
        G = build_family(complete_split(n, k))
        assert G.m == k * (n - k) + k * (k - 1) // 2


def test_hts_rk_shape():
    # one K_4 block plus one pendant hub neighbour
    G = build_family(hts_rk(1, 0, 1))
    assert G.n == 5 and G.m == 7
    assert sorted(G.degrees(), reverse=True) == [4, 3, 3, 3, 1]
    # general edge-count identity: 6k + t + |E|
    G = build_family(hts_rk(3, 2, 2, [(0, 0), (1, 0), (2, 1)]))
    assert G.m == 12 + 3 + 3
    with pytest.raises(GraphError):
        build_family(hts_rk(1, 1, 1, [(0, 5)]))


def test_ct_plus_shape():
    G = build_family(ct_plus(4))
    assert G.n == 5 and G.m == 6
    assert G.has_edge(4, 0) and G.has_edge(4, 1)


def test_k1r_bullet_rk():
    G = build_family(k1r_bullet_rk(2, 1))
    assert G.m == 6 * 1 + 2 * 2 + 1
    assert G.degree(0) == 3 + 1 + 2  # hub sees the K_4 block, centre, leaves


def test_rk():
    G = build_family(rk(2))
    assert G.n == 7 and G.m == 12
    assert G.degree(0) == 6


# -- stats ------------------------------------------------------------------


def test_k4_stats():
    K4 = build_family(complete_split(4, 4))
    assert cut_vertices(K4) == 0
    for u in range(4):
        for v in range(u + 1, 4):
            assert common_neighbors(K4, u, v).bit_count() == 2


def test_book_stats():
    B3 = build_family(book(3))
    assert common_neighbors(B3, 0, 1).bit_count() == 3
    assert e_between(B3, B3.vertex_mask(), B3.vertex_mask()) == 7
    assert is_complete_split(B3, 2)


def test_e_between_overlapping_sets():
    G = build_family(cycle(4))
    S = mask_of([0, 1, 2])
    assert e_between(G, S, S) == 2  # internal edges counted once
    assert e_between(G, S, G.vertex_mask()) == 4


def test_star_cut_vertex_and_bipartite():
    S5 = build_family(star(5))
    assert cut_vertices(S5) == 1  # the centre
    assert is_bipartite(S5)
    A, B = bipartition(S5)
    assert A.bit_count() + B.bit_count() == 6


def test_second_neighborhood():
    P5 = build_family(path(5))
    assert second_neighborhood(P5, 0) == 1 << 2
    assert second_neighborhood(P5, 2) == (1 << 0) | (1 << 4)


def test_components_and_connectivity():
    G = Graph.from_edges(5, [(0, 1), (2, 3)])
    comps = components(G)
    assert len(comps) == 3  # two edges and the isolated vertex 4
    assert not is_connected(G)
    assert G.has_isolated()
    assert G.drop_isolated().n == 4


def test_cut_vertices_vs_deletion_oracle():
    import random

    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 9)
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        for _ in range(rng.randint(0, n)):
            a, b = rng.randrange(n), rng.randrange(n)
            if a != b:
                edges.append((min(a, b), max(a, b)))
        G = Graph.from_edges(n, set(edges))
        base = len(components(G))
        expected = 0
        for v in range(n):
            H = G.delete_vertex(v)
            # deleting v splits its component iff the count grows after
            # discounting the removed vertex itself
            if len(components(H)) > base - (1 if G.degree(v) == 0 else 0):
                expected |= 1 << v
        assert cut_vertices(G) == expected, sorted(G.edges())


# -- recognizers ------------------------------------------------------------


def test_recognizer_basics():
    assert is_complete_bipartite(build_family(complete_bipartite(3, 3)))
    assert not is_star(build_family(complete_bipartite(3, 3)))
    assert is_book(build_family(book(4)))
    assert is_complete_split(build_family(book(4)), 2)
    assert is_snk(build_family(snk(9, 1))) == (9, 1)
    assert is_snk(build_family(star(6))) == (7, 0)
    assert is_snk(build_family(cycle(5))) is None


def test_book_needs_two_pages():
    # a single triangle is complete split with k=2 but not a book here
    tri = build_family(cycle(3))
    assert is_complete_split(tri, 2)
    assert not is_book(tri)
    assert is_book(build_family(book(2)))


def test_recognizers_irrelevant_labelling():
    G = build_family(snk(8, 2)).relabeled([3, 1, 7, 0, 2, 6, 4, 5])
    assert is_snk(G) == (8, 2)


def test_complete_multipartite_recognizer():
    assert is_complete_regular_multipartite(build_family(complete_bipartite(3, 3)), 2)
    assert not is_complete_regular_multipartite(build_family(complete_bipartite(2, 3)), 2)
    K222 = build_family(complete_split(6, 6)).complement().complement()
    octahedron = Graph.from_edges(
        6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3 or i >= 3]
    )
    assert is_complete_regular_multipartite(octahedron, 3)
    assert is_complete(K222) and not is_complete_regular_multipartite(K222, 3)


def test_complete_split_corner_cases():
    K4 = build_family(complete_split(4, 4))
    assert is_complete_split(K4, 4) and is_complete_split(K4, 3)
    assert not is_complete_split(K4, 2)
