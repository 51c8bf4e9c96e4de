import random

import pytest

from spexm.graph6 import Graph6Error, parse_graph6, write_graph6
from spexm.graphs import Graph, build_family, complete_bipartite, cycle, snk, star


def test_known_string_d_brace():
    # 'D?{' encodes the 5-vertex star with centre 4
    G = parse_graph6("D?{")
    assert G.n == 5
    assert sorted(G.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert write_graph6(G) == "D?{"


def test_roundtrip_random_labelled():
    rng = random.Random(42)
    for _ in range(400):
        n = rng.randint(0, 20)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        G = Graph(n, rows)
        assert parse_graph6(write_graph6(G)) == G


def test_roundtrip_families():
    for spec in [star(9), snk(7, 3), complete_bipartite(3, 4), cycle(7)]:
        G = build_family(spec)
        assert parse_graph6(write_graph6(G)) == G


def test_long_form_63_and_64():
    for n in (63, 64):
        rows = [0] * n
        rows[0] |= 1 << (n - 1)
        rows[n - 1] |= 1
        G = Graph(n, rows)
        s = write_graph6(G)
        assert s.startswith("~")
        assert parse_graph6(s) == G


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<D?{").n == 5


def test_parse_errors_carry_offsets():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("D?")  # truncated payload
    assert "byte" in str(exc.value)
    with pytest.raises(Graph6Error):
        parse_graph6("D?{{")  # overlong
    with pytest.raises(Graph6Error):
        parse_graph6("C" + chr(30))  # byte out of range


def test_write_parse_idempotent_on_corpus():
    # write(parse(s)) == s for every canonical string we produce
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 12)
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        s = write_graph6(Graph(n, rows))
        assert write_graph6(parse_graph6(s)) == s
