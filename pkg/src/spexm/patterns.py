"""Forbidden-subgraph detection: containment is always *subgraph* containment
(not induced), matching the F-free convention the verification predicates use.

Fast paths: fixed-length cycle DFS anchored at the cycle's least vertex,
common-neighbour counting for K_{2,r+1} and books, recursive bitset expansion
for cliques and K_{s,t}.  Everything else goes through a backtracking
subgraph-isomorphism matcher on explicit patterns of at most 8 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graph6
from .graphs import Graph, GraphError, bits, components, mask_of

PATTERN_KINDS = ("cycle", "ct_plus", "complete_bipartite", "book", "clique", "path", "explicit")

EXPLICIT_MAX_VERTICES = 8
LONGEST_PATH_MAX_SET = 32


class PatternError(GraphError):
    pass


@dataclass(frozen=True)
class Pattern:
    """Forbidden-subgraph descriptor.

    kinds: cycle(t) = C_t; ct_plus(t) = C_t with an extra vertex on one cycle
    edge; complete_bipartite(s,t); book(r) = B_r; clique(r) = K_r;
    path(v) = path on v vertices; explicit(small graph).
    """

    kind: str
    params: tuple[int, ...] = ()
    graph: Graph | None = field(default=None, compare=True)

    def __post_init__(self):
        k, p = self.kind, self.params
        if k not in PATTERN_KINDS:
            raise PatternError(f"unknown pattern kind {k!r}")
        if k in ("cycle", "ct_plus") and p[0] < 3:
            raise PatternError(f"{k}: need t >= 3")
        if k == "book" and p[0] < 1:
            raise PatternError("book: need r >= 1")
        if k == "clique" and p[0] < 1:
            raise PatternError("clique: need r >= 1")
        if k == "path" and p[0] < 1:
            raise PatternError("path: need >= 1 vertices")
        if k == "complete_bipartite" and (p[0] < 1 or p[1] < 1):
            raise PatternError("complete_bipartite: need s, t >= 1")
        if k == "explicit":
            if self.graph is None:
                raise PatternError("explicit pattern needs a graph")
            if self.graph.n > EXPLICIT_MAX_VERTICES:
                raise PatternError(
                    f"explicit pattern has {self.graph.n} > {EXPLICIT_MAX_VERTICES} vertices"
                )
            if self.graph.has_isolated() or self.graph.n == 0:
                raise PatternError("explicit pattern must have no isolated vertices")

    def __str__(self):
        k, p = self.kind, self.params
        if k == "cycle":
            return f"C{p[0]}"
        if k == "ct_plus":
            return f"C{p[0]}+"
        if k == "complete_bipartite":
            return f"K{p[0]},{p[1]}"
        if k == "book":
            return f"B{p[0]}"
        if k == "clique":
            return f"K{p[0]}"
        if k == "path":
            return f"P{p[0]}"
        return "g6:" + graph6.write_graph6(self.graph)


def cycle_pattern(t: int) -> Pattern:
    return Pattern("cycle", (t,))


def ct_plus_pattern(t: int) -> Pattern:
    return Pattern("ct_plus", (t,))


def k2r_pattern(r_plus_1: int) -> Pattern:
    """K_{2,r+1} given as its second part size."""
    return Pattern("complete_bipartite", (2, r_plus_1))


def complete_bipartite_pattern(s: int, t: int) -> Pattern:
    return Pattern("complete_bipartite", (min(s, t), max(s, t)))


def book_pattern(r: int) -> Pattern:
    return Pattern("book", (r,))


def clique_pattern(r: int) -> Pattern:
    return Pattern("clique", (r,))


def path_pattern(v: int) -> Pattern:
    return Pattern("path", (v,))


def explicit_pattern(G: Graph) -> Pattern:
    return Pattern("explicit", (), G)


def parse_pattern(text: str) -> Pattern:
    """Parse the CLI pattern grammar: C5, C4+, K2,4, B3, K4, P7, g6:<string>."""
    s = text.strip()
    if not s:
        raise PatternError("empty pattern string")
    if s.startswith("g6:"):
        return explicit_pattern(graph6.parse_graph6(s[3:]))
    try:
        if s[0] == "C":
            body = s[1:]
            if body.endswith("+"):
                return ct_plus_pattern(int(body[:-1]))
            return cycle_pattern(int(body))
        if s[0] == "B":
            return book_pattern(int(s[1:]))
        if s[0] == "P":
            return path_pattern(int(s[1:]))
        if s[0] == "K":
            body = s[1:]
            if "," in body:
                a, b = body.split(",")
                return complete_bipartite_pattern(int(a), int(b))
            return clique_pattern(int(body))
    except ValueError as exc:
        raise PatternError(f"cannot parse pattern {text!r}: {exc}") from None
    raise PatternError(f"cannot parse pattern {text!r}")


# ---------------------------------------------------------------------------
# containment
# ---------------------------------------------------------------------------


def contains(G: Graph, p: Pattern) -> bool:
    """True iff G has a subgraph isomorphic to the pattern."""
    k = p.kind
    if k == "cycle":
        return _has_cycle(G, p.params[0])
    if k == "ct_plus":
        return _has_ct_plus(G, p.params[0])
    if k == "complete_bipartite":
        return _has_kst(G, p.params[0], p.params[1])
    if k == "book":
        return _has_book(G, p.params[0])
    if k == "clique":
        return _has_clique(G, p.params[0])
    if k == "path":
        return _has_path(G, p.params[0])
    return _subgraph_iso(G, p.graph)


def free_of_all(G: Graph, patterns) -> bool:
    return not any(contains(G, p) for p in patterns)


def missing_cycle_length(G: Graph, T: int) -> int | None:
    """Smallest t in 3..T with no C_t in G; None when G has them all."""
    if T < 3:
        raise PatternError("missing_cycle_length: need T >= 3")
    for t in range(3, T + 1):
        if not _has_cycle(G, t):
            return t
    return None


def is_cycle_witness(G: Graph, seq) -> bool:
    """Validate an exact-length cycle: distinct vertices, consecutive edges."""
    t = len(seq)
    if t < 3 or len(set(seq)) != t:
        return False
    return all(G.has_edge(seq[i], seq[(i + 1) % t]) for i in range(t))


def _has_cycle(G: Graph, t: int) -> bool:
    return _find_cycle(G, t, want_witness=False) is not None


def find_cycle(G: Graph, t: int) -> list[int] | None:
    """A cycle of exact length t as a vertex list, or None."""
    return _find_cycle(G, t, want_witness=True)


def _find_cycle(G: Graph, t: int, want_witness: bool):
    n, rows = G.n, G.rows
    if t > n or t < 3:
        return None
    full = (1 << n) - 1
    for s in range(n - t + 1):
        if rows[s].bit_count() < 2:
            continue
        allowed = full & ~((1 << (s + 1)) - 1)  # anchor s is the least cycle vertex
        target = rows[s]
        path = [s]

        def dfs(v, used, depth):
            if depth == t:
                return bool(rows[v] >> s & 1)
            cand = rows[v] & allowed & ~used
            if depth == t - 1:
                cand &= target
            for u in bits(cand):
                path.append(u)
                if dfs(u, used | (1 << u), depth + 1):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s, 1):
            return path if want_witness else True
    return None


def _has_ct_plus(G: Graph, t: int) -> bool:
    """C_t plus a vertex adjacent to two consecutive cycle vertices."""
    n, rows = G.n, G.rows
    if t + 1 > n:
        return False
    full = (1 << n) - 1
    for s in range(n):
        allowed = full & ~((1 << (s + 1)) - 1)
        target = rows[s]
        path = [s]

        def dfs(v, used, depth):
            if depth == t:
                if not rows[v] >> s & 1:
                    return False
                for i in range(t):
                    a, b = path[i], path[(i + 1) % t]
                    if rows[a] & rows[b] & ~used:
                        return True
                return False
            cand = rows[v] & allowed & ~used
            if depth == t - 1:
                cand &= target
            for u in bits(cand):
                path.append(u)
                if dfs(u, used | (1 << u), depth + 1):
                    return True
                path.pop()
            return False

        if rows[s].bit_count() >= 2 and dfs(s, 1 << s, 1):
            return True
    return False


def _has_kst(G: Graph, s: int, t: int) -> bool:
    s, t = min(s, t), max(s, t)
    n, rows = G.n, G.rows
    if s == 1:
        return any(row.bit_count() >= t for row in rows)
    if s == 2:
        for v in range(n):
            for u in range(v + 1, n):
                if (rows[v] & rows[u]).bit_count() >= t:
                    return True
        return False

    def rec(common, start, left):
        if left == 0:
            return common.bit_count() >= t
        for v in range(start, n - left + 1):
            nc = common & rows[v]
            if nc.bit_count() >= t and rec(nc, v + 1, left - 1):
                return True
        return False

    return rec((1 << n) - 1, 0, s)


def _has_book(G: Graph, r: int) -> bool:
    """B_r: an edge whose endpoints have at least r common neighbours."""
    for u, v in G.edges():
        if (G.rows[u] & G.rows[v]).bit_count() >= r:
            return True
    return False


def _has_clique(G: Graph, r: int) -> bool:
    if r == 1:
        return G.n >= 1
    if r == 2:
        return G.m >= 1
    rows = G.rows
    full = (1 << G.n) - 1

    def rec(cand, need):
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if rec(cand & rows[v], need - 1):
                return True
        return False

    return rec(full, r)


def _has_path(G: Graph, v: int) -> bool:
    if v == 1:
        return G.n >= 1
    if max((c.bit_count() for c in components(G)), default=0) < v:
        return False
    rows = G.rows

    def dfs(x, used, depth):
        if depth == v:
            return True
        for u in bits(rows[x] & ~used):
            if dfs(u, used | (1 << u), depth + 1):
                return True
        return False

    return any(dfs(s, 1 << s, 1) for s in range(G.n))


def _subgraph_iso(G: Graph, H: Graph) -> bool:
    """Backtracking subgraph isomorphism H -> G with degree pruning."""
    if H.n > G.n or H.m > G.m:
        return False
    hdeg = H.degrees()
    gdeg = G.degrees()
    order: list[int] = []
    placed = 0
    # connectivity-first order, degree-descending tiebreak
    while len(order) < H.n:
        best_v, best_key = -1, None
        for v in range(H.n):
            if placed >> v & 1:
                continue
            attached = (H.rows[v] & placed).bit_count()
            key = (attached, hdeg[v])
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        order.append(best_v)
        placed |= 1 << best_v

    image = [0] * H.n

    def rec(i, used):
        if i == len(order):
            return True
        hv = order[i]
        cand = ~used & ((1 << G.n) - 1)
        # intersect candidates with images of already-placed H-neighbours
        for j in range(i):
            if H.rows[hv] >> order[j] & 1:
                cand &= G.rows[image[order[j]]]
        for gv in bits(cand):
            if gdeg[gv] < hdeg[hv]:
                continue
            image[hv] = gv
            if rec(i + 1, used | (1 << gv)):
                return True
        return False

    return rec(0, 0)


# ---------------------------------------------------------------------------
# longest path
# ---------------------------------------------------------------------------


def longest_path_in(G: Graph, S: int) -> list[int]:
    """A longest path of the induced subgraph G[S], as original vertex labels.

    Exact backtracking, |S| <= 32; deterministic: lexicographically least
    among the maximum-length sequences.
    """
    if S == 0:
        raise PatternError("longest_path_in: empty vertex set")
    if S & ~G.vertex_mask():
        raise PatternError("longest_path_in: vertex set outside graph")
    if S.bit_count() > LONGEST_PATH_MAX_SET:
        raise PatternError(
            f"longest_path_in: |S| = {S.bit_count()} exceeds {LONGEST_PATH_MAX_SET}"
        )
    rows = G.rows
    best: list[int] = []
    path: list[int] = []

    def dfs(v, used):
        nonlocal best
        if len(path) > len(best):
            best = path.copy()
        for u in bits(rows[v] & S & ~used):
            path.append(u)
            dfs(u, used | (1 << u))
            path.pop()

    for s in bits(S):
        path = [s]
        dfs(s, 1 << s)
    return best
