"""Immutable bitset graphs, named-family constructors, and basic statistics.

Vertices are labelled 0..n-1 and each adjacency row is one machine word
(a Python int used as a 64-bit mask), so n is capped at 64.  That covers
every graph with at most 32 edges and no isolated vertices, which is the
regime all the verification experiments run in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or out-of-range argument."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    ``rows[v]`` is the neighbourhood bitmask of v; the matrix is symmetric
    with zero diagonal and ``m`` caches the edge count.
    """

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            total += row.bit_count()
        if total % 2:
            raise GraphError("adjacency matrix is not symmetric")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric pair ({v},{u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", total // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- construction ------------------------------------------------------

    @staticmethod
    def _unsafe(n: int, rows) -> "Graph":
        """Skip validation; only for internal callers with trusted rows."""
        g = object.__new__(Graph)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        object.__setattr__(g, "m", sum(r.bit_count() for r in rows) // 2)
        return g

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows)

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, [0] * n)

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.rows + (0,))

    # -- basic queries -----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> int:
        """Neighbourhood of v as a bitmask."""
        self._check_vertex(v)
        return self.rows[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.rows[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def has_isolated(self) -> bool:
        return any(row == 0 for row in self.rows)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    # -- derived graphs ----------------------------------------------------

    def relabeled(self, perm: Iterable[int]) -> "Graph":
        """Relabel so that old vertex ``perm[i]`` becomes new vertex ``i``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of the vertex set")
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            acc = 0
            for u in bits(self.rows[v]):
                acc |= 1 << pos[u]
            rows[i] = acc
        return Graph(self.n, rows)

    def induced(self, vset: int) -> "Graph":
        """Subgraph induced by the vertex bitmask, relabelled to 0..k-1."""
        verts = list(bits(vset))
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in bits(self.rows[v] & vset):
                rows[i] |= 1 << pos[u]
        return Graph(len(verts), rows)

    def drop_isolated(self) -> "Graph":
        keep = mask_of(v for v in range(self.n) if self.rows[v])
        return self.induced(keep)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(self.vertex_mask() ^ (1 << v))

    def complement(self) -> "Graph":
        full = self.vertex_mask()
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.rows)])

    # -- dunder ------------------------------------------------------------

    def __reduce__(self):
        return (_rebuild_graph, (self.n, self.rows))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _rebuild_graph(n: int, rows) -> Graph:
    return Graph._unsafe(n, rows)


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------


def e_between(G: Graph, S: int, T: int) -> int:
    """Number of edges with one endpoint in S and the other in T.

    S and T are vertex bitmasks and may overlap; an edge inside S == T is
    counted once (the e(S) convention).
    """
    if (S | T) & ~G.vertex_mask():
        raise GraphError("vertex set outside graph")
    count = 0
    for u, v in G.edges():
        a, b = 1 << u, 1 << v
        if (a & S and b & T) or (a & T and b & S):
            count += 1
    return count


def common_neighbors(G: Graph, u: int, v: int) -> int:
    return G.neighbors(u) & G.neighbors(v)


def second_neighborhood(G: Graph, v: int) -> int:
    """Vertices at distance exactly two from v, as a bitmask."""
    closed = G.neighbors(v) | (1 << v)
    out = 0
    for u in bits(G.neighbors(v)):
        out |= G.rows[u]
    return out & ~closed


def components(G: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def cut_vertices(G: Graph) -> int:
    """Articulation vertices (DFS low-link), as a bitmask."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # iterative DFS, stack of (vertex, parent, iterator state)
        stack = [(root, -1, bits(G.rows[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, bits(G.rows[u])))
                    advanced = True
                    break
                elif u != parent:
                    low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if pv != root and low[v] >= disc[pv]:
                        cut |= 1 << pv
        if root_children >= 2:
            cut |= 1 << root
    return cut


def bipartition(G: Graph) -> tuple[int, int] | None:
    """Two-colouring (A, B) as bitmasks, or None if an odd cycle exists."""
    color = {}
    A = B = 0
    for comp in components(G):
        start = next(bits(comp))
        color[start] = 0
        A |= 1 << start
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits(G.rows[v]):
                    if u not in color:
                        color[u] = color[v] ^ 1
                        if color[u]:
                            B |= 1 << u
                        else:
                            A |= 1 << u
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    return A, B


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def stats(G: Graph) -> dict:
    """Bundle of the scalar statistics (set/pair queries stay separate calls)."""
    return {
        "n": G.n,
        "m": G.m,
        "degrees": G.degrees(),
        "components": components(G),
        "cut_vertices": cut_vertices(G),
        "is_connected": is_connected(G),
        "is_bipartite": is_bipartite(G),
        "has_isolated": G.has_isolated(),
    }


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "star",            # K_{1,m}                      params (m,)
    "snk",             # star plus k disjoint leaf edges   params (n, k)
    "complete_split",  # K_k joined to n-k independents    params (n, k)
    "complete_bipartite",  # params (s, t)
    "book",            # r triangles on a common edge      params (r,)
    "rk",              # k K_4's sharing a dominating vertex  params (k,)
    "hts_rk",          # R_k hub joined to part T of a bipartite (T,S) graph
    "k1r_bullet_rk",   # R_k hub also joined to every vertex of a star K_{1,r}
    "cycle",           # params (t,)
    "ct_plus",         # C_t plus a vertex on one cycle edge  params (t,)
    "path",            # params (v,) vertices
)


@dataclass(frozen=True)
class FamilySpec:
    """Named-family descriptor: a variant tag plus integer parameters.

    ``cross_edges`` is only used by ``hts_rk`` and lists edges between the
    T-part (indices 0..t-1) and the S-part (indices 0..s-1).
    """

    kind: str
    params: tuple[int, ...]
    cross_edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")

    def __str__(self):
        base = ":".join(str(p) for p in self.params)
        tag = {
            "star": "star", "snk": "S", "complete_split": "CS",
            "complete_bipartite": "K", "book": "B", "rk": "R",
            "hts_rk": "H", "k1r_bullet_rk": "KB", "cycle": "C",
            "ct_plus": "C+", "path": "P",
        }[self.kind]
        s = f"{tag}:{base}"
        if self.cross_edges:
            s += ":" + ",".join(f"{a}-{b}" for a, b in self.cross_edges)
        return s


def star(m: int) -> FamilySpec:
    return FamilySpec("star", (m,))


def snk(n: int, k: int) -> FamilySpec:
    return FamilySpec("snk", (n, k))


def complete_split(n: int, k: int) -> FamilySpec:
    return FamilySpec("complete_split", (n, k))


def complete_bipartite(s: int, t: int) -> FamilySpec:
    return FamilySpec("complete_bipartite", (s, t))


def book(r: int) -> FamilySpec:
    return FamilySpec("book", (r,))


def rk(k: int) -> FamilySpec:
    return FamilySpec("rk", (k,))


def hts_rk(t: int, s: int, k: int, cross_edges=()) -> FamilySpec:
    return FamilySpec("hts_rk", (t, s, k), tuple(sorted(tuple(e) for e in cross_edges)))


def k1r_bullet_rk(r: int, k: int) -> FamilySpec:
    return FamilySpec("k1r_bullet_rk", (r, k))


def cycle(t: int) -> FamilySpec:
    return FamilySpec("cycle", (t,))


def ct_plus(t: int) -> FamilySpec:
    return FamilySpec("ct_plus", (t,))


def path(v: int) -> FamilySpec:
    return FamilySpec("path", (v,))


def build_family(spec: FamilySpec) -> Graph:
    """Construct the named graph; dominating/hub vertices get the low labels."""
    kind, p = spec.kind, spec.params

    if kind == "star":
        (m,) = p
        if m < 1:
            raise GraphError("star: need m >= 1")
        return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])

    if kind == "snk":
        n, k = p
        if n < 2 or k < 0:
            raise GraphError("snk: need n >= 2 and k >= 0")
        if 2 * k > n - 1:
            raise GraphError(f"snk: 2k <= n-1 violated (n={n}, k={k})")
        edges = [(0, i) for i in range(1, n)]
        edges += [(2 * i + 1, 2 * i + 2) for i in range(k)]
        return Graph.from_edges(n, edges)

    if kind == "complete_split":
        n, k = p
        if not 1 <= k <= n:
            raise GraphError(f"complete_split: need 1 <= k <= n (n={n}, k={k})")
        edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
        return Graph.from_edges(n, edges)

    if kind == "complete_bipartite":
        s, t = p
        if s < 1 or t < 1:
            raise GraphError("complete_bipartite: need s, t >= 1")
        return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])

    if kind == "book":
        (r,) = p
        if r < 1:
            raise GraphError("book: need r >= 1")
        return build_family(complete_split(r + 2, 2))

    if kind == "rk":
        (k,) = p
        return Graph.from_edges(3 * k + 1, _rk_edges(k))

    if kind == "hts_rk":
        t, s, k = p
        if k < 1 or t < 0 or s < 0:
            raise GraphError("hts_rk: need k >= 1 and t, s >= 0")
        for a, b in spec.cross_edges:
            if not (0 <= a < t and 0 <= b < s):
                raise GraphError(f"hts_rk: cross edge ({a},{b}) outside T x S")
        if len(set(spec.cross_edges)) != len(spec.cross_edges):
            raise GraphError("hts_rk: duplicate cross edge")
        edges = _rk_edges(k)
        t0 = 3 * k + 1            # first T vertex
        s0 = t0 + t               # first S vertex
        edges += [(0, t0 + i) for i in range(t)]
        edges += [(t0 + a, s0 + b) for a, b in spec.cross_edges]
        return Graph.from_edges(s0 + s, edges)

    if kind == "k1r_bullet_rk":
        r, k = p
        if r < 1 or k < 1:
            raise GraphError("k1r_bullet_rk: need r >= 1 and k >= 1")
        edges = _rk_edges(k)
        c = 3 * k + 1             # star centre
        edges += [(0, c)]
        edges += [(0, c + 1 + i) for i in range(r)]
        edges += [(c, c + 1 + i) for i in range(r)]
        return Graph.from_edges(c + 1 + r, edges)

    if kind == "cycle":
        (t,) = p
        if t < 3:
            raise GraphError("cycle: need t >= 3")
        return Graph.from_edges(t, [(i, (i + 1) % t) for i in range(t)])

    if kind == "ct_plus":
        (t,) = p
        if t < 3:
            raise GraphError("ct_plus: need t >= 3")
        edges = [(i, (i + 1) % t) for i in range(t)]
        edges += [(t, 0), (t, 1)]
        return Graph.from_edges(t + 1, edges)

    if kind == "path":
        (v,) = p
        if v < 1:
            raise GraphError("path: need v >= 1")
        return Graph.from_edges(v, [(i, i + 1) for i in range(v - 1)])

    raise GraphError(f"unknown family kind {kind!r}")


def _rk_edges(k: int) -> list[tuple[int, int]]:
    """Edges of k K_4 blocks sharing vertex 0; block i uses 3i+1..3i+3."""
    if k < 1:
        raise GraphError("rk: need k >= 1")
    edges = []
    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a), (0, b), (0, c), (a, b), (a, c), (b, c)]
    return edges


# ---------------------------------------------------------------------------
# recognizers (up to isomorphism; these families are rigid enough that a
# degree profile plus a direct structural check decides membership)
# ---------------------------------------------------------------------------


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def is_star(G: Graph) -> bool:
    return G.n >= 2 and G.m == G.n - 1 and max(G.degrees()) == G.n - 1


def is_complete_bipartite(G: Graph) -> bool:
    if G.n < 2 or not is_connected(G):
        return False
    parts = bipartition(G)
    if parts is None:
        return False
    a, b = parts[0].bit_count(), parts[1].bit_count()
    return a >= 1 and b >= 1 and G.m == a * b


def is_complete_split(G: Graph, k: int) -> bool:
    """True iff G is isomorphic to S_{n,k} (K_k joined to n-k independents)."""
    n = G.n
    if not 1 <= k <= n:
        return False
    if k >= n - 1:
        # S_{n,n} and S_{n,n-1} both collapse to K_n
        return is_complete(G)
    if G.m != k * (n - k) + k * (k - 1) // 2:
        return False
    dom = mask_of(v for v in range(n) if G.degree(v) == n - 1)
    if dom.bit_count() != k:
        return False
    rest = G.vertex_mask() & ~dom
    return all(G.rows[v] & rest == 0 for v in bits(rest))


def is_book(G: Graph) -> bool:
    """Books here have at least two pages: S_{n,2} with n >= 4."""
    return G.n >= 4 and is_complete_split(G, 2)


def is_snk(G: Graph) -> tuple[int, int] | None:
    """Return (n, k) if G is a star plus k disjoint leaf edges, else None."""
    n, m = G.n, G.m
    if n < 2:
        return None
    k = m - (n - 1)
    if k < 0 or 2 * k > n - 1:
        return None
    for hub in range(n):
        if G.degree(hub) != n - 1:
            continue
        off = 0
        ok = True
        for v in range(n):
            if v == hub:
                continue
            extra = G.rows[v] & ~(1 << hub)
            if extra.bit_count() > 1:
                ok = False
                break
            off += extra.bit_count()
        if ok and off == 2 * k:
            return (n, k)
    return None


def is_complete_regular_multipartite(G: Graph, r: int) -> bool:
    """Complete r-partite with equal part sizes (complement = r equal cliques)."""
    if r < 2 or G.n % r:
        return False
    comp = G.complement()
    parts = components(comp)
    if len(parts) != r:
        return False
    size = G.n // r
    for p in parts:
        if p.bit_count() != size:
            return False
        sub = comp.induced(p)
        if not is_complete(sub):
            return False
    return True
