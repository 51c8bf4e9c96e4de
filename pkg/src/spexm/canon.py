"""Canonical forms and automorphism orbits.

The kernel canonises one connected piece; this module splits a graph into
components, canonises each, sorts the pieces by (size, canonical key), and
reassembles the labelling, the key, and a generating set for the full
automorphism group (per-component generators plus swaps of equal pieces).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph6
from .graphs import Graph, bits
from .kernel import canon_connected


@dataclass(frozen=True)
class CanonResult:
    lab: tuple[int, ...]      # lab[i] = original vertex at canonical position i
    key: tuple[int, ...]      # canonical adjacency rows
    gens: tuple[tuple[int, ...], ...]  # Aut generators, original labels


def canon_raw(n: int, rows) -> CanonResult:
    """Canonise raw adjacency rows (list of bitmasks)."""
    comps = _component_vertex_lists(n, rows)
    if len(comps) == 1:
        lab, key, gens = canon_connected(n, list(rows))
        return CanonResult(tuple(lab), tuple(key), tuple(tuple(g) for g in gens))

    pieces = []
    for verts in comps:
        k = len(verts)
        pos = {v: i for i, v in enumerate(verts)}
        sub = [0] * k
        for i, v in enumerate(verts):
            r = rows[v]
            acc = 0
            while r:
                low = r & -r
                acc |= 1 << pos[low.bit_length() - 1]
                r ^= low
            sub[i] = acc
        lab, key, gens = canon_connected(k, sub)
        pieces.append({"verts": verts, "lab": lab, "key": tuple(key), "gens": gens})

    pieces.sort(key=lambda p: (len(p["verts"]), p["key"], p["verts"][0]))

    lab_full: list[int] = []
    key_full: list[int] = []
    gens_full: list[tuple[int, ...]] = []
    offsets = []
    off = 0
    for p in pieces:
        offsets.append(off)
        local_lab = [p["verts"][i] for i in p["lab"]]
        lab_full.extend(local_lab)
        key_full.extend(row << off for row in p["key"])
        for g in p["gens"]:
            perm = list(range(n))
            for i, v in enumerate(p["verts"]):
                perm[v] = p["verts"][g[i]]
            gens_full.append(tuple(perm))
        off += len(p["verts"])

    # swaps of adjacent isomorphic pieces generate the block permutations
    for a in range(len(pieces) - 1):
        pa, pb = pieces[a], pieces[a + 1]
        if len(pa["verts"]) == len(pb["verts"]) and pa["key"] == pb["key"]:
            perm = list(range(n))
            for t in range(len(pa["lab"])):
                va = pa["verts"][pa["lab"][t]]
                vb = pb["verts"][pb["lab"][t]]
                perm[va], perm[vb] = vb, va
            gens_full.append(tuple(perm))

    return CanonResult(tuple(lab_full), tuple(key_full), tuple(gens_full))


def canon_graph(G: Graph) -> CanonResult:
    return canon_raw(G.n, G.rows)


def canonical_form(G: Graph) -> str:
    """Canonical graph6 byte string: equal iff the graphs are isomorphic."""
    res = canon_raw(G.n, G.rows)
    return graph6.write_graph6(Graph(G.n, res.key))


def canonical_graph(G: Graph) -> Graph:
    return Graph(G.n, canon_raw(G.n, G.rows).key)


def _component_vertex_lists(n: int, rows) -> list[list[int]]:
    seen = 0
    out = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


# ---------------------------------------------------------------------------
# orbit helpers (used by the orderly enumerator)
# ---------------------------------------------------------------------------


def vertex_orbits(n: int, gens) -> list[int]:
    """Orbit id per vertex (smallest member) under the generated group."""
    parent = list(range(n))

    def find(x):
        r = x
        while parent[r] != r:
            r = parent[r]
        while parent[x] != r:
            parent[x], x = r, parent[x]
        return r

    for g in gens:
        for v in range(n):
            ra, rb = find(v), find(g[v])
            if ra != rb:
                parent[ra] = rb
    roots = {}
    out = [0] * n
    for v in range(n):
        r = find(v)
        if r not in roots:
            roots[r] = min(u for u in range(n) if find(u) == r)
        out[v] = roots[r]
    return out


def pair_orbit(gens, pair: tuple[int, int]) -> set[tuple[int, int]]:
    """Orbit of an unordered vertex pair under the generated group."""
    a, b = pair
    start = (a, b) if a < b else (b, a)
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            p = (gx, gy) if gx < gy else (gy, gx)
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen
