"""Isomorph-free exhaustive generation of all graphs with exactly m edges and
no isolated vertices, by orderly edge augmentation.

Each graph class at level j is extended by one edge in every inequivalent way
(including edges to one or two fresh vertices); a child is kept iff the added
edge lies in the automorphism orbit of the child's canonical removable edge
(the edge at the canonically last vertex).  Every class therefore has exactly
one generation path, which is what makes prefix sharding exact.  Forbidden
patterns prune monotonically: a supergraph of a containing graph still
contains the pattern, so filtered subtrees can be cut immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph6
from .canon import CanonResult, canon_raw, pair_orbit, vertex_orbits
from .graphs import Graph, GraphError
from .patterns import Pattern, contains


class EnumError(GraphError):
    pass


@dataclass(frozen=True)
class EnumConstraints:
    """What to enumerate: edge count, filters, and the vertex budget.

    A graph with m edges and no isolated vertices has at most 2m vertices, so
    max_vertices defaults to 2m and may only be lowered.
    """

    m: int
    no_isolated: bool = True
    connected_only: bool = False
    forbid: tuple[Pattern, ...] = ()
    max_vertices: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise EnumError("need m >= 1")
        if not self.no_isolated:
            raise EnumError(
                "vertices only ever arise from edges here, so enumeration "
                "always produces isolate-free graphs"
            )
        object.__setattr__(self, "forbid", tuple(self.forbid))
        cap = self.max_vertices
        if cap is None:
            object.__setattr__(self, "max_vertices", 2 * self.m)
        elif cap > 2 * self.m:
            raise EnumError(f"max_vertices {cap} exceeds 2m = {2 * self.m}")
        elif cap < 2:
            raise EnumError("max_vertices must allow at least one edge")


@dataclass(frozen=True)
class WorkUnit:
    """Independent generation subtree: a class at the shard level."""

    root_g6: str
    level: int


_ROOT_ROWS = (0b10, 0b01)  # K_2


def enumerate_by_edges(c: EnumConstraints, visitor=None) -> int:
    """Visit one representative per isomorphism class; returns the count."""
    counts = enumerate_levels(c, {c.m}, (lambda lvl, G: visitor(G)) if visitor else None)
    return counts[c.m]


def enumerate_classes(c: EnumConstraints) -> list[Graph]:
    out: list[Graph] = []
    enumerate_by_edges(c, out.append)
    return out


def enumerate_levels(c: EnumConstraints, levels, visitor=None) -> dict[int, int]:
    """Single pass emitting at every requested level <= c.m (internal driver
    for multi-m sweeps; emission filters apply per level)."""
    levels = set(levels)
    if any(lvl < 1 or lvl > c.m for lvl in levels):
        raise EnumError("emission levels must lie in 1..m")
    counts = {lvl: 0 for lvl in levels}
    if _violates(2, list(_ROOT_ROWS), c.forbid):
        return counts
    root_res = canon_raw(2, _ROOT_ROWS)
    _dfs(2, list(_ROOT_ROWS), root_res, 1, c, levels, visitor, counts)
    return counts


def shard(c: EnumConstraints, prefix_depth: int) -> list[WorkUnit]:
    """Split the generation tree at the given depth into independent units.

    Depth d yields the classes at edge level d+1; the union of the shard
    outputs equals the unsharded output, class for class.
    """
    if not 0 <= prefix_depth < c.m:
        raise EnumError("need 0 <= prefix_depth < m")
    lvl = prefix_depth + 1
    units: list[WorkUnit] = []

    def take(level, G):
        units.append(WorkUnit(graph6.write_graph6(G), level))

    sub = EnumConstraints(
        m=lvl,
        forbid=c.forbid,
        max_vertices=min(c.max_vertices, 2 * lvl),
    )
    enumerate_levels(sub, {lvl}, take)
    return units


def enumerate_shard(c: EnumConstraints, unit: WorkUnit, visitor=None) -> int:
    """Run one work unit down to level c.m; returns the class count."""
    counts = enumerate_shard_levels(c, unit, {c.m}, (lambda lvl, G: visitor(G)) if visitor else None)
    return counts[c.m]


def enumerate_shard_levels(c: EnumConstraints, unit: WorkUnit, levels, visitor=None) -> dict[int, int]:
    levels = set(levels)
    counts = {lvl: 0 for lvl in levels}
    G = graph6.parse_graph6(unit.root_g6)
    rows = list(G.rows)
    res = canon_raw(G.n, rows)
    _dfs(G.n, rows, res, unit.level, c, levels, visitor, counts)
    return counts


# ---------------------------------------------------------------------------
# generation internals
# ---------------------------------------------------------------------------


def _violates(n, rows, forbid) -> bool:
    if not forbid:
        return False
    G = Graph._unsafe(n, rows)
    return any(contains(G, p) for p in forbid)


def _emit(n, rows, res, level, c, visitor, counts):
    if c.connected_only and not _connected(n, rows):
        return
    counts[level] += 1
    if visitor is not None:
        # canonical representative: stable across shard layouts
        visitor(level, Graph._unsafe(n, res.key))


def _connected(n, rows) -> bool:
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        mask = frontier
        while mask:
            low = mask & -mask
            nxt |= rows[low.bit_length() - 1]
            mask ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def _dfs(n, rows, res: CanonResult, level, c, levels, visitor, counts):
    if level in levels:
        _emit(n, rows, res, level, c, visitor, counts)
    if level == c.m:
        return
    for n2, rows2, added in _candidates(n, rows, res, c.max_vertices):
        if _violates(n2, rows2, c.forbid):
            continue
        res2 = canon_raw(n2, rows2)
        if _accepted(n2, added, res2):
            _dfs(n2, rows2, res2, level + 1, c, levels, visitor, counts)


def _candidates(n, rows, res: CanonResult, cap):
    """Inequivalent single-edge augmentations of the parent class."""
    gens = res.gens

    # existing-pair non-edges, one representative per Aut(parent) pair orbit
    seen: set[tuple[int, int]] = set()
    for a in range(n):
        row_a = rows[a]
        for b in range(a + 1, n):
            if row_a >> b & 1:
                continue
            if (a, b) in seen:
                continue
            if gens:
                seen.update(pair_orbit(gens, (a, b)))
            rows2 = list(rows)
            rows2[a] |= 1 << b
            rows2[b] |= 1 << a
            yield n, rows2, (a, b)

    # one fresh vertex attached to v, one representative per vertex orbit
    if n + 1 <= cap:
        orb = vertex_orbits(n, gens) if gens else list(range(n))
        done = set()
        for v in range(n):
            if orb[v] in done:
                continue
            done.add(orb[v])
            rows2 = list(rows) + [1 << v]
            rows2[v] |= 1 << n
            yield n + 1, rows2, (v, n)

    # a fresh K_2 component
    if n + 2 <= cap:
        rows2 = list(rows) + [1 << (n + 1), 1 << n]
        yield n + 2, rows2, (n, n + 1)


def _accepted(n2, added, res2: CanonResult) -> bool:
    """Canonical-augmentation test: the added edge must lie in the orbit of
    the child's designated removable edge (at the canonically last vertex)."""
    key = res2.key
    lab = res2.lab
    last_row = key[n2 - 1]
    assert last_row, "child classes never have isolated vertices"
    a = last_row.bit_length() - 1
    designated = (lab[a], lab[n2 - 1])
    if designated[0] > designated[1]:
        designated = (designated[1], designated[0])
    if added == designated:
        return True
    if not res2.gens:
        return False
    return added in pair_orbit(res2.gens, designated)
