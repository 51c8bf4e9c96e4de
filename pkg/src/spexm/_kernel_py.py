"""Pure-Python canonical labelling kernel for graphs on <= 64 vertices.

Individualization-refinement search in the McKay style: equitable partition
refinement, a path invariant pruning the tree against the best leaf found so
far, orbit pruning from discovered automorphisms, and backjumping - once a
branch that ties the best path produces one automorphism, the rest of that
branch is a coset of what the best branch already covers, so the search
returns straight to the divergence point.  The canonical labelling minimises
(invariant path, relabelled adjacency rows).

The Cython twin in ``_kernel_cy.pyx`` implements exactly the same algorithm
with the same tie-breaking conventions; the two must agree bit for bit.
"""

from __future__ import annotations

from collections import deque

KERNEL_IMPL = "python"

_NO_JUMP = 1 << 30


def _refine(rows, cells, work):
    """Refine the ordered partition ``cells`` to equitable, consuming ``work``.

    Returns the trace of split events as a flat int tuple; the trace depends
    only on the isomorphism type of the (graph, ordered partition) pair.
    """
    trace = []
    while work:
        S = work.popleft()
        smask = 0
        for v in S:
            smask |= 1 << v
        pos = 0
        while pos < len(cells):
            C = cells[pos]
            if len(C) > 1:
                groups = {}
                for v in C:
                    k = (rows[v] & smask).bit_count()
                    g = groups.get(k)
                    if g is None:
                        groups[k] = [v]
                    else:
                        g.append(v)
                if len(groups) > 1:
                    keys = sorted(groups)
                    subs = [groups[k] for k in keys]
                    cells[pos : pos + 1] = subs
                    trace.append(pos)
                    trace.append(len(keys))
                    for k in keys:
                        trace.append(k)
                        trace.append(len(groups[k]))
                    work.extend(subs)
                    pos += len(subs)
                    continue
            pos += 1
    return tuple(trace)


def _relabel_key(rows, lab):
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        acc = 0
        r = rows[v]
        while r:
            low = r & -r
            acc |= 1 << pos[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


def canon_connected(n, rows):
    """Canonical labelling; connectivity is not required, the composite
    wrapper splits components purely for speed.

    Returns ``(lab, key, gens)``: ``lab[i]`` is the original vertex at
    canonical position i, ``key`` the canonically relabelled adjacency rows,
    ``gens`` automorphism generators in original labels.
    """
    if n == 0:
        return [], (), []
    if n == 1:
        return [0], (0,), []

    cells = [list(range(n))]
    trace0 = _refine(rows, cells, deque([list(range(n))]))

    best: dict = {"path": None, "key": None, "lab": None, "prefix": None}
    autos: list = []
    path = [(-1,) + trace0]
    prefix: list = []

    def rec(cells, status):
        """Returns the absolute prefix depth to backjump to (_NO_JUMP: none)."""
        tpos = -1
        for i, C in enumerate(cells):
            if len(C) > 1:
                tpos = i
                break
        if tpos < 0:
            lab = [C[0] for C in cells]
            key = _relabel_key(rows, lab)
            if best["key"] is None or status < 0:
                best["path"] = list(path)
                best["key"] = key
                best["lab"] = lab
                best["prefix"] = list(prefix)
                return _NO_JUMP
            if key < best["key"]:
                best["path"] = list(path)
                best["key"] = key
                best["lab"] = lab
                best["prefix"] = list(prefix)
                return _NO_JUMP
            if key == best["key"]:
                bl = best["lab"]
                g = [0] * n
                for i in range(n):
                    g[bl[i]] = lab[i]
                autos.append(tuple(g))
                # hand control back to the node where this branch left the
                # best path; deeper siblings only repeat coset elements
                bp = best["prefix"]
                d = 0
                while d < len(bp) and d < len(prefix) and bp[d] == prefix[d]:
                    d += 1
                return d
            return _NO_JUMP

        T = cells[tpos]
        parent = list(range(n))

        def find(x):
            r = x
            while parent[r] != r:
                r = parent[r]
            while parent[x] != r:
                parent[x], x = r, parent[x]
            return r

        explored = []
        seen = len(autos)
        depth = len(path)
        mydepth = len(prefix)
        for v in T:
            # fold automorphisms discovered below earlier siblings into the
            # orbit DSU; only those fixing this node's prefix may prune here
            for gi in range(seen, len(autos)):
                g = autos[gi]
                if all(g[p] == p for p in prefix):
                    for a in range(n):
                        ra, rb = find(a), find(g[a])
                        if ra != rb:
                            parent[ra] = rb
            seen = len(autos)
            rv = find(v)
            if any(find(u) == rv for u in explored):
                continue
            ccells = [list(C) for C in cells]
            ccells[tpos : tpos + 1] = [[v], [w for w in T if w != v]]
            tr = _refine(rows, ccells, deque([[v]]))
            lvl = (tpos,) + tr
            nstatus = status
            if status == 0 and best["key"] is not None:
                bp = best["path"]
                if depth < len(bp):
                    b = bp[depth]
                    if lvl < b:
                        nstatus = -1
                    elif lvl > b:
                        explored.append(v)
                        continue
                else:
                    nstatus = -1
            path.append(lvl)
            prefix.append(v)
            jump = rec(ccells, nstatus)
            path.pop()
            prefix.pop()
            explored.append(v)
            if jump < mydepth:
                return jump
        return _NO_JUMP

    rec(cells, 0)
    return best["lab"], best["key"], [list(g) for g in autos]
