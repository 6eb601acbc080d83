"""Shared machinery for the constructive solvers.

Family solvers work on *frames*: dicts from coordinates to vertex ids of one
host graph. Each part of a decomposition is an induced subgraph of the host,
so flip sets can be computed from host adjacency directly. Solvers return
elimination orders (lists of host ids) or None; concatenating the orders of
the parts in decomposition order is exactly the composed orientation.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable, Sequence

from ..core import Graph
from ..decomp import induced_edge_count, local_targets

Order = list[int]
PartSolver = Callable[[frozenset], "Order | None"]
Part = tuple[list[int], PartSolver]


class Ctx:
    """Host graph plus the small generic solvers every family reduces to."""

    def __init__(self, g: Graph, check_parts: bool = True):
        self.g = g
        self.check_parts = check_parts

    # generic region helpers ------------------------------------------------

    def degrees_in(self, verts: Iterable[int]) -> dict[int, int]:
        s = set(verts)
        adj = self.g.adjacency
        return {v: sum(1 for w in adj[v] if w in s) for v in s}

    def conditions(self, verts: Iterable[int], t: frozenset) -> tuple[bool, bool, bool]:
        """(P, S, Sbar) of (G[verts], t)."""
        deg = self.degrees_in(verts)
        m = sum(deg.values()) // 2
        p = (m + len(t)) % 2 == 0
        source = frozenset(v for v in deg if v not in t)
        sink = frozenset(v for v in deg if (deg[v] % 2 == 1) == (v in t))

        def rule(a, b):
            return bool(a) and (len(a) > 1 or len(deg) == 1 or a != b)

        return p, rule(source, sink), rule(sink, source)

    def valid_play(self, verts: Sequence[int], t: frozenset, order: Sequence[int]) -> bool:
        s = set(verts)
        if len(order) != len(s) or set(order) != s:
            return False
        adj = self.g.adjacency
        flips = dict.fromkeys(s, 0)
        for v in order:
            if (v in t) != (flips[v] & 1 == 1):
                return False
            for w in adj[v]:
                if w in flips:
                    flips[w] += 1
        return True

    # decompositions ----------------------------------------------------------

    def run(self, target: frozenset, parts: Sequence[Part]) -> Order | None:
        """Solve an ordered decomposition of a region; None if some part fails."""
        vsets = [verts for verts, _ in parts]
        targets = local_targets(self.g, target, vsets)
        for verts, t in zip(vsets, targets):
            if (len(t) + induced_edge_count(self.g, verts)) % 2:
                raise AssertionError(f"decomposition part {sorted(verts)} violates P")
        order: Order = []
        for (verts, solve), t in zip(parts, targets):
            sub = solve(t)
            if sub is None:
                return None
            if self.check_parts and not self.valid_play(verts, t, sub):
                raise AssertionError(f"sub-solver returned an invalid play on {sorted(verts)}")
            order.extend(sub)
        return order

    def first(self, target: frozenset, *candidates: Callable[[], "Sequence[Part] | None"]) -> Order | None:
        """Try candidate decompositions in order and return the first success."""
        for make in candidates:
            parts = make()
            if parts is None:
                continue
            out = self.run(target, parts)
            if out is not None:
                return out
        return None

    # part constructors -------------------------------------------------------

    def path(self, verts: Sequence[int]) -> Part:
        verts = list(verts)
        return verts, lambda t: self.forest_order(verts, t)

    def cycle(self, cyc: Sequence[int]) -> Part:
        cyc = list(cyc)
        return cyc, lambda t: self.cycle_order(cyc, t)

    def fixed(self, order: Sequence[int]) -> Part:
        order = list(order)
        return order, lambda t: list(order)

    # base solvers ------------------------------------------------------------

    def forest_arcs(self, verts: Sequence[int], t: frozenset, skip: tuple[int, int] | None = None):
        """Leaves-to-root parity forcing on the forest G[verts] minus ``skip``.

        Returns the arc list or None when some component has the wrong parity.
        """
        s = set(verts)
        adj = self.g.adjacency

        def nbrs(v):
            for w in adj[v]:
                if w in s and not (skip and {v, w} == set(skip)):
                    yield w

        par = dict.fromkeys(s, 0)
        seen: set[int] = set()
        arcs = []
        for root in sorted(s):
            if root in seen:
                continue
            seen.add(root)
            bfs, parent = [root], {root: None}
            i = 0
            while i < len(bfs):
                v = bfs[i]
                i += 1
                for w in nbrs(v):
                    if w not in seen:
                        seen.add(w)
                        parent[w] = v
                        bfs.append(w)
                    elif w != parent[v]:
                        raise ValueError("region is not a forest")
            for v in reversed(bfs[1:]):
                u = parent[v]
                if (par[v] & 1 == 1) != (v in t):
                    arcs.append((u, v))
                    par[v] += 1
                else:
                    arcs.append((v, u))
                    par[u] += 1
            if (par[root] & 1 == 1) != (root in t):
                return None
        return arcs

    def forest_order(self, verts: Sequence[int], t: frozenset) -> Order | None:
        arcs = self.forest_arcs(verts, t)
        return None if arcs is None else topo(verts, arcs)

    def cycle_order(self, cyc: Sequence[int], t: frozenset, source: int | None = None) -> Order | None:
        """Cut the cycle at an edge uv with u outside T, solve the path, then add u -> v."""
        n = len(cyc)
        if (n + len(t)) % 2:
            return None
        outside = [v for v in cyc if v not in t]
        if not outside:
            return None
        u = min(outside) if source is None else source
        if u in t:
            return None
        i = cyc.index(u)
        v = min(cyc[i - 1], cyc[(i + 1) % n])
        arcs = self.forest_arcs(cyc, t ^ {v}, skip=(u, v))
        if arcs is None:
            return None
        arcs.append((u, v))
        return topo(cyc, arcs)


def topo(verts: Iterable[int], arcs: Iterable[tuple[int, int]]) -> Order:
    verts = list(verts)
    indeg = dict.fromkeys(verts, 0)
    succ: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    heap = [v for v in verts if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(out) != len(verts):
        raise AssertionError("constructed arcs contain a cycle")
    return out


# frame helpers ---------------------------------------------------------------

Frame = dict


def block(f: Frame, i0: int, i1: int, j0: int, j1: int) -> tuple[Frame, int, int]:
    """Sub-rectangle [i0..i1] x [j0..j1] of a frame, re-indexed from (0, 0)."""
    return (
        {(i - i0, j - j0): f[(i, j)] for i in range(i0, i1 + 1) for j in range(j0, j1 + 1)},
        i1 - i0 + 1,
        j1 - j0 + 1,
    )


def remap(f: Frame, fn: Callable[[tuple[int, int]], tuple[int, int]]) -> Frame:
    """Move the vertex at coordinate c to fn(c)."""
    return {fn(c): v for c, v in f.items()}


def col(f: Frame, i: int, q: int) -> list[int]:
    return [f[(i, j)] for j in range(q) if (i, j) in f]


def row(f: Frame, j: int, p: int) -> list[int]:
    return [f[(i, j)] for i in range(p) if (i, j) in f]
