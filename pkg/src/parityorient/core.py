"""Graphs, instances, orientations and the three necessary conditions.

Vertices are dense integer ids ``0..n-1``. Every type here is immutable after
construction, so values can be shared freely between threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CyclicOrientation, InvalidGraph, MismatchedEdgeSet

Edge = tuple[int, int]
Arc = tuple[int, int]


class Graph:
    """Simple undirected graph on ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidGraph("vertex count must be non-negative")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge {(u, v)} out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in norm:
                raise InvalidGraph(f"duplicate edge {key}")
            norm.add(key)
        self.n = n
        self.edges = frozenset(norm)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        self._sets = tuple(frozenset(a) for a in self.adjacency)
        masks = []
        for a in self.adjacency:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self._masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Instance:
    graph: Graph
    target: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        t = frozenset(int(v) for v in self.target)
        if any(not 0 <= v < self.graph.n for v in t):
            raise InvalidGraph("target contains a vertex outside the graph")
        object.__setattr__(self, "target", t)

    @property
    def n(self) -> int:
        return self.graph.n

    def target_mask(self) -> int:
        m = 0
        for v in self.target:
            m |= 1 << v
        return m

    def restricted(self, verts: Iterable[int]) -> frozenset[int]:
        """T(X): the target restricted to a vertex subset."""
        return self.target & frozenset(verts)


@dataclass(frozen=True)
class Orientation:
    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset((int(a), int(b)) for a, b in self.arcs))

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, b in self.arcs:
            deg[b] += 1
        return deg

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arcs:
            out[a].append(b)
        for lst in out:
            lst.sort()
        return out

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class ConditionSet:
    P: bool = False
    S: bool = False
    Sbar: bool = False

    @property
    def label(self) -> str:
        return "".join(n for n, f in (("P", self.P), ("S", self.S), ("Sbar", self.Sbar)) if f) or "-"

    @classmethod
    def parse(cls, text: str) -> "ConditionSet":
        s = text.replace("S̄", "Sbar").replace("S̄", "Sbar")
        p = "P" in s
        sbar = "Sbar" in s
        plain_s = "S" in s.replace("Sbar", "")
        return cls(P=p, S=plain_s, Sbar=sbar)

    def issubset(self, other: "ConditionSet") -> bool:
        return (not self.P or other.P) and (not self.S or other.S) and (not self.Sbar or other.Sbar)


ALL_CONDITION_SETS: tuple[ConditionSet, ...] = (
    ConditionSet(S=True),
    ConditionSet(Sbar=True),
    ConditionSet(S=True, Sbar=True),
    ConditionSet(P=True),
    ConditionSet(P=True, S=True),
    ConditionSet(P=True, Sbar=True),
    ConditionSet(P=True, S=True, Sbar=True),
)


def parity_condition_P(inst: Instance) -> bool:
    return (inst.graph.m + len(inst.target)) % 2 == 0


def source_and_sink_sets(inst: Instance) -> tuple[frozenset[int], frozenset[int]]:
    g, t = inst.graph, inst.target
    source = frozenset(v for v in g.vertices() if v not in t)
    sink = frozenset(v for v in g.vertices() if (g.degree(v) % 2 == 1) == (v in t))
    return source, sink


def _singleton_rule(a: frozenset[int], b: frozenset[int], n: int) -> bool:
    if not a:
        return False
    return len(a) > 1 or n == 1 or a != b


def conditions_S_Sbar(inst: Instance) -> tuple[bool, bool]:
    source, sink = source_and_sink_sets(inst)
    n = inst.graph.n
    return _singleton_rule(source, sink, n), _singleton_rule(sink, source, n)


def failing_conditions(inst: Instance, required: ConditionSet = ConditionSet(True, True, True)) -> tuple[str, ...]:
    """Names of the required conditions that ``inst`` violates, in the order P, S, Sbar."""
    bad = []
    if required.P and not parity_condition_P(inst):
        bad.append("P")
    if required.S or required.Sbar:
        s, sb = conditions_S_Sbar(inst)
        if required.S and not s:
            bad.append("S")
        if required.Sbar and not sb:
            bad.append("Sbar")
    return tuple(bad)


def condition_flags_mask(g: Graph, tmask: int, odd_mask: int | None = None) -> tuple[bool, bool, bool]:
    """(P, S, Sbar) for the target given as a bitmask; fast path for enumeration."""
    full = (1 << g.n) - 1
    if odd_mask is None:
        odd_mask = sum(1 << v for v in g.vertices() if g.degree(v) % 2)
    p = (g.m + bin(tmask).count("1")) % 2 == 0
    source = full & ~tmask
    sink = (tmask & odd_mask) | (full & ~tmask & ~odd_mask)

    def rule(a: int, b: int) -> bool:
        if not a:
            return False
        return (a & (a - 1)) != 0 or g.n == 1 or a != b

    return p, rule(source, sink), rule(sink, source)


@dataclass(frozen=True)
class ValidationReport:
    acyclic: bool
    t_odd: bool
    cycle: tuple[int, ...] | None = None
    vertex: int | None = None

    @property
    def ok(self) -> bool:
        return self.acyclic and self.t_odd


def check_edge_set(g: Graph, o: Orientation) -> None:
    if o.n != g.n:
        raise MismatchedEdgeSet(f"orientation has n={o.n}, graph has n={g.n}")
    seen = set()
    for a, b in o.arcs:
        key = (a, b) if a < b else (b, a)
        if key not in g.edges:
            raise MismatchedEdgeSet(f"arc {(a, b)} is not an edge of the graph")
        if key in seen:
            raise MismatchedEdgeSet(f"edge {key} oriented twice")
        seen.add(key)
    if len(seen) != g.m:
        missing = sorted(g.edges - seen)[0]
        raise MismatchedEdgeSet(f"edge {missing} is not oriented")


def find_directed_cycle(o: Orientation) -> tuple[int, ...] | None:
    succ = o.successors()
    color = [0] * o.n
    parent = [-1] * o.n
    for root in range(o.n):
        if color[root]:
            continue
        stack = [(root, 0)]
        color[root] = 1
        while stack:
            v, i = stack[-1]
            if i < len(succ[v]):
                stack[-1] = (v, i + 1)
                w = succ[v][i]
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, 0))
                elif color[w] == 1:
                    cyc = [v]
                    while cyc[-1] != w:
                        cyc.append(parent[cyc[-1]])
                    return tuple(reversed(cyc))
            else:
                color[v] = 2
                stack.pop()
    return None


def validate_orientation(inst: Instance, o: Orientation) -> ValidationReport:
    check_edge_set(inst.graph, o)
    cyc = find_directed_cycle(o)
    bad = None
    for v, d in enumerate(o.in_degrees()):
        if (d % 2 == 1) != (v in inst.target):
            bad = v
            break
    return ValidationReport(acyclic=cyc is None, t_odd=bad is None, cycle=cyc, vertex=bad)


def topological_order(o: Orientation) -> list[int]:
    """Kahn's algorithm, lowest id first among the available vertices."""
    indeg = o.in_degrees()
    succ = o.successors()
    heap = [v for v in range(o.n) if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(out) != o.n:
        raise CyclicOrientation("orientation contains a directed cycle")
    return out


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (u, v) numbered u·|V(H)| + v."""
    nh = h.n
    edges = []
    for u in g.vertices():
        for a, b in h.edges:
            edges.append((u * nh + a, u * nh + b))
    for v in h.vertices():
        for a, b in g.edges:
            edges.append((a * nh + v, b * nh + v))
    return Graph(g.n * nh, edges)


def induced_subgraph(g: Graph, verts: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Materialize G[verts] on dense local ids; returns (graph, local -> global)."""
    local_to_global = tuple(sorted(set(verts)))
    index = {v: i for i, v in enumerate(local_to_global)}
    edges = []
    for v in local_to_global:
        for w in g.adjacency[v]:
            if v < w and w in index:
                edges.append((index[v], index[w]))
    return Graph(len(local_to_global), edges), local_to_global


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for r in g.vertices():
        if seen[r]:
            continue
        seen[r] = True
        comp, stack = [r], [r]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def all_degrees_even(g: Graph) -> bool:
    return all(g.degree(v) % 2 == 0 for v in g.vertices())


def is_eulerian(g: Graph) -> bool:
    """Connected with every degree even (K1 counts as Eulerian)."""
    return is_connected(g) and all_degrees_even(g)


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def set_to_mask(verts: Iterable[int]) -> int:
    m = 0
    for v in verts:
        m |= 1 << v
    return m
