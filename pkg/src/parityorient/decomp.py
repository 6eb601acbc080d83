"""Ordered vertex partitions with flip sets and local targets.

For an ordered partition ⟨V_0, ..., V_k⟩ of an instance (G, T), the flip set
Z_i holds the vertices of V_i with an odd number of neighbours in earlier
parts, and the local target is T_i = Z_i △ T(V_i). Solving each G[V_i] for
T_i and orienting every crossing edge forward yields a solution for (G, T).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Graph, Instance, Orientation, induced_subgraph, validate_orientation
from .errors import BadSubOrientation, NotAcyclic, NotAPartition, NotTOdd, PreconditionViolated
from .game import orientation_to_order


def flip_sets(g: Graph, parts: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    adj = g.adjacency
    earlier: set[int] = set()
    out = []
    for part in parts:
        part = list(part)
        out.append(frozenset(v for v in part if sum(1 for w in adj[v] if w in earlier) & 1))
        earlier.update(part)
    return out


def induced_edge_count(g: Graph, verts: Iterable[int]) -> int:
    s = set(verts)
    adj = g.adjacency
    return sum(1 for v in s for w in adj[v] if w in s) // 2


def local_targets(g: Graph, target: frozenset[int], parts: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    """T_i for each part; parts may cover only a region of the graph (an induced subgraph)."""
    return [z ^ (target & frozenset(part)) for z, part in zip(flip_sets(g, parts), parts)]


@dataclass(frozen=True)
class TDecomposition:
    parts: tuple[tuple[int, ...], ...]
    flips: tuple[frozenset[int], ...]
    targets: tuple[frozenset[int], ...]
    edge_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.parts)


def decomposition_targets(inst: Instance, parts: Sequence[Iterable[int]]) -> TDecomposition:
    parts = [tuple(sorted(set(p))) for p in parts]
    seen: set[int] = set()
    for part in parts:
        if not part:
            raise NotAPartition("empty part")
        if seen.intersection(part):
            raise NotAPartition("parts overlap")
        seen.update(part)
    if seen != set(range(inst.n)):
        raise NotAPartition("parts do not cover the vertex set")
    g = inst.graph
    flips = flip_sets(g, parts)
    targets = [z ^ inst.restricted(p) for z, p in zip(flips, parts)]
    return TDecomposition(
        parts=tuple(parts),
        flips=tuple(flips),
        targets=tuple(targets),
        edge_counts=tuple(induced_edge_count(g, p) for p in parts),
    )


def decomposition_satisfies_P(d: TDecomposition) -> tuple[bool, ...]:
    return tuple((len(t) + m) % 2 == 0 for t, m in zip(d.targets, d.edge_counts))


def infer_missing_part_parity(inst: Instance, d: TDecomposition, skip: int) -> bool:
    """If P holds globally and in every part but ``skip``, it holds in ``skip`` too."""
    if (inst.graph.m + len(inst.target)) % 2:
        raise PreconditionViolated("the instance violates P")
    checks = decomposition_satisfies_P(d)
    for i, ok in enumerate(checks):
        if i != skip and not ok:
            raise PreconditionViolated(f"part {i} violates P")
    if not checks[skip]:
        raise AssertionError(f"part {skip} violates P although every other part satisfies it")
    return True


def part_instance(inst: Instance, d: TDecomposition, i: int) -> tuple[Instance, tuple[int, ...]]:
    """(G[V_i], T_i) on dense local ids, with the local -> global map."""
    sub, local_to_global = induced_subgraph(inst.graph, d.parts[i])
    index = {v: k for k, v in enumerate(local_to_global)}
    return Instance(sub, frozenset(index[v] for v in d.targets[i])), local_to_global


def compose_orientations(inst: Instance, d: TDecomposition, subs: Sequence[Orientation]) -> Orientation:
    """Glue per-part orientations (local ids) and orient crossing edges forward."""
    if len(subs) != len(d.parts):
        raise ValueError("one sub-orientation per part is required")
    part_of = {}
    for i, part in enumerate(d.parts):
        for v in part:
            part_of[v] = i
    arcs = set()
    for i, sub in enumerate(subs):
        local, l2g = part_instance(inst, d, i)
        try:
            report = validate_orientation(local, sub)
        except Exception as exc:
            raise BadSubOrientation(i, exc) from exc
        if not report.ok:
            raise BadSubOrientation(i, report)
        arcs.update((l2g[a], l2g[b]) for a, b in sub.arcs)
    for u, v in inst.graph.edges:
        pu, pv = part_of[u], part_of[v]
        if pu < pv:
            arcs.add((u, v))
        elif pv < pu:
            arcs.add((v, u))
    o = Orientation(inst.n, frozenset(arcs))
    assert validate_orientation(inst, o).ok
    return o


def trivial_decomposition(inst: Instance, o: Orientation) -> TDecomposition:
    report = validate_orientation(inst, o)
    if not report.acyclic:
        raise NotAcyclic(f"directed cycle {report.cycle}")
    if not report.t_odd:
        raise NotTOdd(f"vertex {report.vertex} has the wrong parity")
    order = orientation_to_order(inst, o)
    d = decomposition_targets(inst, [(v,) for v in order])
    assert all(not t for t in d.targets)
    return d
