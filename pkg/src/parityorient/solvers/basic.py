"""Trees, cycles, paths and cliques."""

from __future__ import annotations

from ..core import ConditionSet, Graph, Instance, is_connected
from ..errors import InvalidParameters, IsBadPathInstance, NotACycle, NotAPath, NotATree, PreconditionViolated
from .engine import Ctx
from .grid import BadPathWitness, bad_path_witness, endpoint_section
from .outcome import NoSolution, SolveOutcome, finish, violated


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in g.vertices()) and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices())


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def walk(g: Graph, start: int) -> list[int]:
    """Vertices of a path or cycle in traversal order from ``start``."""
    out, prev, cur = [start], None, start
    while True:
        nxt = [w for w in g.adjacency[cur] if w != prev and w != start]
        if not nxt:
            return out
        prev, cur = cur, min(nxt)
        out.append(cur)


def path_sequence(g: Graph) -> list[int]:
    if not is_path(g):
        raise NotAPath("graph is not a path")
    if g.n == 1:
        return [0]
    return walk(g, min(v for v in g.vertices() if g.degree(v) == 1))


def solve_tree(inst: Instance) -> SolveOutcome:
    """Leaves-to-root parity forcing, rooted at vertex 0."""
    if not is_tree(inst.graph):
        raise NotATree("graph is not a tree")
    bad = violated(inst, ConditionSet(P=True))
    if bad:
        return bad
    order = Ctx(inst.graph).forest_order(list(range(inst.n)), inst.target)
    assert order is not None
    return finish(inst, order, "tree")


def solve_cycle(inst: Instance, source: int | None = None) -> SolveOutcome:
    """Cut at an edge uv with u outside T, solve the path for T △ {v}, add u -> v.

    With ``source`` given, that vertex is the cut point and ends up a source.
    """
    g = inst.graph
    if not is_cycle(g):
        raise NotACycle("graph is not a cycle")
    bad = violated(inst, ConditionSet(P=True, S=True))
    if bad:
        return bad
    if source is not None and source in inst.target:
        raise PreconditionViolated("a designated source must lie outside T")
    order = Ctx(g).cycle_order(walk(g, 0), inst.target, source)
    assert order is not None
    return finish(inst, order, "cycle")


def is_bad_path_instance(inst: Instance) -> BadPathWitness:
    return bad_path_witness(path_sequence(inst.graph), inst.target)


def even_endpoint_section(inst: Instance) -> tuple[int, str]:
    """Smallest (k, side) whose end section of 2k+1 vertices has an even number of T vertices."""
    seq = path_sequence(inst.graph)
    if len(seq) % 2:
        raise InvalidParameters("the path needs an even number of vertices")
    found = endpoint_section(seq, inst.target)
    if found is None:
        raise IsBadPathInstance("bad path instance has no even end section")
    return found


def solve_clique(inst: Instance) -> SolveOutcome:
    """K_n is solvable iff |T| = floor(n/2).

    The i-th removed vertex has in-degree i, so T fills the odd positions of
    the order and the other vertices the even ones.
    """
    g = inst.graph
    if not is_complete(g):
        raise InvalidParameters("graph is not complete")
    n = g.n
    if len(inst.target) != n // 2:
        return violated(inst, ConditionSet(P=True)) or NoSolution("CliqueCount")
    inside = sorted(inst.target)
    outside = sorted(set(range(n)) - inst.target)
    order = [inside[i // 2] if i % 2 else outside[i // 2] for i in range(n)]
    return finish(inst, order, "clique")
