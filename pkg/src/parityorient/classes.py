"""Class membership of graphs and the structural characterization predicates.

C_N is the class of graphs on which every target satisfying the conditions in
N is solvable. Membership is decided exactly by enumeration; the structural
predicates describe the right-hand sides of the characterization theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    ALL_CONDITION_SETS,
    ConditionSet,
    Graph,
    all_degrees_even,
    is_connected,
    is_eulerian,
)
from .errors import NoClaim, TooLarge
from .families import FamilySpec
from .oracle import BATCH_CAP, ENUMERATION_CAP, class_membership_small, decide_exists, solvable_target_masks
from .core import Instance

CLASS_LABELS = tuple(c.label for c in ALL_CONDITION_SETS)

C_P = "C_P"
C_PS_MINUS_C_P = "C_PS\\C_P"
C_PSSBAR_MINUS_C_PS = "C_PSSbar\\C_PS"
OUTSIDE = "outside C_PSSbar"


@dataclass(frozen=True)
class StructuralProfile:
    connected: bool
    eulerian: bool
    all_even: bool
    order_size_parity: int
    c_eligible: bool
    d_eligible: bool
    e_eligible: bool


def theorem1_predicates(g: Graph) -> StructuralProfile:
    conn = is_connected(g)
    eul = is_eulerian(g)
    parity = (g.n + g.m) % 2
    return StructuralProfile(
        connected=conn,
        eulerian=eul,
        all_even=all_degrees_even(g),
        order_size_parity=parity,
        c_eligible=conn and not eul and parity == 1,
        d_eligible=eul,
        e_eligible=conn and not eul and parity == 0,
    )


@dataclass(frozen=True)
class ClassReport:
    n: int
    membership: dict
    counterexamples: dict
    method: str
    theorem2_member: bool
    theorem2_consistent: bool

    def member(self, conds: ConditionSet | str) -> bool:
        label = conds if isinstance(conds, str) else conds.label
        return self.membership[label]

    @property
    def placement(self) -> str:
        if self.member("P"):
            return C_P
        if self.member("PS"):
            return C_PS_MINUS_C_P
        if self.member("PSSbar"):
            return C_PSSBAR_MINUS_C_PS
        return OUTSIDE


def theorem2_shortcut(g: Graph, solvable: int | None = None) -> bool:
    """G is in C_P iff V minus some single vertex is a solvable target."""
    full = (1 << g.n) - 1
    for v in g.vertices():
        t = full & ~(1 << v)
        if solvable is not None:
            if solvable >> t & 1:
                return True
        elif decide_exists(Instance(g, frozenset(range(g.n)) - {v})) is not None:
            return True
    return g.n == 0


def classify_graph(g: Graph, cap: int = ENUMERATION_CAP) -> ClassReport:
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the classification cap of {cap}")
    solvable = solvable_target_masks(g) if g.n <= BATCH_CAP else None
    membership, counter = {}, {}
    for conds in ALL_CONDITION_SETS:
        rep = class_membership_small(g, conds, cap=cap, solvable=solvable)
        membership[conds.label] = rep.member
        counter[conds.label] = None if rep.member else rep.counterexample.target
    short = theorem2_shortcut(g, solvable)
    return ClassReport(
        n=g.n,
        membership=membership,
        counterexamples=counter,
        method="oracle",
        theorem2_member=short,
        theorem2_consistent=short == membership["P"],
    )


def family_class(spec: FamilySpec) -> str:
    """Placement predicted from the family parameters alone."""
    k, p, q = spec.kind, spec.p, spec.q
    if k in ("path", "tree"):
        return C_P
    if k == "cycle" or (k == "cylinder" and q == 1):
        return C_PS_MINUS_C_P
    if k == "grid":
        if p % 2 or q % 2:
            return C_P
        raise NoClaim("grids with both dimensions even are not placed")
    if k == "cylinder":
        if p % 2 == 1 and q % 2 == 0:
            return C_P
        return C_PSSBAR_MINUS_C_PS
    if k == "torus":
        if p >= 4 and q >= 4:
            return C_PS_MINUS_C_P
        raise NoClaim("tori with a dimension of 3 are not placed")
    if k == "clique":
        if p == 3:
            return C_PS_MINUS_C_P
        if p >= 4:
            return OUTSIDE
        raise NoClaim("cliques on fewer than three vertices are not placed")
    raise NoClaim(f"no placement for {spec.label()}")


# small graph enumeration ---------------------------------------------------


def _refine(g: Graph, color: dict) -> dict:
    """Iterated neighbourhood refinement; colours are renumbered by sorted signature."""
    keys = sorted(set(color.values()))
    color = {v: keys.index(color[v]) for v in g.vertices()}
    while True:
        sig = {v: (color[v], tuple(sorted(color[w] for w in g.adjacency[v]))) for v in g.vertices()}
        keys = sorted(set(sig.values()))
        new = {v: keys.index(sig[v]) for v in g.vertices()}
        if len(keys) == len(set(color.values())):
            return new
        color = new


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    """One vertex per class of interchangeable twins (swapping two twins is an automorphism)."""
    reps: list[int] = []
    for v in cell:
        nv = g.neighbor_set(v)
        if not any(nv - {r} == g.neighbor_set(r) - {v} for r in reps):
            reps.append(v)
    return reps


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Smallest relabelled edge list over an individualization-refinement search tree.

    The tree branches on every twin class of the first non-singleton cell, so
    the set of leaves is isomorphism invariant and the minimum is canonical.
    """
    edges = list(g.edges)
    best: list = [None]

    def search(color: dict) -> None:
        color = _refine(g, color)
        if len(set(color.values())) == g.n:
            relabelled = tuple(sorted((min(color[a], color[b]), max(color[a], color[b])) for a, b in edges))
            if best[0] is None or relabelled < best[0]:
                best[0] = relabelled
            return
        cells: dict[int, list[int]] = {}
        for v in g.vertices():
            cells.setdefault(color[v], []).append(v)
        cell = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        for v in _twin_representatives(g, cell):
            search({x: (color[x], 0 if x == v else 1) for x in g.vertices()})

    if g.n == 0:
        return 0, ()
    search({v: g.degree(v) for v in g.vertices()})
    return g.n, best[0]


@lru_cache(maxsize=None)
def graphs_on(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of simple graphs on n vertices."""
    if n > 8:
        raise TooLarge("isomorphism class enumeration is limited to 8 vertices")
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen = {}
    for h in graphs_on(n - 1):
        for mask in range(1 << (n - 1)):
            edges = list(h.edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = Graph(n, edges)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = Graph(n, key[1])
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (len(k[1]), k[1])))


def graphs_up_to(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in graphs_on(k)]


SMALL_NAMES = {
    (1, ()): "K1",
    (2, ()): "2K1",
    (2, ((0, 1),)): "K2",
    (3, ()): "3K1",
}


def small_graph_name(g: Graph) -> str:
    """Name of a graph with at most three vertices."""
    if g.n > 3:
        raise ValueError("only graphs with at most three vertices are named")
    if (g.n, tuple(sorted(g.edges))) in SMALL_NAMES:
        return SMALL_NAMES[(g.n, tuple(sorted(g.edges)))]
    if g.n == 3:
        return {1: "K2+K1", 2: "P3", 3: "K3"}[g.m]
    raise ValueError("unexpected small graph")
