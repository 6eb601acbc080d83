"""The elimination game and its equivalence with acyclic T-odd orientations.

A play removes vertices one at a time. A vertex may be removed only while it is
white, i.e. when its T-membership agrees with the parity of its already removed
neighbours; removing it flips the colour of every remaining neighbour. Valid
complete plays are exactly the topological orders of acyclic T-odd orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import Instance, Orientation, topological_order, validate_orientation
from .errors import InvalidPlay, NotAcyclic, NotTOdd

EliminationOrder = tuple[int, ...]


class PlayCheck(NamedTuple):
    valid: bool
    index: int | None


@dataclass(frozen=True)
class GameState:
    """A position of the game: who has been removed and how often each vertex was flipped."""

    inst: Instance
    removed: frozenset[int] = frozenset()
    flips: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.flips:
            object.__setattr__(self, "flips", (0,) * self.inst.n)

    def is_black(self, v: int) -> bool:
        return (v in self.inst.target) != (self.flips[v] % 2 == 1)

    def is_white(self, v: int) -> bool:
        return not self.is_black(v)

    def white_vertices(self) -> list[int]:
        return [v for v in range(self.inst.n) if v not in self.removed and self.is_white(v)]

    def remove(self, v: int) -> "GameState":
        if v in self.removed:
            raise InvalidPlay(f"vertex {v} already removed")
        if self.is_black(v):
            raise InvalidPlay(f"vertex {v} is black")
        flips = list(self.flips)
        for w in self.inst.graph.adjacency[v]:
            flips[w] += 1
        return GameState(self.inst, self.removed | {v}, tuple(flips))

    @property
    def finished(self) -> bool:
        return len(self.removed) == self.inst.n


def _is_permutation(n: int, order: Sequence[int]) -> bool:
    return len(order) == n and sorted(order) == list(range(n))


def validate_elimination_order(inst: Instance, order: Sequence[int]) -> PlayCheck:
    """Replay ``order`` with flip counters; report the first step that removes a black vertex."""
    if not _is_permutation(inst.n, order):
        raise InvalidPlay("order is not a permutation of the vertices")
    adj = inst.graph.adjacency
    t = inst.target
    flips = [0] * inst.n
    for i, v in enumerate(order):
        if (v in t) != (flips[v] % 2 == 1):
            return PlayCheck(False, i)
        for w in adj[v]:
            flips[w] += 1
    return PlayCheck(True, None)


def order_to_orientation(inst: Instance, order: Sequence[int]) -> Orientation:
    check = validate_elimination_order(inst, order)
    if not check.valid:
        raise InvalidPlay(f"vertex {order[check.index]} is black at step {check.index}")
    pos = {v: i for i, v in enumerate(order)}
    arcs = frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in inst.graph.edges)
    return Orientation(inst.n, arcs)


def orientation_to_order(inst: Instance, o: Orientation) -> EliminationOrder:
    report = validate_orientation(inst, o)
    if not report.acyclic:
        raise NotAcyclic(f"directed cycle {report.cycle}")
    if not report.t_odd:
        raise NotTOdd(f"vertex {report.vertex} has the wrong in-degree parity")
    return tuple(topological_order(o))
