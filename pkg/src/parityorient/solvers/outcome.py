from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from ..core import ConditionSet, Instance, Orientation, failing_conditions, validate_orientation
from ..game import EliminationOrder, order_to_orientation


@dataclass(frozen=True)
class Solution:
    orientation: Orientation
    order: EliminationOrder
    method: str = ""
    status = "solution"


@dataclass(frozen=True)
class NoSolution:
    reason: str
    status = "no_solution"


@dataclass(frozen=True)
class ConditionViolated:
    condition: str
    conditions: tuple[str, ...] = ()
    status = "condition_violated"

    def __post_init__(self):
        if not self.conditions:
            object.__setattr__(self, "conditions", (self.condition,))


SolveOutcome = Union[Solution, NoSolution, ConditionViolated]


def finish(inst: Instance, order: Sequence[int], method: str) -> Solution:
    """Wrap a constructed order, validating it unconditionally."""
    o = order_to_orientation(inst, order)
    report = validate_orientation(inst, o)
    if not report.ok:
        raise AssertionError(f"{method} produced an invalid orientation: {report}")
    return Solution(o, tuple(order), method)


def violated(inst: Instance, required: ConditionSet) -> ConditionViolated | None:
    bad = failing_conditions(inst, required)
    return ConditionViolated(bad[0], bad) if bad else None
