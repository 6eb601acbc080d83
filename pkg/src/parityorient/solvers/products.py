"""Public solvers for grids, cylinders, quasi 2-cylinders and tori.

Instances must use the numbering produced by :func:`families.build_family`.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import ConditionSet, Instance
from ..errors import NotAGrid, UnsupportedFamily
from ..families import FamilySpec, build_family
from .cylinder import cylinder_order
from .engine import Ctx
from .grid import BadPathWitness, bad_path_witness, grid_order, grid_sides, interior, is_bad_grid
from .outcome import NoSolution, SolveOutcome, finish, violated
from .quasi import quasi_order
from .torus import torus_order


def _frame(inst: Instance, spec: FamilySpec, error: type) -> dict:
    g, cmap = build_family(spec)
    if g != inst.graph:
        raise error(f"graph does not match {spec.label()}")
    return cmap.frame()


@dataclass(frozen=True)
class BadGridWitness:
    dims_even: bool
    sides: dict
    interior_in_t: bool

    @property
    def bad(self) -> bool:
        return self.dims_even and all(w.bad for w in self.sides.values()) and self.interior_in_t


def is_bad_grid_instance(inst: Instance, p: int, q: int) -> BadGridWitness:
    f = _frame(inst, FamilySpec("grid", p, q), NotAGrid)
    t = inst.target
    sides: dict[str, BadPathWitness] = {k: bad_path_witness(v, t) for k, v in grid_sides(f, p, q).items()}
    w = BadGridWitness(p % 2 == 0 and q % 2 == 0, sides, all(v in t for v in interior(f, p, q)))
    assert w.bad == is_bad_grid(f, p, q, t)
    return w


def solve_grid(inst: Instance, p: int, q: int) -> SolveOutcome:
    f = _frame(inst, FamilySpec("grid", p, q), NotAGrid)
    bad = violated(inst, ConditionSet(P=True))
    if bad:
        return bad
    if is_bad_grid(f, p, q, inst.target):
        return NoSolution("BadGrid")
    order = grid_order(Ctx(inst.graph), f, p, q, inst.target)
    if order is None:
        raise AssertionError("grid construction failed on a non-bad instance")
    return finish(inst, order, "grid")


def cylinder_conditions(p: int, q: int) -> ConditionSet:
    if p % 2 == 1 and q % 2 == 0:
        return ConditionSet(P=True)
    return ConditionSet(True, True, True)


def solve_cylinder(inst: Instance, p: int, q: int) -> SolveOutcome:
    if p < 3 or q < 1:
        raise UnsupportedFamily("cylinders need p >= 3 and q >= 1")
    f = _frame(inst, FamilySpec("cylinder", p, q), UnsupportedFamily)
    bad = violated(inst, cylinder_conditions(p, q))
    if bad:
        return bad
    order = cylinder_order(Ctx(inst.graph), f, p, q, inst.target)
    if order is None:
        raise AssertionError("cylinder construction failed although its conditions hold")
    return finish(inst, order, "cylinder")


def solve_quasi_two_cylinder(inst: Instance, p: int) -> SolveOutcome:
    if p < 4:
        raise UnsupportedFamily("quasi 2-cylinders need p >= 4")
    f = _frame(inst, FamilySpec("quasi2cyl", p), UnsupportedFamily)
    need = ConditionSet(P=True) if p % 2 else ConditionSet(True, True, True)
    bad = violated(inst, need)
    if bad:
        return bad
    order = quasi_order(Ctx(inst.graph), f, p, inst.target)
    if order is None:
        raise AssertionError("quasi 2-cylinder construction failed although its conditions hold")
    return finish(inst, order, "quasi2cyl")


def solve_torus(inst: Instance, p: int, q: int) -> SolveOutcome:
    if min(p, q) <= 3:
        raise UnsupportedFamily("the torus construction needs p, q >= 4")
    f = _frame(inst, FamilySpec("torus", p, q), UnsupportedFamily)
    bad = violated(inst, ConditionSet(True, True, True))
    if bad:
        return bad
    order = torus_order(Ctx(inst.graph), f, p, q, inst.target)
    if order is None:
        raise AssertionError("torus construction failed although its conditions hold")
    return finish(inst, order, "torus")
