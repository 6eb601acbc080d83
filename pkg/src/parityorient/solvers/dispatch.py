from __future__ import annotations

from ..core import ConditionSet, Instance
from ..errors import UnsupportedFamily, UnsupportedInstance
from ..families import FamilySpec, build_family
from ..oracle import DEFAULT_CAP, decide_exists
from .basic import is_complete, is_cycle, is_tree, solve_clique, solve_cycle, solve_tree
from .outcome import NoSolution, SolveOutcome, finish, violated
from .products import solve_cylinder, solve_grid, solve_quasi_two_cylinder, solve_torus


def solve_family(inst: Instance, spec: FamilySpec) -> SolveOutcome:
    k = spec.kind
    if k == "grid":
        return solve_grid(inst, spec.p, spec.q)
    if k == "cylinder":
        return solve_cylinder(inst, spec.p, spec.q)
    if k == "torus":
        return solve_torus(inst, spec.p, spec.q)
    if k == "quasi2cyl":
        return solve_quasi_two_cylinder(inst, spec.p)
    if k in ("path", "tree"):
        return solve_tree(inst)
    if k == "cycle":
        return solve_cycle(inst)
    if k == "clique":
        return solve_clique(inst)
    raise UnsupportedFamily(f"no constructive solver for {spec.label()}")


def detect_family(inst: Instance) -> FamilySpec | None:
    """Recognize trees, cycles and cliques structurally, products by exact numbering."""
    g = inst.graph
    n = g.n
    if n == 0:
        return None
    if is_tree(g):
        return FamilySpec("tree", edges=tuple(g.sorted_edges()))
    if is_cycle(g):
        return FamilySpec("cycle", n)
    if is_complete(g):
        return FamilySpec("clique", n)
    candidates = []
    for p in range(2, n):
        if n % p == 0 and n // p >= 2:
            q = n // p
            candidates.append(FamilySpec("grid", p, q))
            if p >= 3:
                candidates.append(FamilySpec("cylinder", p, q))
            if p >= 3 and q >= 3:
                candidates.append(FamilySpec("torus", p, q))
    if n % 2 == 1 and (n + 1) // 2 >= 4:
        candidates.append(FamilySpec("quasi2cyl", (n + 1) // 2))
    for spec in candidates:
        if spec.kind == "grid" and g.m != 2 * n - spec.p - spec.q:
            continue
        if build_family(spec)[0] == g:
            return spec
    return None


def solve_oracle(inst: Instance, cap: int = DEFAULT_CAP) -> SolveOutcome:
    bad = violated(inst, ConditionSet(True, True, True))
    if bad:
        return bad
    order = decide_exists(inst, cap=cap)
    if order is None:
        return NoSolution("Oracle")
    return finish(inst, order, "oracle")


def solve(inst: Instance, hint: FamilySpec | None = None, method: str = "auto", cap: int = DEFAULT_CAP) -> SolveOutcome:
    """Use a constructive solver when the family is known, else the exact oracle.

    ``method`` is ``auto``, ``family`` (constructive only) or ``oracle``.
    """
    if method not in ("auto", "family", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    if method != "oracle":
        spec = hint if hint is not None else detect_family(inst)
        if spec is not None:
            try:
                return solve_family(inst, spec)
            except UnsupportedFamily:
                if method == "family":
                    raise
        elif method == "family":
            raise UnsupportedInstance("no known family matches the instance")
    if inst.n > cap:
        raise UnsupportedInstance(f"{inst.n} vertices is beyond the oracle cap of {cap}")
    return solve_oracle(inst, cap)
