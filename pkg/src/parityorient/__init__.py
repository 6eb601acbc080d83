"""Acyclic orientations of undirected graphs with prescribed in-degree parities.

An orientation is T-odd when exactly the vertices of T receive an odd
in-degree. The package decides and constructs acyclic T-odd orientations with
an exact subset oracle and with constructive solvers for trees, cycles, grids,
cylinders, quasi 2-cylinders, tori and cliques.
"""

from .classes import ClassReport, classify_graph, family_class, graphs_on, theorem1_predicates
from .core import (
    ConditionSet,
    Graph,
    Instance,
    Orientation,
    cartesian_product,
    conditions_S_Sbar,
    parity_condition_P,
    source_and_sink_sets,
    topological_order,
    validate_orientation,
)
from .decomp import (
    TDecomposition,
    compose_orientations,
    decomposition_satisfies_P,
    decomposition_targets,
    infer_missing_part_parity,
    trivial_decomposition,
)
from .errors import ParityOrientError
from .families import FamilySpec, SymmetryTransform, apply_symmetry, build_family, family_instance
from .game import order_to_orientation, orientation_to_order, validate_elimination_order
from .oracle import class_membership_small, decide_exists, enumerate_condition_sets
from .solvers import ConditionViolated, NoSolution, Solution, solve

__all__ = [
    "ClassReport",
    "ConditionSet",
    "ConditionViolated",
    "FamilySpec",
    "Graph",
    "Instance",
    "NoSolution",
    "Orientation",
    "ParityOrientError",
    "Solution",
    "SymmetryTransform",
    "TDecomposition",
    "apply_symmetry",
    "build_family",
    "cartesian_product",
    "class_membership_small",
    "classify_graph",
    "compose_orientations",
    "conditions_S_Sbar",
    "decide_exists",
    "decomposition_satisfies_P",
    "decomposition_targets",
    "enumerate_condition_sets",
    "family_class",
    "family_instance",
    "graphs_on",
    "infer_missing_part_parity",
    "order_to_orientation",
    "orientation_to_order",
    "parity_condition_P",
    "solve",
    "source_and_sink_sets",
    "theorem1_predicates",
    "topological_order",
    "trivial_decomposition",
    "validate_elimination_order",
    "validate_orientation",
]
