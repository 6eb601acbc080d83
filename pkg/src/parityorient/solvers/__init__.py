from .basic import (
    even_endpoint_section,
    is_bad_path_instance,
    solve_clique,
    solve_cycle,
    solve_tree,
)
from .dispatch import detect_family, solve, solve_family, solve_oracle
from .grid import BadPathWitness
from .outcome import ConditionViolated, NoSolution, Solution, SolveOutcome
from .products import (
    BadGridWitness,
    cylinder_conditions,
    is_bad_grid_instance,
    solve_cylinder,
    solve_grid,
    solve_quasi_two_cylinder,
    solve_torus,
)

__all__ = [
    "BadGridWitness",
    "BadPathWitness",
    "ConditionViolated",
    "NoSolution",
    "Solution",
    "SolveOutcome",
    "cylinder_conditions",
    "detect_family",
    "even_endpoint_section",
    "is_bad_grid_instance",
    "is_bad_path_instance",
    "solve",
    "solve_clique",
    "solve_cycle",
    "solve_cylinder",
    "solve_family",
    "solve_grid",
    "solve_oracle",
    "solve_quasi_two_cylinder",
    "solve_torus",
    "solve_tree",
]
