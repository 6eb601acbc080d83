"""Command-line front end.

Exit status: 0 solved / true, 1 no solution / false, 2 condition violated,
3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .classes import classify_graph, family_class
from .core import Graph, Instance, Orientation, check_edge_set, mask_to_set, validate_orientation
from .errors import NoClaim, ParityOrientError
from .families import KINDS, FamilySpec, build_family
from .game import validate_elimination_order
from .oracle import decide_exists
from .solvers import ConditionViolated, NoSolution, Solution, solve, solve_family

EXIT_OK, EXIT_FALSE, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# I/O -----------------------------------------------------------------------


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def instance_to_json(inst: Instance, spec: FamilySpec | None = None, labels: dict | None = None) -> dict:
    doc = {"n": inst.n, "edges": [list(e) for e in inst.graph.sorted_edges()], "T": sorted(inst.target)}
    if spec is not None:
        doc["family"] = spec.to_json()
    if labels:
        doc["labels"] = labels
    return doc


def instance_from_json(doc: dict) -> tuple[Instance, FamilySpec | None]:
    try:
        g = Graph(int(doc["n"]), [tuple(e) for e in doc["edges"]])
        inst = Instance(g, frozenset(int(v) for v in doc.get("T", [])))
        spec = FamilySpec.from_json(doc["family"]) if doc.get("family") else None
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"malformed instance file: {e}") from e
    if spec is not None and build_family(spec)[0] != g:
        raise UsageError(f"family block {spec.label()} does not match the edge set")
    return inst, spec


def orientation_from_json(doc: dict, n: int) -> Orientation:
    try:
        return Orientation(n, frozenset((int(a), int(b)) for a, b in doc["arcs"]))
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"malformed orientation file: {e}") from e


def to_dot(inst: Instance, o: Orientation | None = None, labels: dict | None = None) -> str:
    lines = ["digraph G {" if o else "graph G {", "  node [shape=circle, style=filled];"]
    for v in range(inst.n):
        color = 'fillcolor=black, fontcolor=white' if v in inst.target else "fillcolor=white"
        label = labels.get(str(v)) if labels else None
        if isinstance(label, list):
            label = "(" + ",".join(str(x) for x in label) + ")"
        extra = f', label="{label}"' if label is not None else ""
        lines.append(f"  {v} [{color}{extra}];")
    if o is not None:
        lines += [f"  {a} -> {b};" for a, b in o.sorted_arcs()]
    else:
        lines += [f"  {a} -- {b};" for a, b in inst.graph.sorted_edges()]
    lines.append("}")
    return "\n".join(lines)


# gen -----------------------------------------------------------------------


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labelled tree on n vertices via Prüfer decoding."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return edges


def _parse_target(text: str, n: int, rng: random.Random) -> frozenset[int]:
    if text == "all":
        return frozenset(range(n))
    if text == "none":
        return frozenset()
    if text == "random":
        return frozenset(v for v in range(n) if rng.random() < 0.5)
    try:
        ids = frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise UsageError(f"bad --t value {text!r}") from e
    if any(v < 0 or v >= n for v in ids):
        raise UsageError(f"--t ids must lie in 0..{n - 1}")
    return ids


def _spec_from_args(args) -> FamilySpec:
    if args.family is None:
        raise UsageError("--family is required")
    if args.family == "tree":
        rng = random.Random(args.seed)
        return FamilySpec("tree", edges=tuple(random_tree_edges(args.p, rng)))
    if args.family == "product":
        raise UsageError("product families are not available from the command line")
    return FamilySpec(args.family, args.p, args.q)


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    g, cmap = build_family(spec)
    rng = random.Random(args.seed)
    inst = Instance(g, _parse_target(args.t, g.n, rng))
    labels = None
    if spec.kind in ("grid", "cylinder", "torus", "quasi2cyl"):
        labels = {str(v): list(cmap.coord_of(v)) for v in range(g.n)}
    _emit(instance_to_json(inst, spec, labels), args.out)
    return EXIT_OK


# solve / check ---------------------------------------------------------------


def outcome_to_json(out) -> dict:
    if isinstance(out, Solution):
        return {
            "status": out.status,
            "method": out.method,
            "arcs": [list(a) for a in out.orientation.sorted_arcs()],
            "order": list(out.order),
        }
    if isinstance(out, NoSolution):
        return {"status": out.status, "reason": out.reason}
    return {"status": out.status, "condition": out.condition, "conditions": list(out.conditions)}


def outcome_exit(out) -> int:
    if isinstance(out, Solution):
        return EXIT_OK
    if isinstance(out, ConditionViolated):
        return EXIT_VIOLATED
    return EXIT_FALSE


def cmd_solve(args) -> int:
    inst, spec = instance_from_json(_read_json(args.instance))
    out = solve(inst, hint=spec, method=args.method, cap=args.cap)
    _emit(outcome_to_json(out), args.out)
    if isinstance(out, NoSolution):
        print(f"no solution: {out.reason}", file=sys.stderr)
    elif isinstance(out, ConditionViolated):
        print(f"condition violated: {out.condition}", file=sys.stderr)
    return outcome_exit(out)


def cmd_check(args) -> int:
    inst, _ = instance_from_json(_read_json(args.instance))
    if (args.orientation is None) == (args.order is None):
        raise UsageError("give exactly one of --orientation and --order")
    if args.orientation is not None:
        o = orientation_from_json(_read_json(args.orientation), inst.n)
        check_edge_set(inst.graph, o)
        rep = validate_orientation(inst, o)
        doc = {"valid": rep.ok, "acyclic": rep.acyclic, "t_odd": rep.t_odd}
        if rep.cycle:
            doc["cycle"] = list(rep.cycle)
        if rep.vertex is not None:
            doc["vertex"] = rep.vertex
        _emit(doc, None)
        return EXIT_OK if rep.ok else EXIT_FALSE
    order = _read_json(args.order)
    if isinstance(order, dict):
        order = order.get("order")
    if not isinstance(order, list):
        raise UsageError("order file needs a list or an \"order\" list")
    chk = validate_elimination_order(inst, [int(v) for v in order])
    _emit({"valid": chk.valid, "index": chk.index}, None)
    return EXIT_OK if chk.valid else EXIT_FALSE


# classify / verify / export-dot ----------------------------------------------


def _load_graph(args) -> tuple[Graph, FamilySpec | None]:
    if args.instance is not None:
        inst, spec = instance_from_json(_read_json(args.instance))
        return inst.graph, spec
    spec = _spec_from_args(args)
    return build_family(spec)[0], spec


def cmd_classify(args) -> int:
    g, spec = _load_graph(args)
    rep = classify_graph(g, cap=args.cap)
    doc = {
        "n": rep.n,
        "membership": rep.membership,
        "placement": rep.placement,
        "counterexamples": {k: sorted(v) for k, v in rep.counterexamples.items() if v is not None},
        "theorem2_consistent": rep.theorem2_consistent,
    }
    if spec is not None:
        try:
            doc["predicted"] = family_class(spec)
        except NoClaim as e:
            doc["predicted"] = None
            doc["no_claim"] = str(e)
    _emit(doc, args.out)
    return EXIT_OK


def _sweep_targets(n: int, sweep: str, seed: int) -> list[int]:
    if sweep == "full":
        return list(range(1 << n))
    if sweep.startswith("sample:"):
        try:
            k = int(sweep.split(":", 1)[1])
        except ValueError as e:
            raise UsageError(f"bad --sweep value {sweep!r}") from e
        rng = random.Random(seed)
        if k >= 1 << n:
            return list(range(1 << n))
        return sorted(rng.sample(range(1 << n), k))
    raise UsageError("--sweep must be 'full' or 'sample:N'")


def verify_family(spec: FamilySpec, targets: Sequence[int], threads: int = 1) -> list[dict]:
    """Solver decision versus oracle decision for each target, in the given order."""
    g, _ = build_family(spec)

    def one(t: int) -> dict:
        inst = Instance(g, mask_to_set(t))
        out = solve_family(inst, spec)
        oracle = decide_exists(inst) is not None
        solved = isinstance(out, Solution)
        return {"T": t, "solver": solved, "oracle": oracle, "outcome": out.status}

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, targets))
    return [one(t) for t in targets]


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    g, _ = build_family(spec)
    targets = _sweep_targets(g.n, args.sweep, args.seed)
    rows = verify_family(spec, targets, args.threads)
    mismatches = [r["T"] for r in rows if r["solver"] != r["oracle"]]
    doc = {
        "family": spec.label(),
        "targets": len(rows),
        "solved": sum(r["solver"] for r in rows),
        "mismatches": mismatches,
    }
    if args.details:
        doc["rows"] = rows
    _emit(doc, args.out)
    return EXIT_OK if not mismatches else EXIT_FALSE


def cmd_export_dot(args) -> int:
    doc = _read_json(args.instance)
    inst, _ = instance_from_json(doc)
    o = None
    if args.orientation is not None:
        o = orientation_from_json(_read_json(args.orientation), inst.n)
        check_edge_set(inst.graph, o)
    text = to_dot(inst, o, doc.get("labels"))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# entry -----------------------------------------------------------------------


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[k for k in KINDS if k != "product"])
    p.add_argument("--p", type=int, default=1, help="first dimension, or vertex count for path/clique/tree")
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parityorient", description="Acyclic T-odd orientations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a family instance")
    _family_args(p)
    p.add_argument("--t", default="none", help="all, none, random, or comma-separated ids")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("--instance", default="-")
    p.add_argument("--method", choices=("auto", "oracle", "family"), default="auto")
    p.add_argument("--cap", type=int, default=24)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="validate an orientation or elimination order")
    p.add_argument("--instance", default="-")
    p.add_argument("--orientation")
    p.add_argument("--order")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="class membership of a graph")
    p.add_argument("--instance")
    _family_args(p)
    p.add_argument("--cap", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="solver versus oracle sweep on a family")
    _family_args(p)
    p.add_argument("--sweep", default="full", help="full or sample:N")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--details", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="Graphviz rendering, T vertices filled black")
    p.add_argument("--instance", default="-")
    p.add_argument("--orientation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParityOrientError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
