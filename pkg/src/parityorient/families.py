"""Graph families, coordinates and symmetries.

Product families use the row-major numbering ``(u_i, v_j) -> i*q + j``: ``i``
indexes the first factor (the cycle for cylinders) and ``j`` the second. Row
``X_j`` fixes ``j``; column ``Y_i`` fixes ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import Graph, Instance, Orientation, cartesian_product, is_connected
from .errors import InvalidParameters, TransformNotApplicable

Coord = tuple[int, int]

KINDS = ("path", "cycle", "tree", "grid", "cylinder", "torus", "quasi2cyl", "clique", "product")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    p: int = 1
    q: int = 1
    edges: tuple[tuple[int, int], ...] | None = None
    factors: tuple["FamilySpec", "FamilySpec"] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameters(f"unknown family kind {self.kind!r}")
        k, p, q = self.kind, self.p, self.q
        if k in ("path", "clique") and p < 1:
            raise InvalidParameters(f"{k} needs p >= 1")
        if k == "cycle" and p < 3:
            raise InvalidParameters("cycle needs p >= 3")
        if k == "grid" and (p < 1 or q < 1):
            raise InvalidParameters("grid needs p, q >= 1")
        if k == "cylinder" and (p < 3 or q < 1):
            raise InvalidParameters("cylinder needs p >= 3 and q >= 1")
        if k == "torus" and (p < 3 or q < 3):
            raise InvalidParameters("torus needs p, q >= 3")
        if k == "quasi2cyl" and p < 4:
            raise InvalidParameters("quasi 2-cylinder needs p >= 4")
        if k == "tree" and self.edges is None:
            raise InvalidParameters("tree needs an explicit edge list")
        if k == "product" and (self.factors is None or len(self.factors) != 2):
            raise InvalidParameters("product needs two factor specs")

    def label(self) -> str:
        if self.kind == "tree":
            return f"tree({len(self.edges) + 1})"
        if self.kind in ("path", "cycle", "clique", "quasi2cyl"):
            return f"{self.kind}({self.p})"
        if self.kind == "product":
            return f"product({self.factors[0].label()}, {self.factors[1].label()})"
        return f"{self.kind}({self.p},{self.q})"

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "tree":
            d["edges"] = [list(e) for e in self.edges]
        elif self.kind == "product":
            d["factors"] = [f.to_json() for f in self.factors]
        else:
            d["p"] = self.p
            if self.kind in ("grid", "cylinder", "torus"):
                d["q"] = self.q
        return d

    @classmethod
    def from_json(cls, d: dict) -> "FamilySpec":
        kind = d["kind"]
        if kind == "tree":
            return cls("tree", edges=tuple(tuple(e) for e in d["edges"]))
        if kind == "product":
            a, b = d["factors"]
            return cls("product", factors=(cls.from_json(a), cls.from_json(b)))
        return cls(kind, int(d.get("p", 1)), int(d.get("q", 1)))


@dataclass(frozen=True)
class CoordinateMap:
    """Bijection between vertex ids and (i, j) coordinates, with row/column extractors."""

    p: int
    q: int
    coords: tuple[Coord, ...]
    ids: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.ids:
            object.__setattr__(self, "ids", {c: v for v, c in enumerate(self.coords)})

    def id_of(self, i: int, j: int = 0) -> int:
        return self.ids[(i, j)]

    def coord_of(self, v: int) -> Coord:
        return self.coords[v]

    def has(self, i: int, j: int) -> bool:
        return (i, j) in self.ids

    def row(self, j: int) -> list[int]:
        """X_j, ordered by i."""
        return [self.ids[(i, j)] for i in range(self.p) if (i, j) in self.ids]

    def rows(self, lo: int = 0, hi: int | None = None) -> list[int]:
        """X_lo ∪ ... ∪ X_hi (inclusive bounds)."""
        hi = self.q - 1 if hi is None else hi
        return [v for j in range(lo, hi + 1) for v in self.row(j)]

    def col(self, i: int, lo: int = 0, hi: int | None = None) -> list[int]:
        """Y_i restricted to lo <= j <= hi, ordered by j."""
        hi = self.q - 1 if hi is None else hi
        return [self.ids[(i, j)] for j in range(lo, hi + 1) if (i, j) in self.ids]

    def cols(self, lo: int = 0, hi: int | None = None) -> list[int]:
        hi = self.p - 1 if hi is None else hi
        return [v for i in range(lo, hi + 1) for v in self.col(i)]

    def frame(self) -> dict[Coord, int]:
        return dict(self.ids)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def tree_graph(edges: Iterable[Sequence[int]]) -> Graph:
    edges = [tuple(e) for e in edges]
    n = len(edges) + 1
    g = Graph(n, edges)
    if not is_connected(g):
        raise InvalidParameters("tree edge list is not connected")
    return g


def _factor(spec_kind: str, p: int) -> Graph:
    return cycle_graph(p) if spec_kind == "cycle" else path_graph(p)


def _grid_coords(p: int, q: int) -> tuple[Coord, ...]:
    return tuple((i, j) for i in range(p) for j in range(q))


def build_family(spec: FamilySpec) -> tuple[Graph, CoordinateMap]:
    k, p, q = spec.kind, spec.p, spec.q
    if k == "path":
        return path_graph(p), CoordinateMap(p, 1, _grid_coords(p, 1))
    if k == "cycle":
        return cycle_graph(p), CoordinateMap(p, 1, _grid_coords(p, 1))
    if k == "clique":
        return complete_graph(p), CoordinateMap(p, 1, _grid_coords(p, 1))
    if k == "tree":
        g = tree_graph(spec.edges)
        return g, CoordinateMap(g.n, 1, _grid_coords(g.n, 1))
    if k == "grid":
        return cartesian_product(path_graph(p), path_graph(q)), CoordinateMap(p, q, _grid_coords(p, q))
    if k == "cylinder":
        if q == 1:
            return cycle_graph(p), CoordinateMap(p, 1, _grid_coords(p, 1))
        return cartesian_product(cycle_graph(p), path_graph(q)), CoordinateMap(p, q, _grid_coords(p, q))
    if k == "torus":
        return cartesian_product(cycle_graph(p), cycle_graph(q)), CoordinateMap(p, q, _grid_coords(p, q))
    if k == "quasi2cyl":
        full = cartesian_product(cycle_graph(p), path_graph(2))
        gone = 0 * 2 + 1
        keep = [v for v in range(full.n) if v != gone]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[a], index[b]) for a, b in full.edges if gone not in (a, b)]
        coords = tuple((v // 2, v % 2) for v in keep)
        return Graph(len(keep), edges), CoordinateMap(p, 2, coords)
    if k == "product":
        ga, _ = build_family(spec.factors[0])
        gb, _ = build_family(spec.factors[1])
        return cartesian_product(ga, gb), CoordinateMap(ga.n, gb.n, _grid_coords(ga.n, gb.n))
    raise InvalidParameters(f"unknown family kind {k!r}")


def family_instance(spec: FamilySpec, target: Iterable[int] = ()) -> Instance:
    g, _ = build_family(spec)
    return Instance(g, frozenset(target))


def coords_to_ids(spec: FamilySpec, coords: Iterable[Coord]) -> frozenset[int]:
    _, cmap = build_family(spec)
    return frozenset(cmap.id_of(i, j) for i, j in coords)


# Symmetries ---------------------------------------------------------------

SYMMETRY_KINDS = ("transpose", "flip-rows", "flip-cols", "rotate-rows")


@dataclass(frozen=True)
class SymmetryTransform:
    kind: str
    amount: int = 1

    def __post_init__(self):
        if self.kind not in SYMMETRY_KINDS:
            raise TransformNotApplicable(f"unknown transform {self.kind!r}")


def _cyclic_first(kind: str) -> bool:
    return kind in ("cylinder", "torus", "quasi2cyl", "cycle")


def coordinate_map_fn(t: SymmetryTransform, spec: FamilySpec) -> tuple[Callable[[Coord], Coord], FamilySpec]:
    """Coordinate-level action of ``t`` on ``spec`` and the family spec of the image.

    flip-rows reverses the order of the rows (j), flip-cols the order of the
    columns (i); rotate-rows shifts every row along the cyclic first factor.
    """
    k, p, q = spec.kind, spec.p, spec.q
    if k == "cylinder" and q == 1 or k == "cycle":
        k, q = "cylinder", 1
    if k not in ("grid", "cylinder", "torus", "quasi2cyl"):
        raise TransformNotApplicable(f"no coordinate symmetries for {spec.kind}")
    if t.kind == "transpose":
        if k != "grid":
            raise TransformNotApplicable("transpose applies to grids only")
        return (lambda c: (c[1], c[0])), FamilySpec("grid", q, p)
    if t.kind == "flip-rows":
        if k == "quasi2cyl":
            raise TransformNotApplicable("quasi 2-cylinder has no row flip")
        if k == "torus":
            return (lambda c: (c[0], (-c[1]) % q)), spec
        return (lambda c: (c[0], q - 1 - c[1])), spec
    if t.kind == "flip-cols":
        if _cyclic_first(k):
            return (lambda c: ((-c[0]) % p, c[1])), spec
        return (lambda c: (p - 1 - c[0], c[1])), spec
    if t.kind == "rotate-rows":
        if k not in ("cylinder", "torus"):
            raise TransformNotApplicable("rotation needs a cyclic first factor")
        a = t.amount
        return (lambda c: ((c[0] + a) % p, c[1])), spec
    raise TransformNotApplicable(t.kind)


def apply_symmetry(
    t: SymmetryTransform, inst: Instance, spec: FamilySpec
) -> tuple[Instance, FamilySpec, tuple[int, ...]]:
    """Relabel ``inst`` by ``t``; returns (image, image spec, inverse) with inverse[new_id] = old_id."""
    g, cmap = build_family(spec)
    if g != inst.graph:
        raise TransformNotApplicable("instance graph does not match the family")
    fn, new_spec = coordinate_map_fn(t, spec)
    g2, cmap2 = build_family(new_spec)
    forward = [cmap2.id_of(*fn(cmap.coord_of(v))) for v in range(g.n)]
    inverse = [0] * g.n
    for old, new in enumerate(forward):
        inverse[new] = old
    image = Instance(g2, frozenset(forward[v] for v in inst.target))
    assert all(g2.has_edge(forward[a], forward[b]) for a, b in g.edges)
    return image, new_spec, tuple(inverse)


def pull_back(o: Orientation, inverse: Sequence[int]) -> Orientation:
    return Orientation(o.n, frozenset((inverse[a], inverse[b]) for a, b in o.arcs))
