import itertools

import pytest

from parityorient.classes import canonical_form
from parityorient.core import (
    ALL_CONDITION_SETS,
    ConditionSet,
    Graph,
    Instance,
    Orientation,
    cartesian_product,
    condition_flags_mask,
    conditions_S_Sbar,
    failing_conditions,
    is_eulerian,
    parity_condition_P,
    set_to_mask,
    source_and_sink_sets,
    topological_order,
    validate_orientation,
)
from parityorient.errors import CyclicOrientation, InvalidGraph, MismatchedEdgeSet
from parityorient.families import FamilySpec, build_family, coords_to_ids, cycle_graph, path_graph

TRI = Graph(3, [(0, 1), (1, 2), (0, 2)])
EDGE = Graph(2, [(0, 1)])


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InvalidGraph):
        Graph(2, [(0, 0)])
    with pytest.raises(InvalidGraph):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(InvalidGraph):
        Graph(2, [(0, 2)])


def test_adjacency_symmetric_and_sorted():
    g = Graph(4, [(2, 0), (0, 1), (3, 0)])
    assert g.adjacency[0] == (1, 2, 3)
    assert all(g.has_edge(b, a) for a, b in g.edges)
    assert [g.degree(v) for v in range(4)] == [3, 1, 1, 1]


def test_parity_condition_examples():
    assert parity_condition_P(Instance(path_graph(3), frozenset({0, 2})))
    assert parity_condition_P(Instance(Graph(1), frozenset()))
    assert not parity_condition_P(Instance(TRI, frozenset({0, 1})))


def test_source_and_sink_examples():
    c4 = cycle_graph(4)
    assert source_and_sink_sets(Instance(c4, frozenset(range(4)))) == (frozenset(), frozenset())
    assert source_and_sink_sets(Instance(EDGE, frozenset({0}))) == (frozenset({1}), frozenset({0}))
    g22 = build_family(FamilySpec("grid", 2, 2))[0]
    assert source_and_sink_sets(Instance(g22, frozenset())) == (frozenset(range(4)), frozenset(range(4)))


def test_conditions_S_Sbar_examples():
    assert conditions_S_Sbar(Instance(EDGE, frozenset())) == (True, False)
    assert conditions_S_Sbar(Instance(Graph(1), frozenset())) == (True, True)
    spec = FamilySpec("cylinder", 4, 3)
    g, cmap = build_family(spec)
    t = frozenset(cmap.row(1))
    assert conditions_S_Sbar(Instance(g, t)) == (True, False)


def test_failing_conditions_order():
    c4 = cycle_graph(4)
    assert failing_conditions(Instance(c4, frozenset(range(4)))) == ("S", "Sbar")
    assert failing_conditions(Instance(TRI, frozenset())) == ("P",)
    assert failing_conditions(Instance(TRI, frozenset()), ConditionSet(S=True)) == ()


def test_mask_flags_agree_with_set_versions(rng):
    from conftest import random_graph

    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7))
        for t in range(1 << g.n):
            inst = Instance(g, frozenset(v for v in range(g.n) if t >> v & 1))
            s, sb = conditions_S_Sbar(inst)
            assert condition_flags_mask(g, t) == (parity_condition_P(inst), s, sb)


def test_condition_sets_labels():
    assert [c.label for c in ALL_CONDITION_SETS] == ["S", "Sbar", "SSbar", "P", "PS", "PSbar", "PSSbar"]
    assert ConditionSet.parse("PS̄") == ConditionSet(P=True, Sbar=True)
    assert ConditionSet.parse("PSSbar") == ConditionSet(True, True, True)
    assert ConditionSet(P=True).issubset(ConditionSet(True, True, False))


def test_validate_orientation_examples():
    cyc = Orientation(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    rep = validate_orientation(Instance(TRI, frozenset({0})), cyc)
    assert not rep.acyclic and set(rep.cycle) == {0, 1, 2}
    assert validate_orientation(Instance(EDGE, frozenset({1})), Orientation(2, frozenset({(0, 1)}))).ok
    p3 = path_graph(3)
    rep = validate_orientation(Instance(p3, frozenset()), Orientation(3, frozenset({(0, 1), (2, 1)})))
    assert rep.acyclic and rep.t_odd


def test_validate_reports_parity_vertex():
    rep = validate_orientation(Instance(EDGE, frozenset()), Orientation(2, frozenset({(0, 1)})))
    assert rep.acyclic and not rep.t_odd and rep.vertex == 1


def test_mismatched_edge_set():
    with pytest.raises(MismatchedEdgeSet):
        validate_orientation(Instance(TRI, frozenset()), Orientation(3, frozenset({(0, 1), (1, 2)})))
    with pytest.raises(MismatchedEdgeSet):
        validate_orientation(Instance(EDGE, frozenset()), Orientation(2, frozenset({(0, 1), (1, 0)})))


def test_topological_order_examples():
    assert topological_order(Orientation(2, frozenset({(0, 1)}))) == [0, 1]
    assert topological_order(Orientation(3, frozenset({(0, 1), (0, 2), (1, 2)}))) == [0, 1, 2]
    assert topological_order(Orientation(3, frozenset({(2, 0)}))) == [1, 2, 0]
    with pytest.raises(CyclicOrientation):
        topological_order(Orientation(3, frozenset({(0, 1), (1, 2), (2, 0)})))


def test_cartesian_product_examples():
    p2 = path_graph(2)
    assert cartesian_product(p2, p2) == Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert canonical_form(cartesian_product(p2, p2)) == canonical_form(cycle_graph(4))
    assert cartesian_product(Graph(1), TRI) == TRI
    g = cartesian_product(cycle_graph(4), path_graph(5))
    assert (g.n, g.m) == (20, 36)


def test_cartesian_product_id_scheme():
    g = cartesian_product(path_graph(3), cycle_graph(4))
    # (u, v) -> u*4 + v
    assert g.has_edge(1 * 4 + 0, 1 * 4 + 3)
    assert g.has_edge(0 * 4 + 2, 1 * 4 + 2)
    assert not g.has_edge(0, 5)


def test_cartesian_product_commutative_small_factors():
    from parityorient.classes import graphs_up_to

    factors = graphs_up_to(4)
    for g, h in itertools.product(factors, repeat=2):
        a, b = cartesian_product(g, h), cartesian_product(h, g)
        assert a.m == g.n * h.m + h.n * g.m
        assert canonical_form(a) == canonical_form(b)


def test_source_equals_sink_iff_all_even():
    for spec in [FamilySpec("torus", 4, 4), FamilySpec("cylinder", 4, 3), FamilySpec("grid", 3, 3), FamilySpec("cycle", 5)]:
        g, _ = build_family(spec)
        even = all(g.degree(v) % 2 == 0 for v in range(g.n))
        for t in (frozenset(), frozenset({0}), frozenset(range(0, g.n, 2))):
            src, snk = source_and_sink_sets(Instance(g, t))
            assert (src == snk) == even


def test_eulerian_predicates():
    assert is_eulerian(Graph(1))
    assert is_eulerian(cycle_graph(5))
    assert not is_eulerian(Graph(2))
    assert not is_eulerian(path_graph(3))


def test_set_to_mask_roundtrip():
    assert set_to_mask({0, 3}) == 9
    assert coords_to_ids(FamilySpec("grid", 2, 3), [(1, 2)]) == frozenset({5})
