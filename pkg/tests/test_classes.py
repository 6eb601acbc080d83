import pytest

from parityorient.classes import (
    C_P,
    C_PS_MINUS_C_P,
    C_PSSBAR_MINUS_C_PS,
    OUTSIDE,
    canonical_form,
    classify_graph,
    family_class,
    graphs_on,
    graphs_up_to,
    small_graph_name,
    theorem1_predicates,
    theorem2_shortcut,
)
from parityorient.core import ALL_CONDITION_SETS, Graph, is_connected
from parityorient.errors import NoClaim, TooLarge
from parityorient.families import FamilySpec, build_family, complete_graph, path_graph


def test_theorem1_predicate_examples():
    prof = theorem1_predicates(path_graph(2))
    assert prof.connected and not prof.eulerian and prof.order_size_parity == 1 and prof.c_eligible
    k6 = complete_graph(6)
    prof = theorem1_predicates(k6)
    assert prof.c_eligible and prof.order_size_parity == 1
    assert not classify_graph(k6).member("P")
    torus = build_family(FamilySpec("torus", 4, 4))[0]
    assert theorem1_predicates(torus).d_eligible


def test_disconnected_four_vertex_graphs_outside():
    for g in graphs_on(4):
        if not is_connected(g):
            assert not classify_graph(g).member("PSSbar")


def test_c5_p2_in_cp():
    g, _ = build_family(FamilySpec("cylinder", 5, 2))
    rep = classify_graph(g)
    assert rep.member("P") and rep.placement == C_P and rep.theorem2_consistent


def test_classify_too_large():
    with pytest.raises(TooLarge):
        classify_graph(path_graph(21))


def test_report_counterexamples():
    rep = classify_graph(complete_graph(3))
    assert rep.counterexamples["P"] == frozenset({0, 1, 2})
    assert rep.counterexamples["PS"] is None


def test_family_class_examples():
    assert family_class(FamilySpec("cylinder", 5, 4)) == C_P
    assert family_class(FamilySpec("torus", 4, 5)) == C_PS_MINUS_C_P
    assert family_class(FamilySpec("clique", 8)) == OUTSIDE
    assert family_class(FamilySpec("cylinder", 4, 3)) == C_PSSBAR_MINUS_C_PS
    assert family_class(FamilySpec("cylinder", 5, 3)) == C_PSSBAR_MINUS_C_PS
    assert family_class(FamilySpec("grid", 3, 4)) == C_P
    assert family_class(FamilySpec("cycle", 5)) == C_PS_MINUS_C_P
    for spec in [FamilySpec("torus", 3, 5), FamilySpec("grid", 2, 4), FamilySpec("quasi2cyl", 5), FamilySpec("clique", 2)]:
        with pytest.raises(NoClaim):
            family_class(spec)


def test_k4_oracle_placement():
    # frozen oracle result; the corollary's literal placement for K4 disagrees (see the acceptance suite)
    rep = classify_graph(complete_graph(4))
    assert rep.placement == C_PSSBAR_MINUS_C_PS


LATTICE = [("P", "PS"), ("P", "PSbar"), ("PS", "PSSbar"), ("PSbar", "PSSbar"), ("SSbar", "PSSbar"), ("S", "SSbar"), ("Sbar", "SSbar")]


def test_lattice_on_graphs_up_to_six():
    for g in graphs_up_to(6):
        m = classify_graph(g).membership
        for lo, hi in LATTICE:
            assert not m[lo] or m[hi]
        assert m["S"] == m["Sbar"]
        assert m["PS"] == m["PSbar"]
        assert not m["SSbar"] or m["PS"]


def test_monotone_in_condition_sets():
    for g in graphs_up_to(5):
        rep = classify_graph(g)
        for a in ALL_CONDITION_SETS:
            for b in ALL_CONDITION_SETS:
                if a.issubset(b) and rep.member(a):
                    assert rep.member(b)


@pytest.mark.slow
def test_theorem2_consistency_up_to_eight():
    from parityorient.core import ConditionSet
    from parityorient.oracle import class_membership_small, solvable_target_masks

    for n in range(1, 9):
        for g in graphs_on(n):
            sol = solvable_target_masks(g)
            assert theorem2_shortcut(g, sol) == class_membership_small(g, ConditionSet(P=True), solvable=sol).member


def test_theorem2_without_precomputed_bitset():
    for g in graphs_up_to(4):
        assert theorem2_shortcut(g) == classify_graph(g).member("P")


DESK_FAMILIES = (
    [FamilySpec("path", n) for n in range(1, 9)]
    + [FamilySpec("cycle", n) for n in range(3, 11)]
    + [FamilySpec("grid", p, q) for p in range(1, 6) for q in range(1, 6) if (p % 2 or q % 2) and p * q <= 15]
    + [FamilySpec("cylinder", p, q) for p in range(3, 9) for q in range(1, 5) if p * q <= 16]
    + [FamilySpec("torus", 4, 4)]
    + [FamilySpec("clique", n) for n in range(3, 9)]
)


@pytest.mark.parametrize("spec", DESK_FAMILIES, ids=lambda s: s.label())
def test_family_class_matches_classification(spec):
    g, _ = build_family(spec)
    assert classify_graph(g).placement == family_class(spec)


def test_graph_counts():
    assert [len(graphs_on(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    with pytest.raises(TooLarge):
        graphs_on(9)


def test_canonical_form_relabelling_invariant():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    perm = [3, 0, 4, 1, 2]
    h = Graph(5, [(perm[a], perm[b]) for a, b in g.edges])
    assert canonical_form(g) == canonical_form(h)
    assert canonical_form(g) != canonical_form(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 3), (1, 4)]))


def test_small_graph_names():
    names = [small_graph_name(g) for g in graphs_up_to(3)]
    assert sorted(names) == sorted(["K1", "2K1", "K2", "3K1", "K2+K1", "P3", "K3"])
