"""Branch-and-bound solver: exactness, budgets, pruning, symmetry, parallel."""

import math

import pytest

from antimagic.graphs import (Graph, complete, corona, cycle,
                              friendship_corona, null_graph, path)
from antimagic.labeling import verify_certificate
from antimagic.solver import (BUDGET_EXHAUSTED, CONNECTED_EXPANSION, EXACT,
                              FEASIBLE, INFEASIBLE, INPUT_ORDER,
                              MAX_DEGREE_FIRST, SearchConfig, exact_chi_la,
                              feasible_with_k_colors, lower_bound_prune,
                              symmetry_pairs)
from conftest import naive_exact_chi_la


def c3_o1() -> Graph:
    return corona(cycle(3), null_graph(1))


def k3_k1() -> Graph:
    return corona(complete(3), null_graph(1))


# -- exact values on the small reference instances -----------------------------

def test_c3_corona_exact_is_5():
    out = exact_chi_la(c3_o1())
    assert out.status == EXACT and out.chi == 5
    assert verify_certificate(out.certificate, c3_o1())
    assert out.certificate.color_count == 5


def test_k3_k1_exact_is_5():
    out = exact_chi_la(k3_k1())
    assert out.status == EXACT and out.chi == 5


def test_c3_corona_four_colors_infeasible():
    out = feasible_with_k_colors(c3_o1(), 4)
    assert out.status == INFEASIBLE
    assert out.infeasible_k == 4
    assert out.certificate is None


def test_c3_corona_five_colors_feasible():
    out = feasible_with_k_colors(c3_o1(), 5)
    assert out.status == FEASIBLE
    assert out.certificate.color_count <= 5
    assert verify_certificate(out.certificate, c3_o1())


def test_f2_exact(f2_graph, f2_exact_outcome):
    out = f2_exact_outcome
    assert out.status == EXACT and out.chi == 7
    assert verify_certificate(out.certificate, f2_graph)
    assert out.nodes_explored > 0 and out.wall_time >= 0.0


def test_f2_six_colors_infeasible(f2_graph):
    out = feasible_with_k_colors(f2_graph, 6)
    assert out.status == INFEASIBLE and out.infeasible_k == 6


# -- agreement with the brute-force oracle -------------------------------------

@pytest.mark.parametrize("g", [path(4), cycle(4), cycle(5),
                               Graph(4, ((0, 1), (0, 2), (0, 3))),
                               complete(4), path(7)],
                         ids=["P4", "C4", "C5", "K13", "K4", "P7"])
def test_matches_naive_oracle(g):
    out = exact_chi_la(g)
    assert out.status == EXACT
    assert out.chi == naive_exact_chi_la(g)


# -- determinism and configuration axes -----------------------------------------

def test_deterministic_repeat_runs():
    a = exact_chi_la(c3_o1())
    b = exact_chi_la(c3_o1())
    assert a.chi == b.chi
    assert a.certificate.labels == b.certificate.labels
    assert a.nodes_explored == b.nodes_explored


def test_parallel_matches_sequential():
    g = c3_o1()
    seq = exact_chi_la(g, SearchConfig())
    par = exact_chi_la(g, SearchConfig(parallel_width=2))
    assert par.status == EXACT and par.chi == seq.chi
    assert par.certificate.labels == seq.certificate.labels


def test_edge_orders_agree():
    g = k3_k1()
    chis = set()
    for mode in (INPUT_ORDER, MAX_DEGREE_FIRST, CONNECTED_EXPANSION):
        out = exact_chi_la(g, SearchConfig(edge_order=mode))
        assert out.status == EXACT
        chis.add(out.chi)
    assert chis == {5}


def test_symmetry_breaking_preserves_chi():
    g = c3_o1()
    plain = exact_chi_la(g, SearchConfig(symmetry_breaking=False))
    broken = exact_chi_la(g, SearchConfig(symmetry_breaking=True))
    assert plain.chi == broken.chi == 5
    assert broken.nodes_explored <= plain.nodes_explored


def test_symmetry_pairs_label_constraints():
    f2 = friendship_corona(2, 1)
    pairs = symmetry_pairs(f2)
    assert pairs, "friendship layout should be recognized"
    for lo, hi in pairs:
        assert 0 <= lo < f2.q and 0 <= hi < f2.q and lo != hi
    # c3 corona with two pendants per base vertex: per-vertex pendant chains
    c3o2 = corona(cycle(3), null_graph(2))
    assert symmetry_pairs(c3o2)


def test_bad_upper_hint_recovers():
    out = exact_chi_la(c3_o1(), SearchConfig(upper_hint=3))
    assert out.status == EXACT and out.chi == 5


def test_upper_hint_tight_still_exact():
    out = exact_chi_la(c3_o1(), SearchConfig(upper_hint=5))
    assert out.status == EXACT and out.chi == 5


# -- budgets --------------------------------------------------------------------

def test_node_budget_exhaustion(f2_graph):
    out = exact_chi_la(f2_graph, SearchConfig(node_budget=10))
    assert out.status == BUDGET_EXHAUSTED
    assert out.chi is None
    assert out.nodes_explored <= 10 + 1


def test_time_budget_exhaustion(f2_graph):
    out = exact_chi_la(f2_graph, SearchConfig(time_budget=1e-9))
    assert out.status == BUDGET_EXHAUSTED


def test_budget_keeps_best_so_far(f2_graph):
    # enough nodes to find some labeling, not enough to finish the descent
    out = exact_chi_la(f2_graph, SearchConfig(node_budget=20000))
    if out.status == BUDGET_EXHAUSTED and out.best_so_far is not None:
        assert verify_certificate(out.best_so_far, f2_graph)


# -- validation -----------------------------------------------------------------

def test_rejects_out_of_range_k():
    with pytest.raises(ValueError):
        feasible_with_k_colors(c3_o1(), 1)
    with pytest.raises(ValueError):
        feasible_with_k_colors(c3_o1(), c3_o1().p + 1)


def test_rejects_disconnected_graph():
    g = Graph(4, ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        exact_chi_la(g)


def test_rejects_single_edge():
    with pytest.raises(ValueError):
        exact_chi_la(path(2))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(parallel_width=0)
    with pytest.raises(ValueError):
        SearchConfig(edge_order="random")
    with pytest.raises(ValueError):
        SearchConfig(node_budget=-1)


# -- admissible pruning bound -----------------------------------------------------

def test_prune_bound_empty_partial():
    f2 = friendship_corona(2, 1)
    assert lower_bound_prune(f2, [None] * f2.q) == 6
    g = c3_o1()
    assert lower_bound_prune(g, [None] * g.q) == 3


def test_prune_bound_complete_assignment_is_exact():
    from antimagic.construction import construct_odd
    rep = construct_odd(3)
    labels = list(rep.certificate.labels)
    assert lower_bound_prune(rep.graph, labels) == rep.certificate.color_count


def test_prune_bound_admissible_for_c3(f2_graph, f2_exact_outcome):
    # never exceeds the optimum it is bounding
    assert lower_bound_prune(c3_o1(), [None] * 6) <= 5
    assert lower_bound_prune(f2_graph, [None] * f2_graph.q) <= 7


def test_prune_bound_adjacent_tie_is_infeasible():
    f2 = friendship_corona(2, 1)
    # close hub (w=1+2+3+4+5) and u1 (w=1+6+8) with equal weight 15
    partial = [1, 2, 3, 4, 6, None, 5, 8, None, None, None]
    assert lower_bound_prune(f2, partial) == math.inf


def test_prune_bound_rejects_bad_partials():
    f2 = friendship_corona(2, 1)
    with pytest.raises(ValueError):
        lower_bound_prune(f2, [1, 1] + [None] * (f2.q - 2))
    with pytest.raises(ValueError):
        lower_bound_prune(f2, [f2.q + 1] + [None] * (f2.q - 1))
    with pytest.raises(ValueError):
        lower_bound_prune(f2, [None] * (f2.q - 1))
