import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitotal import (
    DominationKind,
    all_min_sds_independent,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_min_sets,
    exists_within,
    is_feasible,
    iter_connected_graphs,
    path_graph,
    solve,
    solve_by_enumeration,
    star_graph,
    witnesses_of,
)
from semitotal.domination import private_neighbours
from semitotal.errors import Infeasible, NotInSet, ScaleLimit
from semitotal.graphs import Graph, random_connected

import oracles
from conftest import connected_graphs_st

DOM = DominationKind.DOMINATION
TOT = DominationKind.TOTAL
SDS = DominationKind.SEMITOTAL

KINDS = (DOM, TOT, SDS)


def test_hand_values():
    # single-vertex and adjacent-pair floors
    assert solve(path_graph(2), DOM).value == 1
    assert solve(path_graph(2), TOT).value == 2
    assert solve(path_graph(2), SDS).value == 2
    assert solve(star_graph(6), DOM).value == 1
    assert solve(star_graph(6), TOT).value == 2
    assert solve(star_graph(6), SDS).value == 2
    assert solve(cycle_graph(6), SDS).value == 3
    assert solve(cycle_graph(6), TOT).value == 4
    assert solve(cycle_graph(6), DOM).value == 2


def test_witness_reachability_floor():
    # a semitotal member needs a partner within distance two, so one vertex
    # can never suffice even when it dominates everything
    for g in (star_graph(5), complete_graph(4)):
        assert solve(g, DOM).value == 1
        assert solve(g, SDS).value == 2


def test_solver_rejects_unusable_input():
    one = Graph(1, (0,))
    assert solve(one, DOM).value == 1
    with pytest.raises(Infeasible):
        solve(one, SDS)
    with pytest.raises(Infeasible):
        solve(one, TOT)
    with pytest.raises(Infeasible):
        solve(disjoint_union([path_graph(2), path_graph(2)]), SDS)


def test_solutions_are_feasible_and_match_oracle_small():
    for g in iter_connected_graphs(6):
        n, edges = oracles.edge_data(g)
        for kind in KINDS:
            if kind is not DOM and g.n < 2:
                continue
            res = solve(g, kind)
            assert is_feasible(g, kind, res.witness)
            assert res.value == len(res.witness)
            assert res.value == oracles.brute_value(n, edges, kind.value)


@settings(max_examples=60, deadline=None)
@given(connected_graphs_st(min_n=2, max_n=9))
def test_solver_matches_oracle_random(g):
    n, edges = oracles.edge_data(g)
    for kind in KINDS:
        assert solve(g, kind).value == oracles.brute_value(n, edges, kind.value)


@settings(max_examples=60, deadline=None)
@given(connected_graphs_st(min_n=2, max_n=8), st.data())
def test_is_feasible_matches_oracle(g, data):
    subset = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    n, edges = oracles.edge_data(g)
    adj = oracles.adjacency(n, edges)
    for kind in KINDS:
        assert is_feasible(g, kind, subset) == oracles.CHECKS[kind.value](adj, subset)


def test_value_chain_on_all_small_graphs():
    # gamma <= gamma_t2 <= gamma_t, and the semitotal floor of two
    for g in iter_connected_graphs(7, min_n=2):
        dom = solve(g, DOM).value
        sds = solve(g, SDS).value
        tot = solve(g, TOT).value
        assert dom <= sds <= tot
        assert sds >= 2


def test_exists_within_consistent_with_solve():
    for g in iter_connected_graphs(6, min_n=2):
        value = solve(g, SDS).value
        assert exists_within(g, SDS, value)
        assert not exists_within(g, SDS, value - 1)
        assert not exists_within(g, SDS, 0)


def test_solve_by_enumeration_agrees():
    for g in iter_connected_graphs(5, min_n=2):
        for kind in KINDS:
            assert solve_by_enumeration(g, kind).value == solve(g, kind).value


def test_solve_by_enumeration_budget():
    with pytest.raises(ScaleLimit):
        solve_by_enumeration(cycle_graph(9), SDS, budget=5)


def test_enumerate_min_sets_matches_oracle():
    for g in iter_connected_graphs(6, min_n=2):
        n, edges = oracles.edge_data(g)
        for kind in KINDS:
            got = sorted(enumerate_min_sets(g, kind))
            want = sorted(oracles.brute_min_sets(n, edges, kind.value))
            assert got == want


def test_enumerate_min_sets_scale_guard():
    big = random_connected(16, 0.15, 3)
    if solve(big, SDS).value > 6:
        with pytest.raises(ScaleLimit):
            enumerate_min_sets(big, SDS)
    with pytest.raises(ScaleLimit):
        enumerate_min_sets(cycle_graph(12), SDS, budget=10)


def test_witnesses_hand_cases():
    c6 = cycle_graph(6)
    d = {0, 1, 3}
    assert witnesses_of(c6, d, 0) == frozenset({1})
    assert witnesses_of(c6, d, 1) == frozenset({0, 3})
    with pytest.raises(NotInSet):
        witnesses_of(c6, d, 2)


def test_private_neighbours_hand_cases():
    star = star_graph(4)
    assert private_neighbours(star, {0}, 0) == frozenset({1, 2, 3})
    c6 = cycle_graph(6)
    assert private_neighbours(c6, {0, 1, 3}, 3) == frozenset({4})
    # members of the set are never private neighbours
    p3 = path_graph(3)
    assert private_neighbours(p3, {0, 1}, 1) == frozenset({2})
    with pytest.raises(NotInSet):
        private_neighbours(c6, {0, 1}, 5)


def test_all_min_sds_independent():
    # K3's unique-size-2 solutions are adjacent pairs
    assert not all_min_sds_independent(complete_graph(3))
    # C6 has the independent {0,2,4} but also sets with edges
    assert not all_min_sds_independent(cycle_graph(6))
    # star: every minimum SDS is the centre plus one leaf, always adjacent
    assert not all_min_sds_independent(star_graph(5))
    # C4: pairs at distance two work, oracle confirms an all-independent case
    c4 = cycle_graph(4)
    mins = oracles.brute_min_sets(*oracles.edge_data(c4), "semitotal")
    has_edge = {
        frozenset(d)
        for d in mins
        if any(c4.has_edge(u, v) for u in d for v in d if u < v)
    }
    assert all_min_sds_independent(c4) == (not has_edge)
