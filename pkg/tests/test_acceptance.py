"""Acceptance gate: one test per criterion, every tolerance exact.

The two exhaustive contraction sweeps run at order 7 by default and at
order 8 when SEMITOTAL_DEEP=1; everything else already runs at its full
stated scale.  The 153-vertex claw-free identity is attempted under a
10-minute deadline and reported as skipped when the search runs out of
time, which the criterion accepts; SEMITOTAL_AC7_SECONDS shortens the
attempt for development runs.
"""

import os
import random
from time import monotonic

import pytest

from semitotal import (
    DominationKind,
    SatInstance,
    ScaleLimit,
    brute_1in3,
    characterize_ct,
    classify_h,
    contains_subgraph,
    exists_within,
    is_feasible,
    is_h_free,
    iter_connected_graphs,
    p4_forces_config,
    parse_pattern,
    random_connected,
    reduce_clawfree,
    run_suite,
    satisfying_sds,
    solve,
)
from semitotal.reductions import build_variable_gadget

from conftest import DEEP
from test_reductions import paw_lower_bound_holds

SDS = DominationKind.SEMITOTAL

SWEEP_MAX = 8 if DEEP else 7
AC7_SECONDS = float(os.environ.get("SEMITOTAL_AC7_SECONDS", "600"))

# mechanism token -> contraction count it certifies
MECHANISM_K = {
    "friendly-triple": 1,
    "st-configuration": 2,
    "path-contraction": 3,
    "floor": None,
}

# pattern -> (verdict, reason, t, p); the P4+P2 row covers the extra-P2
# variants as well
DECISION_TREE = {
    "claw": ("coNP-hard", "Thm-claw", None, None),
    "C3": ("NP-hard", "Thm-girth", None, None),
    "C4": ("NP-hard", "Thm-girth", None, None),
    "C7": ("NP-hard", "Thm-girth", None, None),
    "P6": ("NP-hard", "Thm-P6/P4+P2", None, None),
    "2P3": ("coNP-hard", "Thm-2P3", None, None),
    "P4+P2": ("NP-hard", "Thm-P6/P4+P2", None, None),
    "P4+2P2": ("NP-hard", "Thm-P6/P4+P2", None, None),
    "P5": ("polynomial-time", "Thm-P5+tK1", 0, None),
    "P5+3K1": ("polynomial-time", "Thm-P5+tK1", 3, None),
    "P3+2P2+K1": ("polynomial-time", "Thm-P3+pP2+tK1", 1, 2),
}


def _assert_all_pass(checks):
    failed = [f"{c.name}: {c.detail}" for c in checks if c.status != "pass"]
    assert not failed, "; ".join(failed)


def test_ac01_three_contractions_always_suffice():
    _assert_all_pass(run_suite("thm32", max_n=SWEEP_MAX))


def test_ac02_characterization_matches_contraction_oracle():
    _assert_all_pass(run_suite("thm34", max_n=SWEEP_MAX))
    for g in iter_connected_graphs(5, min_n=2):
        verdict = characterize_ct(g)
        assert MECHANISM_K[verdict.mechanism.value] == verdict.k


def test_ac03_variant_classifiers_match_contraction_oracle():
    _assert_all_pass(run_suite("huangxu", max_n=7))


def test_ac04_tree_expansion_identity():
    _assert_all_pass(run_suite("lem43", max_n=5))


def test_ac05_chordal_host_identity():
    _assert_all_pass(run_suite("appC", max_n=5))


def test_ac06_sat_identity_and_independence_equivalence():
    checks = run_suite("appB", max_n=9, seed=0, count=500)
    _assert_all_pass(checks)
    assert checks[0].name == "encoding-identity"
    assert checks[0].detail == "57 graphs"
    assert checks[-1].name == "independence-equivalence-sampled-n9"


def test_ac07_clawfree_construction_and_identity_attempt():
    bounded = SatInstance(3, ((0, 1, 2),) * 3)
    wide = SatInstance(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
    claw = parse_pattern("claw")
    for sat in (bounded, wide):
        out = reduce_clawfree(sat)
        assert out.graph.n == 41 * sat.num_vars + 10 * len(sat.clauses)
        assert is_h_free(out.graph, claw)

    gadget = build_variable_gadget()
    assert paw_lower_bound_holds(gadget)
    assert solve(gadget.graph, SDS).value == 14

    host = reduce_clawfree(bounded)
    target = host.meta["gamma_t2_target"]
    assert target == 14 * 3 + 3
    witness = satisfying_sds(host, brute_1in3(bounded))
    assert len(witness) == target
    assert is_feasible(host.graph, SDS, witness)
    try:
        smaller = exists_within(
            host.graph, SDS, target - 1,
            budget=10**12, deadline=monotonic() + AC7_SECONDS,
        )
    except ScaleLimit:
        pytest.skip(
            f"identity attempt used up the {AC7_SECONDS:.0f}s deadline; "
            f"the size-{target} witness stands, the lower bound is open"
        )
    # the witness gives <= target, so refuting target-1 settles equality
    assert not smaller


def test_ac08_p5free_one_contraction_suffices():
    _assert_all_pass(run_suite("p5free", max_n=8))


def test_ac09_p3kp2_decider_and_regular_vertex_claims():
    _assert_all_pass(run_suite("p3kp2", max_n=8))


def test_ac10_pattern_decision_tree():
    for text, (verdict, reason, t, p) in DECISION_TREE.items():
        tag = classify_h(parse_pattern(text))
        assert tag.verdict.value == verdict, text
        assert tag.reason == reason, text
        assert tag.t == t and tag.p == p, text


def test_ac11_p4_inside_sds_forces_hub_configuration():
    p4 = parse_pattern("P4")
    rng = random.Random(11)
    done = 0
    while done < 500:
        g = random_connected(
            rng.randint(5, 9), rng.choice([0.3, 0.5, 0.7]), rng.randrange(2**31)
        )
        hit = contains_subgraph(g, p4)
        if hit is None:
            continue
        d = set(hit.values()) | {v for v in range(g.n) if rng.random() < 0.5}
        if not is_feasible(g, SDS, d):
            d = set(range(g.n))
        assert contains_subgraph(g, p4, within=d) is not None
        assert p4_forces_config(g, d)
        done += 1
