"""Seeded cross-checking suites shared by the CLI and the test suite.

Each suite replays one of the package's load-bearing facts against an
independent route: brute-force contraction scans against the structural
characterization, construction identities against direct solves, and the
polynomial deciders against exhaustive oracles.  Suites return CheckResult
lists so callers can render pass/fail/skipped uniformly; they raise
ScaleLimit rather than silently truncating when asked for more than the
enumeration can sustain.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

from .errors import ScaleLimit
from .graphs import (
    contains_induced,
    contract_edges,
    is_chordal,
    random_connected,
    to_graph6,
)
from .patterns import parse_pattern
from .smallgraphs import connected_graphs
from .domination import (
    DominationKind,
    all_min_sds_independent,
    enumerate_min_sets,
    solve,
)
from .blocker import (
    characterize_ct,
    classify_ct_domination,
    classify_ct_total,
    ct_exact,
    path_contraction_certificate,
    validate_ct_verdict,
)
from .hclasses import (
    abc_partition,
    ec1_gt2_p3kp2free,
    ec1_gt2_p5free,
    find_A,
    is_h_free,
)
from .reductions import (
    CheckResult,
    SatInstance,
    _check,
    brute_1in3,
    reduce_2p3free,
    reduce_chordal,
    reduce_tree,
)

_MAX_EXHAUSTIVE = 8

_P5 = parse_pattern("P5")
_P3P2 = parse_pattern("P3+P2")
_2P3 = parse_pattern("2P3")


def _guard_order(max_n: int):
    if max_n > _MAX_EXHAUSTIVE:
        raise ScaleLimit(
            f"exhaustive sweeps stop at order {_MAX_EXHAUSTIVE}, got {max_n}"
        )


def _fail_detail(bad: list[str], examined: int) -> str:
    if not bad:
        return f"{examined} graphs"
    return f"{len(bad)}/{examined} failed, e.g. {' '.join(bad[:5])}"


def suite_contraction_bound(max_n: int = 7, **_) -> list[CheckResult]:
    """Three contractions always suffice, and the constructive certificate
    really lowers the value."""
    _guard_order(max_n)
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad_bound: list[str] = []
        bad_cert: list[str] = []
        examined = 0
        for g in connected_graphs(n):
            value = solve(g, DominationKind.SEMITOTAL).value
            if value < 3:
                continue
            examined += 1
            res = ct_exact(g, DominationKind.SEMITOTAL, 3)
            if res is None or res[0] > 3:
                bad_bound.append(to_graph6(g))
            cert = path_contraction_certificate(g)
            contracted, _map = contract_edges(g, cert.edges)
            after = solve(contracted, DominationKind.SEMITOTAL).value
            if not (len(cert.edges) <= 3 and after < value and after == cert.value_after):
                bad_cert.append(to_graph6(g))
        checks.append(_check(
            f"ct-at-most-3-n{n}", not bad_bound, _fail_detail(bad_bound, examined)))
        checks.append(_check(
            f"certificate-drops-n{n}", not bad_cert, _fail_detail(bad_cert, examined)))
    return checks


def suite_mechanism_match(max_n: int = 7, **_) -> list[CheckResult]:
    """The structural characterization agrees with the brute contraction
    scan on every connected graph, and its verdicts re-validate."""
    _guard_order(max_n)
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad: list[str] = []
        examined = 0
        for g in connected_graphs(n):
            examined += 1
            verdict = characterize_ct(g)
            res = ct_exact(g, DominationKind.SEMITOTAL, 3)
            expected = res[0] if res is not None else None
            if verdict.k != expected or not validate_ct_verdict(g, verdict):
                bad.append(to_graph6(g))
        checks.append(_check(
            f"mechanism-matches-oracle-n{n}", not bad, _fail_detail(bad, examined)))
    return checks


def suite_variant_classifiers(max_n: int = 7, **_) -> list[CheckResult]:
    """Plain and total domination classifiers agree with their own brute
    contraction scans off the floor."""
    _guard_order(max_n)
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad_dom: list[str] = []
        bad_tot: list[str] = []
        n_dom = n_tot = 0
        for g in connected_graphs(n):
            if solve(g, DominationKind.DOMINATION).value >= 2:
                n_dom += 1
                res = ct_exact(g, DominationKind.DOMINATION, 3)
                if res is None or classify_ct_domination(g) != res[0]:
                    bad_dom.append(to_graph6(g))
            if solve(g, DominationKind.TOTAL).value >= 3:
                n_tot += 1
                res = ct_exact(g, DominationKind.TOTAL, 3)
                if res is None or classify_ct_total(g) != res[0]:
                    bad_tot.append(to_graph6(g))
        checks.append(_check(
            f"domination-classifier-n{n}", not bad_dom, _fail_detail(bad_dom, n_dom)))
        checks.append(_check(
            f"total-classifier-n{n}", not bad_tot, _fail_detail(bad_tot, n_tot)))
    return checks


def suite_tree_identity(max_n: int = 5, **_) -> list[CheckResult]:
    """Tree expansion: value identity and one-contraction equivalence
    between the source and the expanded graph."""
    if max_n > 5:
        raise ScaleLimit("tree expansions grow elevenfold; capped at source order 5")
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad_value: list[str] = []
        bad_equiv: list[str] = []
        examined = 0
        for g in connected_graphs(n):
            examined += 1
            out = reduce_tree(g)
            gamma = solve(g, DominationKind.DOMINATION).value
            value = solve(out.graph, DominationKind.SEMITOTAL).value
            if value != gamma + out.meta["gamma_t2_offset"]:
                bad_value.append(to_graph6(g))
            src_yes = ct_exact(g, DominationKind.DOMINATION, 1) is not None
            dst_yes = ct_exact(out.graph, DominationKind.SEMITOTAL, 1) is not None
            if src_yes != dst_yes:
                bad_equiv.append(to_graph6(g))
        checks.append(_check(
            f"expanded-value-n{n}", not bad_value, _fail_detail(bad_value, examined)))
        checks.append(_check(
            f"one-contraction-transfers-n{n}", not bad_equiv,
            _fail_detail(bad_equiv, examined)))
    return checks


def suite_chordal_identity(max_n: int = 5, **_) -> list[CheckResult]:
    """Layered chordal host: value identity, class membership, and the
    fact that every minimum set meets the pendant pair."""
    if max_n > 5:
        raise ScaleLimit("layered hosts grow fast; capped at source order 5")
    checks: list[CheckResult] = []
    for ell in (2, 3):
        bad_value: list[str] = []
        bad_class: list[str] = []
        bad_pendant: list[str] = []
        examined = 0
        for n in range(2, max_n + 1):
            for g in connected_graphs(n):
                examined += 1
                out = reduce_chordal(g, ell)
                host = out.graph
                gamma = solve(g, DominationKind.DOMINATION).value
                value = solve(host, DominationKind.SEMITOTAL).value
                if value != min(gamma + 1, ell + 1):
                    bad_value.append(to_graph6(g))
                if not (is_chordal(host)
                        and is_h_free(host, parse_pattern("P6"))
                        and is_h_free(host, parse_pattern("P4+P2"))):
                    bad_class.append(to_graph6(g))
                anchor = {out.labels["y"], out.labels["x_0"]}
                if any(not (set(d) & anchor)
                       for d in enumerate_min_sets(host, DominationKind.SEMITOTAL)):
                    bad_pendant.append(to_graph6(g))
        checks.append(_check(
            f"host-value-ell{ell}", not bad_value, _fail_detail(bad_value, examined)))
        checks.append(_check(
            f"host-class-ell{ell}", not bad_class, _fail_detail(bad_class, examined)))
        checks.append(_check(
            f"minimum-sets-meet-pendant-ell{ell}", not bad_pendant,
            _fail_detail(bad_pendant, examined)))
    return checks


def _covering_instances() -> list[SatInstance]:
    """Every 1-in-3 instance on 3 or 4 variables with at most 4 clauses
    in which each variable occurs."""
    instances = []
    for nv in (3, 4):
        pool = sorted(combinations(range(nv), 3))
        for size in range(1, 5):
            for clauses in combinations_with_replacement(pool, size):
                inst = SatInstance(nv, tuple(clauses))
                if inst.all_vars_used:
                    instances.append(inst)
    return instances


def suite_2p3_encoding(
    max_n: int = 8, seed: int = 0, count: int = 500, **_
) -> list[CheckResult]:
    """SAT encoding identity for every covering small instance, plus the
    independence equivalence on 2P3-free graphs.

    The equivalence (one contraction helps iff some minimum set spans an
    edge) is restricted to value >= 3: at the floor nothing can decrease
    even when a minimum set spans an edge.
    """
    checks: list[CheckResult] = []
    instances = _covering_instances()
    bad_sat: list[str] = []
    for inst in instances:
        out = reduce_2p3free(inst)
        value = solve(out.graph, DominationKind.SEMITOTAL).value
        satisfiable = brute_1in3(inst) is not None
        if (value == out.meta["gamma_t2_target"]) != satisfiable:
            bad_sat.append(f"vars={inst.num_vars},clauses={inst.clauses}")
    checks.append(_check(
        "encoding-identity", not bad_sat, _fail_detail(bad_sat, len(instances))))

    for n in range(2, min(max_n, _MAX_EXHAUSTIVE) + 1):
        bad: list[str] = []
        examined = 0
        for g in connected_graphs(n):
            if contains_induced(g, _2P3) is not None:
                continue
            if solve(g, DominationKind.SEMITOTAL).value < 3:
                continue
            examined += 1
            lhs = ct_exact(g, DominationKind.SEMITOTAL, 1) is not None
            if lhs == all_min_sds_independent(g):
                bad.append(to_graph6(g))
        checks.append(_check(
            f"independence-equivalence-n{n}", not bad, _fail_detail(bad, examined)))

    if max_n > _MAX_EXHAUSTIVE:
        rng = random.Random(seed)
        bad = []
        sampled = checked = attempts = 0
        while sampled < count and attempts < 400 * count:
            attempts += 1
            p = rng.choice((0.35, 0.5, 0.65, 0.8))
            g = random_connected(9, p, rng.randrange(2**31))
            if contains_induced(g, _2P3) is not None:
                continue
            sampled += 1
            if solve(g, DominationKind.SEMITOTAL).value < 3:
                continue
            checked += 1
            lhs = ct_exact(g, DominationKind.SEMITOTAL, 1) is not None
            if lhs == all_min_sds_independent(g):
                bad.append(to_graph6(g))
        checks.append(_check(
            "independence-equivalence-sampled-n9",
            not bad and sampled >= count,
            f"{sampled} sampled, {checked} off the floor"
            + (f", {len(bad)} failed e.g. {' '.join(bad[:5])}" if bad else ""),
        ))
    return checks


def suite_p5free_decider(max_n: int = 7, **_) -> list[CheckResult]:
    """P5-free graphs: value >= 3 forces a single contraction for both the
    semitotal and plain parameters, and the pair-scan decider agrees with
    the oracle."""
    _guard_order(max_n)
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad_sds: list[str] = []
        bad_dom: list[str] = []
        bad_dec: list[str] = []
        examined = 0
        for g in connected_graphs(n):
            if not is_h_free(g, _P5):
                continue
            examined += 1
            res = ct_exact(g, DominationKind.SEMITOTAL, 3)
            if solve(g, DominationKind.SEMITOTAL).value >= 3:
                if res is None or res[0] != 1:
                    bad_sds.append(to_graph6(g))
            if solve(g, DominationKind.DOMINATION).value >= 3:
                resd = ct_exact(g, DominationKind.DOMINATION, 3)
                if resd is None or resd[0] != 1:
                    bad_dom.append(to_graph6(g))
            if ec1_gt2_p5free(g) != (res is not None and res[0] == 1):
                bad_dec.append(to_graph6(g))
        checks.append(_check(
            f"high-value-forces-one-n{n}", not bad_sds, _fail_detail(bad_sds, examined)))
        checks.append(_check(
            f"domination-analogue-n{n}", not bad_dom, _fail_detail(bad_dom, examined)))
        checks.append(_check(
            f"decider-matches-oracle-n{n}", not bad_dec, _fail_detail(bad_dec, examined)))
    return checks


def suite_p3kp2_decider(max_n: int = 7, **_) -> list[CheckResult]:
    """P3+P2-free graphs: layered decider versus the contraction oracle,
    and the two regular-vertex consequences whenever the far layer has
    regular vertices."""
    _guard_order(max_n)
    checks: list[CheckResult] = []
    for n in range(2, max_n + 1):
        bad_dec: list[str] = []
        bad_claims: list[str] = []
        examined = regular_hits = 0
        for g in connected_graphs(n):
            if not is_h_free(g, _P3P2):
                continue
            examined += 1
            res = ct_exact(g, DominationKind.SEMITOTAL, 3)
            oracle = res is not None and res[0] == 1
            if ec1_gt2_p3kp2free(g, 1) != oracle:
                bad_dec.append(to_graph6(g))
            anchor = find_A(g, 1)
            if anchor is None:
                continue
            part = abc_partition(g, anchor, 1)
            if not part.R:
                continue
            regular_hits += 1
            gamma = solve(g, DominationKind.DOMINATION).value
            gt2 = solve(g, DominationKind.SEMITOTAL).value
            resd = ct_exact(g, DominationKind.DOMINATION, 3)
            dom_one = resd is not None and resd[0] == 1
            if gamma != gt2 or dom_one != oracle:
                bad_claims.append(to_graph6(g))
        checks.append(_check(
            f"decider-matches-oracle-n{n}", not bad_dec, _fail_detail(bad_dec, examined)))
        checks.append(_check(
            f"regular-vertex-consequences-n{n}", not bad_claims,
            f"{regular_hits} graphs with regular vertices"
            + (f", failures e.g. {' '.join(bad_claims[:5])}" if bad_claims else "")))
    return checks


def suite_separation_scan(max_n: int = 6, **_) -> list[CheckResult]:
    """Emit graphs on which one contraction helps plain domination but not
    the semitotal parameter, or vice versa.  Candidates only; the scan
    never fails."""
    _guard_order(max_n)
    differing: list[str] = []
    examined = 0
    for n in range(2, max_n + 1):
        for g in connected_graphs(n):
            examined += 1
            dom_yes = ct_exact(g, DominationKind.DOMINATION, 1) is not None
            sds_yes = ct_exact(g, DominationKind.SEMITOTAL, 1) is not None
            if dom_yes != sds_yes:
                differing.append(to_graph6(g))
    detail = f"{len(differing)}/{examined} differ"
    if differing:
        detail += f", e.g. {' '.join(differing[:5])}"
    return [CheckResult("candidates-emitted", "pass", detail)]


SUITES = {
    "thm32": suite_contraction_bound,
    "thm34": suite_mechanism_match,
    "huangxu": suite_variant_classifiers,
    "lem43": suite_tree_identity,
    "appB": suite_2p3_encoding,
    "appC": suite_chordal_identity,
    "p5free": suite_p5free_decider,
    "p3kp2": suite_p3kp2_decider,
    "separation": suite_separation_scan,
}


def run_suite(
    name: str,
    *,
    max_n: int | None = None,
    seed: int = 0,
    count: int = 500,
) -> list[CheckResult]:
    """Run one named suite; unknown names raise KeyError for the CLI to map
    to a usage error."""
    fn = SUITES[name]
    kwargs = {"seed": seed, "count": count}
    if max_n is not None:
        kwargs["max_n"] = max_n
    return fn(**kwargs)
