import io
import json

import pytest

from semitotal.cli import main
from semitotal.reductions import CheckResult

import oracles

C6 = "EhEG"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_classify_claw(capsys):
    code, report = run_cli(capsys, "classify", "--pattern", "claw")
    assert code == 0
    assert report["schema"] == "semitotal-report/1"
    assert report["command"] == "classify"
    assert report["results"]["verdict"] == "coNP-hard"
    assert report["results"]["reason"] == "Thm-claw"
    assert "params" not in report["results"]


def test_classify_reports_params(capsys):
    code, report = run_cli(capsys, "classify", "--pattern", "P3+2P2+K1")
    assert code == 0
    assert report["results"]["params"] == {"t": 1, "p": 2}


def test_characterize_c6(capsys):
    code, report = run_cli(capsys, "characterize", "--graph6", C6)
    assert code == 0
    res = report["results"]
    assert res["gamma_t2"] == 3
    assert res["ct"] == 1
    assert res["mechanism"] == "friendly-triple"
    assert len(res["triple"]) == 3
    assert set(res["triple"]) <= set(res["sds"])
    assert report["input"]["order"] == 6
    assert report["input"]["edges"] == 6


def test_characterize_configuration(capsys):
    code, report = run_cli(
        capsys, "characterize", "--graph6", "F?LS_", "--check-certificate")
    assert code == 0
    res = report["results"]
    assert res["ct"] == 2
    assert res["mechanism"] == "st-configuration"
    assert res["configuration"]["id"] == "O6"
    assert res["configuration"]["thick_edges"] == [[3, 4], [3, 5]]
    assert res["certificate_check"] == "ok"


def test_characterize_certificate_roundtrip(capsys):
    code, report = run_cli(capsys, "characterize", "--graph6", C6, "--check-certificate")
    assert code == 0
    assert report["results"]["certificate_check"] == "ok"


def test_solve_lists_all_minimum_sets(capsys):
    code, report = run_cli(capsys, "solve", "--graph6", C6, "--all")
    assert code == 0
    res = report["results"]
    assert res["kind"] == "semitotal"
    assert res["value"] == 3
    assert sorted(res["witness"]) == res["witness"]
    expected = oracles.brute_min_sets(6, [(i, (i + 1) % 6) for i in range(6)], "semitotal")
    assert {tuple(d) for d in res["all"]} == {tuple(sorted(d)) for d in expected}


def test_solve_other_kinds(capsys):
    code, report = run_cli(capsys, "solve", "--graph6", C6, "--kind", "dom")
    assert code == 0
    assert report["results"] == {"kind": "domination", "value": 2,
                                 "witness": report["results"]["witness"]}
    code, report = run_cli(capsys, "solve", "--graph6", C6, "--kind", "total")
    assert report["results"]["value"] == 4


def test_blocker_certificate(capsys):
    code, report = run_cli(
        capsys, "blocker", "--graph6", "F?LS_", "--check-certificate")
    assert code == 0
    res = report["results"]
    assert res["ct"] == 2
    assert len(res["certificate"]["edges"]) == 2
    assert res["certificate_check"] == "ok"


def test_blocker_on_floor(capsys):
    code, report = run_cli(capsys, "blocker", "--graph6", "F??Fw")
    assert code == 0
    assert report["results"]["ct"] is None
    assert report["results"]["certificate"] is None


def test_verify_suite_passes(capsys):
    code, report = run_cli(
        capsys, "verify", "--suite", "thm34", "--max-n", "7", "--seed", "1")
    assert code == 0
    checks = report["results"]["checks"]
    assert checks and all(c["status"] == "pass" for c in checks)


def test_verify_failure_maps_to_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(
        "semitotal.cli.run_suite",
        lambda *a, **k: [CheckResult("broken", "fail", "boom")],
    )
    code, report = run_cli(capsys, "verify", "--suite", "thm34")
    assert code == 3
    assert report["results"]["checks"][0]["status"] == "fail"


def test_reduce_tree_counts(capsys):
    code, report = run_cli(capsys, "reduce", "--graph6", "A_", "--target", "tree")
    assert code == 0
    res = report["results"]
    assert (res["order"], res["edges"]) == (22, 21)
    assert res["meta"] == {"gamma_t2_offset": 4, "source_order": 2}


def test_reduce_sat_target(capsys, tmp_path):
    path = tmp_path / "inst.sat"
    path.write_text("p 1in3 3 1\n1 2 3\n", encoding="ascii")
    code, report = run_cli(capsys, "reduce", "--target", "2p3free", "--sat", str(path))
    assert code == 0
    res = report["results"]
    assert (res["order"], res["edges"]) == (14, 34)
    assert res["meta"] == {"gamma_t2_target": 3, "num_clauses": 1, "num_vars": 3}
    assert report["input"]["variables"] == 3


def test_stdin_edge_list(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("4 3\n0 1\n1 2\n2 3\n"))
    code, report = run_cli(capsys, "solve", "--stdin", "--kind", "dom")
    assert code == 0
    assert report["input"]["order"] == 4
    assert report["results"]["value"] == 2


def test_usage_errors(capsys):
    for argv in (
        [],
        ["solve"],
        ["solve", "--graph6", C6, "--file", "x"],
        ["reduce", "--graph6", "A_", "--target", "chordal"],
        ["reduce", "--graph6", "A_", "--target", "clawfree"],
        ["solve", "--kind", "nope", "--graph6", C6],
    ):
        code, report = run_cli(capsys, *argv)
        assert code == 1
        assert report["error"]["type"] == "usage"


def test_malformed_input_exits_2(capsys):
    code, report = run_cli(capsys, "solve", "--graph6", "!!")
    assert code == 2
    assert report["error"]["type"] == "ParseError"
    code, report = run_cli(capsys, "solve", "--graph6", "@")
    assert code == 2
    assert report["error"]["type"] == "Infeasible"
    code, report = run_cli(capsys, "solve", "--file", "/no/such/file")
    assert code == 2
    assert report["error"]["type"] == "io"


def test_scale_limit_exits_4(capsys):
    code, report = run_cli(capsys, "verify", "--suite", "thm32", "--max-n", "12")
    assert code == 4
    assert report["error"]["type"] == "ScaleLimit"


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "solve" in capsys.readouterr().out


def test_reports_deterministic_modulo_timing(capsys):
    code1, rep1 = run_cli(capsys, "characterize", "--graph6", C6)
    code2, rep2 = run_cli(capsys, "characterize", "--graph6", C6)
    rep1.pop("timing")
    rep2.pop("timing")
    assert code1 == code2 == 0
    assert json.dumps(rep1, sort_keys=True) == json.dumps(rep2, sort_keys=True)
