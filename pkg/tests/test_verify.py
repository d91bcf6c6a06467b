import json

import pytest

from mui import CLAIMS, ConfigError, Ring, claim_ids, run_all, run_claim
from mui.verify import check_resources

R32 = Ring(3, 2)


def test_claim_registry_covers_every_statement():
    assert set(CLAIMS) == {
        "lemma:eqnLn",
        "lemma:p2",
        "lemma:Mns",
        "lemma:EssSquared",
        "eq:MnST",
        "lemma:jointAnn",
        "coroll:jointAnn2",
        "coroll:MnS",
        "thm:free",
        "eq:betaMns",
        "eq:rPMnS",
        "lemma:SteenrodMnS",
        "thm:Steenrod",
        "remark:fundamental",
    }


def test_mode_selection():
    odd = claim_ids(R32)
    assert "lemma:p2" not in odd and "thm:Steenrod" in odd
    mod2 = claim_ids(Ring(2, 2))
    assert set(mod2) == {"lemma:eqnLn", "lemma:p2"}


def test_unknown_claim_rejected():
    with pytest.raises(ConfigError):
        run_claim("lemma:nonsense", R32, 5)
    with pytest.raises(ConfigError):
        run_all(R32, 5, ["thm:Steenrod", "bogus"])
    with pytest.raises(ConfigError):
        run_claim("lemma:p2", R32, 5)  # wrong mode


def test_resource_guard():
    with pytest.raises(ConfigError):
        check_resources(Ring(3, 9), 5)
    with pytest.raises(ConfigError):
        check_resources(R32, 10**6)
    check_resources(R32, 20)


def test_report_shape_and_json():
    report = run_claim("eq:betaMns", R32, 6)
    assert report.passed and report.status == "pass"
    data = json.loads(report.to_json())
    assert set(data) == {"claim", "p", "n", "degree_bound", "status", "cases", "runtime_ms"}
    assert data["claim"] == "eq:betaMns"
    assert data["p"] == 3 and data["n"] == 2 and data["degree_bound"] == 6
    for case in data["cases"]:
        assert set(case) == {"id", "expected", "actual", "pass"}
        assert case["pass"] is True


def test_failure_reports_carry_counterexamples(monkeypatch):
    # sabotage one value so the report machinery shows a concrete element
    import mui.verify as verify_mod

    real = verify_mod.bockstein
    monkeypatch.setattr(verify_mod, "bockstein", lambda y: real(y) + Ring(y.p, y.n).x(1))
    report = run_claim("eq:betaMns", R32, 6)
    assert not report.passed
    bad = report.failures()
    assert bad and any(c.actual not in ("", "0") for c in bad)


def test_run_all_passes_quickly_at_3_2():
    reports = run_all(R32, 10)
    assert [r.claim for r in reports] == claim_ids(R32)
    assert all(r.passed for r in reports)


def test_run_all_passes_at_p2():
    reports = run_all(Ring(2, 2), 8)
    assert all(r.passed for r in reports)
    assert {r.claim for r in reports} == {"lemma:eqnLn", "lemma:p2"}
