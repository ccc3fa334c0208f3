from __future__ import annotations

import json

import pytest

from skewfact import harness
from skewfact.constructors import SpecError, make


def test_registry_covers_claims():
    ids = set(harness.REGISTRY) | set(harness.OUT_OF_SCOPE)
    for row in range(1, 9):
        assert any(i == f"table1.row{row}" or i.startswith(f"table1.row{row}.") for i in ids)
    for item in range(1, 5):
        assert f"lemma24.item{item}" in ids
    for case in ("theorem2.case12", "theorem2.case13", "theorem2.case2.m8"):
        assert case in ids
    assert {"prop-skew.psl211", "prop-skew.m23", "prop-skew.a7"} <= ids


def test_defaults_exclude_extended():
    ids = harness.default_ids()
    assert "table1.row4.m2" in ids and "table1.row4.m4" not in ids


def test_unknown_id():
    with pytest.raises(harness.UnknownScenario):
        harness.run(["table1.row9"])


def test_report_fields():
    (r,) = harness.run(["table1.row1"], seed=7)
    d = r.as_dict()
    assert set(d) >= {"scenario", "status", "evidence", "checks", "witnesses", "seed", "elapsed_ms", "versions"}
    assert d["status"] == "pass" and d["seed"] == 7
    assert set(d["checks"][0]) == {"name", "expected", "actual", "ok"}
    assert d["witnesses"]["D.a"].startswith("(")
    assert d["versions"]["fixtures"]
    json.loads(r.to_json())


def test_seed_determinism():
    a = harness.serialize(harness.run(["table1.row5", "lemma24.item4"], seed=3), timing=False)
    b = harness.serialize(harness.run(["table1.row5", "lemma24.item4"], seed=3), timing=False)
    assert a == b


def test_case12_and_item1():
    reports = harness.run(["theorem2.case12", "lemma24.item1"])
    assert [r.status for r in reports] == ["pass", "pass"]


def test_parametric_scenarios():
    s = harness.table1_scenario(4, 2)
    assert s.id == "table1.row4.m2"
    with pytest.raises(ValueError):
        harness.table1_scenario(1, 2)
    with pytest.raises(ValueError):
        harness.theorem2_case2_scenario(6)


def test_status_rules():
    def failing(ctx):
        ctx.check("x", 1, 2)

    def randomized(ctx):
        ctx.check("x", 1, 1)
        ctx.randomized("sampled")

    def budget(ctx):
        ctx.check("regular dihedral found", True, False)
        ctx.randomized("budget")

    mk = harness.Scenario
    assert harness.run_scenario(mk("t.fail", "", failing)).status == "fail"
    assert harness.run_scenario(mk("t.rand", "", randomized)).status == "inconclusive"
    assert harness.run_scenario(mk("t.rand-ok", "", randomized, "randomized-ok")).status == "pass"
    assert harness.run_scenario(mk("t.budget", "", budget)).status == "inconclusive"
    reports = [harness.run_scenario(mk("t.rand", "", randomized))]
    assert harness.exit_code(reports) == 3


class TestAnalyze:
    def test_a5(self):
        d = harness.analyze("A:5")
        assert d["order"] == "60" and d["simple"] == "simple"
        assert d["action_report"]["two_transitive"]

    def test_m12_cosets(self):
        d = harness.analyze("M12", "cosets:M11")
        r = d["action_report"]
        assert r["degree"] == 12 and r["two_transitive"] and r["quasiprimitive"] == "yes"

    def test_product(self):
        d = harness.analyze("prod(A:5, C:2)")
        assert d["simple"] == "not-simple" and d["simple_witness_order"] in ("2", "60")

    def test_stab_subspec(self):
        d = harness.analyze("S:5", "cosets:stab:1,2")
        assert d["action_report"]["degree"] == 20

    def test_bad_subspec(self):
        with pytest.raises(SpecError):
            harness.parse_subgroup(make("A:5"), "S:5")
        with pytest.raises(SpecError):
            harness.parse_subgroup(make("A:5"), "stab:9")
