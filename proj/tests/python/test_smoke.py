# Copyright 2026 The ESS Engine Authors.
# SPDX-License-Identifier: Apache-2.0

import json
import os
import subprocess

import pytest

import ess_engine as ess


@pytest.fixture(scope="module")
def builtin():
    return ess.evaluate(ess.builtin_paper_catalog(), ess.substitution_scenario(), rounding="paper")


def test_adjusted_coordinates(builtin):
    got = {s.technique_id: tuple(round(v, 2) for v in s.adjusted.as_tuple()) for s in builtin.scores}
    assert got == {
        "SHAP": (3.91, 3.30, 4.70),
        "LIME": (2.76, 4.40, 3.50),
        "CF": (2.76, 5.00, 3.50),
        "RULE": (5.00, 2.86, 3.80),
        "PROTO": (2.30, 5.00, 3.00),
    }
    assert list(builtin.scores[4].levels) == [ess.Level.LOW, ess.Level.HIGH, ess.Level.MEDIUM]


def test_selection_rows(builtin):
    ratios = [round(r.efficiency_ratio, 1) for r in builtin.selection]
    assert ratios == [15.3, 10.8, 11.5, 7.8, 10.7]
    assert builtin.selection[3].feasibility == ess.Feasibility.INFEASIBLE_ONLINE
    full = ess.evaluate(ess.builtin_paper_catalog(), ess.substitution_scenario())
    assert full.selection[1].efficiency_ratio == pytest.approx(10.692, abs=1e-3)


def test_plan(builtin):
    plan = builtin.plan
    assert plan.tier1_always_on.technique_id == "SHAP"
    assert plan.tier2_selective.technique_id == "CF"
    assert plan.tier3_periodic.technique_id == "RULE"


def test_building_blocks():
    p = ess.PropertyVector(3, 4, 3, 3, 5, 4.5, 4)
    raw = ess.aggregate_axes(p)
    assert raw.c == pytest.approx(3.4)
    assert ess.discretise(3.5) == ess.Level.HIGH
    assert ess.resource_cost(4) == pytest.approx(0.25)
    assert ess.efficiency_ratio(3.56, 1 / 3, "paper") == pytest.approx(10.8)
    frontier = ess.pareto_frontier([("A", ess.AxisTriple(1, 1, 1)), ("B", ess.AxisTriple(2, 2, 2))])
    assert set(frontier) == {"B"}
    assert ess.rank_stability(["a", "b", "c"], ["a", "b", "c"]) == 1.0


def test_sweep():
    spec = ess.SweepSpec(ess.SweepParameter.GAMMA_C, start=1.0, stop=1.3, step=0.05)
    rep = ess.sweep(ess.builtin_paper_catalog(), ess.substitution_scenario(), spec)
    assert len(rep.points) == 7
    assert all(s == 1.0 for s in rep.stability)
    assert rep.change_points == []
    assert "tier plan change points: none" in ess.render_sweep(rep)


def test_machine_document(builtin):
    doc = json.loads(builtin.to_json())
    assert doc["selection"]["ratio_mode"] == "paper"
    assert doc["plan"]["tier1_always_on"]["display"] == "15.3"


def test_errors():
    with pytest.raises(ess.ValidationError):
        ess.load_catalog('{"techniques": [{"id": "X"}]}')
    with pytest.raises(ess.ParseError):
        ess.load_catalog("{not json")
    with pytest.raises(ess.DomainError):
        ess.evaluate(ess.builtin_paper_catalog(), ess.substitution_scenario(), modality="vision")
    assert issubclass(ess.ValidationError, ess.EssError)
    bad = ess.substitution_scenario()
    bad.selection_weights = ess.SelectionWeights(0.5, 0.5, 0.5)
    with pytest.raises(ess.ValidationError):
        bad.validate()


@pytest.mark.skipif("ESS_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary():
    res = subprocess.run([os.environ["ESS_CLI"], "recommend", "--format", "csv"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0, res.stderr
    assert res.stdout.splitlines()[1].startswith('1,"SHAP"')
