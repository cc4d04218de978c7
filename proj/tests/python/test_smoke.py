import json
import math
import os
import subprocess
from pathlib import Path

import pytest

import hazvis


def test_hand_example():
    sample = hazvis.CensoredSample([1.0, 2.0], [1, 1])
    k = hazvis.builtin_kernel("epanechnikov")
    assert hazvis.estimate(sample, k, hazvis.Bandwidth.fixed(1.0), 1.0) == 0.375


def test_kernel_constants():
    k = hazvis.builtin_kernel("biweight")
    assert k.alpha == pytest.approx(5 / 7, abs=1e-15)
    assert k.beta == pytest.approx(1 / 7, abs=1e-15)
    with pytest.raises(ValueError):
        hazvis.builtin_kernel("gaussian")


def test_models_and_sampling():
    w = hazvis.make_model("weibull", {"shape": 2.0, "scale": 1.0})
    assert w.cdf(1.0) == pytest.approx(1 - math.exp(-1), abs=1e-15)
    assert [m.name for m in hazvis.catalog()][0] == "exponential"
    s = hazvis.generate(hazvis.make_model("exponential"), hazvis.make_model("none"), 100, 7)
    assert len(s) == 100 and all(d == 1 for d in s.delta)
    assert s.x == sorted(s.x)


def test_criteria_on_constant_graphs():
    est = hazvis.CurveGraph([0.0, 10.0], [1.3, 1.3])
    truth = hazvis.CurveGraph([0.0, 10.0], [1.0, 1.0])
    assert hazvis.lp(2, est, truth) == pytest.approx(0.9)
    assert hazvis.lp("inf", est, truth) == pytest.approx(0.3)
    assert hazvis.ve("est_to_truth", math.inf, est, truth) == pytest.approx(0.3)
    assert hazvis.se(2, est, truth) == pytest.approx(math.sqrt(1.8))
    assert hazvis.point_to_graph(5.0, 1.25, truth) == 0.25
    r = hazvis.error_report(est, truth)
    assert r.seinf == pytest.approx(0.3)


def test_asymptotics():
    e = hazvis.make_model("exponential")
    k = hazvis.builtin_kernel("epanechnikov")
    mise = hazvis.mise_asymptotic(e, e, k, 100, 0.3, 0.0, 1.0)
    assert mise == pytest.approx(0.01 * math.expm1(2.0), abs=1e-9)
    assert hazvis.weighted_mise_asymptotic(e, e, k, 100, 0.3, 0.0, 1.0) == pytest.approx(mise, rel=1e-14)


def test_scenario_reversal():
    r = hazvis.scenario_bimodal()
    assert r.l2_shifted > r.l2_oversmoothed
    assert r.se2_shifted < r.se2_oversmoothed


def test_run_experiment(tmp_path):
    config = {"n_list": [50, 100], "replicates": 8, "grid_points": 32, "master_seed": 3}
    rows = hazvis.run_experiment(json.dumps(config), threads=1, out_dir=str(tmp_path))
    assert {r["criterion"] for r in rows} >= {"l2", "ve2_eh_sq", "se2_sq"}
    l2 = next(r for r in rows if r["n"] == 100 and r["criterion"] == "l2")
    assert l2["target_kind"] == "mise" and l2["target"] > 0
    assert (tmp_path / "summary.csv").read_text().startswith("n,criterion,mean,stderr,target,target_kind\n")
    with pytest.raises(ValueError):
        hazvis.run_experiment('{"replicate": 3}')


@pytest.mark.skipif("VEBENCH_BIN" not in os.environ, reason="CLI binary not provided")
def test_cli_round_trip(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"n_list": [40], "replicates": 4, "grid_points": 32}))
    out = tmp_path / "out"
    subprocess.run([os.environ["VEBENCH_BIN"], "run", str(config), "--out", str(out), "--quiet"], check=True)
    assert sorted(p.name for p in Path(out).iterdir()) == [
        "config.echo.json", "curves_40_0.csv", "dn.csv", "summary.csv"]
