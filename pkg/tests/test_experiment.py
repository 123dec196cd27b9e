"""Tests for running experiments."""

import json
import math

import numpy as np
import pytest

from randomwaves import config
from randomwaves import constants
from randomwaves import errors
from randomwaves import experiment
from randomwaves import kacrice
from randomwaves import spectral


def make(kind, model, labels, **kwargs):
    return config.ExperimentConfig(kind, model, labels, **kwargs)


def statuses(record, claim):
    return [c.status for c in record.checks if c.claim == claim and c.status != experiment.INFO]


def test_real_density_circle():
    cfg = make(constants.RealDensity, "circle", (3, 5), trials=30, seed=11)
    record = experiment.run_experiment(cfg, write=False)
    assert record.passed
    assert [row["N"] for row in record.rows] == [3, 5]
    assert record.rows[1]["empirical"] == 10.0
    assert record.rows[1]["predicted"] == pytest.approx(10.0)
    assert record.wall_clock is None
    trials = record.tables["trials.csv"]
    assert trials.header == experiment.TRIALS_HEADER
    assert len(trials.rows) == 60
    assert statuses(record, "uniformity") == [experiment.PASS] * 3
    assert record.plots[0].name == "density"


def test_wall_clock_only_when_not_reproducible():
    cfg = make(constants.RealDensity, "circle", (2,), trials=30, bit_reproducible=False)
    record = experiment.run_experiment(cfg, write=False)
    assert record.wall_clock >= 0


def test_strong_law_circle():
    cfg = make(constants.StrongLaw, "circle", range(1, 11), seed=3)
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    assert len(record.rows) == 10
    assert statuses(record, "strong law") == [experiment.PASS]
    np.testing.assert_allclose([row["running_average"] for row in record.rows], 2.0)


def test_variance_scan_circle():
    cfg = make(constants.VarianceScan, "circle", (2, 4), trials=30)
    record = experiment.run_experiment(cfg, write=False)
    assert record.passed
    assert [row["empirical"] for row in record.rows] == [0.0, 0.0]
    assert record.rows[0]["predicted"].startswith("n/a")


def test_complex_growth_sphere():
    cfg = make(constants.ComplexGrowth, "sphere", range(40, 201, 20), sqrt_rho=(0.15,))
    record = experiment.run_experiment(cfg, write=False)
    assert record.passed
    assert len(record.rows) == 9
    assert all(row["predicted"] == pytest.approx(0.3) for row in record.rows)


def test_gk_lemma_real_point():
    cfg = make(constants.GKLemma, "circle", (4,), trials=1000, seed=5)
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    assert len(record.rows) == experiment.GK_POINTS
    assert record.rows[0]["sqrt_rho"] == 0.0
    assert record.rows[0]["predicted"] == pytest.approx(-np.euler_gamma - math.log(2), abs=1e-6)
    real = [c for c in record.checks if c.claim == "real point"]
    assert real[0].status == experiment.PASS
    assert all(c.status == experiment.PASS for c in record.checks if c.claim == "bounded G")


def test_gk_points():
    model = config.ExperimentConfig(constants.GKLemma, "torus", (6,)).manifold_model()
    points = experiment.gk_points(model, (0.1, 0.3))
    assert len(points) == experiment.GK_POINTS
    assert points[0].y == pytest.approx((0.0, 0.0))
    assert math.hypot(*points[-1].y) == pytest.approx(0.3)


def test_circle_current():
    cfg = make(constants.CircleCurrent, "circle", (8, 16), window="cutoff", trials=20, seed=9)
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    assert statuses(record, "root count") == [experiment.PASS] * 2
    assert statuses(record, "conjugation") == [experiment.PASS] * 2
    assert len(record.tables["roots.csv"].rows) == 20 * 16 + 20 * 32
    assert [row["N"] for row in record.rows] == [8, 16]
    assert all(row["exact"] > 0 for row in record.rows)


@pytest.mark.filterwarnings("error::RuntimeWarning")
def test_torus_slice():
    cfg = make(constants.TorusSliceCurrent, "torus", (50, 100))
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    assert statuses(record, "off axis") == [experiment.PASS]
    gaps = [c.value for c in record.checks if c.claim == "off axis" and c.status == experiment.INFO]
    assert gaps == [1.0, 15.0]
    profile = record.plots[0].series[0]
    assert len(profile.x) == len(profile.y) == 139
    assert all(math.isfinite(v) for v in profile.y)
    assert list(record.tables) == ["grid_N50.csv", "grid_N100.csv"]
    for table in record.tables.values():
        assert table.header == experiment.GRID_HEADER
        assert len(table.rows) == 16 * 141
    wall, = [c for c in record.checks if c.claim == "wall mass"]
    assert wall.name == "N=100"
    assert wall.status == experiment.PASS


def test_runs_are_reproducible(tmp_path):
    cfg = make(constants.RealDensity, "sphere", (3,), trials=30, seed=42, output=str(tmp_path))
    experiment.run_experiment(cfg)
    first = [(tmp_path / name).read_bytes() for name in ("result.json", "trials.csv")]
    experiment.run_experiment(cfg)
    second = [(tmp_path / name).read_bytes() for name in ("result.json", "trials.csv")]
    assert first == second


def test_failed_experiment_is_written(tmp_path):
    cfg = make(constants.ComplexGrowth, "torus", (1, 2), output=str(tmp_path))
    record = experiment.run_experiment(cfg)
    assert record.failed
    assert not record.passed
    assert record.message.startswith("EmptyWindow")
    data = json.loads((tmp_path / "result.json").read_text(encoding="utf-8"))
    assert data["failed"] is True
    assert data["experiment"] == "ComplexGrowth"


def test_invalid_configuration_is_not_run(tmp_path):
    cfg = make(constants.RealDensity, "circle", (3,), trials=5, output=str(tmp_path / "out"))
    with pytest.raises(errors.ConfigError):
        experiment.run_experiment(cfg)
    assert not (tmp_path / "out").exists()


def test_record_round_trip():
    cfg = make(constants.RealDensity, "circle", (2, 3), trials=30)
    record = experiment.run_experiment(cfg, write=False)
    d = json.loads(json.dumps(record.as_dict()))
    copy = experiment.ResultRecord.from_dict(d)
    assert copy.as_dict() == record.as_dict()
    assert copy.passed == record.passed
    d["schema_version"] = 99
    with pytest.raises(ValueError):
        experiment.ResultRecord.from_dict(d)


def test_real_density_torus():
    cfg = make(constants.RealDensity, "torus", (50,), trials=100, seed=13)
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    row, = record.rows
    assert row["d"] == 20
    assert statuses(record, "Kac-Rice") == [experiment.PASS]
    assert abs(row["ratio"] - 1) <= cfg.thresholds.torus_density
    corridor = [c for c in record.checks if c.claim == "corridor"]
    assert [c.status for c in corridor] == [experiment.INFO] * 2
    # the expected measure per λ on the unit torus is 1/(2√2)
    assert 0.1 <= corridor[0].value < 1 / (2 * math.sqrt(2)) < corridor[1].value <= 1.0


def test_corridor():
    cfg = make(constants.RealDensity, "sphere", (3,), trials=30, seed=42)
    record = experiment.run_experiment(cfg, write=False)
    assert statuses(record, "corridor") == [experiment.PASS] * 2
    strict = cfg._replace(thresholds=config.Thresholds(corridor_low=10.0))
    record = experiment.run_experiment(strict, write=False)
    assert statuses(record, "corridor") == [experiment.FAIL, experiment.PASS]
    assert not record.passed
    record = experiment.run_experiment(make(constants.RealDensity, "circle", (3,), trials=30),
                                       write=False)
    values = [c.value for c in record.checks if c.claim == "corridor"]
    assert values == [2.0, 2.0]


def test_complex_growth_skips_empty_torus_bands():
    cfg = make(constants.ComplexGrowth, "torus", range(40, 201, 20), sqrt_rho=(0.2,))
    record = experiment.run_experiment(cfg, write=False)
    assert not record.failed
    assert [s["N"] for s in record.skipped] == [60.0]
    assert [row["N"] for row in record.rows] == [40.0, 80.0, 100.0, 120.0, 140.0, 160.0, 180.0, 200.0]
    assert statuses(record, "comparison") == [experiment.PASS]
    slope, = [c for c in record.checks if c.name == "slope at √ρ=0.2"]
    assert abs(slope.value) <= 0.01
    assert statuses(record, "growth") == [experiment.PASS, experiment.PASS]


def test_circle_current_axis_label():
    cfg = make(constants.CircleCurrent, "circle", (8, 16), window="cutoff", trials=20, seed=9)
    record = experiment.run_experiment(cfg, write=False)
    axis = [c for c in record.checks if c.claim == "near axis" and c.status == experiment.INFO]
    assert axis[0].bound == "checked from N=20 on"
    assert experiment.AXIS_LABEL == 20


def test_indefinite_covariance_fails_the_run(monkeypatch):
    def indefinite(*args, **kwargs):
        return kacrice.lambda_matrix(spectral.KernelJet(1.0, np.array([2.0]), np.eye(1)))
    monkeypatch.setattr(kacrice, "expected_measure", indefinite)
    record = experiment.run_experiment(make(constants.RealDensity, "circle", (3,), trials=30),
                                       write=False)
    assert record.failed
    assert record.message.startswith("IndefiniteCovariance")
