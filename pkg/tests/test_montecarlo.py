"""Tests for the Monte Carlo drivers."""

import math

import numpy as np
import pytest

from randomwaves import ensemble
from randomwaves import errors
from randomwaves import functions
from randomwaves import manifold
from randomwaves import montecarlo
from randomwaves import spectral


def test_needs_thirty_trials():
    model = manifold.circle()
    spec = ensemble.EnsembleSpec(model, spectral.band(2))
    mesh = manifold.build_mesh(model, 8)
    with pytest.raises(ValueError):
        montecarlo.mc_statistics(spec, [functions.one], 29, mesh)


def test_circle_counts_are_exact():
    model = manifold.circle()
    spec = ensemble.EnsembleSpec(model, spectral.band(3), master_seed=4)
    mesh = montecarlo.mesh_for(model, spec.basis())
    assert mesh.resolution == 12
    series = montecarlo.mc_expected_statistic(spec, functions.one, 30, mesh)
    assert series.trials == 30
    assert series.mean == 6.0
    assert series.variance == 0.0
    assert series.seeds == [spec.trial_seed(t) for t in range(30)]


def test_statistics_share_samples():
    model = manifold.sphere()
    spec = ensemble.EnsembleSpec(model, spectral.band(3), master_seed=4)
    mesh = montecarlo.mesh_for(model, spec.basis())
    psis = [functions.one, functions.named(model, "y10")]
    one, y10 = montecarlo.mc_statistics(spec, psis, 30, mesh, names=["one", "y10"])
    np.testing.assert_array_equal(one.values, one.measures)
    np.testing.assert_array_equal(one.measures, y10.measures)
    assert y10.name == "y10"


def test_sphere_mean_near_kac_rice():
    model = manifold.sphere()
    spec = ensemble.EnsembleSpec(model, spectral.band(4), master_seed=12)
    mesh = manifold.build_mesh(model, 16)
    series = montecarlo.mc_expected_statistic(spec, functions.one, 40, mesh)
    assert series.mean == pytest.approx(math.sqrt(2) * math.pi * math.sqrt(20), rel=0.1)
    assert series.stderr > 0


def test_mesh_for():
    basis = spectral.enumerate_basis(manifold.sphere(), spectral.band(1))
    assert montecarlo.mesh_for(manifold.sphere(), basis).resolution == 8
    assert montecarlo.mesh_for(manifold.sphere(), basis, resolution=10).resolution == 10
    basis = spectral.enumerate_basis(manifold.sphere(), spectral.band(5))
    assert montecarlo.mesh_for(manifold.sphere(), basis, factor=6).resolution == 30


def test_strong_law_circle():
    model = manifold.circle()
    template = ensemble.EnsembleSpec(model, spectral.band(1), master_seed=2)
    psis = [functions.one, functions.named(model, "cos1")]
    one, cos1 = montecarlo.strong_law_run(template, range(1, 11), psis)
    assert one.labels == list(range(1, 11))
    assert one.skipped == []
    # 2N zeros for every window, divided by λ = N
    np.testing.assert_allclose(one.values, 2.0)
    np.testing.assert_allclose(one.averages, 2.0)
    assert one.tail_ratio == pytest.approx(0.0, abs=1e-12)
    assert abs(cos1.averages[-1]) < 1e-9
    assert len(set(one.seeds)) == 10


def test_strong_law_skips_empty_torus_windows():
    model = manifold.torus()
    template = ensemble.EnsembleSpec(model, spectral.band(6), master_seed=2)
    result, = montecarlo.strong_law_run(template, range(1, 9), [functions.one])
    assert result.labels == [6, 8]
    assert result.skipped == [1, 2, 3, 4, 5, 7]
    assert len(result.values) == 2


def test_strong_law_all_empty():
    model = manifold.torus()
    template = ensemble.EnsembleSpec(model, spectral.band(6))
    with pytest.raises(errors.EmptyWindow):
        montecarlo.strong_law_run(template, [1, 2, 3], [functions.one])


def test_variance_scan_circle():
    model = manifold.circle()
    template = ensemble.EnsembleSpec(model, spectral.band(1), master_seed=2)
    scan, raw = montecarlo.variance_scan(template, [2, 4], functions.one, 30)
    assert scan.variances == [0.0, 0.0]
    assert scan.means == [2.0, 2.0]
    assert math.isnan(scan.exponent)
    assert raw[1].mean == 8.0


def test_workers_do_not_change_results():
    pytest.importorskip("PyQt6.QtCore")
    model = manifold.sphere()
    spec = ensemble.EnsembleSpec(model, spectral.band(3), master_seed=21)
    mesh = montecarlo.mesh_for(model, spec.basis())
    a = montecarlo.mc_expected_statistic(spec, functions.one, 30, mesh, workers=1)
    b = montecarlo.mc_expected_statistic(spec, functions.one, 30, mesh, workers=4)
    np.testing.assert_array_equal(a.values, b.values)
