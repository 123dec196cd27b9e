"""Tests for Gaussian wave ensembles."""

import math

import numpy as np
import pytest

from randomwaves import constants
from randomwaves import ensemble
from randomwaves import manifold
from randomwaves import spectral


def spec(normalization=constants.PaperDensity, seed=7):
    return ensemble.EnsembleSpec(manifold.sphere(), spectral.band(4), normalization, seed)


def test_samples_are_deterministic():
    a = ensemble.sample_wave(spec(), 3)
    b = ensemble.sample_wave(spec(), 3)
    np.testing.assert_array_equal(a.z, b.z)
    assert a.scale == b.scale
    assert a.trial == 3


def test_streams_differ():
    s = spec()
    assert not np.array_equal(ensemble.sample_wave(s, 0).z, ensemble.sample_wave(s, 1).z)
    assert not np.array_equal(ensemble.sample_wave(s, 0).z, ensemble.sample_wave(spec(seed=8), 0).z)
    other = s.replace(window=spectral.cutoff(4))
    assert s.trial_seed(0) != other.trial_seed(0)


def test_sample_coefficients_rows():
    s = spec()
    rows = ensemble.sample_coefficients(s, 5, start=10)
    for t in range(5):
        np.testing.assert_array_equal(rows[t], ensemble.sample_wave(s, 10 + t).coefficients)


def test_sigma2():
    assert spec().sigma2() == pytest.approx(1 / 18)
    assert spec(constants.UnitEnergy).sigma2() == pytest.approx(1 / 9)


def test_unit_sphere_normalization():
    s = spec(constants.UnitSphere)
    for t in range(5):
        assert np.linalg.norm(ensemble.sample_wave(s, t).coefficients) == pytest.approx(1.0)


def test_log_variance():
    assert spec().log_variance() == pytest.approx(-math.log(18))
    assert spec(constants.UnitEnergy).log_variance() == pytest.approx(-math.log(9))
    # E log|z|² = log 2 + ψ(d/2); for d = 2 this is log 2 − γ
    s = ensemble.EnsembleSpec(manifold.circle(), spectral.band(3), constants.UnitSphere)
    assert s.log_variance() == pytest.approx(-(math.log(2) - np.euler_gamma))


def test_scaled():
    sample = ensemble.sample_wave(spec(), 0)
    scaled = sample.scaled(2.5)
    np.testing.assert_array_equal(scaled.z, sample.z)
    np.testing.assert_allclose(scaled.coefficients, 2.5 * sample.coefficients)
    with pytest.raises(ValueError):
        sample.scaled(0)


def test_eval_wave():
    sample = ensemble.sample_wave(spec(), 2)
    x = np.array((0.7, 1.9))
    value, gradient = ensemble.eval_wave(sample, x)
    values, grads = spectral.eval_basis(sample.basis, x)
    assert value == pytest.approx(values @ sample.coefficients)
    assert gradient.shape == (2,)


def test_empirical_covariance():
    s = ensemble.EnsembleSpec(manifold.circle(), spectral.band(2), master_seed=11)
    estimate = ensemble.empirical_covariance(s, 0.3, 0.3, 4000)
    # σ² = 1/4 and Π(x, x) = 1/π
    assert abs(estimate.mean - 1 / (4 * math.pi)) <= 4 * estimate.stderr
    off = ensemble.empirical_covariance(s, 0.3, 1.1, 4000)
    expected = math.cos(2 * 0.8) / (4 * math.pi)
    assert abs(off.mean - expected) <= 4 * off.stderr


def test_invalid_arguments():
    with pytest.raises(ValueError):
        ensemble.EnsembleSpec(manifold.circle(), spectral.band(2), normalization=99)
    with pytest.raises(ValueError):
        ensemble.EnsembleSpec(manifold.circle(), spectral.band(2), master_seed=-1)
    with pytest.raises(ValueError):
        ensemble.empirical_covariance(spec(), (1.0, 1.0), (1.0, 1.0), 10)
    basis = spectral.enumerate_basis(manifold.circle(), spectral.band(2))
    with pytest.raises(ValueError):
        ensemble.WaveSample(basis, [1.0, 2.0, 3.0])


@pytest.mark.parametrize("model, window", [
    (manifold.circle(), spectral.cutoff(9)),
    (manifold.torus(), spectral.cutoff(20)),
    (manifold.sphere(), spectral.band(10)),
])
def test_eval_wave_gradient_matches_differences(model, window):
    s = ensemble.EnsembleSpec(model, window, master_seed=11)
    rng = np.random.default_rng(4)
    h = 1e-5
    for t in range(4):
        sample = ensemble.sample_wave(s, t)
        f = lambda p: float(ensemble.eval_wave(sample, p)[0])
        scale = sample.basis.max_frequency * np.linalg.norm(sample.coefficients)
        for _ in range(25):
            if model.kind == constants.Circle:
                x = rng.uniform(0, 2 * math.pi)
                differences = [(f(x + h) - f(x - h)) / (2 * h)]
            elif model.kind == constants.Torus2:
                x = rng.uniform(0, 1, 2)
                differences = [(f(x + h * e) - f(x - h * e)) / (2 * h) for e in np.eye(2)]
            else:
                x = np.array((rng.uniform(0.2, math.pi - 0.2), rng.uniform(0, 2 * math.pi)))
                dt, dp = [(f(x + h * e) - f(x - h * e)) / (2 * h) for e in np.eye(2)]
                # the second frame vector is the unit longitude direction
                differences = [dt, dp / math.sin(x[0])]
            gradient = ensemble.eval_wave(sample, x)[1]
            tolerance = 1e-6 * max(np.linalg.norm(gradient), scale)
            np.testing.assert_allclose(gradient, differences, rtol=0, atol=tolerance)


@pytest.mark.parametrize("normalization, expected", [
    (constants.PaperDensity, 0.5),
    (constants.UnitEnergy, 1.0),
    (constants.UnitSphere, 1.0),
])
def test_mean_energy(normalization, expected):
    s = ensemble.EnsembleSpec(manifold.sphere(), spectral.band(20), normalization, 21)
    assert s.basis().d == 41
    c = ensemble.sample_coefficients(s, 10000)
    assert np.mean(np.sum(c ** 2, axis=1)) == pytest.approx(expected, rel=0.01)


@pytest.mark.parametrize("model, window", [
    (manifold.torus(), spectral.cutoff(15)),
    (manifold.sphere(), spectral.band(4)),
])
def test_empirical_covariance_many_pairs(model, window):
    s = ensemble.EnsembleSpec(model, window, master_seed=17)
    sigma2 = s.sigma2()
    rng = np.random.default_rng(8)
    deviations = []
    for _ in range(20):
        if model.kind == constants.Torus2:
            x, y = rng.uniform(0, 1, (2, 2))
        else:
            x, y = np.stack((rng.uniform(0.1, math.pi - 0.1, 2), rng.uniform(0, 2 * math.pi, 2)), axis=-1)
        estimate = ensemble.empirical_covariance(s, x, y, 4000)
        expected = sigma2 * spectral.projector_offdiag(model, window, x, y)
        deviations.append(abs(estimate.mean - expected) / estimate.stderr)
    deviations = np.array(deviations)
    assert np.count_nonzero(deviations > 3) <= 1
    assert np.all(deviations <= 4)
