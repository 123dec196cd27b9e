"""Tests for the expected log modulus and the G factor."""

import math

import numpy as np
import pytest

from randomwaves import constants
from randomwaves import ensemble
from randomwaves import logmodulus
from randomwaves import manifold
from randomwaves import spectral


def frame(d, mu1, seed=0):
    """Return orthogonal U, V in ℝᵈ with |U|² = mu1 and |V|² = 1 − mu1."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((d, 2)))
    return math.sqrt(mu1) * q[:, 0], math.sqrt(1 - mu1) * q[:, 1]


def test_real_frame():
    U, V = frame(5, 1.0)
    expected = -np.euler_gamma - math.log(2)
    assert logmodulus.g_factor_quadrature(U, V) == pytest.approx(expected, abs=1e-8)
    assert logmodulus.g_factor_corrected(U, V) == pytest.approx(expected, abs=1e-12)


def test_balanced_frame():
    U, V = frame(5, 0.5)
    assert logmodulus.g_factor_quadrature(U, V) == pytest.approx(-np.euler_gamma, abs=1e-8)
    assert logmodulus.g_factor_corrected(U, V) == pytest.approx(-np.euler_gamma, abs=1e-12)


@pytest.mark.parametrize("mu1", [0.55, 0.7, 0.9, 0.99])
def test_corrected_closed_form_is_exact(mu1):
    U, V = frame(7, mu1, seed=3)
    assert logmodulus.g_factor_corrected(U, V) == pytest.approx(
        logmodulus.g_factor_quadrature(U, V), abs=1e-8)


def test_gamma_prime_closed_form():
    U, V = frame(4, 1.0)
    assert logmodulus.g_factor_closed(U, V) == pytest.approx(-3.4802, abs=1e-4)
    # it does not agree with the quadrature value
    assert abs(logmodulus.g_factor_closed(U, V) - logmodulus.g_factor_quadrature(U, V)) > 1


def test_rotation_invariance():
    U, V = frame(6, 0.8, seed=5)
    g = logmodulus.g_factor_quadrature(U, V)
    a = 0.7
    # a phase e^(ia) of the frame
    U2 = math.cos(a) * U - math.sin(a) * V
    V2 = math.sin(a) * U + math.cos(a) * V
    assert logmodulus.g_factor_quadrature(U2, V2) == pytest.approx(g, abs=1e-8)
    # an orthogonal map of the coefficient space
    q, r = np.linalg.qr(np.random.default_rng(1).standard_normal((6, 6)))
    assert logmodulus.g_factor_quadrature(q @ U, q @ V) == pytest.approx(g, abs=1e-8)


def test_unit_frame():
    values = np.array([3 + 4j, 1e-3j, -2.0])
    U, V = logmodulus.unit_frame(values * 1e200)
    assert np.dot(U, U) + np.dot(V, V) == pytest.approx(1.0)
    mu1, mu2 = logmodulus.frame_eigenvalues(U, V)
    assert mu1 >= mu2 >= 0
    assert mu1 + mu2 == pytest.approx(1.0)
    with pytest.raises(ValueError):
        logmodulus.unit_frame(np.zeros(3))


def test_max_rotated_norm():
    U, V = frame(3, 0.5)
    assert logmodulus.max_rotated_norm(U, V) == pytest.approx(2.0)
    U, V = frame(3, 1.0)
    assert logmodulus.max_rotated_norm(U, V) == pytest.approx(1.0)


@pytest.mark.parametrize("normalization", [constants.PaperDensity, constants.UnitSphere])
def test_monte_carlo_decomposition(normalization):
    model = manifold.circle()
    spec = ensemble.EnsembleSpec(model, spectral.cutoff(3), normalization, master_seed=17)
    zeta = manifold.TubePoint(0.4, 0.2)
    stats = logmodulus.expected_log_modulus(spec, zeta, 4000)
    assert stats.trials == 4000
    assert abs(stats.deviation) <= 4
    assert abs(stats.g_factor) <= 3


def test_monte_carlo_at_real_point():
    model = manifold.sphere()
    spec = ensemble.EnsembleSpec(model, spectral.band(6), master_seed=5)
    zeta = manifold.real_point(model, (1.0, 2.0))
    stats = logmodulus.expected_log_modulus(spec, zeta, 4000)
    assert stats.g_factor == pytest.approx(-np.euler_gamma - math.log(2), abs=1e-6)
    assert abs(stats.deviation) <= 4


def test_chunks_are_deterministic():
    pytest.importorskip("PyQt6.QtCore")
    spec = ensemble.EnsembleSpec(manifold.circle(), spectral.band(4), master_seed=2)
    zeta = manifold.TubePoint(1.0, 0.1)
    a = logmodulus.expected_log_modulus(spec, zeta, 2500, workers=1)
    b = logmodulus.expected_log_modulus(spec, zeta, 2500, workers=3)
    assert a.mc_mean_log_sq == b.mc_mean_log_sq


def test_needs_many_trials():
    spec = ensemble.EnsembleSpec(manifold.circle(), spectral.band(4))
    with pytest.raises(ValueError):
        logmodulus.expected_log_modulus(spec, manifold.TubePoint(0.0, 0.1), 999)
