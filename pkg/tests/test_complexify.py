"""Tests for complexified waves and projector kernels."""

import math

import numpy as np
import pytest

from randomwaves import complexify
from randomwaves import ensemble
from randomwaves import errors
from randomwaves import manifold
from randomwaves import spectral


circle = manifold.circle()
torus = manifold.torus()
sphere = manifold.sphere()


def test_circle_cosine_continuation():
    n = 7
    basis = spectral.enumerate_basis(circle, spectral.band(n))
    sample = ensemble.WaveSample(basis, [math.sqrt(math.pi), 0.0])
    value = complexify.complexify_wave(sample, manifold.TubePoint(0.0, 0.3))
    assert value.log_modulus == pytest.approx(math.log(math.cosh(0.3 * n)), rel=1e-12)
    assert value.phase == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n, y", [(1, 0.1), (5, 0.2), (40, 0.45)])
def test_circle_projector(n, y):
    value = complexify.complexified_projector(circle, spectral.band(n), manifold.TubePoint(1.3, y))
    assert value.log_pi == pytest.approx(math.log(math.cosh(2 * n * y) / math.pi), rel=1e-12)
    assert value.sqrt_rho == pytest.approx(y)
    assert value.log_pi_closed is None


def test_sphere_closed_form():
    zeta = manifold.sphere_tube_point(math.cosh(0.2), 1.0, 0.4)
    value = complexify.complexified_projector(sphere, spectral.band(30), zeta)
    assert value.sqrt_rho == pytest.approx(0.1)
    assert value.log_pi == pytest.approx(value.log_pi_closed, abs=1e-9)


def test_torus_closed_form_terms():
    basis = spectral.enumerate_basis(torus, spectral.cutoff(15))
    zeta = manifold.TubePoint((0.1, 0.2), (0.05, -0.1))
    direct = 2 * np.log(np.abs(spectral.eval_basis_complex(basis, zeta.x, zeta.y)))
    np.testing.assert_allclose(complexify.log_abs_squared(basis, zeta), direct, atol=1e-10)


def test_torus_projector_is_translation_invariant():
    window = spectral.cutoff(30)
    a = complexify.complexified_projector(torus, window, manifold.TubePoint((0.1, 0.2), (0.1, 0.05)))
    b = complexify.complexified_projector(torus, window, manifold.TubePoint((0.7, 0.9), (0.1, 0.05)))
    assert a.log_pi == pytest.approx(b.log_pi, rel=1e-12)


@pytest.mark.parametrize("model, zeta", [
    (circle, manifold.TubePoint(0.7, 0.0)),
    (torus, manifold.TubePoint((0.3, 0.6), (0.0, 0.0))),
    (sphere, manifold.TubePoint((0.7, 1.1), 0.0)),
])
def test_restriction_to_real_points(model, zeta):
    spec = ensemble.EnsembleSpec(model, spectral.cutoff(8), master_seed=3)
    sample = ensemble.sample_wave(spec, 0)
    value = complexify.complexify_wave(sample, zeta)
    real, gradient = ensemble.eval_wave(sample, np.asarray(zeta.x, dtype=np.float64))
    continued = math.exp(value.log_modulus) * complex(math.cos(value.phase), math.sin(value.phase))
    assert abs(continued - real) <= 1e-12 * max(1.0, abs(real))


def test_sphere_growth_slope():
    zeta = manifold.sphere_tube_point(math.cosh(0.3), math.pi / 2, 0.3)
    fit = complexify.log_growth_rate(sphere, range(20, 201, 10), zeta)
    assert fit.sqrt_rho == pytest.approx(0.15)
    assert abs(fit.slope - 0.3) <= 0.01
    assert fit.sandwich
    assert len(fit.rates) == 19


def test_torus_growth_slope():
    zeta = manifold.TubePoint((0.1, 0.2), (0.1 * math.cos(0.3), 0.1 * math.sin(0.3)))
    fit = complexify.log_growth_rate(torus, range(50, 401, 25), zeta, spectral.cutoff)
    assert abs(fit.slope - 0.2) <= 0.03
    assert fit.sandwich


def test_sandwich():
    basis = spectral.enumerate_basis(sphere, spectral.band(12))
    zeta = manifold.sphere_tube_point(math.cosh(0.6), 0.8, 0.1)
    value = complexify.complexified_projector(sphere, basis.window, zeta, basis)
    lower, upper = complexify.comparison_bounds(value, basis)
    assert lower <= value.log_pi <= upper
    assert complexify.sandwich_holds(value, basis)


def test_overflow_guard():
    with pytest.raises(errors.OverflowGuard):
        complexify.complexified_projector(circle, spectral.band(1000), manifold.TubePoint(0.0, 0.5))
    basis = spectral.enumerate_basis(circle, spectral.cutoff(700))
    with pytest.raises(errors.OverflowGuard):
        complexify.check_growth(basis, 0.5)


def test_outside_tube():
    model = manifold.circle(0.2)
    with pytest.raises(errors.OutsideTube):
        complexify.complexified_projector(model, spectral.band(3), manifold.TubePoint(0.0, 0.3))


def test_prefactor_exponent():
    assert complexify.prefactor_exponent(manifold.circle()) == 0
    assert complexify.prefactor_exponent(torus) == 0.5
    assert complexify.prefactor_exponent(sphere) == 0.5


def test_growth_skips_empty_windows():
    zeta = manifold.TubePoint((0.1, 0.2), (0.2 * math.cos(0.3), 0.2 * math.sin(0.3)))
    fit = complexify.log_growth_rate(torus, range(40, 201, 20), zeta)
    assert fit.skipped == [60.0]
    assert len(fit.labels) == len(fit.rates) == 8
    assert fit.log_coefficient == 0.5
    assert fit.sandwich
    assert abs(fit.slope - 0.4) <= 0.01
    with pytest.raises(errors.EmptyWindow):
        complexify.log_growth_rate(torus, [1, 2, 60], zeta)
