"""Tests for eigenbases and projector kernels."""

import math

import numpy as np
import pytest

from randomwaves import constants
from randomwaves import errors
from randomwaves import manifold
from randomwaves import spectral


circle = manifold.circle()
torus = manifold.torus()
sphere = manifold.sphere()


def test_circle_basis():
    basis = spectral.enumerate_basis(circle, spectral.band(3))
    assert basis.d == 2
    assert basis.labels == [(3, "cos"), (3, "sin")]
    basis = spectral.enumerate_basis(circle, spectral.cutoff(4))
    assert basis.d == 9
    assert basis.nominal == 4
    assert basis.labels[0] == (0, "const")


def test_sphere_basis():
    basis = spectral.enumerate_basis(sphere, spectral.band(5))
    assert basis.d == 11
    np.testing.assert_allclose(basis.frequencies, math.sqrt(30))
    assert basis.edges() == (5.0, 6.0)
    basis = spectral.enumerate_basis(sphere, spectral.cutoff(3))
    assert basis.d == 16
    assert list(basis.degrees()) == [(0, 0), (1, 1), (2, 4), (3, 9)]


def test_off_center_band_is_empty():
    with pytest.raises(errors.EmptyWindow):
        spectral.enumerate_basis(sphere, spectral.band(2.5))
    with pytest.raises(errors.EmptyWindow):
        spectral.enumerate_basis(circle, spectral.band(7.5))


def test_torus_band():
    with pytest.raises(errors.EmptyWindow):
        spectral.enumerate_basis(torus, spectral.band(3))
    with pytest.raises(errors.EmptyWindow):
        spectral.enumerate_basis(torus, spectral.band(5))
    basis = spectral.enumerate_basis(torus, spectral.band(6))
    assert basis.d == 4
    np.testing.assert_allclose(basis.frequencies, 2 * math.pi)
    assert sorted(set((k1, k2) for k1, k2, tag in basis.labels)) == [(0, 1), (1, 0)]
    assert basis.nominal == 6


def test_torus_cutoff_contains_constant():
    basis = spectral.enumerate_basis(torus, spectral.cutoff(7))
    # 1, and (1, 0), (0, 1) twice each
    assert basis.d == 5
    assert basis.labels[0] == (0, 0, "const")


def test_modes():
    basis = spectral.enumerate_basis(torus, spectral.modes((1, 0)))
    assert basis.d == 2
    assert basis.window.lower == basis.window.upper == pytest.approx(2 * math.pi)
    assert spectral.modes((-1, 0)) == spectral.modes((1, 0))
    basis = spectral.enumerate_basis(sphere, spectral.modes(1))
    assert basis.d == 3
    with pytest.raises(ValueError):
        spectral.modes()


def test_seed_keys_differ():
    keys = {
        spectral.band(3).seed_key(),
        spectral.band(4).seed_key(),
        spectral.cutoff(3).seed_key(),
        spectral.modes((1, 0)).seed_key(),
        spectral.modes((0, 1)).seed_key(),
    }
    assert len(keys) == 5
    assert all(v >= 0 for key in keys for v in key)


@pytest.mark.parametrize("n", [1, 5, 10, 30, 100])
def test_sphere_closed_form_jet(n):
    window = spectral.band(n)
    x = np.array((0.8, 2.1))
    direct = spectral.projector_jet(sphere, window, x)
    closed = spectral.projector_jet(sphere, window, x, constants.ClosedForm)
    assert direct.A == pytest.approx(closed.A, rel=1e-10)
    np.testing.assert_allclose(direct.B, closed.B, atol=1e-10 * closed.A)
    np.testing.assert_allclose(direct.C, closed.C, rtol=1e-10, atol=1e-10 * closed.C[0, 0])


def test_torus_closed_form_jet():
    window = spectral.cutoff(20)
    x = np.array((0.13, 0.71))
    direct = spectral.projector_jet(torus, window, x)
    closed = spectral.projector_jet(torus, window, x, constants.ClosedForm)
    assert direct.A == pytest.approx(closed.A, rel=1e-12)
    np.testing.assert_allclose(direct.B, 0, atol=1e-9)
    np.testing.assert_allclose(direct.C, closed.C, rtol=1e-12, atol=1e-9)


def test_closed_form_mismatch():
    with pytest.raises(errors.MethodMismatch):
        spectral.projector_jet(circle, spectral.band(3), 0.5, constants.ClosedForm)
    with pytest.raises(errors.MethodMismatch):
        spectral.projector_jet(sphere, spectral.cutoff(3), np.array((1.0, 1.0)), constants.ClosedForm)


@pytest.mark.parametrize("model, window, x, y", [
    (circle, spectral.cutoff(6), 0.4, 2.9),
    (torus, spectral.cutoff(15), (0.1, 0.3), (0.7, 0.2)),
    (sphere, spectral.cutoff(6), (0.4, 1.0), (2.0, 4.5)),
])
def test_offdiag_closed_form(model, window, x, y):
    direct = spectral.projector_offdiag(model, window, x, y)
    closed = spectral.projector_offdiag_closed(model, window, x, y)
    assert direct == pytest.approx(closed, abs=1e-12)


@pytest.mark.parametrize("model, window, x", [
    (circle, spectral.cutoff(5), 1.3),
    (torus, spectral.cutoff(14), (0.23, 0.61)),
    (sphere, spectral.cutoff(5), (1.1, 0.4)),
])
def test_gradients(model, window, x):
    basis = spectral.enumerate_basis(model, window)
    x = np.asarray(x, dtype=np.float64)
    values, grads = spectral.eval_basis(basis, x)
    h = 1e-6
    for axis in range(model.dim):
        e = np.zeros(model.dim)
        e[axis] = h
        if model.dim == 1:
            plus = spectral.eval_basis(basis, x + h, gradient=False)
            minus = spectral.eval_basis(basis, x - h, gradient=False)
        else:
            plus = spectral.eval_basis(basis, x + e, gradient=False)
            minus = spectral.eval_basis(basis, x - e, gradient=False)
        fd = (plus - minus) / (2 * h)
        if model.kind == constants.Sphere2 and axis == 1:
            fd /= math.sin(x[0])
        np.testing.assert_allclose(grads[:, axis], fd, atol=1e-6 * max(1, basis.max_frequency))


def test_complex_evaluation_restricts_to_real():
    for model, window, x in [
            (circle, spectral.cutoff(4), 0.9),
            (torus, spectral.cutoff(10), np.array((0.3, 0.8))),
            (sphere, spectral.cutoff(4), np.array((0.9, 2.0)))]:
        basis = spectral.enumerate_basis(model, window)
        y = 0.0 if model.dim == 1 or model.kind == constants.Sphere2 else np.zeros(2)
        np.testing.assert_allclose(spectral.eval_basis_complex(basis, x, y),
                                   spectral.eval_basis(basis, x, gradient=False), atol=1e-12)


def test_describe():
    assert spectral.band(4).describe() == "Band(4)"
    assert spectral.cutoff(2.5).describe() == "Cutoff(2.5)"
    assert spectral.cutoff(2.5).label == 2.5
    assert spectral.band(4).label == 4


@pytest.mark.parametrize("model, window, x, y", [
    (sphere, spectral.band(12), (0.7, 0.3), (2.2, 4.0)),
    (sphere, spectral.cutoff(6), (1.4, 5.1), (0.3, 2.6)),
    (torus, spectral.band(50), (0.1, 0.2), (0.63, 0.41)),
    (torus, spectral.cutoff(30), (0.87, 0.05), (0.36, 0.52)),
])
def test_jets_are_invariant(model, window, x, y):
    a = spectral.projector_jet(model, window, np.array(x))
    b = spectral.projector_jet(model, window, np.array(y))
    scale = a.C.max()
    assert a.A == pytest.approx(b.A, rel=1e-10)
    np.testing.assert_allclose(a.B, 0, atol=1e-10 * scale)
    np.testing.assert_allclose(b.B, 0, atol=1e-10 * scale)
    np.testing.assert_allclose(a.C, b.C, rtol=1e-10, atol=1e-10 * scale)
