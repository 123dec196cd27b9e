"""Tests for the manifold module."""

import math

import numpy as np
import pytest

from randomwaves import constants
from randomwaves import errors
from randomwaves import manifold


def test_models():
    assert manifold.circle().dim == 1
    assert manifold.torus().dim == 2
    assert manifold.sphere().dim == 2
    assert manifold.circle().volume == pytest.approx(2 * math.pi)
    assert manifold.torus().volume == 1.0
    assert manifold.sphere().volume == pytest.approx(4 * math.pi)
    assert manifold.by_name("sphere", 0.3) == manifold.sphere(0.3)


def test_model_arguments():
    with pytest.raises(ValueError):
        manifold.by_name("cylinder")
    with pytest.raises(ValueError):
        manifold.ManifoldModel(99)
    with pytest.raises(ValueError):
        manifold.torus(0.0)


@pytest.mark.parametrize("model, area", [
    (manifold.circle(), 2 * math.pi),
    (manifold.torus(), 1.0),
    (manifold.sphere(), 4 * math.pi),
])
def test_mesh_total_area(model, area):
    mesh = manifold.build_mesh(model, 12)
    assert mesh.total_area() == pytest.approx(area, rel=1e-12)
    assert len(mesh.areas) == len(mesh.cells) == len(mesh.centers)


def test_mesh_minimum_resolution():
    with pytest.raises(ValueError):
        manifold.build_mesh(manifold.torus(), 7)


def test_mesh_shapes():
    mesh = manifold.build_mesh(manifold.sphere(), 10)
    assert mesh.shape == (11, 20)
    assert len(mesh.vertices) == 11 * 20
    values = np.arange(len(mesh.vertices), dtype=float)
    grid = mesh.grid(values)
    # the longitude axis is closed with a copy of its first column
    assert grid.shape == (11, 21)
    np.testing.assert_array_equal(grid[:, -1], grid[:, 0])

    mesh = manifold.build_mesh(manifold.torus(), 8)
    grid = mesh.grid(np.arange(64, dtype=float))
    assert grid.shape == (9, 9)
    np.testing.assert_array_equal(grid[-1, :-1], grid[0, :-1])


def test_sqrt_rho_flat():
    torus = manifold.torus()
    zeta = manifold.TubePoint((0.2, 0.4), (0.3, 0.4))
    assert manifold.sqrt_rho(torus, zeta) == pytest.approx(0.5)
    circle = manifold.circle()
    assert manifold.sqrt_rho(circle, manifold.TubePoint(1.0, -0.25)) == pytest.approx(0.25)


def test_sqrt_rho_sphere():
    sphere = manifold.sphere()
    zeta = manifold.sphere_tube_point(math.cosh(0.4), 1.1, 2.0)
    assert zeta.y == pytest.approx(0.2)
    assert manifold.sqrt_rho(sphere, zeta) == pytest.approx(0.2, abs=1e-12)
    # the inner product does not depend on the base point of the meridian
    other = manifold.sphere_tube_point(math.cosh(0.4), 0.4, 5.0)
    assert manifold.sqrt_rho(sphere, other) == pytest.approx(0.2, abs=1e-12)
    with pytest.raises(ValueError):
        manifold.sphere_tube_point(0.5)


def test_outside_tube():
    model = manifold.torus(0.2)
    zeta = manifold.TubePoint((0.0, 0.0), (0.3, 0.0))
    with pytest.raises(errors.OutsideTube):
        manifold.sqrt_rho(model, zeta)
    assert manifold.sqrt_rho(model, zeta, check=False) == pytest.approx(0.3)


def test_real_point():
    assert manifold.real_point(manifold.circle(), 0.5) == manifold.TubePoint(0.5, 0.0)
    point = manifold.real_point(manifold.torus(), (0.1, 0.2))
    assert point.y == (0.0, 0.0)
    assert manifold.sqrt_rho(manifold.sphere(), manifold.real_point(manifold.sphere(), (1.0, 2.0))) == 0.0


def test_max_cell_diameter():
    mesh = manifold.build_mesh(manifold.torus(), 10)
    assert manifold.max_cell_diameter(mesh) == pytest.approx(math.sqrt(2) / 10)
    mesh = manifold.build_mesh(manifold.circle(), 16)
    assert manifold.max_cell_diameter(mesh) == pytest.approx(2 * math.pi / 16)
    assert mesh.model.kind == constants.Circle
