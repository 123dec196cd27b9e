# -*- coding: utf-8 -*-
#
# This file is part of the randomwaves package.
#
# Copyright (c) 2026 - 2026 by the randomwaves developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
# See http://www.gnu.org/licenses/ for more information.

"""
The model manifolds: circle, flat torus and round sphere.

Every model has an explicit chart:

* Circle: the angle θ ∈ [0, 2π).
* Torus2: x = (x₁, x₂) ∈ [0, 1)², the metric coefficient is 1.
* Sphere2: (θ, φ) with polar angle θ ∈ [0, π] and longitude φ ∈ [0, 2π).

Complex points in the tube are :class:`TubePoint` instances. On the circle and
torus the imaginary part y is a displacement of the chart coordinates. On the
sphere the point is continued along the meridian through the base point:
θ becomes θ + i·s, with φ kept real. Then the complexified inner product
⟨ζ, ζ̄⟩ equals cosh(2s), so √ρ(ζ) = |s|.

"""

import collections
import math

import numpy as np

from . import constants
from . import errors


_dims = {
    constants.Circle: 1,
    constants.Torus2: 2,
    constants.Sphere2: 2,
}

_volumes = {
    constants.Circle: 2 * math.pi,
    constants.Torus2: 1.0,
    constants.Sphere2: 4 * math.pi,
}

_names = {
    constants.Circle: "circle",
    constants.Torus2: "torus",
    constants.Sphere2: "sphere",
}

#: the largest tube radius experiments accept
MAX_TUBE_RADIUS = 0.5

#: the smallest mesh resolution
MIN_RESOLUTION = 8


class ManifoldModel(collections.namedtuple("ManifoldModel", "kind tube_radius")):
    """One of the three model manifolds.

    .. py:attribute:: kind

        Circle, Torus2 or Sphere2 (see the constants module).

    .. py:attribute:: tube_radius

        The largest √ρ used for complex points on this model.

    """
    __slots__ = ()

    def __new__(cls, kind, tube_radius=MAX_TUBE_RADIUS):
        if kind not in _dims:
            raise ValueError("unknown manifold kind: {!r}".format(kind))
        if not tube_radius > 0:
            raise ValueError("tube_radius must be positive")
        return super().__new__(cls, kind, float(tube_radius))

    @property
    def dim(self):
        """The dimension m (1 or 2)."""
        return _dims[self.kind]

    @property
    def volume(self):
        """The Riemannian volume."""
        return _volumes[self.kind]

    @property
    def name(self):
        return _names[self.kind]


def circle(tube_radius=MAX_TUBE_RADIUS):
    """Return the circle model."""
    return ManifoldModel(constants.Circle, tube_radius)


def torus(tube_radius=MAX_TUBE_RADIUS):
    """Return the flat torus model."""
    return ManifoldModel(constants.Torus2, tube_radius)


def sphere(tube_radius=MAX_TUBE_RADIUS):
    """Return the round sphere model."""
    return ManifoldModel(constants.Sphere2, tube_radius)


def by_name(name, tube_radius=MAX_TUBE_RADIUS):
    """Return the model with the given name ("circle", "torus", "sphere")."""
    for kind, n in _names.items():
        if n == name:
            return ManifoldModel(kind, tube_radius)
    raise ValueError("unknown manifold: {!r}".format(name))


TubePoint = collections.namedtuple("TubePoint", "x y")
TubePoint.__doc__ = "A point ζ in the complexified manifold."
TubePoint.x.__doc__ = "The real part: chart coordinates of the base point."
TubePoint.y.__doc__ = ("The imaginary part: y on the circle, (y₁, y₂) on the "
                       "torus, the meridian parameter s on the sphere.")


def real_point(model, x):
    """Return the TubePoint of the real point x of the model."""
    if model.kind == constants.Torus2:
        return TubePoint(tuple(x), (0.0, 0.0))
    elif model.kind == constants.Sphere2:
        return TubePoint(tuple(x), 0.0)
    return TubePoint(float(x), 0.0)


def sphere_tube_point(inner, theta=math.pi / 2, phi=0.0):
    """Return the sphere TubePoint on the meridian through (theta, phi) with
    ⟨ζ, ζ̄⟩ = inner.

    The inner product must be at least 1.

    """
    if inner < 1:
        raise ValueError("⟨ζ, ζ̄⟩ is at least 1 on the complexified sphere")
    return TubePoint((theta, phi), math.acosh(inner) / 2)


def complex_embedding(theta, phi):
    """Return the point of the complexified sphere as a vector in ℂ³.

    theta may be complex; phi is real.

    """
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def sqrt_rho(model, zeta, check=True):
    """Return the Grauert tube function √ρ at the TubePoint zeta.

    On the circle and torus this is the Euclidean norm of the imaginary part.
    On the sphere it is computed from the complexified inner product
    ⟨ζ, ζ̄⟩ = cosh(2√ρ).

    Raises OutsideTube when the value exceeds the tube radius of the model
    (unless check is False).

    """
    if model.kind == constants.Sphere2:
        theta, phi = zeta.x
        v = complex_embedding(complex(theta, zeta.y), phi)
        inner = float(np.sum(v * np.conj(v)).real)
        value = math.acosh(max(inner, 1.0)) / 2
    else:
        value = float(np.linalg.norm(np.atleast_1d(zeta.y)))
    if check and value > model.tube_radius * (1 + 1e-12):
        raise errors.OutsideTube(
            "√ρ = {:g} exceeds the tube radius {:g}".format(value, model.tube_radius))
    return value


class Mesh:
    """A structured mesh of the chart domain of a model.

    The vertices form a grid over the chart axes. Periodic axes store every
    vertex once; their closing coordinate (2π or 1) is kept in ``axes`` so that
    grid functions can be closed with :meth:`grid`.

    .. py:attribute:: vertices

        Array (n, m) of chart coordinates (shape (n,) on the circle).

    .. py:attribute:: cells

        Array of vertex indices per cell: four per quadrilateral, two per
        interval on the circle.

    .. py:attribute:: areas

        Metric area (length on the circle) of each cell.

    .. py:attribute:: centers

        Chart coordinates of the cell centers.

    """
    def __init__(self, model, resolution, axes, periodic, vertices, cells, areas, centers):
        self.model = model
        self.resolution = resolution
        self.axes = axes
        self.periodic = periodic
        self.vertices = vertices
        self.cells = cells
        self.areas = areas
        self.centers = centers

    def __repr__(self):
        return "<Mesh {} resolution={} cells={}>".format(
            self.model.name, self.resolution, len(self.cells))

    @property
    def shape(self):
        """The grid shape of the stored vertices."""
        return tuple(len(a) - 1 if p else len(a) for a, p in zip(self.axes, self.periodic))

    def total_area(self):
        """Return the sum of the metric cell areas."""
        return float(np.sum(self.areas))

    def grid(self, values):
        """Reshape per-vertex values to the grid and close the periodic axes.

        The result has one entry per coordinate in ``axes``.

        """
        g = np.asarray(values).reshape(self.shape)
        for axis, periodic in enumerate(self.periodic):
            if periodic:
                first = np.take(g, [0], axis=axis)
                g = np.concatenate((g, first), axis=axis)
        return g


def build_mesh(model, resolution):
    """Return a Mesh for the model.

    Torus: resolution × resolution square cells. Sphere: a latitude-longitude
    grid with resolution cells in θ and 2·resolution cells in φ, weighted with
    the exact cell area (cos θᵢ − cos θᵢ₊₁)·Δφ. Circle: resolution intervals.

    """
    resolution = int(resolution)
    if resolution < MIN_RESOLUTION:
        raise ValueError("mesh resolution must be at least {}, got {}".format(
            MIN_RESOLUTION, resolution))
    r = resolution
    if model.kind == constants.Circle:
        axis = np.linspace(0, 2 * math.pi, r + 1)
        vertices = axis[:-1]
        index = np.arange(r)
        cells = np.stack((index, (index + 1) % r), axis=-1)
        areas = np.full(r, 2 * math.pi / r)
        centers = (axis[:-1] + axis[1:]) / 2
        return Mesh(model, r, (axis,), (True,), vertices, cells, areas, centers)

    if model.kind == constants.Torus2:
        a0 = a1 = np.linspace(0, 1, r + 1)
        n0, n1 = r, r
        periodic = (True, True)
        areas = np.full(r * r, 1.0 / (r * r))
    else:
        a0 = np.linspace(0, math.pi, r + 1)
        a1 = np.linspace(0, 2 * math.pi, 2 * r + 1)
        n0, n1 = r + 1, 2 * r
        periodic = (False, True)
        band = np.cos(a0[:-1]) - np.cos(a0[1:])
        areas = np.repeat(band * (2 * math.pi / (2 * r)), 2 * r)

    g0, g1 = np.meshgrid(a0[:n0], a1[:n1], indexing="ij")
    vertices = np.stack((g0.ravel(), g1.ravel()), axis=-1)

    # cell (i, j) has corners (i, j), (i+1, j), (i, j+1), (i+1, j+1)
    c0 = len(a0) - 1
    c1 = len(a1) - 1
    i, j = np.meshgrid(np.arange(c0), np.arange(c1), indexing="ij")
    i, j = i.ravel(), j.ravel()
    i1 = (i + 1) % n0
    j1 = (j + 1) % n1
    cells = np.stack((i * n1 + j, i1 * n1 + j, i * n1 + j1, i1 * n1 + j1), axis=-1)
    m0 = (a0[:-1] + a0[1:]) / 2
    m1 = (a1[:-1] + a1[1:]) / 2
    h0, h1 = np.meshgrid(m0, m1, indexing="ij")
    centers = np.stack((h0.ravel(), h1.ravel()), axis=-1)
    return Mesh(model, r, (a0, a1), periodic, vertices, cells, areas, centers)


def max_cell_diameter(mesh):
    """Return the largest metric diameter of a cell (an upper bound on the sphere)."""
    if mesh.model.dim == 1:
        return float(np.max(mesh.areas))
    d0 = np.max(np.diff(mesh.axes[0]))
    d1 = np.max(np.diff(mesh.axes[1]))
    return float(math.hypot(d0, d1))
