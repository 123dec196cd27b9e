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
Extraction of nodal sets and their linear statistics.

On the torus and sphere the zero set is extracted from the vertex values with
marching squares: zeros on cell edges are found by linear interpolation, and
the two possible connections in a saddle cell (all four edges cut) are decided
by the sign of f at the cell center. On the circle the zeros are located by
sign changes on an oversampled grid and refined with Brent's method.

Extraction only uses the standard normal draw of a sample, never its scale, so
a sample and any positive multiple of it have identical nodal sets.

"""

import logging
import math

import numpy as np
from scipy.optimize import brentq

from . import cache
from . import constants
from . import errors
from . import spectral

logger = logging.getLogger(__name__)

#: grid points per mesh interval when looking for zeros on the circle
CIRCLE_OVERSAMPLING = 8

#: the mesh resolution must be at least this times the frequency N
RESOLUTION_FACTOR = 4


class NodalSet:
    """A piecewise linear zero set.

    .. py:attribute:: points

        Segment midpoints (m = 2) or zeros (m = 1), in chart coordinates.

    .. py:attribute:: weights

        Metric segment lengths, or ones for zeros on the circle.

    .. py:attribute:: segments

        Array (n, 2, 2) of segment endpoints in chart coordinates (m = 2),
        None on the circle.

    """
    def __init__(self, model, points, weights, segments=None):
        self.model = model
        self.points = points
        self.weights = weights
        self.segments = segments

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return "<NodalSet {} pieces={} measure={:g}>".format(
            self.model.name, len(self), self.total_measure)

    @property
    def total_measure(self):
        """The length of the zero set (m = 2) or the number of zeros (m = 1)."""
        return float(np.sum(self.weights))


def _basis_table(mesh, basis):
    return spectral.eval_basis(basis, mesh.vertices, gradient=False)


def check_resolution(basis, resolution):
    """Raise ResolutionTooCoarse unless resolution ≥ 4N."""
    required = RESOLUTION_FACTOR * basis.nominal
    if resolution < required:
        raise errors.ResolutionTooCoarse(
            "mesh resolution {} is below {}·N = {} for {}".format(
                resolution, RESOLUTION_FACTOR, required, basis.window.describe()),
            resolution=resolution, required=required)


def extract_nodal(sample, mesh, use_cache=True):
    """Return the NodalSet of the wave sample on the mesh."""
    basis = sample.basis
    if mesh.model.kind != basis.model.kind:
        raise ValueError("mesh and sample belong to different models")
    check_resolution(basis, mesh.resolution)
    if basis.model.kind == constants.Circle:
        return _circle_zeros(sample, mesh)
    if use_cache:
        table = cache.cache.table(mesh, basis, _basis_table)
    else:
        table = _basis_table(mesh, basis)
    grid = mesh.grid(table @ sample.z)
    center = lambda points: spectral.eval_basis(basis, points, gradient=False) @ sample.z
    return _marching_squares(mesh, grid, center)


def _circle_zeros(sample, mesh):
    basis = sample.basis
    z = sample.z
    f = lambda t: float(spectral.eval_basis(basis, t, gradient=False) @ z)
    n = mesh.resolution * CIRCLE_OVERSAMPLING
    t = np.linspace(0, 2 * math.pi, n + 1)
    v = spectral.eval_basis(basis, t[:-1], gradient=False) @ z
    v = np.append(v, v[0])
    pos = v > 0
    change = np.nonzero(pos[:-1] != pos[1:])[0]
    zeros = np.empty(len(change))
    for i, c in enumerate(change):
        a, b = t[c], t[c + 1]
        fa, fb = f(a), f(b)
        if fa == 0 or fb == 0 or (fa > 0) == (fb > 0):
            zeros[i] = a if abs(v[c]) <= abs(v[c + 1]) else b
        else:
            zeros[i] = brentq(f, a, b, xtol=1e-12, rtol=4 * np.finfo(float).eps)
    zeros = np.mod(zeros, 2 * math.pi)
    return NodalSet(mesh.model, zeros, np.ones(len(zeros)))


def _crossings(ga, gb, xa, xb):
    """Return edge cut flags and interpolated positions along the edges."""
    cut = (ga > 0) != (gb > 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(cut, ga / (ga - gb), 0.5)
    return cut, xa + t * (xb - xa)


def _marching_squares(mesh, grid, center):
    a0, a1 = mesh.axes
    X0, X1 = np.meshgrid(a0, a1, indexing="ij")

    # edges along axis 0: (i, j) - (i+1, j); edges along axis 1: (i, j) - (i, j+1)
    cut0, pos0 = _crossings(grid[:-1, :], grid[1:, :], X0[:-1, :], X0[1:, :])
    cut1, pos1 = _crossings(grid[:, :-1], grid[:, 1:], X1[:, :-1], X1[:, 1:])
    p0 = np.stack((pos0, X1[:-1, :]), axis=-1)
    p1 = np.stack((X0[:, :-1], pos1), axis=-1)

    # per cell, edges in the order bottom, right, top, left
    flags = np.stack((cut0[:, :-1], cut1[1:, :], cut0[:, 1:], cut1[:-1, :]), axis=-1)
    points = np.stack((p0[:, :-1], p1[1:, :], p0[:, 1:], p1[:-1, :]), axis=-2)
    count = np.count_nonzero(flags, axis=-1)

    simple = count == 2
    f = flags[simple]
    pts = points[simple]
    order = np.argsort(~f, axis=-1, kind="stable")[:, :2]
    rows = np.arange(len(pts))
    starts = [pts[rows, order[:, 0]]]
    ends = [pts[rows, order[:, 1]]]

    saddle = np.nonzero(count == 4)
    if len(saddle[0]):
        i, j = saddle
        mid = np.stack(((a0[i] + a0[i + 1]) / 2, (a1[j] + a1[j + 1]) / 2), axis=-1)
        same = (center(mid) > 0) == (grid[i, j] > 0)
        sp = points[saddle]
        # center like the (i, j) corner: cut off the (i+1, j) and (i, j+1) corners
        first = sp[:, 0]
        second = np.where(same[:, None], sp[:, 1], sp[:, 3])
        third = np.where(same[:, None], sp[:, 2], sp[:, 1])
        fourth = np.where(same[:, None], sp[:, 3], sp[:, 2])
        starts += [first, third]
        ends += [second, fourth]
        logger.debug("resolved %d saddle cells", len(i))

    start = np.concatenate(starts)
    end = np.concatenate(ends)
    segments = np.stack((start, end), axis=1) if len(start) else np.empty((0, 2, 2))
    lengths = segment_lengths(mesh.model, start, end)
    midpoints = (start + end) / 2
    return NodalSet(mesh.model, midpoints, lengths, segments)


def sphere_cartesian(points):
    """Map (θ, φ) chart points to unit vectors in ℝ³."""
    theta, phi = points[..., 0], points[..., 1]
    st = np.sin(theta)
    return np.stack((st * np.cos(phi), st * np.sin(phi), np.cos(theta)), axis=-1)


def segment_lengths(model, start, end):
    """Return the metric lengths of straight chart segments.

    On the sphere this is the great circle distance between the endpoints.

    """
    if model.kind == constants.Sphere2:
        chord = np.linalg.norm(sphere_cartesian(end) - sphere_cartesian(start), axis=-1)
        return 2 * np.arcsin(np.clip(chord / 2, 0, 1))
    return np.linalg.norm(end - start, axis=-1)


def linear_statistic(nodal, psi):
    """Return X_ψ = ∫ ψ over the zero set.

    psi is called with the array of nodal points and returns their values.

    """
    if len(nodal) == 0:
        return 0.0
    return float(np.sum(np.asarray(psi(nodal.points)) * nodal.weights))
