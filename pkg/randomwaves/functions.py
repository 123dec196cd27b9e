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
Test functions ψ for linear statistics.

Functions on a model take an array of chart points (shape (n,) on the circle,
(n, 2) on the torus and sphere) and return an array of values. Every model has
a constant function and a family of three functions with mean zero.

:class:`StripBump` is a test function on the complex strip of the circle,
used to pair root clouds with the limit current.

"""

import math

import numpy as np

from . import constants


def one(points):
    """The constant function 1."""
    points = np.asarray(points)
    shape = points.shape if points.ndim <= 1 else points.shape[:-1]
    return np.ones(shape)


_mean_zero = {
    constants.Circle: {
        "cos1": lambda t: np.cos(t),
        "sin1": lambda t: np.sin(t),
        "cos2": lambda t: np.cos(2 * t),
    },
    constants.Torus2: {
        "cos_x1": lambda x: np.cos(2 * math.pi * x[..., 0]),
        "sin_x2": lambda x: np.sin(2 * math.pi * x[..., 1]),
        "cos_diag": lambda x: np.cos(2 * math.pi * (x[..., 0] + x[..., 1])),
    },
    constants.Sphere2: {
        "y10": lambda x: np.cos(x[..., 0]),
        "y11": lambda x: np.sin(x[..., 0]) * np.cos(x[..., 1]),
        "y20": lambda x: (3 * np.cos(x[..., 0]) ** 2 - 1) / 2,
    },
}


def mean_zero_names(model):
    """Return the names of the mean-zero test functions of the model."""
    return list(_mean_zero[model.kind])


def named(model, name):
    """Return the test function with the given name on the model."""
    if name == "one":
        return one
    try:
        f = _mean_zero[model.kind][name]
    except KeyError:
        raise ValueError("no test function {!r} on the {}".format(name, model.name)) from None
    return lambda points: f(np.asarray(points, dtype=np.float64))


def _smoothstep(t):
    """Return S(t), S'(t), S''(t) of the quintic step 6t⁵ − 15t⁴ + 10t³."""
    t = np.clip(t, 0, 1)
    s = t * t * t * (t * (6 * t - 15) + 10)
    ds = 30 * t * t * (t - 1) ** 2
    dds = 60 * t * (2 * t - 1) * (t - 1)
    return s, ds, dds


class StripBump:
    """A bump ψ(θ, y) = g(θ)·h(y) on the strip ℝ/2πℤ × ℝ.

    g(θ) = 1 + amplitude·cos θ, and h equals 1 for |y| ≤ plateau, falls to 0
    at |y| = support with a C² quintic step and vanishes beyond. With odd=True,
    h is multiplied by y/support, which makes ψ odd in y.

    """
    def __init__(self, plateau=0.3, support=0.5, amplitude=0.5, odd=False):
        if not 0 <= plateau < support:
            raise ValueError("need 0 ≤ plateau < support")
        self.plateau = plateau
        self.support = support
        self.amplitude = amplitude
        self.odd = odd

    def _even(self, y):
        y = np.asarray(y, dtype=np.float64)
        width = self.support - self.plateau
        s, ds, dds = _smoothstep((self.support - np.abs(y)) / width)
        sign = np.sign(y)
        return s, -sign * ds / width, dds / (width * width)

    def profile(self, y):
        """Return h(y), h'(y), h''(y)."""
        h, dh, ddh = self._even(y)
        if not self.odd:
            return h, dh, ddh
        y = np.asarray(y, dtype=np.float64)
        w = self.support
        return y * h / w, (h + y * dh) / w, (2 * dh + y * ddh) / w

    def g(self, theta):
        return 1 + self.amplitude * np.cos(theta)

    def theta_integral(self):
        """Return ∫ g(θ) dθ over the circle."""
        return 2 * math.pi

    def __call__(self, theta, y):
        return self.g(theta) * self.profile(y)[0]

    def laplacian(self, theta, y):
        """Return Δψ = g''h + g h''."""
        h, dh, ddh = self.profile(y)
        ddg = -self.amplitude * np.cos(theta)
        return ddg * h + self.g(theta) * ddh
