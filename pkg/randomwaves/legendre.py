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
Normalized associated Legendre functions.

The functions P̄ₗᵐ are normalized so that 2π∫P̄ₗᵐ(θ)² sin θ dθ = 1 for every
order m, without the Condon-Shortley phase. The real spherical harmonics of
degree l are then P̄ₗ⁰ and √2·P̄ₗᵐ·cos mφ, √2·P̄ₗᵐ·sin mφ, and their squares sum
to (2l+1)/4π.

The arguments are u = cos θ and w = sin θ. They may be complex arrays, which
gives the analytic continuation used for complexified waves.

"""

import math

import numpy as np


def _diagonal(degree, w, dtype, divided):
    """Return the sectoral values P̄ₘᵐ for m = 0..degree (divided by w if asked)."""
    diag = np.zeros((degree + 1,) + w.shape, dtype)
    diag[0] = 0.0 if divided else 1 / math.sqrt(4 * math.pi)
    if degree >= 1:
        first = math.sqrt(3 / 2) / math.sqrt(4 * math.pi)
        diag[1] = first if divided else first * w
    for m in range(2, degree + 1):
        diag[m] = math.sqrt((2 * m + 1) / (2 * m)) * w * diag[m - 1]
    return diag


def table(degree, u, w, divided=False):
    """Return P̄ᵈᵐ for all orders m = 0..degree at degree d = degree.

    The result has shape (degree + 1,) + u.shape. With divided=True the values
    P̄ᵈᵐ / w are returned for m ≥ 1 (the entry for m = 0 is zero); they are
    finite at the poles and give the longitude derivatives there.

    The recurrence runs upward in l for all orders at once:
    P̄ₗᵐ = a·(u·P̄ₗ₋₁ᵐ − b·P̄ₗ₋₂ᵐ), starting from the sectoral values.

    """
    u = np.asarray(u)
    w = np.asarray(w)
    u, w = np.broadcast_arrays(u, w)
    dtype = np.result_type(u.dtype, w.dtype, np.float64)
    diag = _diagonal(degree, w, dtype, divided)
    m = np.arange(degree + 1, dtype=np.float64)
    expand = (slice(None),) + (None,) * u.ndim

    prev2 = np.zeros_like(diag)
    prev1 = np.zeros_like(diag)
    prev1[0] = diag[0]
    for l in range(1, degree + 1):
        cur = np.zeros_like(diag)
        if l >= 2:
            mm = m[:l - 1]
            a = np.sqrt((4 * l * l - 1) / (l * l - mm * mm))
            b = np.sqrt(((l - 1) ** 2 - mm * mm) / (4 * (l - 1) ** 2 - 1))
            cur[:l - 1] = a[expand] * (u * prev1[:l - 1] - b[expand] * prev2[:l - 1])
        cur[l - 1] = math.sqrt(2 * l + 1) * u * prev1[l - 1]
        cur[l] = diag[l]
        prev2, prev1 = prev1, cur
    return prev1


def theta_derivative(degree, p):
    """Return dP̄ᵈᵐ/dθ for all orders from the table p of degree d = degree."""
    l = degree
    d = np.zeros_like(p)
    if l == 0:
        return d
    d[0] = -math.sqrt(l * (l + 1)) * p[1]
    for m in range(1, l + 1):
        down = math.sqrt((l + m) * (l - m + 1)) * p[m - 1]
        up = math.sqrt((l + m + 1) * (l - m)) * p[m + 1] if m < l else 0
        d[m] = (down - up) / 2
    return d


def harmonics(degree, theta, phi, gradient=False):
    """Return the 2·degree + 1 real spherical harmonics of the given degree.

    The result has the harmonics on the first axis, ordered m = 0, then cos and
    sin for m = 1..degree. theta may be complex (phi is real).

    With gradient=True a tuple (values, dtheta, dphi) is returned, where dphi
    is the derivative in the unit longitude direction, (1/sin θ)·∂/∂φ.

    """
    theta = np.asarray(theta)
    phi = np.asarray(phi, dtype=np.float64)
    theta, phi = np.broadcast_arrays(theta, phi)
    u = np.cos(theta)
    w = np.sin(theta)
    p = table(degree, u, w)
    mvals = np.arange(1, degree + 1)
    expand = (slice(None),) + (None,) * theta.ndim
    cosm = np.cos(mvals[expand] * phi)
    sinm = np.sin(mvals[expand] * phi)
    s2 = math.sqrt(2)

    def assemble(q, c, s):
        out = np.empty((2 * degree + 1,) + theta.shape, np.result_type(q, np.float64))
        out[0] = q[0]
        out[1::2] = s2 * q[1:] * c
        out[2::2] = s2 * q[1:] * s
        return out

    values = assemble(p, cosm, sinm)
    if not gradient:
        return values
    dtheta = assemble(theta_derivative(degree, p), cosm, sinm)
    q = table(degree, u, w, divided=True)
    mq = q.copy()
    mq[1:] *= mvals[expand]
    dphi = assemble(mq, -sinm, cosm)
    dphi[0] = 0
    return values, dtheta, dphi


def zonal_log_kernel(degree, inner):
    """Return log((2l+1)/4π · Pₗ(inner)) for a real inner product ≥ 1.

    This is the logarithm of the complexified degree-l projector on the
    diagonal, with inner = cosh 2√ρ.

    """
    from scipy.special import eval_legendre
    value = eval_legendre(degree, inner)
    return math.log((2 * degree + 1) / (4 * math.pi)) + math.log(value)
