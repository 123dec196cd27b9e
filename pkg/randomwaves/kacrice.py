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
Kac-Rice zero density.

The expected (m−1)-dimensional measure of the zero set per unit volume is

    K₁(x) = p_f(x)(0) · E[|∇f(x)| | f(x) = 0] = (2πA)^(−1/2) · E|Z|,

with Z ~ N(0, Λ) and Λ = C − BᵀB/A the conditional covariance of the gradient.
K₁ does not change when the jet is multiplied by a positive factor, so it does
not depend on the coefficient normalization.

"""

import collections
import math

import numpy as np
from scipy.integrate import quad
from scipy.special import ellipe, gamma

from . import constants
from . import errors
from . import spectral


#: number of draws of the MonteCarlo method
MONTE_CARLO_DRAWS = 1000000

#: eigenvalues of Λ below minus this (relative) are rejected
NEGATIVE_TOLERANCE = 1e-12


KacRiceResult = collections.namedtuple("KacRiceResult", "Lambda density method")
KacRiceResult.__doc__ = "The Kac-Rice density at a point."
KacRiceResult.Lambda.__doc__ = "The conditional gradient covariance Λ (m × m)."
KacRiceResult.density.__doc__ = "The expected zero measure per unit volume K₁."
KacRiceResult.method.__doc__ = "The method used for E|Z| (see the constants module)."


def lambda_matrix(jet):
    """Return Λ = C − BᵀB/A, symmetrized, with tiny negative eigenvalues clamped.

    Raises DegenerateField if A ≤ 0, and IndefiniteCovariance if Λ has an
    eigenvalue clearly below zero.

    """
    A = float(jet.A)
    if not A > 0:
        raise errors.DegenerateField("the field has variance {:g} at this point".format(A))
    B = np.atleast_1d(np.asarray(jet.B, dtype=np.float64))
    C = np.atleast_2d(np.asarray(jet.C, dtype=np.float64))
    lam = C - np.outer(B, B) / A
    lam = (lam + lam.T) / 2
    w, v = np.linalg.eigh(lam)
    scale = max(1.0, float(np.max(np.abs(w))))
    if np.min(w) < -NEGATIVE_TOLERANCE * scale:
        raise errors.IndefiniteCovariance(
            "Λ is not positive semidefinite (eigenvalue {:g})".format(np.min(w)))
    if np.any(w < 0):
        w = np.clip(w, 0, None)
        lam = (v * w) @ v.T
    return lam


def _norm_mean_2d(a, b):
    """E√(aX² + bY²) for a ≥ b ≥ 0 (arrays allowed)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        m = np.where(a > 0, 1 - b / np.where(a > 0, a, 1), 0)
    return np.sqrt(2 * a / math.pi) * ellipe(m)


def gaussian_norm_mean(Lambda, method=None, seed=0):
    """Return E|Z| for Z ~ N(0, Λ).

    Without method, ClosedForm1D is used for m = 1 and ClosedForm2D for m = 2.
    MonteCarlo uses a fixed seed, so it is deterministic.

    """
    lam = np.atleast_2d(np.asarray(Lambda, dtype=np.float64))
    m = lam.shape[0]
    w = np.clip(np.linalg.eigvalsh((lam + lam.T) / 2), 0, None)[::-1]
    if method is None:
        method = constants.ClosedForm1D if m == 1 else constants.ClosedForm2D

    if method == constants.ClosedForm1D:
        if m != 1:
            raise errors.MethodMismatch("ClosedForm1D needs a 1 × 1 matrix")
        return math.sqrt(2 * w[0] / math.pi)
    elif method == constants.ClosedForm2D:
        if m != 2:
            raise errors.MethodMismatch("ClosedForm2D needs a 2 × 2 matrix")
        return float(_norm_mean_2d(w[0], w[1]))
    elif method == constants.Quadrature:
        if m == 1:
            s = math.sqrt(w[0])
            value, err = quad(lambda t: s * t * math.exp(-t * t / 2), 0, math.inf, epsabs=1e-12)
            return 2 * value / math.sqrt(2 * math.pi)
        # E|Z| = E r · average over directions of √(a cos²t + b sin²t)
        f = lambda t: math.sqrt(w[0] * math.cos(t) ** 2 + w[1] * math.sin(t) ** 2)
        value, err = quad(f, 0, math.pi / 2, epsabs=1e-12, epsrel=1e-12, limit=200)
        return math.sqrt(math.pi / 2) * value * 4 / (2 * math.pi)
    elif method == constants.MonteCarlo:
        rng = np.random.Generator(np.random.Philox(seed))
        z = rng.standard_normal((MONTE_CARLO_DRAWS, m)) * np.sqrt(w)
        return float(np.mean(np.linalg.norm(z, axis=1)))
    raise errors.MethodMismatch("unknown method: {!r}".format(method))


def density(jet, method=None):
    """Return the KacRiceResult for the jet."""
    lam = lambda_matrix(jet)
    m = lam.shape[0]
    if method is None:
        method = constants.ClosedForm1D if m == 1 else constants.ClosedForm2D
    mean = gaussian_norm_mean(lam, method)
    return KacRiceResult(lam, mean / math.sqrt(2 * math.pi * float(jet.A)), method)


def density_field(A, B, C):
    """Return K₁ for arrays of jets (vectorized closed forms).

    A has shape S, B shape S + (m,), C shape S + (m, m).

    """
    A = np.asarray(A, dtype=np.float64)
    if np.any(A <= 0):
        raise errors.DegenerateField("the field has zero variance at some point")
    lam = C - np.einsum("...i,...j->...ij", B, B) / A[..., None, None]
    lam = (lam + np.swapaxes(lam, -1, -2)) / 2
    if lam.shape[-1] == 1:
        mean = np.sqrt(2 * np.clip(lam[..., 0, 0], 0, None) / math.pi)
    else:
        w = np.clip(np.linalg.eigvalsh(lam), 0, None)
        mean = _norm_mean_2d(w[..., 1], w[..., 0])
    return mean / np.sqrt(2 * math.pi * A)


def dimension_constant(m):
    """Return C_m = π^(−m/2)·Γ((m+1)/2)/Γ(m/2).

    This is the constant in K₁ = C_m·λ for the other common normalization of
    the Kac-Rice integral; it is reported next to the canonical density.

    """
    return math.pi ** (-m / 2) * float(gamma((m + 1) / 2) / gamma(m / 2))


def expected_measure(model, window, psi, mesh, basis=None):
    """Return ∫ K₁ψ dV by quadrature over the mesh cell centers.

    psi is called with an array of chart points (shape (n,) on the circle,
    (n, 2) otherwise) and returns their values.

    """
    if basis is None:
        basis = spectral.enumerate_basis(model, window)
    A, B, C = spectral.jets(basis, mesh.centers)
    k1 = density_field(A, B, C)
    return float(np.sum(k1 * np.asarray(psi(mesh.centers)) * mesh.areas))
