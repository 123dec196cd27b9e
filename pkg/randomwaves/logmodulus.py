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
The expected log modulus of complexified waves.

Write the normalized continued basis vector Φ^ℂ(ζ)/|Φ^ℂ(ζ)| as U + iV with
real vectors U, V, |U|² + |V|² = 1. Then f^ℂ(ζ)/|Φ^ℂ(ζ)| = ⟨c, U⟩ + i⟨c, V⟩ and

    E log|f^ℂ(ζ)|² = log(σ²·Π(ζ, ζ̄)) + G(U, V),

where G = E log(⟨a, U⟩² + ⟨a, V⟩²) for a standard normal. G only depends on
the eigenvalues μ₁, μ₂ of the 2 × 2 covariance [[|U|², ⟨U,V⟩], [⟨U,V⟩, |V|²]].

"""

import collections
import math

import numpy as np
from scipy.integrate import quad
from scipy.special import digamma

from . import complexify
from . import ensemble
from . import util


def unit_frame(values):
    """Return (U, V), the real and imaginary part of values/|values|."""
    values = np.asarray(values, dtype=np.complex128)
    scale = np.max(np.abs(values))
    if scale == 0:
        raise ValueError("all continued eigenfunctions vanish")
    v = values / scale
    v /= np.linalg.norm(v)
    return v.real.copy(), v.imag.copy()


def frame_eigenvalues(U, V):
    """Return the eigenvalues μ₁ ≥ μ₂ ≥ 0 of the covariance of (⟨a,U⟩, ⟨a,V⟩)."""
    p = float(np.dot(U, U))
    q = float(np.dot(U, V))
    r = float(np.dot(V, V))
    mu = np.linalg.eigvalsh(np.array([[p, q], [q, r]]))
    mu = np.clip(mu, 0, None)
    return float(mu[1]), float(mu[0])


def g_factor_quadrature(U, V):
    """Return G(U, V) by adaptive quadrature.

    Uses E log Q = ∫₀^∞ (e^(−t) − E e^(−tQ)) dt/t with
    E e^(−tQ) = ((1 + 2μ₁t)(1 + 2μ₂t))^(−1/2); absolute accuracy about 10⁻⁹.

    """
    mu1, mu2 = frame_eigenvalues(U, V)

    def integrand(t):
        if t == 0:
            return mu1 + mu2 - 1
        return (math.exp(-t) - 1 / math.sqrt((1 + 2 * mu1 * t) * (1 + 2 * mu2 * t))) / t

    head, err1 = quad(integrand, 0, 1, epsabs=1e-11, limit=200)
    tail, err2 = quad(integrand, 1, math.inf, epsabs=1e-11, limit=200)
    return head + tail


def g_factor_closed(U, V):
    """Return Γ′(1/2) + Γ(1/2)·log max{‖U + JV‖², ‖U − JV‖²}.

    J is the rotation by a right angle in the plane spanned by U and V, so the
    maximum equals 1 + 2·|det(U, V)|. This formula does not match the
    quadrature value; it is kept to record the deviation.

    """
    gamma_half = math.sqrt(math.pi)
    dgamma_half = gamma_half * float(digamma(0.5))
    return dgamma_half + gamma_half * math.log(max_rotated_norm(U, V))


def g_factor_corrected(U, V):
    """Return ψ(1/2) + log 2 + log max{‖U + JV‖², ‖U − JV‖²}.

    This equals −γ − log 2 + log(1 + 2√(μ₁μ₂)), which is the exact value of G.

    """
    return float(digamma(0.5)) + math.log(2) + math.log(max_rotated_norm(U, V))


def max_rotated_norm(U, V):
    """Return max{‖U + JV‖², ‖U − JV‖²} = |U|² + |V|² + 2·|det(U, V)|."""
    p = float(np.dot(U, U))
    q = float(np.dot(U, V))
    r = float(np.dot(V, V))
    det = math.sqrt(max(p * r - q * q, 0.0))
    return p + r + 2 * det


class LogModulusStats(collections.namedtuple("LogModulusStats",
        "mc_mean_log_sq stderr log_pi g_factor g_closed g_corrected U V trials")):
    """Monte Carlo E log|f^ℂ(ζ)|² next to the kernel decomposition.

    .. py:attribute:: log_pi

        log(σ²·Π(ζ, ζ̄)): the kernel term for the normalization of the ensemble.

    .. py:attribute:: g_factor

        G from g_factor_quadrature.

    """
    __slots__ = ()

    @property
    def difference(self):
        """mc_mean_log_sq − log_pi, which estimates G."""
        return self.mc_mean_log_sq - self.log_pi

    @property
    def deviation(self):
        """difference − g_factor, in units of the standard error."""
        return (self.difference - self.g_factor) / self.stderr if self.stderr else math.inf


def expected_log_modulus(spec, zeta, trials, workers=1, start=0):
    """Return LogModulusStats of the ensemble at the TubePoint zeta."""
    if trials < 1000:
        raise ValueError("expected_log_modulus needs at least 1000 trials")
    basis = spec.basis()
    values = complexify.continued_basis(basis, zeta)
    U, V = unit_frame(values)
    log_pi = complexify.complexified_projector(spec.model, spec.window, zeta, basis).log_pi

    chunks = [(s, min(1000, trials - s)) for s in range(0, trials, 1000)]
    jobs = [lambda s=s, n=n: ensemble.sample_coefficients(spec, n, start + s) for s, n in chunks]
    coefficients = np.concatenate(util.run_ordered(jobs, workers))
    # scale the frame to keep magnitudes near 1
    scale = np.max(np.abs(values))
    with np.errstate(divide="ignore"):
        logs = 2 * np.log(np.abs(coefficients @ (values / scale))) + 2 * math.log(scale)
    mean, stderr, var = util.mean_and_error(logs)
    return LogModulusStats(mean, stderr, log_pi + spec.log_variance(),
                           g_factor_quadrature(U, V), g_factor_closed(U, V),
                           g_factor_corrected(U, V), U, V, trials)

