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
Complex zeros and the limit zero current.

A real trigonometric polynomial of degree N on the circle continues to the
strip ζ = θ + iy as f^ℂ(ζ) = e^(−iNζ)·Q(e^(iζ)) with Q a polynomial of degree
2N, so its complex zeros are the roots of Q mapped back by y = −log|w|,
θ = arg w.

By Poincaré-Lelong, the expected zero measure of f^ℂ is (1/4π)·Δ E log|f^ℂ|²,
and E log|f^ℂ|² = log σ²Π + G. As N grows, (1/N) log Π → 2|y|, so the root
measure divided by N tends to (1/2π)·Δ|y|: mass 2 per unit length on the real
axis. The torus analogue is checked on complex lines through a real point.

"""

import collections
import logging
import math

import numpy as np
from numpy.polynomial import polynomial
from scipy.integrate import quad

from . import complexify
from . import constants
from . import errors
from . import logmodulus
from . import manifold
from . import spectral
from . import util

logger = logging.getLogger(__name__)

#: the bound on the backward error of a root
ROOT_RESIDUAL = 1e-8

#: relative size below which leading or trailing coefficients count as zero
DEGENERATE = 1e-14

#: the constant of the limit current (1/2π)·Δ|y|
LIMIT_CONSTANT = 1 / (2 * math.pi)


class RootCloud(collections.namedtuple("RootCloud", "roots label count residuals trial")):
    """The complex zeros ζ = θ + iy of one circle wave.

    .. py:attribute:: roots

        Complex array, θ in [0, 2π).

    .. py:attribute:: residuals

        The backward error of each root.

    """
    __slots__ = ()

    @property
    def theta(self):
        return self.roots.real

    @property
    def y(self):
        return self.roots.imag


def trig_coefficients(sample):
    """Return the coefficients q₀..q₂N of Q (ascending) and N."""
    basis = sample.basis
    if basis.model.kind != constants.Circle:
        raise ValueError("complex roots are computed for circle waves only")
    c = sample.coefficients
    n = int(np.max(basis.indices))
    q = np.zeros(2 * n + 1, np.complex128)
    r = 2 * math.sqrt(math.pi)
    for coef, kind, k in zip(c, basis.kinds, basis.indices):
        if kind == spectral.CONSTANT:
            q[n] += coef / math.sqrt(2 * math.pi)
        elif kind == spectral.COS:
            q[n + k] += coef / r
            q[n - k] += coef / r
        else:
            q[n + k] += -1j * coef / r
            q[n - k] += 1j * coef / r
    return q, n


def _scaled_terms(q, w):
    """Return the terms q_k w^k for all roots, divided by the largest one."""
    k = np.arange(len(q))
    nz = q != 0
    with np.errstate(divide="ignore"):
        logs = np.where(nz, np.log(np.abs(np.where(nz, q, 1)))[None, :]
                        + k[None, :] * np.log(np.abs(w))[:, None], -np.inf)
    top = np.max(logs, axis=1, keepdims=True)
    phase = np.where(nz, q / np.where(nz, np.abs(q), 1), 0)[None, :] * np.exp(
        1j * k[None, :] * np.angle(w)[:, None])
    return np.exp(logs - top) * phase, k


def backward_errors(q, w):
    """Return |Q(w)| / Σ|q_k||w|^k for each root w."""
    terms, k = _scaled_terms(q, w)
    return np.abs(np.sum(terms, axis=1)) / np.sum(np.abs(terms), axis=1)


def _polish(q, w):
    """One Newton step on Q, computed with scaled terms; keeps improvements."""
    terms, k = _scaled_terms(q, w)
    value = np.sum(terms, axis=1)
    slope = np.sum(terms * k[None, :], axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        step = np.where(slope != 0, w * value / slope, 0)
    better = w - step
    ok = np.isfinite(better) & (better != 0)
    before = backward_errors(q, w)
    after = np.full_like(before, np.inf)
    after[ok] = backward_errors(q, better[ok])
    return np.where(after < before, better, w)


def circle_complex_roots(sample):
    """Return the RootCloud of a circle wave.

    Leading or trailing coefficients below 10⁻¹⁴·‖q‖ are dropped with a
    warning. Raises RootResidual if a root fails the backward error bound.

    """
    q, n = trig_coefficients(sample)
    norm = np.linalg.norm(q)
    small = np.abs(q) < DEGENERATE * norm
    lead = len(q)
    while lead > 1 and small[lead - 1]:
        lead -= 1
    trail = 0
    while trail < lead - 1 and small[trail]:
        trail += 1
    if lead < len(q) or trail > 0:
        logger.warning("degenerate circle polynomial: degree %d reduced to %d",
                       len(q) - 1, lead - 1 - trail)
    q = q[trail:lead]
    w = polynomial.polyroots(q) if len(q) > 1 else np.empty(0, np.complex128)
    w = _polish(q, w) if len(w) else w
    residuals = backward_errors(q, w) if len(w) else np.empty(0)
    if np.any(residuals > ROOT_RESIDUAL):
        raise errors.RootResidual(
            "root residual {:g} exceeds {:g} (N = {})".format(np.max(residuals), ROOT_RESIDUAL, n))
    roots = np.mod(np.angle(w), 2 * math.pi) - 1j * np.log(np.abs(w))
    order = np.lexsort((roots.imag, roots.real))
    return RootCloud(roots[order], n, len(roots), residuals[order], sample.trial)


def conjugation_defect(cloud):
    """Return the largest distance from a root to the nearest conjugate root."""
    if not cloud.count:
        return 0.0
    r = cloud.roots
    c = np.conj(r)
    # compare on the circle in θ
    dtheta = np.angle(np.exp(1j * (r.real[:, None] - c.real[None, :])))
    dist = np.hypot(dtheta, r.imag[:, None] - c.imag[None, :])
    return float(np.max(np.min(dist, axis=1)))


def fraction_near_axis(clouds, width=0.25):
    """Return the fraction of all roots with |y| < width."""
    total = sum(c.count for c in clouds)
    near = sum(int(np.count_nonzero(np.abs(c.y) < width)) for c in clouds)
    return near / total if total else math.nan


PairingResult = collections.namedtuple("PairingResult",
    "label empirical stderr predicted ratio constant exact")
PairingResult.__doc__ = "The pairing of root clouds with a test function."
PairingResult.empirical.__doc__ = "The mean over trials of (1/N)·Σ ψ(root)."
PairingResult.predicted.__doc__ = "constant·∫∫|y|·Δψ dθ dy."
PairingResult.exact.__doc__ = ("The finite-N prediction (1/4πN)∫∫(log Π + G)·Δψ, "
                               "or None if not computed.")


def limit_integral(psi):
    """Return ∫∫ |y|·Δψ(θ, y) dθ dy for a StripBump ψ."""
    w = psi.support
    value, err = quad(lambda y: abs(y) * psi.profile(y)[2], -w, w,
                      points=[-psi.plateau, 0.0, psi.plateau], epsabs=1e-12)
    # the θ part g'' integrates to zero over the circle
    return psi.theta_integral() * value


def calibrate(empirical, psi):
    """Return the constant c* making constant·∫∫|y|Δψ equal to empirical."""
    return empirical / limit_integral(psi)


def exact_prediction(model, window, psi):
    """Return (1/4πN)∫∫(log Π + G)·Δψ for a circle window.

    Π and G only depend on y, so the θ integral reduces to ∫g and the y
    integral is done by adaptive quadrature.

    """
    basis = spectral.enumerate_basis(model, window)
    n = int(np.max(basis.indices))

    def kernel(y):
        zeta = manifold.TubePoint(0.0, y)
        value = complexify.complexified_projector(model, window, zeta, basis)
        U, V = logmodulus.unit_frame(complexify.continued_basis(basis, zeta))
        return value.log_pi + logmodulus.g_factor_quadrature(U, V)

    w = psi.support
    value, err = quad(lambda y: kernel(y) * psi.profile(y)[2], -w, w,
                      points=[-psi.plateau, 0.0, psi.plateau], epsabs=1e-10, limit=200)
    return psi.theta_integral() * value / (4 * math.pi * n)


def current_pairing(clouds, psi, constant=LIMIT_CONSTANT, exact=None):
    """Return the PairingResult of root clouds of one window with ψ.

    psi is called as psi(theta, y). The predicted value uses the given
    constant (the limit 1/2π, or a calibrated one).

    """
    label = clouds[0].label
    values = [float(np.sum(psi(c.theta, c.y))) / label for c in clouds]
    mean, stderr, var = util.mean_and_error(values)
    predicted = constant * limit_integral(psi)
    ratio = mean / predicted if predicted else math.nan
    return PairingResult(label, mean, stderr, predicted, ratio, constant, exact)


SliceCurrent = collections.namedtuple("SliceCurrent",
    "label x y log_pi_over_n laplacian off_axis_max wall_mass asymmetry level_gap")
SliceCurrent.__doc__ = "(1/N)·Δ log Π on a complex line of the torus."
SliceCurrent.x.__doc__ = "The real coordinates x₂ of the grid columns."
SliceCurrent.y.__doc__ = "The imaginary coordinates y₂ of the grid rows."
SliceCurrent.laplacian.__doc__ = "(1/N)·discrete Laplacian, shape (len(x), len(y))."
SliceCurrent.off_axis_max.__doc__ = "max |(1/N)Δ log Π| for 0.1 ≤ |y| ≤ 0.3."
SliceCurrent.wall_mass.__doc__ = "∫ (1/N)Δ log Π dy over |y| ≤ 0.05, averaged over x."
SliceCurrent.asymmetry.__doc__ = "max |value(y) − value(−y)| of (1/N) log Π."
SliceCurrent.level_gap.__doc__ = ("The gap between the two largest |k₂| of the window, "
                                  "NaN if all its lattice vectors share one |k₂|.")


def slice_grid(tube_radius=0.35, nx=16, ny=141):
    """Return default grid coordinates (x, y) of a slice."""
    x = np.linspace(0, 1, nx, endpoint=False)
    y = np.linspace(-tube_radius, tube_radius, ny)
    return x, y


def level_gap(basis):
    """Return the gap between the two largest |k₂| of a torus basis.

    Off the axis, (1/N)·Δ log Π on the slice is governed by the lattice
    vectors with the largest |k₂|; a gap of g damps the next level by
    e^(−4πg|y₂|).

    """
    levels = np.unique(np.abs(basis.indices[:, 1]))
    if len(levels) < 2:
        return math.nan
    return float(levels[-1] - levels[-2])


def torus_slice_current(model, labels, x1=0.0, x=None, y=None,
                        window_factory=spectral.band, off_axis=(0.1, 0.3), wall=0.05):
    """Return a SliceCurrent per label on the line ζ = (x₁, x₂ + iy₂).

    x₁ is fixed and real; the grid runs over the real part x₂ (periodic) and
    the imaginary part y₂. Labels whose window holds no eigenvalue are left
    out of the result.

    """
    if model.kind != constants.Torus2:
        raise ValueError("slice currents are computed on the torus")
    if x is None or y is None:
        x, y = slice_grid()
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.max(np.abs(y)) > model.tube_radius:
        raise errors.OutsideTube("slice grid leaves the tube")
    hx = x[1] - x[0]
    hy = y[1] - y[0]
    results = []
    for n in labels:
        window = window_factory(n)
        try:
            basis = spectral.enumerate_basis(model, window)
        except errors.EmptyWindow as e:
            logger.info("skipping %s: %s", window.describe(), e)
            continue
        grid = np.empty((len(x), len(y)))
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                zeta = manifold.TubePoint((x1, xi), (0.0, yj))
                grid[i, j] = complexify.complexified_projector(model, window, zeta, basis).log_pi
        grid /= n
        lap = util.discrete_laplacian(grid, hx, hy, periodic0=True)
        ay = np.abs(y)
        band = (ay >= off_axis[0] - 1e-12) & (ay <= off_axis[1] + 1e-12)
        off = float(np.nanmax(np.abs(lap[:, band])))
        inner = ay <= wall + 1e-12
        mass = float(np.mean(np.nansum(lap[:, inner], axis=1) * hy))
        asym = float(np.max(np.abs(grid - grid[:, ::-1])))
        results.append(SliceCurrent(n, x, y, grid, lap, off, mass, asym, level_gap(basis)))
    return results
