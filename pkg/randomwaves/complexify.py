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
Analytic continuation of waves and projector kernels into the tube.

Magnitudes grow like e^(λ√ρ) per eigenfunction, so kernels are reduced in log
space with log-sum-exp. The guard 2(N+1)√ρ ≤ 600 keeps every single term
within double precision.

"""

import collections
import logging
import math

import numpy as np
from scipy.special import logsumexp

from . import constants
from . import errors
from . import legendre
from . import manifold
from . import spectral
from . import util

logger = logging.getLogger(__name__)


#: the largest exponent 2(N+1)√ρ accepted
GROWTH_LIMIT = 600.0


def check_growth(basis, srho):
    """Raise OverflowGuard if 2(N+1)√ρ exceeds GROWTH_LIMIT."""
    n = basis.max_frequency
    if 2 * (n + 1) * srho > GROWTH_LIMIT:
        raise errors.OverflowGuard(
            "2(N+1)√ρ = {:g} exceeds {:g} (N = {:g}, √ρ = {:g})".format(
                2 * (n + 1) * srho, GROWTH_LIMIT, n, srho))


ComplexValue = collections.namedtuple("ComplexValue", "log_modulus phase")
ComplexValue.__doc__ = "A complex number as log|z| and arg z."


def continued_basis(basis, zeta):
    """Return the complex values of all eigenfunctions at the TubePoint zeta."""
    srho = manifold.sqrt_rho(basis.model, zeta)
    check_growth(basis, srho)
    return spectral.eval_basis_complex(basis, zeta.x, zeta.y)


def complexify_wave(sample, zeta):
    """Return the analytic continuation f^ℂ(ζ) of the sample as a ComplexValue.

    The continuation uses the real coefficients of the sample.

    """
    value = complex(continued_basis(sample.basis, zeta) @ sample.coefficients)
    if value == 0:
        return ComplexValue(-math.inf, 0.0)
    return ComplexValue(math.log(abs(value)), math.atan2(value.imag, value.real))


def log_abs_squared(basis, zeta):
    """Return log|φⱼ^ℂ(ζ)|² for all eigenfunctions.

    On the torus the closed form |√2 cos(a + ib)|² = cosh 2b + cos 2a (and
    cosh 2b − cos 2a for sine) is used, which stays accurate for large b.

    """
    if basis.model.kind == constants.Torus2:
        srho = manifold.sqrt_rho(basis.model, zeta)
        check_growth(basis, srho)
        k = basis.indices.astype(np.float64)
        a = 2 * math.pi * (k @ np.asarray(zeta.x, dtype=np.float64))
        b = np.abs(2 * math.pi * (k @ np.asarray(zeta.y, dtype=np.float64)))
        sign = np.where(basis.kinds == spectral.SIN, -1.0, 1.0)
        # log(cosh 2b ± cos 2a) = 2b − log 2 + log(1 + e^(−4b) ± 2e^(−2b) cos 2a)
        inner = 1 + np.exp(-4 * b) + sign * 2 * np.exp(-2 * b) * np.cos(2 * a)
        with np.errstate(divide="ignore"):
            out = 2 * b - math.log(2) + np.log(np.clip(inner, 0, None))
        return np.where(basis.kinds == spectral.CONSTANT, 0.0, out)
    values = continued_basis(basis, zeta)
    with np.errstate(divide="ignore"):
        return 2 * np.log(np.abs(values))


class ComplexKernelValue(collections.namedtuple("ComplexKernelValue",
        "log_pi log_damped label sqrt_rho log_pi_closed")):
    """The complexified projector on the diagonal, in log space.

    .. py:attribute:: log_pi

        log Π(ζ, ζ̄) = log Σ |φⱼ^ℂ(ζ)|².

    .. py:attribute:: log_damped

        log P(ζ, ζ̄) = log Σ e^(−2√ρλⱼ) |φⱼ^ℂ(ζ)|².

    .. py:attribute:: log_pi_closed

        The sphere closed form log(((2N+1)/4π)·P_N(cosh 2√ρ)) for a Band
        window, None otherwise.

    """
    __slots__ = ()


def complexified_projector(model, window, zeta, basis=None):
    """Return the ComplexKernelValue of the window at the TubePoint zeta."""
    if basis is None:
        basis = spectral.enumerate_basis(model, window)
    srho = manifold.sqrt_rho(model, zeta)
    terms = log_abs_squared(basis, zeta)
    log_pi = float(logsumexp(terms))
    log_damped = float(logsumexp(terms - 2 * srho * basis.frequencies))
    closed = None
    if model.kind == constants.Sphere2 and window.kind == constants.Band:
        closed = legendre.zonal_log_kernel(int(window.lower), math.cosh(2 * srho))
    return ComplexKernelValue(log_pi, log_damped, window.label, srho, closed)


def comparison_bounds(value, basis):
    """Return (lower, upper) bounds of log Π from the damped kernel.

    With window edges [a, b]: log P + 2a√ρ ≤ log Π ≤ log P + 2b√ρ.

    """
    a, b = basis.edges()
    return (value.log_damped + 2 * a * value.sqrt_rho,
            value.log_damped + 2 * b * value.sqrt_rho)


def sandwich_holds(value, basis, tolerance=1e-9):
    """Return True if log Π lies between the comparison bounds."""
    lower, upper = comparison_bounds(value, basis)
    return lower - tolerance <= value.log_pi <= upper + tolerance


GrowthFit = collections.namedtuple("GrowthFit",
    "labels rates slope offset log_coefficient residual sqrt_rho sandwich free_slope skipped")
GrowthFit.__doc__ = "The growth of (1/N) log Π over a sequence of windows."
GrowthFit.rates.__doc__ = "The values (1/N)·log Π per window."
GrowthFit.slope.__doc__ = "The fitted s in log Π ≈ s·N + offset + log_coefficient·log N."
GrowthFit.log_coefficient.__doc__ = "The prefactor exponent (m − 1)/2, held fixed in the fit."
GrowthFit.sandwich.__doc__ = "True if every value satisfied the comparison bounds."
GrowthFit.free_slope.__doc__ = "The slope when the log N coefficient is fitted too (NaN below 3 windows)."
GrowthFit.skipped.__doc__ = "The labels whose window holds no eigenvalue."


def prefactor_exponent(model):
    """Return the exponent b of the polynomial prefactor N^b of Π.

    A window holds about N^(m−1) eigenfunctions and the average of
    e^(2λ√ρ cos θ) over their directions decays like N^(−(m−1)/2).

    """
    return (model.dim - 1) / 2


def log_growth_rate(model, labels, zeta, window_factory=spectral.band):
    """Return the GrowthFit of log Π over the windows made from labels.

    The asymptotic slope s is fitted by least squares to
    log Π − b·log N ≈ s·N + a, with b from :func:`prefactor_exponent`.
    Fitting b as well lets the lattice fluctuations of the torus windows leak
    into the slope; that fit is only reported as free_slope.

    Windows without an eigenvalue are skipped. Raises EmptyWindow if fewer
    than two windows are left.

    """
    used = []
    logs = []
    skipped = []
    sandwich = True
    for n in labels:
        n = float(n)
        window = window_factory(n)
        try:
            basis = spectral.enumerate_basis(model, window)
        except errors.EmptyWindow as e:
            logger.info("skipping %s: %s", window.describe(), e)
            skipped.append(n)
            continue
        value = complexified_projector(model, window, zeta, basis)
        used.append(n)
        logs.append(value.log_pi)
        sandwich = sandwich and sandwich_holds(value, basis)
    if len(used) < 2:
        raise errors.EmptyWindow("fewer than two windows hold an eigenvalue")
    n = np.asarray(used)
    logs = np.asarray(logs)
    b = prefactor_exponent(model)
    (slope, offset), residual = util.least_squares((n, np.ones_like(n)), logs - b * np.log(n))
    free = math.nan
    if len(used) > 2:
        free = float(util.least_squares((n, np.ones_like(n), np.log(n)), logs)[0][0])
    srho = manifold.sqrt_rho(model, zeta)
    return GrowthFit(used, list(logs / n), float(slope), float(offset), b,
                     residual, srho, sandwich, free, skipped)
