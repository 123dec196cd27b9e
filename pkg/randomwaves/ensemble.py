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
Gaussian random waves.

A wave is f = Σ cⱼ φⱼ over the eigenbasis of a window. The coefficients are
drawn from a counter-based generator (Philox) seeded by the master seed, the
model, the window and the trial index, so every trial has its own stream,
independent of the order in which trials are computed.

A :class:`WaveSample` keeps the standard normal draw z and a scale separately;
the coefficients are scale·z. Zero sets only depend on z.

"""

import collections
import math

import numpy as np
from scipy.special import digamma

from . import constants
from . import spectral


class EnsembleSpec:
    """A Gaussian ensemble on a window of a model.

    .. py:attribute:: normalization

        PaperDensity (coefficient variance 1/(2d)), UnitEnergy (1/d) or
        UnitSphere (coefficients uniform on the unit sphere).

    """
    def __init__(self, model, window, normalization=constants.PaperDensity, master_seed=0):
        if normalization not in (constants.PaperDensity, constants.UnitEnergy, constants.UnitSphere):
            raise ValueError("unknown normalization: {!r}".format(normalization))
        if not 0 <= master_seed < 2 ** 64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        self.model = model
        self.window = window
        self.normalization = normalization
        self.master_seed = int(master_seed)
        self._basis = None

    def __repr__(self):
        return "<EnsembleSpec {} {} seed={}>".format(
            self.model.name, self.window.describe(), self.master_seed)

    def basis(self):
        """Return the EigenBasis (enumerated once)."""
        if self._basis is None:
            self._basis = spectral.enumerate_basis(self.model, self.window)
        return self._basis

    def replace(self, **kwargs):
        """Return a copy with some attributes changed."""
        args = dict(model=self.model, window=self.window,
                    normalization=self.normalization, master_seed=self.master_seed)
        args.update(kwargs)
        return type(self)(**args)

    def sigma2(self):
        """Return the coefficient variance E cⱼ²."""
        d = self.basis().d
        if self.normalization == constants.PaperDensity:
            return 1 / (2 * d)
        return 1 / d

    def log_variance(self):
        """Return the log of the variance scale of f, so that
        E log|f|² = log_variance() + E log|⟨z, Φ⟩|² with z standard normal.

        """
        d = self.basis().d
        if self.normalization == constants.PaperDensity:
            return -math.log(2 * d)
        elif self.normalization == constants.UnitEnergy:
            return -math.log(d)
        # E log |z|² for a d-dimensional standard normal z
        return -(math.log(2) + float(digamma(d / 2)))

    def seed_sequence(self, trial_index):
        """Return the numpy SeedSequence of the trial."""
        key = (self.model.kind,) + self.window.seed_key() + (int(trial_index),)
        return np.random.SeedSequence(self.master_seed, spawn_key=key)

    def trial_seed(self, trial_index):
        """Return a 64-bit integer identifying the stream of the trial."""
        return int(self.seed_sequence(trial_index).generate_state(1, np.uint64)[0])

    def generator(self, trial_index):
        """Return the numpy Generator of the trial."""
        return np.random.Generator(np.random.Philox(self.seed_sequence(trial_index)))


class WaveSample:
    """A random wave: the draw z, a scale and the basis.

    .. py:attribute:: z

        The standard normal draw (length d).

    .. py:attribute:: scale

        The coefficients are scale·z.

    """
    def __init__(self, basis, z, scale=1.0, trial=None):
        z = np.asarray(z, dtype=np.float64)
        if z.shape != (basis.d,):
            raise ValueError("expected {} coefficients, got {}".format(basis.d, z.shape))
        self.basis = basis
        self.z = z
        self.scale = float(scale)
        self.trial = trial

    def __repr__(self):
        return "<WaveSample {} trial={}>".format(self.basis, self.trial)

    @property
    def coefficients(self):
        return self.scale * self.z

    def scaled(self, t):
        """Return the sample multiplied by t > 0."""
        if not t > 0:
            raise ValueError("scale factor must be positive")
        return WaveSample(self.basis, self.z, self.scale * t, self.trial)


def _scale(spec, z):
    if spec.normalization == constants.UnitSphere:
        return 1 / float(np.linalg.norm(z))
    return math.sqrt(spec.sigma2())


def sample_wave(spec, trial_index):
    """Return the WaveSample of the trial."""
    basis = spec.basis()
    z = spec.generator(trial_index).standard_normal(basis.d)
    return WaveSample(basis, z, _scale(spec, z), trial_index)


def sample_coefficients(spec, trials, start=0):
    """Return the coefficient vectors of trials start..start+trials-1 as rows.

    Row t equals sample_wave(spec, start + t).coefficients.

    """
    d = spec.basis().d
    out = np.empty((trials, d))
    for t in range(trials):
        z = spec.generator(start + t).standard_normal(d)
        out[t] = _scale(spec, z) * z
    return out


def eval_wave(sample, x):
    """Return (value, gradient) of the wave at the chart point(s) x."""
    values, grads = spectral.eval_basis(sample.basis, x)
    c = sample.coefficients
    return values @ c, np.einsum("...jm,j->...m", grads, c)


CovarianceEstimate = collections.namedtuple("CovarianceEstimate", "mean stderr trials")
CovarianceEstimate.__doc__ = "A Monte Carlo estimate of E f(x)f(y)."


def empirical_covariance(spec, x, y, trials):
    """Return the Monte Carlo estimate of E f(x)f(y) over the given trials.

    The estimate converges to σ²·Π(x, y).

    """
    if trials < 1000:
        raise ValueError("empirical_covariance needs at least 1000 trials")
    basis = spec.basis()
    c = sample_coefficients(spec, trials)
    vx = c @ spectral.eval_basis(basis, x, gradient=False)
    vy = c @ spectral.eval_basis(basis, y, gradient=False)
    prod = vx * vy
    return CovarianceEstimate(
        float(np.mean(prod)), float(np.std(prod, ddof=1) / math.sqrt(trials)), trials)
