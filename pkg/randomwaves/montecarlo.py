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
Monte Carlo experiments on real nodal sets.

Trials run independently (optionally on a thread pool); results are always
collected in trial order, so means and variances do not depend on the number
of workers.

"""

import collections
import logging
import math

import numpy as np

from . import ensemble
from . import errors
from . import manifold
from . import nodal
from . import spectral
from . import util

logger = logging.getLogger(__name__)


class StatisticSeries:
    """Per-trial values of a linear statistic X_ψ for one window.

    .. py:attribute:: values

        X_ψ per trial, in trial order.

    .. py:attribute:: measures

        The total nodal measure per trial.

    .. py:attribute:: seeds

        The stream identifier of each trial.

    """
    def __init__(self, label, values, measures=None, seeds=None, name="one"):
        self.label = label
        self.values = np.asarray(values, dtype=np.float64)
        self.measures = None if measures is None else np.asarray(measures, dtype=np.float64)
        self.seeds = seeds
        self.name = name

    def __repr__(self):
        return "<StatisticSeries {} N={:g} mean={:g} se={:g}>".format(
            self.name, self.label, self.mean, self.stderr)

    @property
    def trials(self):
        return len(self.values)

    @property
    def mean(self):
        return float(np.mean(self.values))

    @property
    def variance(self):
        """The empirical variance (with n − 1 in the denominator)."""
        return float(np.var(self.values, ddof=1)) if self.trials > 1 else 0.0

    @property
    def stderr(self):
        """The sample standard deviation divided by √trials."""
        return math.sqrt(self.variance / self.trials) if self.trials else math.nan

    def normalized(self, factor):
        """Return a copy with all values divided by factor."""
        return StatisticSeries(self.label, self.values / factor, self.measures, self.seeds, self.name)


def _trial(spec, mesh, psis, trial):
    sample = ensemble.sample_wave(spec, trial)
    z = nodal.extract_nodal(sample, mesh)
    return [nodal.linear_statistic(z, psi) for psi in psis], z.total_measure


def mc_statistics(spec, psis, trials, mesh, workers=1, names=None):
    """Return a StatisticSeries per test function, from the same samples."""
    if trials < 30:
        raise ValueError("Monte Carlo statistics need at least 30 trials")
    basis = spec.basis()
    nodal.check_resolution(basis, mesh.resolution)
    jobs = [lambda t=t: _trial(spec, mesh, psis, t) for t in range(trials)]
    results = util.run_ordered(jobs, workers)
    measures = [r[1] for r in results]
    seeds = [spec.trial_seed(t) for t in range(trials)]
    names = names or ["psi{}".format(i) for i in range(len(psis))]
    label = spec.window.label
    return [StatisticSeries(label, [r[0][i] for r in results], measures, seeds, names[i])
            for i in range(len(psis))]


def mc_expected_statistic(spec, psi, trials, mesh, workers=1):
    """Return the StatisticSeries of X_ψ over independent samples."""
    return mc_statistics(spec, [psi], trials, mesh, workers)[0]


def mesh_for(model, basis, factor=nodal.RESOLUTION_FACTOR, resolution=None):
    """Return a mesh with resolution max(8, factor·N) for the basis.

    A given resolution is used as is.

    """
    if resolution is None:
        resolution = max(manifold.MIN_RESOLUTION, factor * basis.nominal)
    return manifold.build_mesh(model, resolution)


StrongLawResult = collections.namedtuple("StrongLawResult",
    "labels values averages skipped tail_ratio pooled_stderr dispersion raw measures seeds")
StrongLawResult.__doc__ = "Running averages of normalized linear statistics."
StrongLawResult.values.__doc__ = "(1/λₙ)·X_ψ(fₙ) for each used window."
StrongLawResult.averages.__doc__ = "The running averages R_K."
StrongLawResult.skipped.__doc__ = "Labels of windows skipped because they were empty."
StrongLawResult.tail_ratio.__doc__ = "|R_K − R_{K/2}| / |R_K| for the final K."
StrongLawResult.pooled_stderr.__doc__ = "The standard deviation of the values over √K."
StrongLawResult.dispersion.__doc__ = "The standard deviation of the unaveraged values."
StrongLawResult.raw.__doc__ = "X_ψ(fₙ) before normalization."
StrongLawResult.measures.__doc__ = "The total nodal measure of each sample."
StrongLawResult.seeds.__doc__ = "The stream identifier of each sample."


def strong_law_run(template, labels, psis, resolution_factor=nodal.RESOLUTION_FACTOR,
                   window_factory=spectral.band, workers=1, resolution=None):
    """Return a StrongLawResult per test function.

    template is an EnsembleSpec whose window is replaced by window_factory(n)
    for every label n. One sample (trial 0) is drawn per window; the streams
    differ because the window is part of the seed. Windows without eigenvalues
    are skipped and recorded.

    """
    used, skipped, scales, seeds = [], [], [], []
    jobs = []
    for n in labels:
        spec = template.replace(window=window_factory(n))
        try:
            basis = spec.basis()
        except errors.EmptyWindow:
            logger.info("skipping empty window %s", spec.window.describe())
            skipped.append(n)
            continue
        mesh = mesh_for(spec.model, basis, resolution_factor, resolution)
        used.append(n)
        scales.append(basis.rms_frequency)
        seeds.append(spec.trial_seed(0))
        jobs.append(lambda spec=spec, mesh=mesh: _trial(spec, mesh, psis, 0))
    if not used:
        raise errors.EmptyWindow("all windows of the strong law run are empty")
    rows = util.run_ordered(jobs, workers)
    measures = [r[1] for r in rows]
    scales = np.array(scales)
    results = []
    for i in range(len(psis)):
        raw = np.array([r[0][i] for r in rows])
        values = raw / scales
        k = len(values)
        averages = np.cumsum(values) / np.arange(1, k + 1)
        final = averages[-1]
        half = averages[k // 2 - 1] if k >= 2 else final
        tail = abs(final - half) / abs(final) if final else math.inf
        sd = float(np.std(values, ddof=1)) if k > 1 else 0.0
        results.append(StrongLawResult(used, list(values), list(averages), skipped,
                                       tail, sd / math.sqrt(k), sd, list(raw), measures, seeds))
    return results


VarianceScan = collections.namedtuple("VarianceScan", "labels variances means exponent")
VarianceScan.__doc__ = "Var((1/λ_N)·X_ψ) over a sequence of windows."
VarianceScan.exponent.__doc__ = "The fitted δ in Var ∝ N^(−δ) (informational)."


def variance_scan(template, labels, psi, trials, resolution_factor=nodal.RESOLUTION_FACTOR,
                  window_factory=spectral.band, workers=1, resolution=None):
    """Return (VarianceScan, list of StatisticSeries) over the labels.

    The returned series hold the raw values X_ψ; the scan itself is computed
    from (1/λ_N)·X_ψ.

    """
    raw, series = [], []
    for n in labels:
        spec = template.replace(window=window_factory(n))
        basis = spec.basis()
        mesh = mesh_for(spec.model, basis, resolution_factor, resolution)
        s = mc_expected_statistic(spec, psi, trials, mesh, workers)
        raw.append(s)
        series.append(s.normalized(basis.rms_frequency))
    variances = [s.variance for s in series]
    exponent = math.nan
    if len(labels) >= 2 and all(v > 0 for v in variances):
        (slope, offset), residual = util.least_squares(
            (np.log(labels), np.ones(len(labels))), np.log(variances))
        exponent = -float(slope)
    return VarianceScan(list(labels), variances, [s.mean for s in series], exponent), raw
