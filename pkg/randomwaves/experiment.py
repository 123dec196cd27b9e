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
Running experiments.

:func:`run_experiment` validates a configuration, runs the experiment it
names and returns a :class:`ResultRecord`. Every experiment compares measured
values with a prediction; the outcomes are kept as a list of checks with the
status PASS, FAIL or INFO (informational, never failing).

The record is written to the output directory (result.json and the CSV
tables) also when the experiment stopped with an error; it is then marked as
failed.

"""

import collections
import logging
import math
import time

import numpy as np

from . import complexify
from . import config
from . import constants
from . import ensemble
from . import errors
from . import export
from . import functions
from . import kacrice
from . import logmodulus
from . import manifold
from . import montecarlo
from . import pkginfo
from . import roots
from . import spectral
from . import util

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
INFO = "INFO"

#: number of tube points of a GKLemma run
GK_POINTS = 10

#: the label at which the wall mass of the torus slice current is checked
WALL_LABEL = 100

#: the smallest label at which the fraction of circle roots near the axis is checked
AXIS_LABEL = 20

#: largest imaginary part of the torus slice grid
SLICE_HEIGHT = 0.35

TRIALS_HEADER = ("N", "trial", "X_psi", "total_measure", "seed")
ROOTS_HEADER = ("N", "trial", "root_theta", "root_y", "residual")
GRID_HEADER = ("x", "y", "log_pi_over_N", "discrete_laplacian")


Check = collections.namedtuple("Check", "claim name value bound status")
Check.__doc__ = "The outcome of comparing one value with its tolerance."
Check.bound.__doc__ = "A readable description of the tolerance."
Check.status.__doc__ = "PASS, FAIL or INFO."

Table = collections.namedtuple("Table", "header rows")
Table.__doc__ = "A CSV table: the header and a list of row tuples."

Series = collections.namedtuple("Series", "label x y err style")
Series.__doc__ = "A data series of a plot; style is 'line', 'points' or 'errorbar'."

Plot = collections.namedtuple("Plot", "name title xlabel ylabel series")
Plot.__doc__ = "A plot, written as <name>.svg."


def _plain(value):
    """Return value converted to plain JSON types; non-finite floats become None."""
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return collections.OrderedDict((k, _plain(v)) for k, v in value.items())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


class ResultRecord:
    """The outcome of an experiment.

    .. py:attribute:: rows

        Summary rows (OrderedDicts). Each row holds an "empirical" and a
        "predicted" value; a prediction that does not exist is a string
        starting with "n/a".

    .. py:attribute:: checks

        A list of :class:`Check` tuples.

    .. py:attribute:: tables

        The CSV tables by file name; they are not part of the JSON.

    """
    schema_version = 1

    def __init__(self, cfg, version=pkginfo.version_string):
        self.config = cfg
        self.version = version
        self.wall_clock = None
        self.rows = []
        self.checks = []
        self.skipped = []
        self.plots = []
        self.tables = collections.OrderedDict()
        self.failed = False
        self.message = None

    def __repr__(self):
        return "<ResultRecord {} rows={} checks={}{}>".format(
            config.name_of(config.experiment_names, self.config.kind),
            len(self.rows), len(self.checks), " failed" if self.failed else "")

    @property
    def passed(self):
        """True if the experiment finished and no check failed."""
        return not self.failed and all(c.status != FAIL for c in self.checks)

    def add_row(self, **fields):
        self.rows.append(collections.OrderedDict(fields))

    def check(self, claim, name, value, bound, ok):
        """Add a PASS or FAIL check."""
        self.checks.append(Check(claim, name, value, bound, PASS if ok else FAIL))

    def inform(self, claim, name, value, bound=""):
        """Add an informational check."""
        self.checks.append(Check(claim, name, value, bound, INFO))

    def skip(self, label, reason):
        self.skipped.append(collections.OrderedDict((("N", label), ("reason", reason))))

    def table(self, name, header):
        """Return the row list of the named table, creating it if needed."""
        if name not in self.tables:
            self.tables[name] = Table(tuple(header), [])
        return self.tables[name].rows

    def as_dict(self):
        """Return the record as a JSON-friendly dict with a fixed key order."""
        return _plain(collections.OrderedDict((
            ("schema_version", self.schema_version),
            ("version", self.version),
            ("experiment", config.name_of(config.experiment_names, self.config.kind)),
            ("config", self.config.as_dict()),
            ("wall_clock", self.wall_clock),
            ("failed", self.failed),
            ("message", self.message),
            ("passed", self.passed),
            ("skipped", self.skipped),
            ("rows", self.rows),
            ("checks", [c._asdict() for c in self.checks]),
            ("plots", [collections.OrderedDict((
                ("name", p.name), ("title", p.title),
                ("xlabel", p.xlabel), ("ylabel", p.ylabel),
                ("series", [s._asdict() for s in p.series]))) for p in self.plots]),
        )))

    @classmethod
    def from_dict(cls, d):
        """Return a ResultRecord from a dict made by as_dict() (without tables)."""
        if d.get("schema_version") != cls.schema_version:
            raise ValueError("unsupported schema version: {!r}".format(d.get("schema_version")))
        record = cls(config.ExperimentConfig.from_dict(d["config"]), d["version"])
        record.wall_clock = d.get("wall_clock")
        record.failed = d.get("failed", False)
        record.message = d.get("message")
        record.skipped = [collections.OrderedDict(s) for s in d.get("skipped", [])]
        record.rows = [collections.OrderedDict(r) for r in d.get("rows", [])]
        record.checks = [Check(**c) for c in d.get("checks", [])]
        record.plots = [Plot(p["name"], p["title"], p["xlabel"], p["ylabel"],
                             [Series(**s) for s in p["series"]]) for p in d.get("plots", [])]
        return record


def _spec(cfg, label):
    return ensemble.EnsembleSpec(cfg.manifold_model(), cfg.make_window(label),
                                 cfg.normalization, cfg.seed)


def _window_factory(cfg):
    return config.window_names[cfg.window]


def _reference_point(model):
    """Return a generic real chart point of the model."""
    if model.kind == constants.Circle:
        return 0.3
    elif model.kind == constants.Torus2:
        return np.array((0.1, 0.2))
    return np.array((1.0, 0.5))


def kac_rice_total(model, basis):
    """Return the Kac-Rice expected total nodal measure of the window.

    All windows are invariant under the isometries of the model, so the
    density is constant and one point suffices.

    """
    jet = spectral.projector_jet(model, basis.window, _reference_point(model), basis=basis)
    return kacrice.density(jet).density * model.volume


def _lattice_points(basis):
    return int(np.count_nonzero(basis.kinds == spectral.COS))


def corridor(record, model, name, measures, lam):
    """Compare total measure / λ of every single sample with the corridor thresholds.

    The bounds are checked on the sphere, where the windows hold exact
    eigenfunctions; on the other models the range is only reported.

    """
    t = record.config.thresholds
    ratios = np.asarray(measures, dtype=np.float64) / lam
    low, high = float(np.min(ratios)), float(np.max(ratios))
    bound = "[{:g}, {:g}]".format(t.corridor_low, t.corridor_high)
    if model.kind == constants.Sphere2:
        record.check("corridor", name + " smallest measure / λ", low, bound, low >= t.corridor_low)
        record.check("corridor", name + " largest measure / λ", high, bound, high <= t.corridor_high)
    else:
        record.inform("corridor", name + " smallest measure / λ", low, bound)
        record.inform("corridor", name + " largest measure / λ", high, bound)


# RealDensity

def real_density(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    names = ["one"] + functions.mean_zero_names(model)
    if cfg.psi not in names:
        names.append(cfg.psi)
    psis = [functions.named(model, n) for n in names]
    trials = record.table("trials.csv", TRIALS_HEADER)
    used = []
    last = None
    for label in cfg.labels:
        spec = _spec(cfg, label)
        try:
            basis = spec.basis()
        except errors.EmptyWindow as e:
            logger.info("skipping %s: %s", spec.window.describe(), e)
            record.skip(label, str(e))
            continue
        mesh = manifold.build_mesh(model, cfg.resolution_for(label))
        logger.info("RealDensity %s: d = %d, resolution %d", spec.window.describe(),
                    basis.d, mesh.resolution)
        series = dict(zip(names, montecarlo.mc_statistics(
            spec, psis, cfg.trials, mesh, cfg.workers, names)))
        one = series["one"]
        lam = basis.rms_frequency
        predicted = kacrice.expected_measure(model, basis.window, functions.one, mesh, basis)
        alternative = kacrice.dimension_constant(model.dim) * lam * model.volume
        record.add_row(N=label, d=basis.d, lam=lam, empirical=one.mean, stderr=one.stderr,
                       predicted=predicted, ratio=one.mean / predicted,
                       per_lambda=one.mean / lam, predicted_per_lambda=predicted / lam,
                       c_m_prediction=alternative)
        for i, (x, measure, seed) in enumerate(zip(series[cfg.psi].values, one.measures, one.seeds)):
            trials.append((label, i, x, measure, seed))

        name = "N={:g}".format(label)
        eligible = True
        if model.kind == constants.Torus2:
            eligible = _lattice_points(basis) >= t.min_lattice_points
            bound = t.torus_density
            if eligible:
                record.check("Kac-Rice", name, one.mean / predicted - 1, "|ratio − 1| ≤ {:g}".format(bound),
                             abs(one.mean / predicted - 1) <= bound)
            else:
                record.inform("Kac-Rice", name + " (few lattice points)", one.mean / predicted - 1)
        else:
            bound = max(t.se_multiple * one.stderr, t.density_bias * predicted)
            record.check("Kac-Rice", name, one.mean - predicted,
                         "|mean − prediction| ≤ {:.6g}".format(bound),
                         abs(one.mean - predicted) <= bound)
        record.inform("normalization", name + " C_m·λ·vol / Kac-Rice", alternative / predicted)
        corridor(record, model, name, one.measures, lam)
        if eligible:
            used.append((label, one.mean / lam, one.stderr / lam, predicted / lam))
        last = (label, series, predicted)

    if last is None:
        raise errors.EmptyWindow("no window of the run holds an eigenvalue")
    if len(used) >= 2:
        values = np.array([u[1] for u in used])
        spread = float(np.max(np.abs(values / np.mean(values) - 1)))
        record.check("constancy", "mean measure / λ across N", spread,
                     "≤ {:g}".format(t.density_constancy), spread <= t.density_constancy)

    label, series, predicted = last
    for n in functions.mean_zero_names(model):
        s = series[n]
        bound = t.se_multiple * s.stderr + 1e-9 * predicted
        record.check("uniformity", "{} at N={:g}".format(n, label), s.mean,
                     "|mean| ≤ {:g} SE = {:.6g}".format(t.se_multiple, bound), abs(s.mean) <= bound)

    if used:
        x = [u[0] for u in used]
        record.plots.append(Plot("density", "Nodal measure per frequency", "N", "measure / λ", [
            Series("Monte Carlo", x, [u[1] for u in used], [u[2] for u in used], "errorbar"),
            Series("Kac-Rice", x, [u[3] for u in used], None, "line"),
        ]))


# StrongLaw

def strong_law(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    names = ["one"] + functions.mean_zero_names(model)
    psis = [functions.named(model, n) for n in names]
    results = montecarlo.strong_law_run(_spec(cfg, cfg.labels[0]), cfg.labels, psis,
                                        cfg.resolution_factor, _window_factory(cfg),
                                        cfg.workers, cfg.resolution)
    one = results[0]
    for label in one.skipped:
        record.skip(label, "empty window")
    trials = record.table("trials.csv", TRIALS_HEADER)
    for label, raw, measure, seed in zip(one.labels, one.raw, one.measures, one.seeds):
        trials.append((label, 0, raw, measure, seed))

    windows = [_window_factory(cfg)(n) for n in one.labels]
    predictions = []
    lams = []
    for window, value, average in zip(windows, one.values, one.averages):
        basis = spectral.enumerate_basis(model, window)
        lams.append(basis.rms_frequency)
        predicted = kac_rice_total(model, basis) / basis.rms_frequency
        predictions.append(predicted)
        record.add_row(N=window.label, empirical=value, running_average=average,
                       predicted=predicted)

    record.check("strong law", "tail ratio |R_K − R_K/2| / R_K, K={}".format(len(one.values)),
                 one.tail_ratio, "≤ {:g}".format(t.strong_law_tail),
                 one.tail_ratio <= t.strong_law_tail)
    corridor(record, model, "all windows", one.measures, np.asarray(lams))
    record.inform("strong law", "R_K / Kac-Rice of the last window",
                  one.averages[-1] / predictions[-1])
    record.inform("dispersion", "standard deviation of (1/λ)·X", one.dispersion)
    for name, r in zip(names[1:], results[1:]):
        bound = t.se_multiple * r.pooled_stderr + 1e-9
        record.check("uniformity", "R_K of " + name, r.averages[-1],
                     "|R_K| ≤ {:g} pooled SE = {:.6g}".format(t.se_multiple, bound),
                     abs(r.averages[-1]) <= bound)

    k = list(range(1, len(one.values) + 1))
    record.plots.append(Plot("running_averages", "Running averages", "K", "R_K",
        [Series(name, k, r.averages, None, "line") for name, r in zip(names, results)]
        + [Series("Kac-Rice", k, predictions, None, "points")]))


# VarianceScan

def variance_scan(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    psi = functions.named(model, cfg.psi)
    scan, series = montecarlo.variance_scan(_spec(cfg, cfg.labels[0]), cfg.labels, psi,
                                            cfg.trials, cfg.resolution_factor,
                                            _window_factory(cfg), cfg.workers, cfg.resolution)
    trials = record.table("trials.csv", TRIALS_HEADER)
    for label, s in zip(scan.labels, series):
        for i, (x, measure, seed) in enumerate(zip(s.values, s.measures, s.seeds)):
            trials.append((label, i, x, measure, seed))
        lam = spectral.enumerate_basis(model, _window_factory(cfg)(label)).rms_frequency
        corridor(record, model, "N={:g}".format(label), s.measures, lam)
    for label, mean, variance in zip(scan.labels, scan.means, scan.variances):
        record.add_row(N=label, empirical=variance, mean=mean,
                       predicted="n/a: only boundedness is predicted")
    first = scan.variances[0]
    for label, variance in zip(scan.labels[1:], scan.variances[1:]):
        bound = t.variance_growth * first
        record.check("variance", "N={:g}".format(label), variance,
                     "≤ {:g} × {:.6g}".format(t.variance_growth, first), variance <= bound)
    record.inform("variance", "decay exponent δ", scan.exponent)
    record.plots.append(Plot("variance", "Variance of the normalized nodal measure", "N",
                             "Var((1/λ)·X)",
                             [Series(cfg.psi, scan.labels, scan.variances, None, "points")]))


# ComplexGrowth

def _growth_point(model, s):
    if model.kind == constants.Sphere2:
        return manifold.sphere_tube_point(math.cosh(2 * s), math.pi / 2, 0.3)
    elif model.kind == constants.Torus2:
        a = 0.3
        return manifold.TubePoint((0.1, 0.2), (s * math.cos(a), s * math.sin(a)))
    return manifold.TubePoint(0.3, s)


def complex_growth(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    series = []
    for s in cfg.sqrt_rho:
        zeta = _growth_point(model, s)
        fit = complexify.log_growth_rate(model, cfg.labels, zeta, _window_factory(cfg))
        if not record.skipped:
            for label in fit.skipped:
                record.skip(label, "empty window")
                record.inform("empty window", "N={:g}".format(label), 0.0, "skipped")
        for label, rate in zip(fit.labels, fit.rates):
            record.add_row(sqrt_rho=s, N=label, empirical=rate, predicted=2 * s)
        name = "√ρ={:g}".format(s)
        record.check("growth", "slope at " + name, fit.slope - 2 * s,
                     "|slope − 2√ρ| ≤ {:g}".format(t.slope_abs), abs(fit.slope - 2 * s) <= t.slope_abs)
        ceiling = 2 * s + 2 / max(fit.labels)
        record.check("growth", "slope ceiling at " + name, fit.slope,
                     "≤ 2√ρ + 2/N = {:.6g}".format(ceiling), fit.slope <= ceiling)
        record.check("comparison", "damped kernel bounds at " + name, float(fit.sandwich),
                     "holds for every N", fit.sandwich)
        record.inform("growth", "fit residual at " + name, fit.residual)
        record.inform("growth", "slope with fitted log N term at " + name, fit.free_slope)
        series.append(Series(name, fit.labels, fit.rates, None, "points"))
        series.append(Series("2√ρ={:g}".format(2 * s), fit.labels, [2 * s] * len(fit.labels),
                             None, "line"))
    record.plots.append(Plot("slopes", "Growth of the complexified projector", "N",
                             "(1/N) log Π", series))


# GKLemma

def gk_points(model, sqrt_rho, count=GK_POINTS):
    """Return count tube points; the first is real, the others move out to max(sqrt_rho)."""
    top = max(sqrt_rho)
    points = []
    for i in range(count):
        s = top * i / (count - 1)
        a = 0.11 + 0.37 * i
        if model.kind == constants.Torus2:
            points.append(manifold.TubePoint((a % 1, (0.61 * i) % 1), (s * math.cos(a), s * math.sin(a))))
        elif model.kind == constants.Sphere2:
            points.append(manifold.sphere_tube_point(math.cosh(2 * s), 0.3 + 0.25 * i, a))
        else:
            points.append(manifold.TubePoint(a, s))
    return points


def gk_lemma(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    reference = -np.euler_gamma - math.log(2)
    for label in cfg.labels:
        spec = _spec(cfg, label)
        try:
            spec.basis()
        except errors.EmptyWindow as e:
            record.skip(label, str(e))
            continue
        for i, zeta in enumerate(gk_points(model, cfg.sqrt_rho)):
            stats = logmodulus.expected_log_modulus(spec, zeta, cfg.trials, cfg.workers)
            srho = manifold.sqrt_rho(model, zeta)
            name = "N={:g} point {} (√ρ={:.3g})".format(label, i, srho)
            record.add_row(N=label, point=i, sqrt_rho=srho, empirical=stats.difference,
                           stderr=stats.stderr, predicted=stats.g_factor,
                           g_closed=stats.g_closed, g_corrected=stats.g_corrected)
            bound = t.se_multiple * stats.stderr
            record.check("decomposition", name, stats.difference - stats.g_factor,
                         "≤ {:g} SE = {:.6g}".format(t.se_multiple, bound),
                         abs(stats.difference - stats.g_factor) <= bound)
            record.check("bounded G", name, stats.g_factor, "|G| ≤ {:g}".format(t.g_bound),
                         abs(stats.g_factor) <= t.g_bound)
            record.inform("closed form", name + " Γ′(1/2) form − quadrature",
                          stats.g_closed - stats.g_factor)
            record.inform("closed form", name + " corrected − quadrature",
                          stats.g_corrected - stats.g_factor)
            if srho == 0:
                record.check("real point", "N={:g} G = −γ − log 2".format(label),
                             stats.g_factor - reference, "≤ {:g}".format(t.g_real_abs),
                             abs(stats.g_factor - reference) <= t.g_real_abs)
                bound = t.g_real_abs + t.se_multiple * stats.stderr
                record.check("real point", "N={:g} Monte Carlo −γ − log 2".format(label),
                             stats.difference - reference, "≤ {:.6g}".format(bound),
                             abs(stats.difference - reference) <= bound)


# CircleCurrent

def _clouds(cfg, label):
    spec = _spec(cfg, label)
    spec.basis()
    jobs = [lambda t=t: roots.circle_complex_roots(ensemble.sample_wave(spec, t))
            for t in range(cfg.trials)]
    return spec, util.run_ordered(jobs, cfg.workers)


def circle_current(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    psi = functions.StripBump()
    table = record.table("roots.csv", ROOTS_HEADER)
    clouds = collections.OrderedDict()
    for label in cfg.labels:
        spec, result = _clouds(cfg, label)
        clouds[label] = (spec, result)
        for c in result:
            for r, residual in zip(c.roots, c.residuals):
                table.append((label, c.trial, r.real, r.imag, residual))

    calibration = cfg.calibration_label or max(cfg.labels)
    if calibration in clouds:
        reference = clouds[calibration][1]
    else:
        reference = _clouds(cfg, calibration)[1]
    constant = roots.calibrate(roots.current_pairing(reference, psi).empirical, psi)
    record.inform("current", "calibrated constant / (1/2π) at N={:g}".format(calibration),
                  constant / roots.LIMIT_CONSTANT)

    fractions = []
    series = []
    for label, (spec, result) in clouds.items():
        n = int(label)
        counts = [c.count for c in result]
        record.check("root count", "N={:g}".format(label), float(min(counts)),
                     "every sample has {} roots".format(2 * n), all(k == 2 * n for k in counts))
        defect = max(roots.conjugation_defect(c) for c in result)
        record.check("conjugation", "N={:g}".format(label), defect,
                     "≤ {:g}".format(t.conjugation), defect <= t.conjugation)
        fraction = roots.fraction_near_axis(result, t.axis_width)
        fractions.append(fraction)
        exact = roots.exact_prediction(model, spec.window, psi)
        pairing = roots.current_pairing(result, psi, constant, exact)
        limit = roots.current_pairing(result, psi)
        record.add_row(N=label, empirical=pairing.empirical, stderr=pairing.stderr,
                       predicted=pairing.predicted, ratio=pairing.ratio,
                       limit_ratio=limit.ratio, exact=exact,
                       exact_ratio=pairing.empirical / exact if exact else None,
                       fraction_near_axis=fraction)
        record.check("pairing", "calibrated ratio N={:g}".format(label), pairing.ratio,
                     "[{:g}, {:g}]".format(t.pairing_low, t.pairing_high),
                     t.pairing_low <= pairing.ratio <= t.pairing_high)
        record.inform("pairing", "ratio to the limit 1/2π N={:g}".format(label), limit.ratio)
        if exact:
            record.inform("pairing", "ratio to the finite-N prediction N={:g}".format(label),
                          pairing.empirical / exact)
        first = result[0]
        series.append(Series("N={:g}".format(label), list(first.theta), list(first.y), None, "points"))

    axis = [(label, f) for label, f in zip(clouds, fractions) if label >= AXIS_LABEL]
    if axis:
        label, fraction = axis[0]
        record.check("near axis", "fraction |y| < {:g} at N={:g}".format(t.axis_width, label),
                     fraction, "≥ {:g}".format(t.axis_fraction), fraction >= t.axis_fraction)
    else:
        record.inform("near axis", "fraction |y| < {:g} at N={:g}".format(t.axis_width, cfg.labels[0]),
                      fractions[0], "checked from N={:g} on".format(AXIS_LABEL))
    increasing = all(b >= a for a, b in zip(fractions, fractions[1:]))
    record.check("near axis", "fraction increases with N", float(increasing),
                 "non-decreasing", increasing)
    record.plots.append(Plot("roots", "Complex zeros (first sample)", "θ", "y", series))


# TorusSliceCurrent

def torus_slice(cfg, record):
    model = cfg.manifold_model()
    t = cfg.thresholds
    x, y = roots.slice_grid(min(SLICE_HEIGHT, model.tube_radius))
    slices = roots.torus_slice_current(model, cfg.labels, cfg.slice_x1, x, y, _window_factory(cfg))
    done = [s.label for s in slices]
    for label in cfg.labels:
        if label not in done:
            record.skip(label, "empty window")
            record.inform("empty window", "N={:g}".format(label), 0.0, "skipped")
    if not slices:
        raise errors.EmptyWindow("no window of the run holds an eigenvalue")
    series = []
    for s in slices:
        table = record.table("grid_N{:g}.csv".format(s.label), GRID_HEADER)
        for i, xi in enumerate(s.x):
            for j, yj in enumerate(s.y):
                table.append((xi, yj, s.log_pi_over_n[i, j], s.laplacian[i, j]))
        record.add_row(N=s.label, empirical=s.wall_mass, predicted=t.wall_mass,
                       off_axis_max=s.off_axis_max, asymmetry=s.asymmetry, level_gap=s.level_gap)
        record.inform("off axis", "N={:g} gap of the two largest |k₂|".format(s.label), s.level_gap)
        # the rows at the ends of the y range have no Laplacian
        inner = np.isfinite(s.laplacian).all(axis=0)
        profile = np.mean(s.laplacian[:, inner], axis=0)
        series.append(Series("N={:g}".format(s.label), list(s.y[inner]), list(profile), None, "line"))

    for a, b in zip(slices, slices[1:]):
        record.check("off axis", "N={:g} below N={:g}".format(b.label, a.label), b.off_axis_max,
                     "< {:.6g}".format(a.off_axis_max), b.off_axis_max < a.off_axis_max)
    wall = min(slices, key=lambda s: abs(s.label - WALL_LABEL))
    error = abs(wall.wall_mass / t.wall_mass - 1)
    record.check("wall mass", "N={:g}".format(wall.label), wall.wall_mass,
                 "{:g} ± {:g}%".format(t.wall_mass, 100 * t.wall_rel), error <= t.wall_rel)
    record.plots.append(Plot("slice_profile", "(1/N)·Δ log Π averaged over x₂", "y₂",
                             "(1/N) Δ log Π", series))


_runners = {
    constants.RealDensity: real_density,
    constants.StrongLaw: strong_law,
    constants.VarianceScan: variance_scan,
    constants.ComplexGrowth: complex_growth,
    constants.GKLemma: gk_lemma,
    constants.CircleCurrent: circle_current,
    constants.TorusSliceCurrent: torus_slice,
}


def run_experiment(cfg, write=True):
    """Validate the configuration, run the experiment and return its ResultRecord.

    Raises ConfigError before any computation if the configuration is invalid.
    Errors of the numerical modules stop the experiment; the partial record is
    marked as failed and returned. With write=True the record is written to
    the output directory.

    """
    config.validate(cfg)
    record = ResultRecord(cfg)
    name = config.name_of(config.experiment_names, cfg.kind)
    logger.info("starting %s on the %s, labels %s", name, cfg.model,
                ", ".join("{:g}".format(n) for n in cfg.labels))
    start = time.perf_counter()
    try:
        _runners[cfg.kind](cfg, record)
    except errors.Error as e:
        logger.error("%s failed: %s", name, e)
        record.failed = True
        record.message = "{}: {}".format(type(e).__name__, e)
    elapsed = time.perf_counter() - start
    logger.info("%s finished in %.1f s", name, elapsed)
    if not cfg.bit_reproducible:
        record.wall_clock = elapsed
    if write:
        export.write_record(record, cfg.output)
    return record
