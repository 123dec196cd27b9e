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
Experiment configuration files.

A configuration is an INI file with an ``[experiment]`` section and an optional
``[thresholds]`` section::

    [experiment]
    kind = RealDensity
    model = sphere
    window = band
    normalization = PaperDensity
    labels = 10, 20, 40
    trials = 200
    resolution_factor = 4
    seed = 20240601
    output = results/real-density
    bit_reproducible = yes
    workers = 1

    [thresholds]
    density_bias = 0.015

Labels are a comma separated list; ``a-b`` expands to all integers from a to b
and ``a-b:s`` to every s-th. The environment variable RANDOMWAVES_OUTPUT
overrides the output directory; nothing else is read from the environment.

"""

import collections
import configparser
import io
import math
import os

from . import constants
from . import errors
from . import manifold
from . import nodal
from . import spectral


#: environment variable overriding the output directory
OUTPUT_ENV = "RANDOMWAVES_OUTPUT"

experiment_names = {
    "RealDensity": constants.RealDensity,
    "StrongLaw": constants.StrongLaw,
    "VarianceScan": constants.VarianceScan,
    "ComplexGrowth": constants.ComplexGrowth,
    "GKLemma": constants.GKLemma,
    "CircleCurrent": constants.CircleCurrent,
    "TorusSliceCurrent": constants.TorusSliceCurrent,
}

normalization_names = {
    "PaperDensity": constants.PaperDensity,
    "UnitEnergy": constants.UnitEnergy,
    "UnitSphere": constants.UnitSphere,
}

window_names = {
    "band": spectral.band,
    "cutoff": spectral.cutoff,
}


def name_of(mapping, value):
    """Return the key of value in a name mapping."""
    for k, v in mapping.items():
        if v == value:
            return k
    raise KeyError(value)


Thresholds = collections.namedtuple("Thresholds", (
    "se_multiple density_constancy density_bias torus_density min_lattice_points "
    "variance_growth strong_law_tail slope_abs g_bound g_real_abs "
    "axis_width axis_fraction conjugation pairing_low pairing_high wall_mass wall_rel "
    "corridor_low corridor_high"),
    defaults=(3.0, 0.03, 0.015, 0.05, 6, 2.0, 0.05, 0.01, 3.0, 1e-3,
              0.25, 0.90, 1e-6, 0.95, 1.05, 4.0, 0.10, 0.5, 20.0))
Thresholds.__doc__ = "PASS/FAIL tolerances; the defaults are the acceptance values."


_fields = (
    "kind model window normalization labels trials resolution resolution_factor "
    "seed output bit_reproducible workers tube_radius sqrt_rho calibration_label "
    "psi slice_x1 thresholds")

_defaults = dict(
    window="band", normalization=constants.PaperDensity, trials=200, resolution=None,
    resolution_factor=nodal.RESOLUTION_FACTOR, seed=0, output="results",
    bit_reproducible=True, workers=1, tube_radius=manifold.MAX_TUBE_RADIUS,
    sqrt_rho=(0.1, 0.2), calibration_label=None, psi="one", slice_x1=0.0,
    thresholds=Thresholds())


class ExperimentConfig(collections.namedtuple("ExperimentConfig", _fields)):
    """An immutable experiment configuration."""
    __slots__ = ()

    def __new__(cls, kind, model, labels, **kwargs):
        args = dict(_defaults)
        args.update(kwargs)
        return super().__new__(cls, kind=kind, model=model, labels=tuple(labels), **args)

    def manifold_model(self):
        """Return the ManifoldModel."""
        return manifold.by_name(self.model, self.tube_radius)

    def make_window(self, label):
        """Return the window for a label."""
        return window_names[self.window](label)

    def resolution_for(self, label):
        """Return the mesh resolution used for a label."""
        if self.resolution is not None:
            return self.resolution
        return max(manifold.MIN_RESOLUTION, int(self.resolution_factor * math.ceil(label)))

    def as_dict(self):
        """Return a JSON-friendly dict with the configuration."""
        return collections.OrderedDict((
            ("kind", name_of(experiment_names, self.kind)),
            ("model", self.model),
            ("window", self.window),
            ("normalization", name_of(normalization_names, self.normalization)),
            ("labels", list(self.labels)),
            ("trials", self.trials),
            ("resolution", self.resolution),
            ("resolution_factor", self.resolution_factor),
            ("seed", self.seed),
            ("output", self.output),
            ("bit_reproducible", self.bit_reproducible),
            ("workers", self.workers),
            ("tube_radius", self.tube_radius),
            ("sqrt_rho", list(self.sqrt_rho)),
            ("calibration_label", self.calibration_label),
            ("psi", self.psi),
            ("slice_x1", self.slice_x1),
            ("thresholds", collections.OrderedDict(self.thresholds._asdict())),
        ))

    @classmethod
    def from_dict(cls, d):
        """Return the configuration from a dict made by as_dict()."""
        d = dict(d)
        kind = experiment_names[d.pop("kind")]
        model = d.pop("model")
        labels = d.pop("labels")
        d["normalization"] = normalization_names[d["normalization"]]
        d["sqrt_rho"] = tuple(d.get("sqrt_rho", ()))
        d["thresholds"] = Thresholds(**d.get("thresholds", {}))
        return cls(kind, model, labels, **d)


def parse_labels(text):
    """Parse a label list like "10, 20, 40", "1-60" or "40-200:4"."""
    labels = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            rng, _, step = part.partition(":")
            lo, hi = rng.split("-", 1)
            step = int(step) if step else 1
            labels.extend(float(n) for n in range(int(lo), int(hi) + 1, step))
        else:
            labels.append(float(part))
    return tuple(labels)


def _floats(text):
    return tuple(float(v) for v in text.split(",") if v.strip())


def _get(section, key, convert, default):
    if key not in section:
        return default
    value = section[key].strip()
    try:
        return convert(value)
    except ValueError as e:
        raise errors.ConfigError("invalid value for {}: {!r}".format(key, value), key) from e


def _boolean(text):
    value = text.lower()
    if value in ("1", "yes", "true", "on"):
        return True
    if value in ("0", "no", "false", "off"):
        return False
    raise ValueError(text)


def _optional(convert):
    return lambda text: None if text.lower() in ("", "none") else convert(text)


def _choice(mapping):
    def convert(text):
        if text not in mapping:
            raise ValueError(text)
        return mapping[text]
    return convert


def loads(text, environ=None):
    """Parse configuration text and return an ExperimentConfig."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as e:
        raise errors.ConfigError("cannot parse configuration: {}".format(e)) from e
    if not parser.has_section("experiment"):
        raise errors.ConfigError("missing [experiment] section")
    s = parser["experiment"]
    for key in ("kind", "model", "labels"):
        if key not in s:
            raise errors.ConfigError("missing key {!r} in [experiment]".format(key), key)
    kind = _get(s, "kind", _choice(experiment_names), None)
    model = _get(s, "model", lambda v: manifold.by_name(v).name, None)
    labels = _get(s, "labels", parse_labels, ())
    kwargs = dict(
        window=_get(s, "window", lambda v: v if v in window_names else _fail(v), "band"),
        normalization=_get(s, "normalization", _choice(normalization_names),
                           _defaults["normalization"]),
        trials=_get(s, "trials", int, _defaults["trials"]),
        resolution=_get(s, "resolution", _optional(int), None),
        resolution_factor=_get(s, "resolution_factor", int, _defaults["resolution_factor"]),
        seed=_get(s, "seed", int, 0),
        output=_get(s, "output", str, _defaults["output"]),
        bit_reproducible=_get(s, "bit_reproducible", _boolean, True),
        workers=_get(s, "workers", int, 1),
        tube_radius=_get(s, "tube_radius", float, _defaults["tube_radius"]),
        sqrt_rho=_get(s, "sqrt_rho", _floats, _defaults["sqrt_rho"]),
        calibration_label=_get(s, "calibration_label", _optional(float), None),
        psi=_get(s, "psi", str, "one"),
        slice_x1=_get(s, "slice_x1", float, 0.0),
    )
    unknown = set(s) - set(kwargs) - {"kind", "model", "labels"}
    if unknown:
        raise errors.ConfigError("unknown keys in [experiment]: {}".format(
            ", ".join(sorted(unknown))), sorted(unknown)[0])
    if parser.has_section("thresholds"):
        t = parser["thresholds"]
        values = {}
        for key in t:
            if key not in Thresholds._fields:
                raise errors.ConfigError("unknown threshold {!r}".format(key), key)
            values[key] = _get(t, key, float, None)
        kwargs["thresholds"] = Thresholds(**values)
    environ = os.environ if environ is None else environ
    if environ.get(OUTPUT_ENV):
        kwargs["output"] = environ[OUTPUT_ENV]
    return ExperimentConfig(kind, model, labels, **kwargs)


def _fail(value):
    raise ValueError(value)


def load(filename, environ=None):
    """Read a configuration file and return an ExperimentConfig."""
    try:
        with open(filename, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise errors.ConfigError("cannot read {}: {}".format(filename, e)) from e
    return loads(text, environ)


def dumps(cfg):
    """Return the configuration as INI text that loads() reads back."""
    parser = configparser.ConfigParser(interpolation=None)
    d = cfg.as_dict()
    thresholds = d.pop("thresholds")
    section = collections.OrderedDict()
    for key, value in d.items():
        if isinstance(value, list):
            value = ", ".join(repr(v) for v in value)
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        elif value is None:
            value = "none"
        section[key] = str(value)
    parser["experiment"] = section
    parser["thresholds"] = collections.OrderedDict((k, repr(v)) for k, v in thresholds.items())
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


_nodal_kinds = (constants.RealDensity, constants.StrongLaw, constants.VarianceScan)

_models = {
    constants.ComplexGrowth: ("torus", "sphere"),
    constants.CircleCurrent: ("circle",),
    constants.TorusSliceCurrent: ("torus",),
}

_min_trials = {
    constants.RealDensity: 30,
    constants.VarianceScan: 30,
    constants.GKLemma: 1000,
    constants.CircleCurrent: 1,
}


def validate(cfg):
    """Check the configuration against the preconditions of the experiment.

    Raises ConfigError naming the first violated rule; returns cfg otherwise.

    """
    if cfg.kind not in experiment_names.values():
        raise errors.ConfigError("unknown experiment kind", "kind")
    name = name_of(experiment_names, cfg.kind)
    allowed = _models.get(cfg.kind)
    if allowed and cfg.model not in allowed:
        raise errors.ConfigError("{} runs on {}, not on the {}".format(
            name, " or ".join(allowed), cfg.model), "model")
    if not cfg.labels:
        raise errors.ConfigError("no labels given", "labels")
    if min(cfg.labels) <= 0:
        raise errors.ConfigError("labels must be positive", "labels")
    if not 0 < cfg.tube_radius <= manifold.MAX_TUBE_RADIUS:
        raise errors.ConfigError("tube_radius must lie in (0, {:g}]".format(
            manifold.MAX_TUBE_RADIUS), "tube_radius")
    if cfg.workers < 1:
        raise errors.ConfigError("workers must be at least 1", "workers")
    if not 0 <= cfg.seed < 2 ** 64:
        raise errors.ConfigError("seed must be a 64-bit unsigned integer", "seed")
    if cfg.trials < _min_trials.get(cfg.kind, 1):
        raise errors.ConfigError("{} needs at least {} trials".format(
            name, _min_trials[cfg.kind]), "trials")
    if any(v <= 0 for v in cfg.thresholds):
        raise errors.ConfigError("thresholds must be positive", "thresholds")

    top = max(cfg.labels)
    if cfg.kind in _nodal_kinds:
        if cfg.resolution is not None:
            if cfg.resolution < manifold.MIN_RESOLUTION:
                raise errors.ConfigError("resolution must be at least {}".format(
                    manifold.MIN_RESOLUTION), "resolution")
            if cfg.resolution < nodal.RESOLUTION_FACTOR * top:
                raise errors.ConfigError(
                    "resolution {} violates the rule resolution ≥ 4N (N = {:g} needs {:g})".format(
                        cfg.resolution, top, nodal.RESOLUTION_FACTOR * top), "resolution")
        elif cfg.resolution_factor < nodal.RESOLUTION_FACTOR:
            raise errors.ConfigError(
                "resolution_factor {} violates the rule resolution ≥ 4N".format(
                    cfg.resolution_factor), "resolution_factor")

    if cfg.kind in (constants.ComplexGrowth, constants.GKLemma):
        if not cfg.sqrt_rho:
            raise errors.ConfigError("no sqrt_rho values given", "sqrt_rho")
        for s in cfg.sqrt_rho:
            if not 0 <= s <= cfg.tube_radius:
                raise errors.ConfigError("sqrt_rho {:g} is outside the tube".format(s), "sqrt_rho")
            if 2 * (top + 2) * s > 600:
                raise errors.ConfigError(
                    "2(N+1)√ρ exceeds 600 for N = {:g}, √ρ = {:g}".format(top, s), "sqrt_rho")
    if cfg.kind == constants.CircleCurrent and cfg.window != "cutoff":
        raise errors.ConfigError("CircleCurrent uses cutoff windows", "window")
    return cfg
