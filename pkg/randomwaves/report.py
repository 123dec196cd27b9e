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
Human-readable reports of result records.

:func:`emit_report` writes summary.txt (one PASS/FAIL table per claim),
result.json and the SVG plots of a record. Plots are skipped with a warning
when Qt cannot be loaded.

"""

import collections
import json
import logging
import os

from . import config
from . import experiment
from . import export

logger = logging.getLogger(__name__)

RESULT_FILENAME = "result.json"
SUMMARY_FILENAME = "summary.txt"


def load_record(directory):
    """Read result.json from a result directory and return the ResultRecord."""
    with open(os.path.join(directory, RESULT_FILENAME), encoding="utf-8") as f:
        return experiment.ResultRecord.from_dict(json.load(f))


def _format(value):
    if value is None:
        return "n/a"
    if isinstance(value, float):
        return "{:.6g}".format(value)
    return str(value)


def _table(header, rows):
    """Return lines of a plain text table."""
    cells = [[_format(v) for v in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return lines


def summary_text(record):
    """Return the summary of the record as text."""
    cfg = record.config
    name = config.name_of(config.experiment_names, cfg.kind)
    lines = [
        "{} on the {} ({} windows), randomwaves {}".format(name, cfg.model, cfg.window, record.version),
        "labels: {}".format(", ".join("{:g}".format(n) for n in cfg.labels)),
        "seed: {}, trials: {}".format(cfg.seed, cfg.trials),
    ]
    if record.wall_clock is not None:
        lines.append("wall clock: {:.1f} s".format(record.wall_clock))
    if record.failed:
        lines += ["", "FAILED: {}".format(record.message)]
    if record.skipped:
        lines += ["", "skipped windows:"]
        lines += ["  N={:g}: {}".format(s["N"], s["reason"]) for s in record.skipped]

    if record.rows:
        header = list(record.rows[0])
        for row in record.rows[1:]:
            header += [k for k in row if k not in header]
        lines += ["", "summary", ""]
        lines += _table(header, [[row.get(k) for k in header] for row in record.rows])

    claims = collections.OrderedDict()
    for c in record.checks:
        claims.setdefault(c.claim, []).append(c)
    for claim, checks in claims.items():
        lines += ["", claim, ""]
        lines += _table(("check", "value", "tolerance", "status"),
                        [(c.name, c.value, c.bound, c.status) for c in checks])

    failed = sum(c.status == experiment.FAIL for c in record.checks)
    passed = sum(c.status == experiment.PASS for c in record.checks)
    lines += ["", "{} passed, {} failed: {}".format(
        passed, failed, "PASS" if record.passed else "FAIL")]
    return "\n".join(lines) + "\n"


def emit_report(record, directory=None):
    """Write the summary, the JSON and the plots of the record.

    directory defaults to the output directory of the configuration. Returns
    the list of written file names. Filesystem errors are not caught.

    """
    if directory is None:
        directory = record.config.output
    os.makedirs(directory, exist_ok=True)
    written = []
    filename = os.path.join(directory, SUMMARY_FILENAME)
    with open(filename, "w", encoding="utf-8") as f:
        f.write(summary_text(record))
    written.append(filename)

    e = export.JsonExporter(record)
    filename = os.path.join(directory, e.suggestedFilename())
    e.save(filename)
    written.append(filename)

    for plot in record.plots:
        e = export.SvgExporter(record, plot)
        try:
            ok = e.successful()
        except ImportError as err:
            logger.warning("not writing plots, Qt is not available: %s", err)
            break
        if not ok:
            logger.warning("could not render plot %s", plot.name)
            continue
        filename = os.path.join(directory, e.suggestedFilename())
        e.save(filename)
        written.append(filename)
    return written
