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
Small utilities used by several modules.
"""

import math

import numpy as np


def run_ordered(functions, workers=1):
    """Call all functions and return their results in order.

    With more than one worker the calls are distributed over a thread pool
    (see the backgroundjob module, which needs Qt); otherwise they run here.

    """
    functions = list(functions)
    if workers <= 1 or len(functions) <= 1:
        return [f() for f in functions]
    from . import backgroundjob
    return backgroundjob.run_all(functions, workers)


def mean_and_error(values):
    """Return (mean, standard error, sample variance) of the values."""
    values = np.asarray(values, dtype=np.float64)
    n = len(values)
    mean = float(np.mean(values))
    var = float(np.var(values, ddof=1)) if n > 1 else 0.0
    return mean, math.sqrt(var / n) if n else math.nan, var


def discrete_laplacian(grid, h0, h1, periodic0=False):
    """Return the five-point Laplacian of a 2-D grid.

    Axis 0 has spacing h0 and is periodic if periodic0 is set; axis 1 has
    spacing h1. Boundary rows of a non-periodic axis are set to NaN.

    """
    g = np.asarray(grid, dtype=np.float64)
    if periodic0:
        d0 = (np.roll(g, -1, axis=0) - 2 * g + np.roll(g, 1, axis=0)) / (h0 * h0)
    else:
        d0 = np.full_like(g, np.nan)
        d0[1:-1] = (g[2:] - 2 * g[1:-1] + g[:-2]) / (h0 * h0)
    d1 = np.full_like(g, np.nan)
    d1[:, 1:-1] = (g[:, 2:] - 2 * g[:, 1:-1] + g[:, :-2]) / (h1 * h1)
    return d0 + d1


def least_squares(columns, values):
    """Fit values ≈ Σ pᵢ·columnsᵢ and return (parameters, rms residual)."""
    a = np.stack([np.asarray(c, dtype=np.float64) for c in columns], axis=-1)
    b = np.asarray(values, dtype=np.float64)
    params, *_ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.sqrt(np.mean((a @ params - b) ** 2)))
    return params, residual
