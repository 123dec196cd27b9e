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
Numerical experiments on the zero sets of random waves.

A random wave is a Gaussian combination of Laplace eigenfunctions on a model
manifold (the circle, the flat torus or the round sphere) with frequencies in
a window. The package computes the Kac-Rice density of the real zero set and
checks it against Monte Carlo nodal measures, and follows the waves into the
complex tube around the manifold, where the growth of the complexified
projector kernel and the distribution of complex zeros are studied.

Models are created in the manifold module, windows and eigenbases in the
spectral module, ensembles in the ensemble module. The experiment module runs
complete, configured experiments; the cli module is the command line.

"""

from .constants import (
    # manifold kinds:
    Circle,
    Torus2,
    Sphere2,


    # window kinds:
    Band,
    Cutoff,
    Modes,


    # normalizations:
    PaperDensity,
    UnitEnergy,
    UnitSphere,

)

from .manifold import circle, torus, sphere
from .spectral import band, cutoff, modes, enumerate_basis
from .ensemble import EnsembleSpec, sample_wave
from .errors import Error
from .pkginfo import version_string
