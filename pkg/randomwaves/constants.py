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
Constant values.
"""


# manifold kinds:
Circle  = 1     #: the unit circle, volume 2π
Torus2  = 2     #: the flat torus ℝ²/ℤ², volume 1
Sphere2 = 3     #: the round unit sphere, volume 4π


# frequency window kinds:
Band    = 1     #: frequencies in [N, N+1] (one cluster on the circle and sphere)
Cutoff  = 2     #: frequencies in [0, λ], including the constant
Modes   = 4     #: an explicit list of modes


# coefficient normalizations:
PaperDensity = 1    #: i.i.d. normal coefficients with variance 1/(2d)
UnitEnergy   = 2    #: i.i.d. normal coefficients with variance 1/d
UnitSphere   = 3    #: coefficient vector uniform on the unit sphere


# projector kernel methods:
DirectSum  = 1      #: sum over the eigenbasis
ClosedForm = 2      #: addition theorem (sphere) or lattice sum (torus)


# Gaussian norm mean methods:
ClosedForm1D = 1    #: half-normal mean
ClosedForm2D = 2    #: complete elliptic integral
Quadrature   = 3    #: adaptive quadrature over the unit circle of directions
MonteCarlo   = 4    #: sampling fallback


# experiments:
RealDensity       = 1   #: Monte Carlo nodal measure against Kac-Rice
StrongLaw         = 2   #: running averages over consecutive bands
VarianceScan      = 3   #: variance of the normalized nodal measure
ComplexGrowth     = 4   #: growth of the complexified projector in the tube
GKLemma           = 5   #: expected log modulus against log Π + G
CircleCurrent     = 6   #: complex roots of circle waves
TorusSliceCurrent = 7   #: Laplacian of log Π on a complex line of the torus
