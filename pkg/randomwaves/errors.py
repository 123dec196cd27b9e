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
Exceptions raised by the randomwaves package.

All of them inherit from :class:`Error`, so a caller running an experiment can
catch that single class. Plain argument mistakes raise ValueError.

"""


class Error(Exception):
    """Base class for all randomwaves errors."""


class EmptyWindow(Error):
    """No eigenvalue lies in the requested frequency window."""
    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class DegenerateField(Error):
    """The field has zero variance at a point, so the zero density is undefined."""


class IndefiniteCovariance(Error):
    """The conditional gradient covariance has a clearly negative eigenvalue."""


class ResolutionTooCoarse(Error):
    """The mesh is too coarse for the frequency of the wave."""
    def __init__(self, message, resolution=None, required=None):
        super().__init__(message)
        self.resolution = resolution
        self.required = required


class OutsideTube(Error):
    """A complex point lies outside the tube of the manifold model."""


class OverflowGuard(Error):
    """A complexified value would exceed the range the log-space code supports."""


class RootResidual(Error):
    """A polynomial root failed the backward error check."""


class MethodMismatch(Error):
    """The requested method is not available for the model or window."""


class ConfigError(Error):
    """An experiment configuration is invalid."""
    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
