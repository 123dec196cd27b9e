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
Eigenbases for frequency windows and the spectral projector kernels.

The eigenfunctions are explicit on all three models:

* Circle: 1/√(2π), cos nθ/√π, sin nθ/√π, frequency n.
* Torus2: 1, √2·cos 2πk·x, √2·sin 2πk·x for k in the half-lattice
  (k₁ > 0, or k₁ = 0 and k₂ > 0), frequency 2π|k|.
* Sphere2: real spherical harmonics of degree l, frequency √(l(l+1)).

On the circle and the sphere the eigenvalues come in clusters indexed by an
integer degree, and a Band(N) window means the cluster of degree N. Cutoff(λ)
windows hold the clusters 0..⌊λ⌋ on these models, and all lattice vectors with
2π|k| ≤ λ on the torus.

Gradients are given in a metric-orthonormal frame: d/dθ on the circle,
(∂₁, ∂₂) on the torus and (∂_θ, (1/sin θ)·∂_φ) on the sphere.

"""

import collections
import math
import zlib

import numpy as np

from . import constants
from . import errors
from . import legendre

# entry kinds
CONSTANT = 0
COS = 1
SIN = 2

_kind_names = {CONSTANT: "const", COS: "cos", SIN: "sin"}


class FrequencyWindow(collections.namedtuple("FrequencyWindow", "kind lower upper modes")):
    """A window of frequencies.

    Use :func:`band`, :func:`cutoff` or :func:`modes` to create one.

    .. py:attribute:: kind

        Band, Cutoff or Modes (see the constants module).

    .. py:attribute:: lower, upper

        The window edges. For Band(N) these are N and N + 1, for Cutoff(λ)
        0 and λ. For Modes windows they are filled in by enumerate_basis.

    .. py:attribute:: modes

        A tuple of modes for Modes windows, None otherwise.

    """
    __slots__ = ()

    @property
    def label(self):
        """The number N identifying the window in tables."""
        if self.kind == constants.Cutoff:
            return self.upper
        elif self.kind == constants.Band:
            return self.lower
        return max(self.upper, 0)

    def seed_key(self):
        """Return a tuple of non-negative integers identifying the window."""
        extra = 0
        if self.modes is not None:
            extra = zlib.crc32(repr(self.modes).encode("ascii"))
        return (self.kind, int(round(self.lower * 1e6)), int(round(self.upper * 1e6)), extra)

    def describe(self):
        if self.kind == constants.Band:
            return "Band({:g})".format(self.lower)
        elif self.kind == constants.Cutoff:
            return "Cutoff({:g})".format(self.upper)
        return "Modes{}".format(self.modes)


def band(n):
    """Return the Band(n) window."""
    if n < 0:
        raise ValueError("band index must be non-negative")
    return FrequencyWindow(constants.Band, float(n), float(n) + 1, None)


def cutoff(lam):
    """Return the Cutoff(lam) window."""
    if lam < 0:
        raise ValueError("cutoff must be non-negative")
    return FrequencyWindow(constants.Cutoff, 0.0, float(lam), None)


def modes(*items, lower=0.0, upper=0.0):
    """Return a window holding exactly the given modes.

    Items are integers n on the circle (n = 0 is the constant), degrees l on
    the sphere, and lattice vectors (k₁, k₂) on the torus (either one of ±k).
    enumerate_basis fills in the frequency edges.

    """
    norm = []
    for item in items:
        if isinstance(item, (tuple, list)):
            k1, k2 = int(item[0]), int(item[1])
            if k1 < 0 or (k1 == 0 and k2 < 0):
                k1, k2 = -k1, -k2
            norm.append((k1, k2))
        else:
            norm.append(int(item))
    if not norm:
        raise ValueError("a Modes window needs at least one mode")
    return FrequencyWindow(constants.Modes, float(lower), float(upper), tuple(sorted(set(norm))))


class EigenBasis:
    """An orthonormal eigenbasis of a window.

    .. py:attribute:: frequencies

        Array of the frequencies λⱼ.

    .. py:attribute:: labels

        Model-specific labels: (n, tag) on the circle, (k₁, k₂, tag) on the
        torus, (l, m, tag) on the sphere, with tag "const", "cos" or "sin".

    """
    def __init__(self, model, window, frequencies, kinds, indices, orders=None):
        self.model = model
        self.window = window
        self.frequencies = np.asarray(frequencies, dtype=np.float64)
        self.kinds = np.asarray(kinds, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.orders = None if orders is None else np.asarray(orders, dtype=np.int64)

    def __repr__(self):
        return "<EigenBasis {} {} d={}>".format(self.model.name, self.window.describe(), self.d)

    @property
    def d(self):
        """The number of eigenfunctions."""
        return len(self.frequencies)

    @property
    def key(self):
        """A hashable key for caches."""
        return (self.model.kind, self.window)

    @property
    def labels(self):
        tags = [_kind_names[k] for k in self.kinds]
        if self.model.kind == constants.Torus2:
            return [(int(k[0]), int(k[1]), t) for k, t in zip(self.indices, tags)]
        elif self.model.kind == constants.Sphere2:
            return [(int(l), int(m), t) for l, m, t in zip(self.indices, self.orders, tags)]
        return [(int(n), t) for n, t in zip(self.indices, tags)]

    @property
    def max_frequency(self):
        return float(np.max(self.frequencies))

    @property
    def rms_frequency(self):
        """The root mean square frequency, used to normalize nodal measures."""
        return float(np.sqrt(np.mean(self.frequencies ** 2)))

    @property
    def nominal(self):
        """The integer frequency N the mesh resolution rule refers to.

        The largest degree on the circle and sphere, the integer part of the
        largest frequency on the torus.

        """
        if self.model.kind == constants.Torus2:
            return int(math.floor(self.max_frequency + 1e-9))
        return int(np.max(self.indices))

    def edges(self):
        """Return the window edges (lower, upper) bounding every frequency."""
        if self.window.kind == constants.Band:
            return self.window.lower, self.window.upper
        return float(np.min(self.frequencies)), self.max_frequency

    def degrees(self):
        """Yield (degree, start) for each block of sphere harmonics."""
        start = 0
        while start < self.d:
            l = int(self.indices[start])
            yield l, start
            start += 2 * l + 1


def _cluster_degrees(window, what):
    """Return the integer degrees a circle or sphere window holds."""
    if window.kind == constants.Band:
        n = window.lower
        if n != int(n):
            raise errors.EmptyWindow(
                "no {} cluster in the off-center band [{:g}, {:g}]".format(what, n, n + 1),
                label=n)
        return [int(n)]
    elif window.kind == constants.Cutoff:
        return list(range(0, int(math.floor(window.upper + 1e-9)) + 1))
    return sorted(window.modes)


def _circle_basis(model, window):
    freqs, kinds, idx = [], [], []
    degrees = _cluster_degrees(window, "circle")
    for n in degrees:
        if n < 0:
            raise ValueError("negative circle mode")
        if n == 0:
            freqs.append(0.0), kinds.append(CONSTANT), idx.append(0)
        else:
            freqs += [n, n]
            kinds += [COS, SIN]
            idx += [n, n]
    return freqs, kinds, idx


def _torus_basis(model, window):
    if window.kind == constants.Modes:
        vectors = [k for k in window.modes]
    else:
        r = int(math.ceil(window.upper / (2 * math.pi))) + 1
        k1, k2 = np.meshgrid(np.arange(0, r + 1), np.arange(-r, r + 1), indexing="ij")
        k1, k2 = k1.ravel(), k2.ravel()
        half = (k1 > 0) | ((k1 == 0) & (k2 >= 0))
        f = 2 * math.pi * np.hypot(k1, k2)
        eps = 1e-12 * max(1.0, window.upper)
        inside = half & (f >= window.lower - eps) & (f <= window.upper + eps)
        if window.kind == constants.Band:
            inside &= ~((k1 == 0) & (k2 == 0))
        order = np.lexsort((k2[inside], k1[inside], f[inside]))
        vectors = list(zip(k1[inside][order].tolist(), k2[inside][order].tolist()))
    freqs, kinds, idx = [], [], []
    for k in vectors:
        f = 2 * math.pi * math.hypot(*k)
        if k == (0, 0):
            freqs.append(0.0), kinds.append(CONSTANT), idx.append(k)
        else:
            freqs += [f, f]
            kinds += [COS, SIN]
            idx += [k, k]
    return freqs, kinds, idx


def _sphere_basis(model, window):
    freqs, kinds, idx, orders = [], [], [], []
    for l in _cluster_degrees(window, "sphere"):
        if l < 0:
            raise ValueError("negative sphere degree")
        f = math.sqrt(l * (l + 1))
        freqs.append(f), kinds.append(CONSTANT if l == 0 else COS), idx.append(l), orders.append(0)
        for m in range(1, l + 1):
            freqs += [f, f]
            kinds += [COS, SIN]
            idx += [l, l]
            orders += [m, m]
    return freqs, kinds, idx, orders


def enumerate_basis(model, window):
    """Return the EigenBasis of the model for the window.

    Raises EmptyWindow if no eigenvalue lies in the window.

    """
    orders = None
    if model.kind == constants.Circle:
        freqs, kinds, idx = _circle_basis(model, window)
    elif model.kind == constants.Torus2:
        freqs, kinds, idx = _torus_basis(model, window)
    else:
        freqs, kinds, idx, orders = _sphere_basis(model, window)
    if not freqs:
        raise errors.EmptyWindow(
            "no {} eigenvalue in {}".format(model.name, window.describe()), label=window.label)
    if window.kind == constants.Modes:
        window = window._replace(lower=float(min(freqs)), upper=float(max(freqs)))
    shape = (len(freqs), 2) if model.kind == constants.Torus2 else (len(freqs),)
    return EigenBasis(model, window, freqs, kinds, np.reshape(idx, shape), orders)


def eval_basis(basis, x, gradient=True):
    """Evaluate all eigenfunctions at the chart point(s) x.

    x has shape S (circle) or S + (2,) (torus, sphere). Returns values with
    shape S + (d,) and, if gradient is True, gradients with shape S + (d, m)
    in the orthonormal frame.

    """
    model = basis.model
    x = np.asarray(x, dtype=np.float64)
    if model.kind == constants.Circle:
        n = basis.indices.astype(np.float64)
        phase = x[..., None] * n
        c, s = np.cos(phase), np.sin(phase)
        values = np.where(basis.kinds == COS, c, s) / math.sqrt(math.pi)
        values = np.where(basis.kinds == CONSTANT, 1 / math.sqrt(2 * math.pi), values)
        if not gradient:
            return values
        grads = np.where(basis.kinds == COS, -s, c) * n / math.sqrt(math.pi)
        grads = np.where(basis.kinds == CONSTANT, 0.0, grads)
        return values, grads[..., None]

    if model.kind == constants.Torus2:
        k = basis.indices.astype(np.float64)
        phase = 2 * math.pi * (x @ k.T)
        c, s = np.cos(phase), np.sin(phase)
        r2 = math.sqrt(2)
        values = r2 * np.where(basis.kinds == COS, c, s)
        values = np.where(basis.kinds == CONSTANT, 1.0, values)
        if not gradient:
            return values
        slope = r2 * np.where(basis.kinds == COS, -s, c)
        slope = np.where(basis.kinds == CONSTANT, 0.0, slope)
        grads = slope[..., None] * (2 * math.pi * k)
        return values, grads

    theta, phi = x[..., 0], x[..., 1]
    shape = theta.shape + (basis.d,)
    values = np.empty(shape)
    grads = np.empty(shape + (2,)) if gradient else None
    for l, start in basis.degrees():
        stop = start + 2 * l + 1
        if gradient:
            v, dt, dp = legendre.harmonics(l, theta, phi, gradient=True)
            grads[..., start:stop, 0] = np.moveaxis(dt, 0, -1)
            grads[..., start:stop, 1] = np.moveaxis(dp, 0, -1)
        else:
            v = legendre.harmonics(l, theta, phi)
        values[..., start:stop] = np.moveaxis(v, 0, -1)
    if not gradient:
        return values
    return values, grads


def eval_basis_complex(basis, x, y):
    """Evaluate the analytic continuations of all eigenfunctions at x + iy.

    For the sphere, x is (θ, φ) and y is the imaginary part s of θ. Returns a
    complex array of shape S + (d,).

    """
    model = basis.model
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if model.kind == constants.Circle:
        n = basis.indices.astype(np.float64)
        z = (x + 1j * y)[..., None] * n
        values = np.where(basis.kinds == COS, np.cos(z), np.sin(z)) / math.sqrt(math.pi)
        return np.where(basis.kinds == CONSTANT, 1 / math.sqrt(2 * math.pi), values)

    if model.kind == constants.Torus2:
        k = basis.indices.astype(np.float64)
        z = 2 * math.pi * (x @ k.T + 1j * (y @ k.T))
        values = math.sqrt(2) * np.where(basis.kinds == COS, np.cos(z), np.sin(z))
        return np.where(basis.kinds == CONSTANT, 1.0, values)

    theta = x[..., 0] + 1j * y
    phi = x[..., 1]
    values = np.empty(theta.shape + (basis.d,), np.complex128)
    for l, start in basis.degrees():
        values[..., start:start + 2 * l + 1] = np.moveaxis(
            legendre.harmonics(l, theta, phi), 0, -1)
    return values


KernelJet = collections.namedtuple("KernelJet", "A B C")
KernelJet.__doc__ = "Covariance blocks of (f, ∇f) at a point, per unit coefficient variance."
KernelJet.A.__doc__ = "The variance of f, Π(x, x)."
KernelJet.B.__doc__ = "The covariance of f with ∇f (vector of length m)."
KernelJet.C.__doc__ = "The covariance of ∇f (m × m matrix)."


def scale_jet(jet, factor):
    """Return the jet for coefficient variance factor."""
    return KernelJet(jet.A * factor, jet.B * factor, jet.C * factor)


def jets(basis, x):
    """Return arrays (A, B, C) of the projector jet at the chart point(s) x."""
    values, grads = eval_basis(basis, x)
    A = np.einsum("...j,...j->...", values, values)
    B = np.einsum("...j,...jm->...m", values, grads)
    C = np.einsum("...jm,...jn->...mn", grads, grads)
    return A, B, C


def projector_jet(model, window, x, method=constants.DirectSum, basis=None):
    """Return the KernelJet of the projector of the window at x.

    DirectSum sums over the eigenbasis. ClosedForm uses the addition theorem
    for a sphere Band and the lattice sum for the torus; it raises
    MethodMismatch for other models and windows.

    """
    if method == constants.DirectSum:
        if basis is None:
            basis = enumerate_basis(model, window)
        A, B, C = jets(basis, x)
        C = (C + np.swapaxes(C, -1, -2)) / 2
        return KernelJet(float(A), B, C)

    if method != constants.ClosedForm:
        raise errors.MethodMismatch("unknown projector method: {!r}".format(method))
    if model.kind == constants.Sphere2 and window.kind == constants.Band:
        n = window.lower
        if n != int(n):
            raise errors.EmptyWindow("no sphere cluster in band {:g}".format(n), label=n)
        A = (2 * n + 1) / (4 * math.pi)
        C = n * (n + 1) * (2 * n + 1) / (8 * math.pi)
        return KernelJet(A, np.zeros(2), C * np.eye(2))
    if model.kind == constants.Torus2:
        if basis is None:
            basis = enumerate_basis(model, window)
        pairs = basis.kinds == COS
        k = basis.indices[pairs].astype(np.float64)
        A = 2.0 * np.count_nonzero(pairs) + np.count_nonzero(basis.kinds == CONSTANT)
        C = 2 * (2 * math.pi) ** 2 * (k.T @ k)
        return KernelJet(A, np.zeros(2), C)
    raise errors.MethodMismatch(
        "no closed form projector jet for {} {}".format(model.name, window.describe()))


def projector_offdiag(model, window, x, y, basis=None):
    """Return Π(x, y) by direct summation over the eigenbasis."""
    if basis is None:
        basis = enumerate_basis(model, window)
    vx = eval_basis(basis, x, gradient=False)
    vy = eval_basis(basis, y, gradient=False)
    return float(np.dot(vx, vy))


def projector_offdiag_closed(model, window, x, y, basis=None):
    """Return Π(x, y) from the closed forms.

    Sphere: Σ over the degrees of ((2l+1)/4π)·Pₗ(cos γ), with γ the angle
    between x and y. Circle and torus: the sum of cosines of the difference.

    """
    from scipy.special import eval_legendre
    if basis is None:
        basis = enumerate_basis(model, window)
    if model.kind == constants.Sphere2:
        (t1, p1), (t2, p2) = x, y
        cosg = math.cos(t1) * math.cos(t2) + math.sin(t1) * math.sin(t2) * math.cos(p1 - p2)
        cosg = min(1.0, max(-1.0, cosg))
        return float(sum((2 * l + 1) / (4 * math.pi) * eval_legendre(l, cosg)
                         for l, start in basis.degrees()))
    total = 0.0
    cos = basis.kinds == COS
    if model.kind == constants.Circle:
        n = basis.indices[cos]
        total = np.sum(np.cos(n * (x - y))) / math.pi
        total += np.count_nonzero(basis.kinds == CONSTANT) / (2 * math.pi)
    else:
        k = basis.indices[cos].astype(np.float64)
        diff = np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64)
        total = 2 * np.sum(np.cos(2 * math.pi * (k @ diff)))
        total += np.count_nonzero(basis.kinds == CONSTANT)
    return float(total)
