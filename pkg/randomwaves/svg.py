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
Render plots to SVG with QSvgGenerator and QPainter.

A plot (see the experiment module) has a title, axis labels and a list of
series drawn as lines, points or points with error bars. Rendering needs a
QGuiApplication for fonts; one is created on the offscreen platform if none
exists.

"""

import math
import os

import numpy as np

from PyQt6.QtCore import QBuffer, QPointF, QRectF, QSize, Qt
from PyQt6.QtGui import QColor, QFont, QGuiApplication, QPainter, QPainterPath, QPen
from PyQt6.QtSvg import QSvgGenerator


#: size of a plot in pixels
width = 640
height = 420

#: margins around the plot area (left, top, right, bottom)
margins = (70, 40, 150, 50)

palette = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

_app = None


def application():
    """Return the QGuiApplication, creating an offscreen one if needed."""
    global _app
    app = QGuiApplication.instance()
    if app is None:
        os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")
        app = _app = QGuiApplication([])
    return app


def ticks(lo, hi, count=5):
    """Return about count round tick values between lo and hi."""
    if not hi > lo:
        return [lo]
    raw = (hi - lo) / count
    step = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * step >= raw:
            step *= m
            break
    first = math.ceil(lo / step) * step
    return [v for v in np.arange(first, hi + step / 2, step) if lo - 1e-12 <= v <= hi + 1e-12]


def data_range(plot):
    """Return (xmin, xmax, ymin, ymax) over all finite values of the plot."""
    xs, ys = [], []
    for s in plot.series:
        x = np.asarray(s.x, dtype=np.float64)
        y = np.asarray([np.nan if v is None else v for v in s.y], dtype=np.float64)
        ok = np.isfinite(x) & np.isfinite(y)
        xs.append(x[ok])
        if s.err is not None:
            e = np.asarray([0 if v is None else v for v in s.err], dtype=np.float64)[ok]
            ys += [y[ok] - e, y[ok] + e]
        else:
            ys.append(y[ok])
    x = np.concatenate(xs) if xs else np.empty(0)
    y = np.concatenate(ys) if ys else np.empty(0)
    if not len(x):
        return 0.0, 1.0, 0.0, 1.0
    x0, x1, y0, y1 = float(x.min()), float(x.max()), float(y.min()), float(y.max())
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1
    pad = (y1 - y0) * 0.05
    return x0, x1, y0 - pad, y1 + pad


class PlotPainter:
    """Draws a plot with a QPainter on a paint device of the given size."""
    def __init__(self, plot, size=None):
        self.plot = plot
        self.size = size or QSize(width, height)
        self.xmin, self.xmax, self.ymin, self.ymax = data_range(plot)
        left, top, right, bottom = margins
        self.area = QRectF(left, top, self.size.width() - left - right,
                           self.size.height() - top - bottom)

    def map(self, x, y):
        """Map data coordinates to device coordinates."""
        a = self.area
        px = a.left() + (x - self.xmin) / (self.xmax - self.xmin) * a.width()
        py = a.bottom() - (y - self.ymin) / (self.ymax - self.ymin) * a.height()
        return QPointF(px, py)

    def paint(self, painter):
        painter.setRenderHint(QPainter.RenderHint.Antialiasing)
        painter.fillRect(QRectF(0, 0, self.size.width(), self.size.height()), QColor("white"))
        self.paintAxes(painter)
        for i, s in enumerate(self.plot.series):
            self.paintSeries(painter, s, QColor(palette[i % len(palette)]))
        self.paintLegend(painter)

    def paintAxes(self, painter):
        a = self.area
        painter.setPen(QPen(QColor("black"), 1))
        painter.drawRect(a)
        font = QFont()
        font.setPointSizeF(8)
        painter.setFont(font)
        for x in ticks(self.xmin, self.xmax):
            p = self.map(x, self.ymin)
            painter.drawLine(p, QPointF(p.x(), p.y() + 4))
            painter.drawText(QRectF(p.x() - 40, p.y() + 6, 80, 14),
                             Qt.AlignmentFlag.AlignHCenter, "{:g}".format(x))
        for y in ticks(self.ymin, self.ymax):
            p = self.map(self.xmin, y)
            painter.drawLine(p, QPointF(p.x() - 4, p.y()))
            painter.drawText(QRectF(p.x() - 66, p.y() - 7, 60, 14),
                             Qt.AlignmentFlag.AlignRight | Qt.AlignmentFlag.AlignVCenter,
                             "{:.4g}".format(y))
        font.setPointSizeF(10)
        painter.setFont(font)
        painter.drawText(QRectF(0, 8, self.size.width(), 20), Qt.AlignmentFlag.AlignHCenter,
                         self.plot.title)
        painter.drawText(QRectF(a.left(), a.bottom() + 24, a.width(), 20),
                         Qt.AlignmentFlag.AlignHCenter, self.plot.xlabel)
        painter.save()
        painter.translate(14, a.center().y())
        painter.rotate(-90)
        painter.drawText(QRectF(-a.height() / 2, -8, a.height(), 20),
                         Qt.AlignmentFlag.AlignHCenter, self.plot.ylabel)
        painter.restore()

    def paintSeries(self, painter, series, color):
        err = series.err if series.err is not None else [None] * len(series.x)
        points = [(x, y, e) for x, y, e in zip(series.x, series.y, err)
                  if y is not None and math.isfinite(x) and math.isfinite(y)]
        painter.setPen(QPen(color, 1.5))
        if series.style == "line":
            path = QPainterPath()
            for i, (x, y, e) in enumerate(points):
                if i:
                    path.lineTo(self.map(x, y))
                else:
                    path.moveTo(self.map(x, y))
            painter.drawPath(path)
            return
        painter.setBrush(color)
        if series.style == "errorbar":
            for x, y, e in points:
                if e:
                    painter.drawLine(self.map(x, y - e), self.map(x, y + e))
        radius = 3.0 if series.style == "errorbar" else 1.8
        for x, y, e in points:
            painter.drawEllipse(self.map(x, y), radius, radius)
        painter.setBrush(Qt.BrushStyle.NoBrush)

    def paintLegend(self, painter):
        a = self.area
        font = QFont()
        font.setPointSizeF(8)
        painter.setFont(font)
        for i, s in enumerate(self.plot.series):
            color = QColor(palette[i % len(palette)])
            y = a.top() + 8 + 16 * i
            painter.setPen(QPen(color, 2))
            painter.drawLine(QPointF(a.right() + 10, y), QPointF(a.right() + 26, y))
            painter.setPen(QPen(QColor("black"), 1))
            painter.drawText(QRectF(a.right() + 30, y - 7, margins[2] - 34, 14),
                             Qt.AlignmentFlag.AlignLeft | Qt.AlignmentFlag.AlignVCenter, s.label)


def svg(filename, plot, size=None):
    """Write the plot as SVG to filename, a string or a QIODevice.

    Returns True if painting succeeded.

    """
    application()
    p = PlotPainter(plot, size)
    gen = QSvgGenerator()
    if isinstance(filename, str):
        gen.setFileName(filename)
    else:
        gen.setOutputDevice(filename)
    if hasattr(QSvgGenerator, "SvgVersion"):
        gen.setSvgVersion(QSvgGenerator.SvgVersion.Svg11)
    gen.setSize(p.size)
    gen.setViewBox(QRectF(0, 0, p.size.width(), p.size.height()))
    gen.setTitle(plot.title)
    gen.setDescription("randomwaves plot")
    painter = QPainter()
    if not painter.begin(gen):
        return False
    try:
        p.paint(painter)
    finally:
        painter.end()
    return True


def render(plot, size=None):
    """Return the SVG bytes of the plot, or None if painting failed."""
    buf = QBuffer()
    buf.open(QBuffer.OpenModeFlag.WriteOnly)
    success = svg(buf, plot, size)
    buf.close()
    if success:
        return bytes(buf.data())
