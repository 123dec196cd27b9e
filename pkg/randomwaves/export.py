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
Export result records to different file formats.
"""

import csv
import io
import json
import logging
import os

import numpy as np

logger = logging.getLogger(__name__)


class AbstractExporter:
    """Base class to export (a part of) a ResultRecord to a file.

    Specialized subclasses implement each format in export(). After
    instantiation, call save() or data(); data() caches its return value until
    setRecord() is called again.

    """
    mimeType = "application/octet-stream"
    defaultBasename = "result"
    defaultExt = ""

    def __init__(self, record):
        self.setRecord(record)

    def setRecord(self, record):
        self._record = record
        self._result = None

    def record(self):
        return self._record

    def export(self):
        """Perform the export and return the exported bytes."""

    def successful(self):
        """Return True when export was successful."""
        return self.data() is not None

    def data(self):
        """Return the export result, the bytes of the exported file."""
        if self._result is None:
            self._result = self.export()
        return self._result

    def save(self, filename):
        """Save the exported data to a file."""
        with open(filename, "wb") as f:
            f.write(self.data())

    def suggestedFilename(self):
        """Return a suggested file name (without directory) for the export."""
        return self.defaultBasename + self.defaultExt


class JsonExporter(AbstractExporter):
    """Export the record as result.json.

    Keys keep their order and floats are written with repr precision, so the
    same record always gives the same bytes.

    """
    mimeType = "application/json"
    defaultExt = ".json"

    def export(self):
        text = json.dumps(self.record().as_dict(), indent=2, ensure_ascii=False, allow_nan=False)
        return (text + "\n").encode("utf-8")


def _cell(value):
    """Format one CSV cell; floats use repr precision."""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


class CsvExporter(AbstractExporter):
    """Export one table of the record as a CSV file with a header row."""
    mimeType = "text/csv"
    defaultExt = ".csv"

    def __init__(self, record, name):
        self.name = name
        super().__init__(record)

    def export(self):
        table = self.record().tables[self.name]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.header)
        for row in table.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue().encode("utf-8")

    def suggestedFilename(self):
        return self.name


class SvgExporter(AbstractExporter):
    """Export one plot of the record as an SVG 1.1 file (needs Qt)."""
    mimeType = "image/svg+xml"
    defaultExt = ".svg"

    def __init__(self, record, plot):
        self.plot = plot
        super().__init__(record)

    def export(self):
        from . import svg
        return svg.render(self.plot)

    def suggestedFilename(self):
        return self.plot.name + self.defaultExt


def write_record(record, directory):
    """Write result.json and all CSV tables of the record to directory.

    Returns the list of written file names.

    """
    os.makedirs(directory, exist_ok=True)
    exporters = [JsonExporter(record)]
    exporters += [CsvExporter(record, name) for name in record.tables]
    written = []
    for e in exporters:
        filename = os.path.join(directory, e.suggestedFilename())
        e.save(filename)
        written.append(filename)
    logger.info("wrote %d files to %s", len(written), directory)
    return written
