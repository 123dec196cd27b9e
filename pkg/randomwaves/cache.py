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
Cache logic.

Evaluating an eigenbasis on all vertices of a mesh dominates the cost of nodal
extraction, and every trial of an experiment needs the same table. The tables
are cached per mesh, keyed by the basis key, and the oldest ones are purged
when the cache grows beyond its size limit.

"""

import logging
import threading
import time
import weakref

logger = logging.getLogger(__name__)


class TableEntry:
    def __init__(self, table):
        self.table = table
        self.bcount = table.nbytes
        self.time = time.time()


class BasisCache:
    """Cache basis evaluation tables on meshes.

    Store and retrieve them under a mesh and a basis key (see
    spectral.EigenBasis.key). Entries disappear when their mesh is garbage
    collected.

    """
    maxsize = 536870912 # 512M

    def __init__(self):
        self._cache = weakref.WeakKeyDictionary()
        self._lock = threading.RLock()

    @property
    def currentsize(self):
        """The number of bytes held by the tables of the meshes still alive."""
        with self._lock:
            return sum(e.bcount for keyd in self._cache.values() for e in keyd.values())

    def clear(self):
        """Remove all cached tables."""
        with self._lock:
            self._cache.clear()

    def get(self, mesh, key):
        """Return the cached table or None."""
        with self._lock:
            try:
                return self._cache[mesh][key].table
            except KeyError:
                return None

    def add(self, mesh, key, table):
        """Add a table for the mesh and key."""
        with self._lock:
            self._cache.setdefault(mesh, {})[key] = TableEntry(table)
            if self.currentsize > self.maxsize:
                self._purge()

    def _purge(self):
        """Delete the oldest tables until the cache fits in maxsize."""
        entries = sorted(
            ((entry.time, entry.bcount, mesh, key)
            for mesh, keyd in self._cache.items()
                for key, entry in keyd.items()),
            key=(lambda item: item[:2]), reverse=True)

        # count the newest tables until maxsize, the newest one always stays
        currentsize = 0
        keep = 0
        for t, bcount, mesh, key in entries:
            if keep and currentsize + bcount > self.maxsize:
                break
            currentsize += bcount
            keep += 1
        for t, bcount, mesh, key in entries[keep:]:
            del self._cache[mesh][key]
            if not self._cache[mesh]:
                del self._cache[mesh]
        logger.debug("purged %d basis tables, %d bytes kept", len(entries) - keep, currentsize)

    def table(self, mesh, basis, compute):
        """Return the table for the basis on the mesh, computing it if needed.

        compute is called with the mesh and the basis and should return a
        numpy array.

        """
        table = self.get(mesh, basis.key)
        if table is None:
            table = compute(mesh, basis)
            self.add(mesh, basis.key, table)
        return table


#: the cache shared by all extractions
cache = BasisCache()
