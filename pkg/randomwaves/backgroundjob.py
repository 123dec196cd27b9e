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
Run jobs in background threads using QThreadPool.

Every job runs one callable; :func:`run_all` returns the results in the order
the callables were given, however the threads were scheduled. This keeps all
reductions over trials independent of the number of workers.

"""

import logging

from PyQt6.QtCore import QRunnable, QThreadPool

logger = logging.getLogger(__name__)

maxjobs = 12


class Job(QRunnable):
    """A QRunnable wrapping a work function.

    Put the work function in the work attribute, or inherit and implement
    work(). After running, the outcome is in the result attribute, or, if the
    work function raised, the exception is in the exception attribute.

    """
    result = None
    exception = None
    done = False

    def __init__(self, work=None):
        super().__init__()
        self.setAutoDelete(False)
        if work is not None:
            self.work = work

    def run(self):
        """Call the work function in the background thread."""
        try:
            self.result = self.work()
        except Exception as e:
            self.exception = e
        self.done = True

    def work(self):
        """Implement this to get the work done."""
        pass


def run_all(functions, workers=None):
    """Run all callables on a thread pool and return their results in order.

    At most workers (default maxjobs) threads run at the same time. If a job
    raised an exception, the exception of the first such job is re-raised
    after all jobs have finished.

    """
    workers = maxjobs if workers is None else workers
    pool = QThreadPool()
    pool.setMaxThreadCount(max(1, workers))
    jobs = [Job(f) for f in functions]
    logger.debug("starting %d jobs on %d threads", len(jobs), pool.maxThreadCount())
    for j in jobs:
        pool.start(j)
    pool.waitForDone()
    for j in jobs:
        if j.exception is not None:
            raise j.exception
    return [j.result for j in jobs]
