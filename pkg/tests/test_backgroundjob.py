"""Tests for the thread pool runner."""

import time

import pytest

pytest.importorskip("PyQt6.QtCore")

from randomwaves import backgroundjob
from randomwaves import util


def test_results_in_order():
    def job(i):
        time.sleep(0.01 * (5 - i))
        return i

    functions = [lambda i=i: job(i) for i in range(6)]
    assert backgroundjob.run_all(functions, 3) == list(range(6))
    assert util.run_ordered(functions, 3) == list(range(6))


def test_exception_is_raised():
    def fail():
        raise KeyError("boom")

    with pytest.raises(KeyError):
        backgroundjob.run_all([lambda: 1, fail, lambda: 3], 2)


def test_job_work_attribute():
    job = backgroundjob.Job(lambda: 42)
    job.run()
    assert job.done
    assert job.result == 42
    assert job.exception is None
