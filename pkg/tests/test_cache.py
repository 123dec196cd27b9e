"""Tests for the basis table cache."""

import gc

import numpy as np

from randomwaves import cache
from randomwaves import manifold
from randomwaves import spectral


def basis(n):
    return spectral.enumerate_basis(manifold.sphere(), spectral.band(n))


def test_compute_once():
    c = cache.BasisCache()
    mesh = manifold.build_mesh(manifold.sphere(), 8)
    calls = []

    def compute(mesh, basis):
        calls.append(basis.key)
        return np.ones((3, 3))

    a = c.table(mesh, basis(2), compute)
    b = c.table(mesh, basis(2), compute)
    assert a is b
    assert len(calls) == 1
    c.table(mesh, basis(3), compute)
    assert len(calls) == 2
    assert c.currentsize == 2 * a.nbytes


def test_purge_keeps_newest():
    c = cache.BasisCache()
    c.maxsize = 100
    mesh = manifold.build_mesh(manifold.sphere(), 8)
    for n in range(1, 4):
        c.add(mesh, basis(n).key, np.zeros(10))  # 80 bytes each
    assert c.currentsize == 80
    kept = [n for n in range(1, 4) if c.get(mesh, basis(n).key) is not None]
    assert len(kept) == 1


def test_entries_follow_mesh_lifetime():
    c = cache.BasisCache()
    mesh = manifold.build_mesh(manifold.sphere(), 8)
    c.add(mesh, basis(1).key, np.zeros(4))
    assert len(c._cache) == 1
    del mesh
    gc.collect()
    assert len(c._cache) == 0


def test_clear():
    c = cache.BasisCache()
    mesh = manifold.build_mesh(manifold.sphere(), 8)
    c.add(mesh, basis(1).key, np.zeros(4))
    c.clear()
    assert c.get(mesh, basis(1).key) is None
    assert c.currentsize == 0


def test_size_follows_mesh_lifetime():
    c = cache.BasisCache()
    mesh = manifold.build_mesh(manifold.sphere(), 8)
    other = manifold.build_mesh(manifold.sphere(), 8)
    c.add(mesh, basis(1).key, np.zeros(10))
    c.add(other, basis(1).key, np.zeros(10))
    c.add(other, basis(1).key, np.zeros(10))
    assert c.currentsize == 160
    del mesh
    gc.collect()
    assert c.currentsize == 80
    c.maxsize = 100
    c.add(other, basis(2).key, np.zeros(2))
    assert c.get(other, basis(1).key) is not None
    assert c.currentsize == 96
