"""The compiled and pure-Python kernels must agree bit for bit."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acychrom import _backend, _pykernels
from acychrom.chromatic import chromatic_number, max_clique
from acychrom.core import random_tournament
from acychrom.gn import build_gn
from acychrom.orderings import f_exact

from conftest import grotzsch_graph

needs_compiled = pytest.mark.skipif(not _backend.compiled_available(), reason="compiled kernels not built")


def random_adj(n: int, p: float, rng: random.Random) -> list[int]:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


@needs_compiled
@pytest.mark.parametrize("seed", range(60))
def test_clique_and_colour_agree(seed):
    from acychrom import _ckernels

    rng = random.Random(seed)
    n = rng.randint(1, 24)
    adj = random_adj(n, rng.choice([0.2, 0.5, 0.8]), rng)
    full = (1 << n) - 1
    assert _ckernels.max_clique(adj, full) == _pykernels.max_clique(adj, full)
    for k in range(1, min(n, 8) + 1):
        assert _ckernels.k_colour(adj, k) == _pykernels.k_colour(adj, k)


@needs_compiled
@pytest.mark.parametrize("seed", range(20))
def test_best_right_order_agrees(seed):
    from acychrom import _ckernels

    g = random_tournament(2 + seed % 7, seed)
    args = (list(g.out), list(g.inn), 0, g.n)
    assert _ckernels.best_right_order(*args) == _pykernels.best_right_order(*args)


@needs_compiled
def test_compiled_rejects_wide_graphs():
    from acychrom import _ckernels

    with pytest.raises((ValueError, OverflowError)):
        _ckernels.max_clique([0] * 65, (1 << 65) - 1)


def test_kernel_dispatch_respects_width():
    assert _backend.kernels(65) is _pykernels


def test_forced_python_backend(monkeypatch):
    monkeypatch.setattr(_backend, "_compiled", None)
    assert _backend.name() == "python"
    assert _backend.kernels(10) is _pykernels


def test_colouring_status_is_exhausted_below_chi():
    adj = random_adj(6, 1.0, random.Random(0))
    status, colours = _pykernels.k_colour(adj, 5)
    assert status == _pykernels.EXHAUSTED and colours is None
    status, colours = _pykernels.k_colour(adj, 6)
    assert status == _pykernels.FOUND and sorted(colours) == list(range(6))


def test_results_identical_across_backends(backend):
    h = grotzsch_graph()
    assert chromatic_number(h)[0] == 4
    assert len(max_clique(h)) == 2
    assert f_exact(build_gn(2)) == 3
    assert f_exact(random_tournament(7, 11)) == f_exact(random_tournament(7, 11))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32))
def test_python_colouring_is_proper(n, seed):
    adj = random_adj(n, 0.5, random.Random(seed))
    status, colours = _pykernels.k_colour(adj, n)
    assert status == _pykernels.FOUND
    assert all(colours[u] != colours[v] for u in range(n) for v in range(n) if adj[u] >> v & 1)
