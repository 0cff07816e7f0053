"""Splitting an oriented graph by a linear order, and the exact value of f(G).

``right_subgraph(G, pi)`` keeps the edges that point forward along ``pi``,
``left_subgraph`` the ones pointing backward. Both are acyclic, and every
acyclic subgraph of ``G`` lives inside the right subgraph of one of its
topological orders, so f(G) is the maximum of chi(right) over all orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .chromatic import chromatic_number
from .core import LinearOrder, OrientedGraph, SplitMix64, UndirectedGraph, check_size, underlying_graph
from .errors import DimensionMismatch

F_EXACT_CAP = 10


@dataclass(frozen=True)
class OrderSplit:
    right: OrientedGraph
    left: OrientedGraph


def _check(g: OrientedGraph, pi: LinearOrder) -> None:
    if len(pi) != g.n:
        raise DimensionMismatch(f"order has {len(pi)} entries, graph has {g.n} vertices")


def _forward_masks(pi: LinearOrder) -> list[int]:
    """``after[v]``: vertices strictly after ``v`` in ``pi``."""
    after = [0] * len(pi)
    tail = 0
    for v in reversed(pi.order):
        after[v] = tail
        tail |= 1 << v
    return after


def right_subgraph(g: OrientedGraph, pi: LinearOrder) -> OrientedGraph:
    _check(g, pi)
    after = _forward_masks(pi)
    return OrientedGraph(g.n, tuple(g.out[v] & after[v] for v in range(g.n)))


def left_subgraph(g: OrientedGraph, pi: LinearOrder) -> OrientedGraph:
    _check(g, pi)
    after = _forward_masks(pi)
    return OrientedGraph(g.n, tuple(g.out[v] & ~after[v] for v in range(g.n)))


def split(g: OrientedGraph, pi: LinearOrder) -> OrderSplit:
    return OrderSplit(right_subgraph(g, pi), left_subgraph(g, pi))


def right_underlying(g: OrientedGraph, pi: LinearOrder) -> UndirectedGraph:
    return underlying_graph(right_subgraph(g, pi))


def chi_right(g: OrientedGraph, pi: LinearOrder) -> int:
    return chromatic_number(right_underlying(g, pi), cap=None)[0]


def _degree_order(g: OrientedGraph) -> LinearOrder:
    return LinearOrder(tuple(sorted(range(g.n), key=lambda v: (-g.out_degree(v), v))))


def f_exact_witness(g: OrientedGraph, cap: int | None = F_EXACT_CAP) -> tuple[int, LinearOrder]:
    """f(G) together with an order ``pi`` attaining it in ``right_subgraph(G, pi)``.

    The incumbent starts from the identity and the out-degree order; the
    kernel then walks all orders lexicographically with a first-fit bound and
    stops early once chi(underlying G) is reached.
    """
    check_size("f_exact", g.n, cap)
    if g.n == 0:
        return 0, LinearOrder(())
    upper = chromatic_number(underlying_graph(g), cap=None)[0]
    best, witness = -1, None
    for pi in (LinearOrder.identity(g.n), _degree_order(g)):
        value = chi_right(g, pi)
        if value > best:
            best, witness = value, pi
    found, order = _backend.best_right_order(list(g.out), list(g.inn), best, upper)
    if order is not None:
        best, witness = found, LinearOrder(tuple(order))
    return best, witness


def f_exact(g: OrientedGraph, cap: int | None = F_EXACT_CAP) -> int:
    """Maximum chromatic number of an acyclic subgraph of ``g``."""
    return f_exact_witness(g, cap)[0]


def f_lower_heuristic(g: OrientedGraph, samples: int, seed: int) -> int:
    """Best chi(right) over the identity plus ``samples`` seeded random orders.

    A lower bound on f(G) with no approximation guarantee.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if g.n == 0:
        return 0
    best = chi_right(g, LinearOrder.identity(g.n))
    rng = SplitMix64(seed)
    items = list(range(g.n))
    for _ in range(samples):
        rng.shuffle(items)
        best = max(best, chi_right(g, LinearOrder(tuple(items))))
    return best
