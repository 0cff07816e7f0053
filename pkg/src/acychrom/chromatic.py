"""Exact chromatic number, k-colourability, maximum clique and monotone subsequences."""

from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .core import UndirectedGraph, check_size, iter_bits
from .errors import Timeout

CHROMATIC_CAP = 40
CLIQUE_CAP = 64


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    @classmethod
    def from_list(cls, colors: Sequence[int]) -> "Coloring":
        """Relabel colours by first appearance so exactly ``0..k-1`` are used."""
        relabel: dict[int, int] = {}
        out = []
        for c in colors:
            out.append(relabel.setdefault(c, len(relabel)))
        return cls(tuple(out), len(relabel))

    def classes(self) -> list[frozenset[int]]:
        groups: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            groups[c].add(v)
        return [frozenset(g) for g in groups]


def is_proper_coloring(h: UndirectedGraph, coloring: Coloring) -> bool:
    if len(coloring.colors) != h.n:
        return False
    if set(coloring.colors) != set(range(coloring.k)):
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in h.edges())


def dsatur_greedy(h: UndirectedGraph) -> Coloring:
    """One DSATUR pass; an upper bound on the chromatic number."""
    n = h.n
    colors = [-1] * n
    forb = [0] * n
    uncoloured = (1 << n) - 1
    while uncoloured:
        v, key = -1, None
        for w in iter_bits(uncoloured):
            k = (forb[w].bit_count(), (h.adj[w] & uncoloured).bit_count())
            if key is None or k > key:
                v, key = w, k
        c = 0
        while forb[v] >> c & 1:
            c += 1
        colors[v] = c
        uncoloured &= ~(1 << v)
        for w in iter_bits(h.adj[v] & uncoloured):
            forb[w] |= 1 << c
    return Coloring.from_list(colors)


def is_k_colorable(
    h: UndirectedGraph, k: int, cap: int | None = CHROMATIC_CAP, timeout: float | None = None
) -> tuple[bool, Coloring | None]:
    """Decide whether ``h`` has a proper ``k``-colouring; the witness comes back when it does."""
    if k < 0:
        raise ValueError("k must be non-negative")
    check_size("is_k_colorable", h.n, cap)
    deadline = time.monotonic() + timeout if timeout else 0.0
    status, colors = _backend.k_colour(list(h.adj), k, deadline)
    if status == _backend.TIMED_OUT:
        raise Timeout("is_k_colorable", 0, h.n)
    if status == _backend.FOUND:
        return True, Coloring.from_list(colors)
    return False, None


def chromatic_number(
    h: UndirectedGraph, cap: int | None = CHROMATIC_CAP, timeout: float | None = None
) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring.

    Starts from the clique number and a DSATUR upper bound, then tests
    k-colourability for increasing k. ``timeout`` is a wall-clock budget in
    seconds; on expiry :class:`Timeout` carries the bounds proven so far.
    """
    check_size("chromatic_number", h.n, cap)
    if h.n == 0:
        return 0, Coloring((), 0)
    deadline = time.monotonic() + timeout if timeout else 0.0
    upper = dsatur_greedy(h)
    lower = len(max_clique(h, cap=None))
    for k in range(lower, upper.k):
        status, colors = _backend.k_colour(list(h.adj), k, deadline)
        if status == _backend.FOUND:
            return k, Coloring.from_list(colors)
        if status == _backend.TIMED_OUT:
            raise Timeout("chromatic_number", k, upper.k)
    return upper.k, upper


def max_clique(h: UndirectedGraph, within: int | None = None, cap: int | None = CLIQUE_CAP) -> frozenset[int]:
    """A maximum clique, optionally restricted to the vertex mask ``within``.

    Vertices are relabelled by non-increasing degree (ties: lower id first)
    before the branch and bound runs, which keeps the colouring bound tight.
    """
    check_size("max_clique", h.n, cap)
    cand = (1 << h.n) - 1 if within is None else within
    if not cand:
        return frozenset()
    order = sorted(iter_bits(cand), key=lambda v: (-(h.adj[v] & cand).bit_count(), v))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for w in iter_bits(h.adj[v] & cand):
            row |= 1 << index[w]
        adj.append(row)
    best = _backend.max_clique(adj, (1 << len(order)) - 1)
    return frozenset(order[i] for i in iter_bits(best))


def longest_monotone_subsequence(seq: Sequence[int], direction: str = "increasing") -> list[int]:
    """Longest strictly monotone subsequence by patience sorting, O(r log r).

    Among optimal answers the one ending at the earliest-finishing pile top is
    returned.
    """
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")
    sign = 1 if direction == "increasing" else -1
    tops: list[int] = []
    top_index: list[int] = []
    parent = [-1] * len(seq)
    for i, x in enumerate(seq):
        key = sign * x
        pile = bisect_left(tops, key)
        if pile == len(tops):
            tops.append(key)
            top_index.append(i)
        else:
            tops[pile] = key
            top_index[pile] = i
        parent[i] = top_index[pile - 1] if pile else -1
    result = []
    i = top_index[-1] if top_index else -1
    while i != -1:
        result.append(seq[i])
        i = parent[i]
    return result[::-1]
