"""Cyclic-triangle census and transitive-subtournament search."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .core import OrientedGraph, Tournament, check_size, iter_bits, to_mask

TRANSITIVE_CAP = 40


@dataclass(frozen=True)
class EdgeTriangleReport:
    counts: dict[tuple[int, int], int]
    total_cyclic: int
    t: int

    def identities_hold(self, g: Tournament) -> bool:
        by_degree = comb(self.t, 3) - sum(comb(g.out_degree(v), 2) for v in range(g.n))
        return sum(self.counts.values()) == 3 * self.total_cyclic and self.total_cyclic == by_degree


def cyclic_triangle_counts(g: Tournament) -> EdgeTriangleReport:
    """Per-edge cyclic-triangle counts: for ``u -> v`` it is ``|N+(v) & N-(u)|``."""
    counts = {}
    for u, v in g.edges():
        counts[(u, v)] = (g.out[v] & g.inn[u]).bit_count()
    total = sum(counts.values()) // 3
    return EdgeTriangleReport(counts, total, g.n)


def min_cyclic_edge(g: Tournament) -> tuple[tuple[int, int], int]:
    """The edge in fewest cyclic triangles; ties go to the lexicographically smallest."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    report = cyclic_triangle_counts(g)
    edge = min(report.counts, key=lambda e: (report.counts[e], e))
    return edge, report.counts[edge]


def transitive_order(g: OrientedGraph, vertices: Iterable[int]) -> list[int]:
    """Source-first order of a transitive vertex set (by out-degree inside the set)."""
    vs = list(vertices)
    mask = to_mask(vs)
    return sorted(vs, key=lambda v: -(g.out[v] & mask).bit_count())


def is_transitive(g: OrientedGraph, vertices: Iterable[int]) -> bool:
    """True iff the set induces a transitive tournament (all pairs adjacent, acyclic)."""
    vs = transitive_order(g, vertices)
    mask = to_mask(vs)
    return all((g.out[v] & mask) == to_mask(vs[i + 1:]) for i, v in enumerate(vs))


class _TransitiveSearch:
    """Depth-first search over transitive sets, built source first.

    Every transitive set has exactly one source-first order, so each set is
    visited once. Branching follows descending out-degree in ``g`` (ties to
    the lower id). ``forbidden`` sets may each contribute at most one vertex.
    """

    def __init__(self, g: OrientedGraph, forbidden: Iterable[Iterable[int]] = ()):
        self.g = g
        self.rank = sorted(range(g.n), key=lambda v: (-g.out_degree(v), v))
        self.block = [0] * g.n
        for f in forbidden:
            fm = to_mask(f)
            for v in iter_bits(fm):
                self.block[v] |= fm & ~(1 << v)

    def _bound(self, cand: int) -> int:
        """Upper bound on a transitive set inside ``cand``."""
        if not cand:
            return 0
        return 1 + max((self.g.out[v] & cand).bit_count() for v in iter_bits(cand))

    def first(self, target: int) -> list[int] | None:
        chosen: list[int] = []

        def rec(cand: int) -> bool:
            if len(chosen) == target:
                return True
            if len(chosen) + self._bound(cand) < target:
                return False
            for v in self.rank:
                if not cand >> v & 1:
                    continue
                nxt = cand & self.g.out[v] & ~self.block[v]
                if len(chosen) + 1 + nxt.bit_count() < target:
                    continue
                chosen.append(v)
                if rec(nxt):
                    return True
                chosen.pop()
            return False

        full = (1 << self.g.n) - 1
        return chosen if rec(full) else None

    def maximum(self) -> list[int]:
        best: list[int] = []
        chosen: list[int] = []

        def rec(cand: int) -> None:
            nonlocal best
            if len(chosen) > len(best):
                best = chosen[:]
            if len(chosen) + self._bound(cand) <= len(best):
                return
            for v in self.rank:
                if not cand >> v & 1:
                    continue
                nxt = cand & self.g.out[v] & ~self.block[v]
                if len(chosen) + 1 + nxt.bit_count() <= len(best):
                    continue
                chosen.append(v)
                rec(nxt)
                chosen.pop()

        rec((1 << self.g.n) - 1)
        return best


def max_transitive_subtournament(g: Tournament, cap: int | None = TRANSITIVE_CAP) -> frozenset[int]:
    check_size("max_transitive_subtournament", g.n, cap)
    return frozenset(_TransitiveSearch(g).maximum())


def find_transitive_subtournament(
    g: Tournament, s: int, forbidden: Iterable[Iterable[int]] = (), cap: int | None = TRANSITIVE_CAP
) -> frozenset[int] | None:
    """A transitive set of size ``s`` meeting each forbidden set at most once.

    ``None`` means the exhaustive search found none.
    """
    if s < 1:
        raise ValueError("s must be positive")
    check_size("find_transitive_subtournament", g.n, cap)
    found = _TransitiveSearch(g, forbidden).first(s)
    return None if found is None else frozenset(found)
