"""Greedy order whose right subgraph has no transitive subtournament of order floor(sqrt(2t)) + 1.

Transitive blocks ``W_1, W_2, ...`` are laid down sink first, so each block is
independent in the right subgraph; block ``k`` has ``s - k + 1`` vertices and
is cut from a transitive ``s``-set meeting every earlier block at most once.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .chromatic import max_clique
from .core import LinearOrder, Tournament, check_size
from .errors import VerificationFailed
from .orderings import right_underlying
from .triangles import TRANSITIVE_CAP, find_transitive_subtournament, transitive_order


@dataclass(frozen=True)
class DestroyerTrace:
    s: int
    stages: tuple[tuple[int, ...], ...]
    pi: LinearOrder

    def rebuild(self) -> LinearOrder:
        """The order implied by the stages, with leftovers appended by id."""
        head = [v for w in self.stages for v in w]
        seen = set(head)
        return LinearOrder(tuple(head + [v for v in range(len(self.pi)) if v not in seen]))


def destroyer_target(t: int) -> int:
    return isqrt(2 * t) + 1


def destroyer_ordering(g: Tournament, cap: int | None = TRANSITIVE_CAP) -> tuple[LinearOrder, DestroyerTrace]:
    t = g.n
    if t < 1:
        raise ValueError("tournament must have at least one vertex")
    check_size("destroyer_ordering", t, cap)
    s = destroyer_target(t)
    stages: list[tuple[int, ...]] = []
    placed: set[int] = set()
    while True:
        x = find_transitive_subtournament(g, s, forbidden=stages, cap=cap)
        if x is None:
            break
        k = len(stages) + 1
        sink_first = [v for v in reversed(transitive_order(g, x)) if v not in placed]
        block = tuple(sink_first[: min(s - k + 1, t - len(placed))])
        if not block:
            raise VerificationFailed("destroyer stage produced an empty block")
        stages.append(block)
        placed.update(block)
    order = [v for w in stages for v in w] + [v for v in range(t) if v not in placed]
    pi = LinearOrder(tuple(order))
    trace = DestroyerTrace(s, tuple(stages), pi)

    if len(stages) > max(s - 1, 0):
        raise VerificationFailed(f"{len(stages)} stages exceed s - 1 = {s - 1}")
    omega = len(max_clique(right_underlying(g, pi), cap=None))
    if omega >= s:
        raise VerificationFailed(f"right subgraph still has a clique of order {omega} >= {s}")
    return pi, trace
