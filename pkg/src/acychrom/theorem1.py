"""Six-block ordering that forces chi(right) or chi(left) above n on large tournaments.

Pick the edge ``u -> v`` lying in fewest cyclic triangles and let ``Q`` be the
apexes of those triangles. The order is

    X = N+(u) & N+(v),  v,  Y = N+(u) & N-(v),  u,  Q (destroyer order),  N-(u) \\ Q

so ``u`` is adjacent to everything in the left subgraph and the right
neighbourhood of ``v`` is exactly ``Q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chromatic import chromatic_number, max_clique
from .core import LinearOrder, Tournament, iter_bits, underlying_graph
from .destroyer import destroyer_ordering, destroyer_target
from .errors import PreconditionViolated, VerificationFailed
from .orderings import left_subgraph, right_subgraph
from .triangles import min_cyclic_edge


@dataclass(frozen=True)
class Theorem1Parts:
    u: int
    v: int
    q: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Q: tuple[int, ...]
    sigma: LinearOrder
    pi: LinearOrder
    rest: tuple[int, ...] = ()


@dataclass(frozen=True)
class Theorem1Report:
    m: int
    n: int
    chi_right: int
    chi_left: int
    holds: bool
    parts: Theorem1Parts | None = None


def theorem1_threshold(n: int) -> int:
    """Smallest tournament order the construction is stated for: n^2 - ceil((2 - 1/sqrt 2) n) + 3."""
    return n * n - math.ceil((2 - 1 / math.sqrt(2)) * n) + 3


def theorem1_ordering(g: Tournament) -> Theorem1Parts:
    if g.n < 2:
        raise PreconditionViolated("need at least two vertices")
    (u, v), q = min_cyclic_edge(g)
    X = tuple(iter_bits(g.out[u] & g.out[v]))
    Y = tuple(iter_bits(g.out[u] & g.inn[v]))
    Q = tuple(iter_bits(g.out[v] & g.inn[u]))
    rest = tuple(iter_bits(g.inn[u] & ~g.out[v]))
    if Q:
        sub_pi, _ = destroyer_ordering(Tournament.from_oriented(g.induced(Q)))
        sigma = LinearOrder(sub_pi.order)
    else:
        sigma = LinearOrder(())
    q_block = tuple(Q[i] for i in sigma.order)
    pi = LinearOrder(X + (v,) + Y + (u,) + q_block + rest)
    return Theorem1Parts(u, v, q, X, Y, Q, sigma, pi, rest)


def check_structure(g: Tournament, parts: Theorem1Parts) -> None:
    """Raise :class:`VerificationFailed` unless the six-block facts hold."""
    u, v = parts.u, parts.v
    if set(parts.X) | set(parts.Y) | {v} != set(iter_bits(g.out[u])):
        raise VerificationFailed("X, Y and v do not partition N+(u)")
    if not set(parts.Q) <= set(iter_bits(g.inn[u])) or len(parts.Q) != parts.q:
        raise VerificationFailed("Q is not a q-subset of N-(u)")
    blocks = parts.X + (v,) + parts.Y + (u,) + tuple(parts.Q[i] for i in parts.sigma.order) + parts.rest
    if blocks != parts.pi.order:
        raise VerificationFailed("pi does not follow the block layout")
    left = underlying_graph(left_subgraph(g, parts.pi))
    if left.degree(u) != g.n - 1:
        raise VerificationFailed("u is not adjacent to every vertex in the left subgraph")
    right = right_subgraph(g, parts.pi)
    if right.inn[v] or set(iter_bits(right.out[v])) != set(parts.Q):
        raise VerificationFailed("right neighbourhood of v is not Q oriented away from v")
    qv = sum(1 << w for w in parts.Q) | 1 << v
    omega = len(max_clique(underlying_graph(right), within=qv, cap=None))
    if omega >= destroyer_target(parts.q) + 1:
        raise VerificationFailed(f"Q + v carries a right clique of order {omega}")


def verify_theorem1(g: Tournament, n: int, check: bool = True) -> Theorem1Report:
    """Build the ordering and colour both sides exactly.

    ``holds`` is whether max(chi_right, chi_left) >= n + 1.
    """
    m = g.n
    if n < 3:
        raise PreconditionViolated(f"n must be at least 3, got {n}")
    if m < theorem1_threshold(n):
        raise PreconditionViolated(f"m = {m} is below the threshold {theorem1_threshold(n)} for n = {n}")
    parts = theorem1_ordering(g)
    if check:
        check_structure(g, parts)
    chi_r = chromatic_number(underlying_graph(right_subgraph(g, parts.pi)), cap=None)[0]
    chi_l = chromatic_number(underlying_graph(left_subgraph(g, parts.pi)), cap=None)[0]
    return Theorem1Report(m, n, chi_r, chi_l, max(chi_r, chi_l) >= n + 1, parts)
