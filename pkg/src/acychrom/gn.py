"""The grid tournament G_n and covers of its right subgraphs by transitive sets.

Vertices are grid points ``(x, y)`` with column ``x`` and row ``y`` in ``1..n``,
numbered ``(y - 1) * n + (x - 1)``. The edge between ``(i, j)`` and ``(k, l)``
points to the larger column when the rows differ, to the smaller column
within a row, and to the larger row within a column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .chromatic import CLIQUE_CAP, longest_monotone_subsequence, max_clique
from .core import LinearOrder, Tournament, check_size, iter_bits, to_mask, underlying_graph
from .errors import VerificationFailed
from .orderings import left_subgraph, right_subgraph

GN_CAP = 100


@dataclass(frozen=True, order=True)
class GridPoint:
    x: int
    y: int

    def vertex(self, n: int) -> int:
        return (self.y - 1) * n + (self.x - 1)

    @classmethod
    def of(cls, vertex: int, n: int) -> "GridPoint":
        y, x = divmod(vertex, n)
        return cls(x + 1, y + 1)


@dataclass(frozen=True)
class Quadruple:
    p_i: GridPoint
    p_j: GridPoint
    p_k: GridPoint
    p_l: GridPoint

    def is_valid(self) -> bool:
        if not (self.p_i.y == self.p_j.y < self.p_k.y == self.p_l.y):
            return False
        if not (self.p_i.x < self.p_j.x and self.p_k.x < self.p_l.x):
            return False
        lo = max(self.p_i.x, self.p_k.x)
        hi = min(self.p_j.x, self.p_l.x)
        return hi - lo + 1 >= 2


@dataclass(frozen=True)
class CoverFamily:
    parts: tuple[frozenset[int], ...]
    pi: LinearOrder


@dataclass(frozen=True)
class AuxDigraph:
    S: frozenset[int]
    up_edges: frozenset[tuple[int, int]]
    down_edges: frozenset[tuple[int, int]]


def gn_edge(a: GridPoint, b: GridPoint) -> bool:
    """True iff ``a -> b`` in G_n."""
    if a.y != b.y:
        return a.x < b.x if a.x != b.x else a.y < b.y
    return a.x > b.x


def build_gn(n: int, cap: int | None = GN_CAP) -> Tournament:
    if n < 1:
        raise ValueError("n must be positive")
    check_size("build_gn", n, cap)
    size = n * n
    points = [GridPoint.of(v, n) for v in range(size)]
    out = [0] * size
    for a in range(size):
        pa = points[a]
        row = 0
        for b in range(size):
            if a != b and gn_edge(pa, points[b]):
                row |= 1 << b
        out[a] = row
    return Tournament(size, tuple(out))


def row_vertices(n: int, y: int) -> list[int]:
    return [(y - 1) * n + x for x in range(n)]


# --------------------------------------------------------- interval quadruples


def find_interval_quadruple(points: Iterable[GridPoint], n: int) -> Quadruple | None:
    """Two rows whose column spans share at least two integers.

    Row spans are taken from the extreme points of each row; the first pair of
    rows (lexicographically) that overlaps is reported.
    """
    spans: dict[int, tuple[int, int]] = {}
    for p in points:
        if not (1 <= p.x <= n and 1 <= p.y <= n):
            raise ValueError(f"{p} lies outside [{n}]^2")
        lo, hi = spans.get(p.y, (p.x, p.x))
        spans[p.y] = (min(lo, p.x), max(hi, p.x))
    rows = sorted(spans)
    for a, b in combinations(rows, 2):
        (lo1, hi1), (lo2, hi2) = spans[a], spans[b]
        if min(hi1, hi2) - max(lo1, lo2) >= 1:
            quad = Quadruple(GridPoint(lo1, a), GridPoint(hi1, a), GridPoint(lo2, b), GridPoint(hi2, b))
            assert quad.is_valid()
            return quad
    return None


def points_tightness_example(n: int) -> list[GridPoint]:
    """The 2n - 1 points (i, i), (i + 1, i) for i < n, and (n, n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    pts = []
    for i in range(1, n):
        pts += [GridPoint(i, i), GridPoint(i + 1, i)]
    pts.append(GridPoint(n, n))
    return pts


# ------------------------------------------------------ large transitive sets


def _rows_in_pi_order(ys: Iterable[int], pi: LinearOrder, n: int) -> dict[int, list[int]]:
    rows: dict[int, list[int]] = {}
    for v in sorted(ys, key=lambda w: pi.position[w]):
        rows.setdefault(v // n + 1, []).append(v)
    return rows


def build_aux_digraph(Y: Iterable[int], pi: LinearOrder, n: int) -> AuxDigraph:
    """Per-row longest increasing (in column, along pi) sequences and the edges between them.

    An edge ``p -> q`` needs a smaller column, a different row and an earlier
    position for ``p``; it is "up" when ``p`` sits in a lower row.
    """
    S: list[int] = []
    for verts in _rows_in_pi_order(Y, pi, n).values():
        by_col = {v % n: v for v in verts}
        S += [by_col[c] for c in longest_monotone_subsequence([v % n for v in verts], "increasing")]
    up, down = set(), set()
    for p in S:
        for q in S:
            px, py, qx, qy = p % n, p // n, q % n, q // n
            if px < qx and py != qy and pi.position[p] < pi.position[q]:
                (up if py < qy else down).add((p, q))
    return AuxDigraph(frozenset(S), frozenset(up), frozenset(down))


def longest_path(vertices: Iterable[int], edges: Iterable[tuple[int, int]], pi: LinearOrder) -> list[int]:
    """Longest directed path in a DAG whose edges all go forward in ``pi``."""
    order = sorted(vertices, key=lambda v: pi.position[v])
    preds: dict[int, list[int]] = {v: [] for v in order}
    for a, b in edges:
        preds[b].append(a)
    length = {}
    parent: dict[int, int | None] = {}
    for v in order:
        best, arg = 1, None
        for a in sorted(preds[v]):
            if length[a] + 1 > best:
                best, arg = length[a] + 1, a
        length[v], parent[v] = best, arg
    if not order:
        return []
    end = max(order, key=lambda v: (length[v], -pi.position[v]))
    path = []
    cur: int | None = end
    while cur is not None:
        path.append(cur)
        cur = parent[cur]
    return path[::-1]


def find_large_transitive(
    g: Tournament, Y: Iterable[int], pi: LinearOrder, k_min: int, n: int | None = None
) -> frozenset[int] | None:
    """A clique of the underlying right subgraph inside ``Y`` with at least ``k_min`` vertices.

    First tries row cliques (longest column-decreasing runs along ``pi``), then
    the longer of the longest up and down paths of the auxiliary digraph.
    """
    n = n if n is not None else math.isqrt(g.n)
    ys = list(Y)
    rows = _rows_in_pi_order(ys, pi, n)
    best_row: list[int] = []
    for y in sorted(rows):
        verts = rows[y]
        by_col = {v % n: v for v in verts}
        dec = [by_col[c] for c in longest_monotone_subsequence([v % n for v in verts], "decreasing")]
        if len(dec) > len(best_row):
            best_row = dec
    if best_row and len(best_row) >= k_min:
        return frozenset(best_row)

    aux = build_aux_digraph(ys, pi, n)
    up = longest_path(aux.S, aux.up_edges, pi)
    down = longest_path(aux.S, aux.down_edges, pi)
    path = up if len(up) >= len(down) else down
    if path and len(path) >= k_min:
        return frozenset(path)
    return None


# --------------------------------------------------------------------- covers


def cover_bound(n: int) -> int:
    return math.floor(3 * n ** 1.75)


def cover_k_min(n: int) -> int:
    return max(1, math.ceil(n ** 0.25 / 2))


def is_left_proper_cover(g: Tournament, family: CoverFamily) -> bool:
    """Parts partition V and each part is a clique of underlying(right), i.e. independent on the left."""
    seen = 0
    for part in family.parts:
        m = to_mask(part)
        if seen & m:
            return False
        seen |= m
    if seen != (1 << g.n) - 1:
        return False
    right = underlying_graph(right_subgraph(g, family.pi))
    left = underlying_graph(left_subgraph(g, family.pi))
    return all(right.is_clique(p) and left.is_independent(p) for p in family.parts)


def cover_by_transitive(
    n: int, pi: LinearOrder, g: Tournament | None = None, clique_cap: int = CLIQUE_CAP
) -> CoverFamily:
    """Cover V(G_n) by transitive sets of the right subgraph, i.e. colour the left subgraph.

    Disjoint right-cliques of size at least ``cover_k_min(n)`` are pulled out
    greedily: exact maximum cliques while the residue fits ``clique_cap``, the
    row/aux-path search beyond it. Whatever is left becomes singletons. The
    family is verified and must respect ``cover_bound(n)``.
    """
    g = g if g is not None else build_gn(n)
    if len(pi) != g.n:
        raise ValueError(f"order has {len(pi)} entries, G_{n} has {g.n} vertices")
    right = underlying_graph(right_subgraph(g, pi))
    k_min = cover_k_min(n)
    remaining = (1 << g.n) - 1
    parts: list[frozenset[int]] = []
    while remaining:
        if remaining.bit_count() <= clique_cap:
            found = max_clique(right, within=remaining, cap=None)
        else:
            found = find_large_transitive(g, iter_bits(remaining), pi, k_min, n)
        if not found or len(found) < k_min:
            break
        parts.append(found)
        remaining &= ~to_mask(found)
    parts += [frozenset([v]) for v in iter_bits(remaining)]
    family = CoverFamily(tuple(parts), pi)
    if len(parts) > cover_bound(n):
        raise VerificationFailed(f"cover uses {len(parts)} parts, above {cover_bound(n)}")
    if not is_left_proper_cover(g, family):
        raise VerificationFailed("cover is not a proper colouring of the left subgraph")
    return family
