"""Graph types, deterministic random generation and basic transforms.

Every graph stores adjacency as Python-int bitmasks, one per vertex: bit ``j``
of ``out[i]`` is set iff ``i -> j``. Neighbourhood intersection is then a single
``&`` and set sizes are ``int.bit_count``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import AntisymmetryViolation, FormatError, NotAPermutation, SizeLimitExceeded

MASK64 = (1 << 64) - 1
DEFAULT_MAX_VERTICES = 10_000


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


def check_size(what: str, n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise SizeLimitExceeded(what, n, cap)


# --------------------------------------------------------------------------- rng


class SplitMix64:
    """SplitMix64 generator; portable and bit-reproducible across languages."""

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, walking from the top index down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def mix64(z: int) -> int:
    """The SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(*parts: int) -> int:
    """Fold integers into one 64-bit seed, e.g. ``derive_seed(seed, n, trial)``."""
    h = 0
    for p in parts:
        h = mix64((h ^ (p & MASK64)) + SplitMix64.GAMMA)
    return h


# ------------------------------------------------------------------------- types


@dataclass(frozen=True)
class OrientedGraph:
    """Oriented graph on ``0..n-1``: no loops, at most one direction per pair."""

    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.out) != self.n:
            raise FormatError(f"expected {self.n} adjacency rows, got {len(self.out)}")
        full = (1 << self.n) - 1
        inn = [0] * self.n
        for i, row in enumerate(self.out):
            if row & ~full or row < 0:
                raise FormatError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if row >> i & 1:
                raise AntisymmetryViolation(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                inn[j] |= 1 << i
        for i in range(self.n):
            both = self.out[i] & inn[i]
            if both:
                j = both.bit_length() - 1
                raise AntisymmetryViolation(f"both {i}->{j} and {j}->{i} present")
        object.__setattr__(self, "inn", tuple(inn))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        out = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
            if out[u] >> v & 1:
                raise FormatError(f"duplicate edge ({u}, {v})")
            out[u] |= 1 << v
        return cls(n, tuple(out))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.out)

    def out_degree(self, v: int) -> int:
        return popcount(self.out[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.inn[v])

    def induced(self, vertices: Sequence[int]) -> "OrientedGraph":
        """Induced subgraph, relabelled so ``vertices[k]`` becomes ``k``."""
        index = {v: k for k, v in enumerate(vertices)}
        out = [0] * len(vertices)
        for k, v in enumerate(vertices):
            for w in iter_bits(self.out[v]):
                if w in index:
                    out[k] |= 1 << index[w]
        return type(self)(len(vertices), tuple(out))

    def is_acyclic(self) -> bool:
        return topological_order(self) is not None


@dataclass(frozen=True)
class Tournament(OrientedGraph):
    """Orientation of K_n: exactly one of (i, j), (j, i) for every pair."""

    def __post_init__(self):
        super().__post_init__()
        full = (1 << self.n) - 1
        for i in range(self.n):
            missing = full & ~(self.out[i] | self.inn[i] | 1 << i)
            if missing:
                j = missing.bit_length() - 1
                raise AntisymmetryViolation(f"pair {{{i}, {j}}} has no edge")

    @classmethod
    def from_oriented(cls, g: OrientedGraph) -> "Tournament":
        return cls(g.n, g.out)


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise FormatError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise FormatError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if row >> i & 1:
                raise FormatError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise FormatError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise FormatError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise FormatError(f"duplicate edge {{{u}, {v}}}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> u << u)]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def induced(self, vertices: Sequence[int]) -> "UndirectedGraph":
        index = {v: k for k, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for k, v in enumerate(vertices):
            for w in iter_bits(self.adj[v]):
                if w in index:
                    adj[k] |= 1 << index[w]
        return UndirectedGraph(len(vertices), tuple(adj))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not self.adj[v] & mask for v in iter_bits(mask))


@dataclass(frozen=True)
class LinearOrder:
    """A permutation of ``0..n-1``; ``position[order[k]] == k``."""

    order: tuple[int, ...]
    position: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.order)
        position = [-1] * n
        for k, v in enumerate(self.order):
            if not isinstance(v, int) or not 0 <= v < n or position[v] != -1:
                raise NotAPermutation(f"order is not a permutation of 0..{n - 1}: {self.order!r}")
            position[v] = k
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "position", tuple(position))

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(tuple(range(n)))

    @classmethod
    def random(cls, n: int, seed: int) -> "LinearOrder":
        items = list(range(n))
        SplitMix64(seed).shuffle(items)
        return cls(tuple(items))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def reversed(self) -> "LinearOrder":
        return LinearOrder(self.order[::-1])


# -------------------------------------------------------------------- generators


def random_tournament(n: int, seed: int, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> Tournament:
    """Fair-coin tournament: one SplitMix64 word per pair (i < j) in lexicographic
    order; low bit 1 means ``i -> j``."""
    if n < 1:
        raise ValueError("n must be positive")
    check_size("random_tournament", n, max_vertices)
    rng = SplitMix64(seed)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next() & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament(n, tuple(out))


def transitive_tournament(n: int, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> Tournament:
    if n < 1:
        raise ValueError("n must be positive")
    check_size("transitive_tournament", n, max_vertices)
    full = (1 << n) - 1
    return Tournament(n, tuple(full & ~((1 << (i + 1)) - 1) for i in range(n)))


def directed_cycle(n: int) -> OrientedGraph:
    return OrientedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def underlying_graph(g: OrientedGraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, tuple(o | i for o, i in zip(g.out, g.inn)))


def orient(h: UndirectedGraph, flips: int = 0) -> OrientedGraph:
    """Orient ``h`` edge by edge: edge number ``k`` (lexicographic order) points
    from low to high id unless bit ``k`` of ``flips`` is set."""
    edges = []
    for k, (u, v) in enumerate(h.edges()):
        edges.append((v, u) if flips >> k & 1 else (u, v))
    return OrientedGraph.from_edges(h.n, edges)


def random_orientation(h: UndirectedGraph, seed: int) -> OrientedGraph:
    rng = SplitMix64(seed)
    flips = 0
    for k in range(h.num_edges):
        flips |= (rng.next() & 1) << k
    return orient(h, flips)


def topological_order(g: OrientedGraph) -> list[int] | None:
    """Kahn's algorithm (smallest available id first); ``None`` if ``g`` has a cycle."""
    indeg = [popcount(m) for m in g.inn]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    result = []
    heapq.heapify(ready)
    while ready:
        v = heapq.heappop(ready)
        result.append(v)
        for w in iter_bits(g.out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return result if len(result) == g.n else None
