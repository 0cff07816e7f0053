"""Odd K4-subdivisions and inconsistent odd cycles.

A cycle is *inconsistent* when it is a cycle of the underlying graph but not
a directed cycle. An odd inconsistent cycle is an acyclic subgraph with
chromatic number 3. Inside an oriented non-bipartite K4-subdivision one of
the seven cycles through three or four branch vertices is always such a cycle,
and every 4-chromatic graph contains an odd K4-subdivision; here the latter is
found by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .chromatic import CHROMATIC_CAP, chromatic_number
from .core import OrientedGraph, UndirectedGraph, check_size, iter_bits, underlying_graph
from .errors import ChromaticTooLow, NoOddCycle, VerificationFailed

SEARCH_CAP = 14

# (start, end) branch-label indices of P_uv, P_vw, P_wu, P_xu, P_xv, P_xw
PATH_ENDS = ((0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2))


@dataclass(frozen=True)
class Subdivision:
    branch: tuple[int, int, int, int]
    paths: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        """Path lengths (a, b, c, d, e, f) of P_uv, P_vw, P_wu, P_xu, P_xv, P_xw."""
        return tuple(len(p) - 1 for p in self.paths)

    def edges(self) -> set[frozenset[int]]:
        return {frozenset(e) for p in self.paths for e in zip(p, p[1:])}

    def is_valid(self, host: UndirectedGraph | None = None) -> bool:
        if len(set(self.branch)) != 4 or len(self.paths) != 6:
            return False
        interiors: set[int] = set()
        for (a, b), path in zip(PATH_ENDS, self.paths):
            if len(path) < 2 or path[0] != self.branch[a] or path[-1] != self.branch[b]:
                return False
            inner = set(path[1:-1])
            if len(inner) != len(path) - 2 or inner & interiors or inner & set(self.branch):
                return False
            interiors |= inner
        if host is not None:
            return all(host.has_edge(*tuple(e)) for e in self.edges())
        return True

    def is_odd(self) -> bool:
        return all(length % 2 == 1 for length in self.lengths)


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    length: int
    is_odd: bool
    is_directed: bool

    @classmethod
    def of(cls, g: OrientedGraph, vertices: Sequence[int]) -> "CycleWitness":
        vs = tuple(vertices)
        pairs = list(zip(vs, vs[1:] + vs[:1]))
        forward = all(g.has_edge(a, b) for a, b in pairs)
        backward = all(g.has_edge(b, a) for a, b in pairs)
        return cls(vs, len(vs), len(vs) % 2 == 1, forward or backward)

    def as_digraph(self, g: OrientedGraph) -> OrientedGraph:
        """The cycle's edges with their orientation in ``g``, on ``g``'s vertex set."""
        vs = self.vertices
        edges = []
        for a, b in zip(vs, vs[1:] + vs[:1]):
            edges.append((a, b) if g.has_edge(a, b) else (b, a))
        return OrientedGraph.from_edges(g.n, edges)


def is_cycle(h: UndirectedGraph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    return all(h.has_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1]))


def _join(*paths: Sequence[int]) -> tuple[int, ...]:
    cycle = list(paths[0])
    for p in paths[1:]:
        assert cycle[-1] == p[0]
        cycle += p[1:]
    assert cycle[0] == cycle[-1]
    return tuple(cycle[:-1])


def fundamental_cycles(sub: Subdivision) -> list[tuple[int, ...]]:
    """The seven cycles, in this order and with these lengths:

    u v w (a+b+c), x u v (d+e+a), x v w (e+f+b), x w u (f+d+c),
    w x u v (f+d+a+b), w u v x (c+a+e+f), u x v w (d+e+b+c).
    """
    uv, vw, wu, xu, xv, xw = (list(p) for p in sub.paths)
    return [
        _join(uv, vw, wu),
        _join(xu, uv, xv[::-1]),
        _join(xv, vw, xw[::-1]),
        _join(xw, wu, xu[::-1]),
        _join(xw[::-1], xu, uv, vw),
        _join(wu, uv, xv[::-1], xw),
        _join(xu[::-1], xv, vw, wu),
    ]


def find_inconsistent_odd_cycle(sub: Subdivision, g: OrientedGraph) -> CycleWitness:
    """First fundamental cycle of ``sub`` that is odd and not directed in ``g``."""
    saw_odd = False
    for cycle in fundamental_cycles(sub):
        witness = CycleWitness.of(g, cycle)
        if witness.is_odd:
            saw_odd = True
            if not witness.is_directed:
                return witness
    if not saw_odd:
        raise NoOddCycle("subdivision is bipartite")
    raise VerificationFailed("every odd fundamental cycle is directed")


def find_odd_k4_subdivision(h: UndirectedGraph, cap: int | None = SEARCH_CAP) -> Subdivision | None:
    """Exhaustive search for a K4-subdivision whose six paths all have odd length.

    Branch quadruples run in ascending order over vertices of degree >= 3;
    paths are chosen one pair at a time by backtracking, each grown depth
    first over ascending neighbour ids. A path is only accepted when it
    reaches its end with odd length, and partial paths are abandoned once the
    end is unreachable through unused vertices.
    """
    check_size("find_odd_k4_subdivision", h.n, cap)
    adj = h.adj
    heavy = [v for v in range(h.n) if h.degree(v) >= 3]

    def reachable(src: int, dst: int, free: int) -> bool:
        seen = 1 << src
        frontier = 1 << src
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            if nxt >> dst & 1:
                return True
            frontier = nxt & free & ~seen
            seen |= frontier
        return False

    def odd_paths(a: int, b: int, blocked: int):
        """Odd-length simple a-b paths through vertices outside ``blocked``."""
        path = [a]

        def grow(v: int, visited: int):
            for w in iter_bits(adj[v]):
                if w == b:
                    if len(path) % 2 == 1:
                        yield tuple(path) + (b,)
                    continue
                if (blocked | visited) >> w & 1:
                    continue
                free = ~(blocked | visited | 1 << w)
                if not reachable(w, b, free):
                    continue
                path.append(w)
                yield from grow(w, visited | 1 << w)
                path.pop()

        yield from grow(a, 1 << a)

    for quad in combinations(heavy, 4):
        branch_mask = sum(1 << v for v in quad)
        chosen: list[tuple[int, ...]] = []

        def place(i: int, used: int) -> bool:
            if i == 6:
                return True
            a, b = quad[PATH_ENDS[i][0]], quad[PATH_ENDS[i][1]]
            for p in odd_paths(a, b, used & ~(1 << a | 1 << b)):
                chosen.append(p)
                inner = sum(1 << v for v in p[1:-1])
                if place(i + 1, used | inner):
                    return True
                chosen.pop()
            return False

        if place(0, branch_mask):
            return Subdivision(tuple(quad), tuple(chosen))
    return None


def critical_subgraph(h: UndirectedGraph, k: int) -> list[int]:
    """Vertices of a k-chromatic subgraph that is vertex-critical (greedy deletion by id)."""
    keep = list(range(h.n))
    for v in range(h.n):
        trial = [w for w in keep if w != v]
        if chromatic_number(h.induced(trial), cap=None)[0] >= k:
            keep = trial
    return keep


def acyclic_3chromatic_subgraph(
    g: OrientedGraph,
    chromatic_cap: int | None = CHROMATIC_CAP,
    search_cap: int | None = SEARCH_CAP,
) -> CycleWitness:
    """An inconsistent odd cycle of ``g``, i.e. an acyclic 3-chromatic subgraph.

    When ``g`` fits ``chromatic_cap`` its chromatic number is checked (raising
    :class:`ChromaticTooLow` at 3 or less) and the search runs on a
    4-vertex-critical subgraph; otherwise the caller vouches for chi >= 4.
    """
    h = underlying_graph(g)
    vertices = list(range(g.n))
    if chromatic_cap is None or h.n <= chromatic_cap:
        chi = chromatic_number(h, cap=None)[0]
        if chi <= 3:
            raise ChromaticTooLow(f"underlying chromatic number is {chi}")
        vertices = critical_subgraph(h, 4)
    sub_h = h.induced(vertices)
    check_size("acyclic_3chromatic_subgraph", sub_h.n, search_cap)
    local = find_odd_k4_subdivision(sub_h, cap=None)
    if local is None:
        raise VerificationFailed("no odd K4-subdivision in a 4-chromatic graph")
    sub = Subdivision(
        tuple(vertices[v] for v in local.branch),
        tuple(tuple(vertices[v] for v in p) for p in local.paths),
    )
    witness = find_inconsistent_odd_cycle(sub, g)
    verify_cycle_witness(g, witness)
    return witness


def verify_cycle_witness(g: OrientedGraph, witness: CycleWitness) -> None:
    h = underlying_graph(g)
    if not is_cycle(h, witness.vertices):
        raise VerificationFailed("witness is not a cycle of the underlying graph")
    recomputed = CycleWitness.of(g, witness.vertices)
    if recomputed != witness or not witness.is_odd or witness.is_directed:
        raise VerificationFailed("witness is not an odd inconsistent cycle")
    dg = witness.as_digraph(g)
    if not dg.is_acyclic():
        raise VerificationFailed("witness cycle is directed")
    cyc = underlying_graph(dg).induced(list(witness.vertices))
    if chromatic_number(cyc, cap=None)[0] != 3:
        raise VerificationFailed("witness cycle is not 3-chromatic")


def subdivided_k4(lengths: Sequence[int]) -> tuple[UndirectedGraph, Subdivision]:
    """K4 with its six edges replaced by paths of the given lengths (a..f)."""
    if len(lengths) != 6 or min(lengths) < 1:
        raise ValueError("need six lengths, each at least 1")
    branch = (0, 1, 2, 3)
    nxt = 4
    paths = []
    edges = []
    for (a, b), length in zip(PATH_ENDS, lengths):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        path = (branch[a], *inner, branch[b])
        paths.append(path)
        edges += list(zip(path, path[1:]))
    h = UndirectedGraph.from_edges(nxt, [(min(e), max(e)) for e in edges])
    return h, Subdivision(branch, tuple(paths))
