"""Pure-Python search kernels.

This module is the reference implementation; ``_ckernels.pyx`` mirrors it
step for step on 64-bit words so both backends return identical results.
Adjacency arrives as a list of int bitmasks; callers relabel vertices first if
they want a particular branching order.
"""

from __future__ import annotations

import time

FOUND, EXHAUSTED, TIMED_OUT = 1, 0, -1

_CHECK_EVERY = 1024


class _Deadline(Exception):
    pass


def max_clique(adj: list[int], cand: int) -> int:
    """Maximum clique inside ``cand`` as a bitmask.

    Branch and bound with a greedy-colouring bound. Colour classes are built
    lowest-id first and branching runs over them in reverse, so the first
    clique of maximum size found is the one reported.
    """
    best = 0
    best_size = 0

    def expand(clique: int, size: int, p: int) -> None:
        nonlocal best, best_size
        order = []
        bounds = []
        uncoloured = p
        colour = 0
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                uncoloured ^= low
                q &= ~low & ~adj[v]
                order.append(v)
                bounds.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            newp = p & adj[v]
            if newp:
                expand(clique | bit, size + 1, newp)
            elif size + 1 > best_size:
                best = clique | bit
                best_size = size + 1
            p &= ~bit

    if cand:
        expand(0, 0, cand)
    return best


def k_colour(adj: list[int], k: int, deadline: float = 0.0) -> tuple[int, list[int] | None]:
    """Decide k-colourability by DSATUR backtracking.

    Branch vertex: most distinct colours among coloured neighbours, then most
    uncoloured neighbours, then lowest id. Colours are tried in ascending
    order and at most one previously unused colour is opened per branch.
    Returns ``(status, colours)`` where status is FOUND, EXHAUSTED or TIMED_OUT.
    """
    n = len(adj)
    if n == 0:
        return FOUND, []
    if k <= 0:
        return EXHAUSTED, None
    colours = [-1] * n
    nodes = 0

    def rec(uncoloured: int, forb: list[int], used: int) -> bool:
        nonlocal nodes
        if not uncoloured:
            return True
        nodes += 1
        if deadline and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Deadline
        v = -1
        best_sat = best_deg = -1
        u = uncoloured
        while u:
            low = u & -u
            w = low.bit_length() - 1
            u ^= low
            sat = forb[w].bit_count()
            if sat < best_sat:
                continue
            deg = (adj[w] & uncoloured).bit_count()
            if sat > best_sat or deg > best_deg:
                v, best_sat, best_deg = w, sat, deg
        rest = uncoloured & ~(1 << v)
        nbrs = adj[v] & rest
        limit = min(used + 1, k)
        for c in range(limit):
            if forb[v] >> c & 1:
                continue
            colours[v] = c
            nf = forb[:]
            q = nbrs
            while q:
                low = q & -q
                nf[low.bit_length() - 1] |= 1 << c
                q ^= low
            if rec(rest, nf, max(used, c + 1)):
                return True
        colours[v] = -1
        return False

    try:
        ok = rec((1 << n) - 1, [0] * n, 0)
    except _Deadline:
        return TIMED_OUT, None
    return (FOUND, colours) if ok else (EXHAUSTED, None)


def _exact_chi_above(adj: list[int], lo: int, hi: int) -> int:
    """Least k in ``lo..hi`` with a k-colouring, assuming ``hi`` colours suffice."""
    for k in range(lo, hi):
        if k_colour(adj, k)[0] == FOUND:
            return k
    return hi


def best_right_order(out: list[int], inn: list[int], best: int, upper: int) -> tuple[int, list[int] | None]:
    """Maximise chi(underlying R_pi) over all orders pi, orders visited lexicographically.

    While extending a prefix, vertices are first-fit coloured in R_pi; each
    colour class is independent in R_pi, so a clique of the left graph. The
    class count plus the number of unplaced vertices bounds chi(R_pi) for every
    completion and prunes subtrees that cannot exceed ``best``. Stops as soon
    as ``upper`` is reached. Returns ``(best, order)``; ``order`` is ``None``
    when nothing beat the incoming ``best``.
    """
    n = len(out)
    perm = [0] * n
    classes = [0] * n
    witness = None

    def rec(depth: int, placed: int, ncol: int) -> bool:
        nonlocal best, witness
        if depth == n:
            radj = [0] * n
            before = 0
            for v in perm:
                radj[v] = (inn[v] & before) | (out[v] & ~before)
                before |= 1 << v
            if k_colour(radj, best)[0] == FOUND:
                return False
            best = _exact_chi_above(radj, best + 1, ncol)
            witness = perm[:]
            return best >= upper
        for v in range(n):
            if placed >> v & 1:
                continue
            c = 0
            while c < ncol and classes[c] & inn[v]:
                c += 1
            newcol = ncol + 1 if c == ncol else ncol
            if newcol + (n - depth - 1) <= best:
                continue
            perm[depth] = v
            classes[c] |= 1 << v
            stop = rec(depth + 1, placed | 1 << v, newcol)
            classes[c] &= ~(1 << v)
            if stop:
                return True
        return False

    if n and best < upper:
        rec(0, 0, 0)
    return best, witness
