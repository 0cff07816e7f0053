# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit words (graphs with at most 64 vertices).

Each function mirrors its namesake in ``_pykernels`` branch for branch, so
results are identical; only the word size and the interpreter overhead differ.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

ctypedef unsigned long long u64

cdef extern from *:
    int popcnt "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil

FOUND, EXHAUSTED, TIMED_OUT = 1, 0, -1
MAX_N = 64

cdef enum:
    CHECK_EVERY = 1024


cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline u64 _bit(int v) noexcept nogil:
    return (<u64>1) << v


cdef void _load(list adj, u64 *dst, int n) except *:
    cdef int i
    for i in range(n):
        dst[i] = <u64>adj[i]


# ------------------------------------------------------------------ max clique

cdef struct CliqueCtx:
    u64 *adj
    u64 best
    int best_size


cdef void _expand(CliqueCtx *ctx, u64 clique, int size, u64 p) noexcept nogil:
    cdef int order[64]
    cdef int bounds[64]
    cdef int cnt = 0, colour = 0, i, v
    cdef u64 uncoloured = p, q, low, bit, newp
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = ctz(q)
            low = _bit(v)
            uncoloured ^= low
            q &= ~low & ~ctx.adj[v]
            order[cnt] = v
            bounds[cnt] = colour
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if size + bounds[i] <= ctx.best_size:
            return
        v = order[i]
        bit = _bit(v)
        newp = p & ctx.adj[v]
        if newp:
            _expand(ctx, clique | bit, size + 1, newp)
        elif size + 1 > ctx.best_size:
            ctx.best = clique | bit
            ctx.best_size = size + 1
        p &= ~bit
        i -= 1


def max_clique(list adj, cand):
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef CliqueCtx ctx
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    _load(adj, a, n)
    ctx.adj = a
    ctx.best = 0
    ctx.best_size = 0
    cdef u64 c = <u64>cand
    if c:
        with nogil:
            _expand(&ctx, 0, 0, c)
    return int(ctx.best)


# ------------------------------------------------------------- k-colourability

cdef struct ColourCtx:
    u64 *adj
    int n
    int k
    int *colours
    u64 *forb          # (n + 1) levels of n words
    long nodes
    double deadline
    bint timed_out


cdef bint _colour_rec(ColourCtx *ctx, u64 uncoloured, int level, int used) noexcept nogil:
    cdef int n = ctx.n
    cdef u64 *forb = ctx.forb + level * n
    cdef u64 *nf = forb + n
    cdef int v = -1, w, sat, deg, best_sat = -1, best_deg = -1, c, limit
    cdef u64 u, rest, nbrs, q
    if not uncoloured:
        return True
    ctx.nodes += 1
    if ctx.deadline > 0 and ctx.nodes % CHECK_EVERY == 0 and _now() > ctx.deadline:
        ctx.timed_out = True
    if ctx.timed_out:
        return False
    u = uncoloured
    while u:
        w = ctz(u)
        u ^= _bit(w)
        sat = popcnt(forb[w])
        if sat < best_sat:
            continue
        deg = popcnt(ctx.adj[w] & uncoloured)
        if sat > best_sat or deg > best_deg:
            v = w
            best_sat = sat
            best_deg = deg
    rest = uncoloured & ~_bit(v)
    nbrs = ctx.adj[v] & rest
    limit = used + 1 if used + 1 < ctx.k else ctx.k
    for c in range(limit):
        if (forb[v] >> c) & 1:
            continue
        ctx.colours[v] = c
        memcpy(nf, forb, n * sizeof(u64))
        q = nbrs
        while q:
            w = ctz(q)
            nf[w] |= _bit(c)
            q ^= _bit(w)
        if _colour_rec(ctx, rest, level + 1, used if used > c + 1 else c + 1):
            return True
        if ctx.timed_out:
            return False
    ctx.colours[v] = -1
    return False


cdef int _k_colour(u64 *adj, int n, int k, double deadline, int *colours) noexcept nogil:
    cdef ColourCtx ctx
    cdef int i
    cdef bint ok
    if n == 0:
        return 1
    if k <= 0:
        return 0
    ctx.adj = adj
    ctx.n = n
    ctx.k = k
    ctx.colours = colours
    ctx.forb = <u64 *>malloc((n + 1) * n * sizeof(u64))
    ctx.nodes = 0
    ctx.deadline = deadline
    ctx.timed_out = False
    for i in range(n):
        ctx.forb[i] = 0
        colours[i] = -1
    ok = _colour_rec(&ctx, (_bit(n) - 1) if n < 64 else ~(<u64>0), 0, 0)
    free(ctx.forb)
    if ctx.timed_out:
        return -1
    return 1 if ok else 0


def k_colour(list adj, int k, double deadline=0.0):
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef int colours[64]
    cdef int status
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    _load(adj, a, n)
    if k > n:
        k = n
    with nogil:
        status = _k_colour(a, n, k, deadline, colours)
    if status == 1:
        return FOUND, [colours[i] for i in range(n)]
    return (EXHAUSTED if status == 0 else TIMED_OUT), None


# ------------------------------------------------------------ best right order

cdef struct OrderCtx:
    u64 *out
    u64 *inn
    int n
    int best
    int upper
    int perm[64]
    int witness[64]
    bint has_witness
    u64 classes[64]


cdef int _exact_chi_above(u64 *radj, int n, int lo, int hi) noexcept nogil:
    cdef int k
    cdef int colours[64]
    for k in range(lo, hi):
        if _k_colour(radj, n, k, 0.0, colours) == 1:
            return k
    return hi


cdef bint _order_rec(OrderCtx *ctx, int depth, u64 placed, int ncol) noexcept nogil:
    cdef int n = ctx.n, v, c, newcol, i
    cdef u64 radj[64]
    cdef u64 before
    cdef int colours[64]
    cdef bint stop
    if depth == n:
        before = 0
        for i in range(n):
            v = ctx.perm[i]
            radj[v] = (ctx.inn[v] & before) | (ctx.out[v] & ~before)
            before |= _bit(v)
        if _k_colour(radj, n, ctx.best, 0.0, colours) == 1:
            return False
        ctx.best = _exact_chi_above(radj, n, ctx.best + 1, ncol)
        memcpy(ctx.witness, ctx.perm, n * sizeof(int))
        ctx.has_witness = True
        return ctx.best >= ctx.upper
    for v in range(n):
        if (placed >> v) & 1:
            continue
        c = 0
        while c < ncol and (ctx.classes[c] & ctx.inn[v]):
            c += 1
        newcol = ncol + 1 if c == ncol else ncol
        if newcol + (n - depth - 1) <= ctx.best:
            continue
        ctx.perm[depth] = v
        ctx.classes[c] |= _bit(v)
        stop = _order_rec(ctx, depth + 1, placed | _bit(v), newcol)
        ctx.classes[c] &= ~_bit(v)
        if stop:
            return True
    return False


def best_right_order(list out, list inn, int best, int upper):
    cdef int n = len(out)
    cdef u64 o[64]
    cdef u64 i_[64]
    cdef OrderCtx ctx
    cdef int k
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    _load(out, o, n)
    _load(inn, i_, n)
    ctx.out = o
    ctx.inn = i_
    ctx.n = n
    ctx.best = best
    ctx.upper = upper
    ctx.has_witness = False
    for k in range(64):
        ctx.classes[k] = 0
    if n and best < upper:
        with nogil:
            _order_rec(&ctx, 0, 0, 0)
    if ctx.has_witness:
        return ctx.best, [ctx.witness[k] for k in range(n)]
    return ctx.best, None
