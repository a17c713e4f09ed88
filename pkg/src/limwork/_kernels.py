"""Compiled scan for the clockwise Delaunay successor.

Exact integer arithmetic only: when every coordinate span of the scaled point
set is below 2**30, all bisector quantities fit in int64 and their products
are compared as unsigned 128-bit values built from 32-bit limbs.  Anything
larger goes through the pure-Python scan.
"""

from __future__ import annotations

import numpy as np

from numba import njit

COORD_SPAN_LIMIT = 1 << 30
_M32 = 0xFFFFFFFF
_ONE = np.uint64(1)
_TOP = np.uint64(63)


def fits(ps) -> bool:
    if len(ps) == 0:
        return False
    return (max(ps.xs) - min(ps.xs) < COORD_SPAN_LIMIT
            and max(ps.ys) - min(ps.ys) < COORD_SPAN_LIMIT)


@njit(cache=True)
def mul_u128(a, b):
    a_lo = a & np.uint64(_M32)
    a_hi = a >> np.uint64(32)
    b_lo = b & np.uint64(_M32)
    b_hi = b >> np.uint64(32)
    ll = a_lo * b_lo
    lh = a_lo * b_hi
    hl = a_hi * b_lo
    hh = a_hi * b_hi
    mid = (ll >> np.uint64(32)) + (lh & np.uint64(_M32)) + (hl & np.uint64(_M32))
    lo = (ll & np.uint64(_M32)) | (mid << np.uint64(32))
    hi = hh + (lh >> np.uint64(32)) + (hl >> np.uint64(32)) + (mid >> np.uint64(32))
    return hi, lo

@njit(cache=True)
def cmp_products(x, y, z, w):
    """Sign of x*y - z*w for int64 operands of magnitude below 2**63."""
    s1 = (1 if x > 0 else (-1 if x < 0 else 0)) * (1 if y > 0 else (-1 if y < 0 else 0))
    s2 = (1 if z > 0 else (-1 if z < 0 else 0)) * (1 if w > 0 else (-1 if w < 0 else 0))
    if s1 != s2:
        return 1 if s1 > s2 else -1
    if s1 == 0:
        return 0
    h1, l1 = mul_u128(np.uint64(abs(x)), np.uint64(abs(y)))
    h2, l2 = mul_u128(np.uint64(abs(z)), np.uint64(abs(w)))
    if h1 == h2 and l1 == l2:
        return 0
    c = 1 if (h1 > h2 or (h1 == h2 and l1 > l2)) else -1
    return c * s1

@njit(cache=True)
def clip_low_end(xs, ys, p, q):
    """Low end of B(p, q) after trimming.

    Returns ``(status, lo_num, lo_den, lo_site, lo_tie, hi_site, hi_tie)``;
    status 0 means the edge is empty.  Same bookkeeping as
    ``voronoi_cws.clip_bisector``.
    """
    px = xs[p]
    py = ys[p]
    qx = xs[q] - px
    qy = ys[q] - py
    wx = -qy
    wy = qx
    lo_n = 0
    lo_d = 1
    hi_n = 0
    hi_d = 1
    lo_s = -1
    hi_s = -1
    lo_tie = -1
    hi_tie = -1
    for k in range(xs.shape[0]):
        if k == p or k == q:
            continue
        kx = xs[k] - px
        ky = ys[k] - py
        a = 2 * (kx * wx + ky * wy)
        c = kx * kx + ky * ky - kx * qx - ky * qy
        if a > 0:
            if hi_s < 0:
                hi_n = c
                hi_d = a
                hi_s = k
            else:
                r = cmp_products(c, hi_d, hi_n, a)
                if r < 0:
                    hi_n = c
                    hi_d = a
                    hi_s = k
                    hi_tie = -1
                elif r == 0:
                    hi_tie = k
        elif a < 0:
            c = -c
            a = -a
            if lo_s < 0:
                lo_n = c
                lo_d = a
                lo_s = k
                lo_tie = -1
            else:
                r = cmp_products(c, lo_d, lo_n, a)
                if r > 0:
                    lo_n = c
                    lo_d = a
                    lo_s = k
                    lo_tie = -1
                elif r == 0:
                    lo_tie = k
        elif c < 0:
            return 0, 0, 1, -1, -1, -1, -1
    if lo_s >= 0 and hi_s >= 0 and cmp_products(lo_n, hi_d, hi_n, lo_d) >= 0:
        return 0, 0, 1, -1, -1, -1, -1
    return 1, lo_n, lo_d, lo_s, lo_tie, hi_s, hi_tie

@njit(cache=True)
def ccw_most(xs, ys, p, r):
    px = xs[p]
    py = ys[p]
    rx = xs[r] - px
    ry = ys[r] - py
    for k in range(xs.shape[0]):
        if k == p:
            continue
        kx = xs[k] - px
        ky = ys[k] - py
        if cmp_products(rx, ky, ry, kx) > 0:
            r = k
            rx = kx
            ry = ky
    return r


@njit(cache=True)
def mul_s128(a, b):
    """Two's complement 128-bit product of int64 values."""
    hi, lo = mul_u128(np.uint64(abs(a)), np.uint64(abs(b)))
    if (a < 0) != (b < 0):
        nlo = ~lo + _ONE
        nhi = ~hi
        if lo == np.uint64(0):
            nhi = nhi + _ONE
        return nhi, nlo
    return hi, lo

@njit(cache=True)
def add_128(h1, l1, h2, l2):
    lo = l1 + l2
    hi = h1 + h2
    if lo < l1:
        hi = hi + _ONE
    return hi, lo

@njit(cache=True)
def orient(x, y, a, b, c):
    v = (x[b] - x[a]) * (y[c] - y[a]) - (y[b] - y[a]) * (x[c] - x[a])
    return 1 if v > 0 else (-1 if v < 0 else 0)

@njit(cache=True)
def incircle(x, y, a, b, c, d):
    adx = x[a] - x[d]
    ady = y[a] - y[d]
    bdx = x[b] - x[d]
    bdy = y[b] - y[d]
    cdx = x[c] - x[d]
    cdy = y[c] - y[d]
    h1, l1 = mul_s128(adx * adx + ady * ady, bdx * cdy - cdx * bdy)
    h2, l2 = mul_s128(bdx * bdx + bdy * bdy, adx * cdy - cdx * ady)
    h3, l3 = mul_s128(cdx * cdx + cdy * cdy, adx * bdy - bdx * ady)
    # subtract the middle term
    n2l = ~l2 + _ONE
    n2h = ~h2
    if l2 == np.uint64(0):
        n2h = n2h + _ONE
    h, l = add_128(h1, l1, n2h, n2l)
    h, l = add_128(h, l, h3, l3)
    if h >> _TOP:
        return -1
    if h == np.uint64(0) and l == np.uint64(0):
        return 0
    return 1

@njit(cache=True)
def conflict(x, y, V, t, p, g, info):
    """1 if triangle t is in conflict with local site p, 0 if not, -1 on a tie."""
    a = V[t, 0]
    b = V[t, 1]
    c = V[t, 2]
    if a == g or b == g or c == g:
        if a == g:
            u, v = b, c
        elif b == g:
            u, v = c, a
        else:
            u, v = a, b
        o = orient(x, y, u, v, p)
        if o == 0:
            info[0] = 1
            info[1] = u
            info[2] = v
            info[3] = p
            return -1
        return 1 if o > 0 else 0
    r = incircle(x, y, a, b, c, p)
    if r == 0:
        info[0] = 2
        info[1] = a
        info[2] = b
        info[3] = c
        info[4] = p
        return -1
    return 1 if r > 0 else 0

@njit(cache=True)
def third(V, t, u, v):
    for i in range(3):
        if V[t, i] != u and V[t, i] != v:
            return i
    return -1

@njit(cache=True)
def delaunay_edges(xs, ys, sites):
    """Delaunay edges of ``sites`` as an (E, 2) array of global indices.

    Returns ``(edges, info)``; ``info[0]`` is 0 on success, 1 for a
    collinear triple and 2 for a cocircular quadruple, whose global
    indices follow.
    """
    m = sites.shape[0]
    keys = np.empty(m, np.int64)
    for i in range(m):
        keys[i] = (xs[sites[i]] << np.int64(31)) + ys[sites[i]]
    order = sites[np.argsort(keys)]
    x = np.empty(m, np.int64)
    y = np.empty(m, np.int64)
    for i in range(m):
        x[i] = xs[order[i]]
        y[i] = ys[order[i]]
    g = m
    info = np.full(6, -1, np.int64)
    info[0] = 0
    cap = 2 * m + 8
    V = np.empty((cap, 3), np.int64)
    N = np.empty((cap, 3), np.int64)
    alive = np.zeros(cap, np.bool_)
    stamp = np.full(cap, -1, np.int64)
    conf = np.zeros(cap, np.int8)
    free = np.empty(cap, np.int64)
    nfree = 0
    used = 0
    stack = np.empty(cap, np.int64)
    cavity = np.empty(cap, np.int64)
    bu = np.empty(3 * cap, np.int64)
    bv = np.empty(3 * cap, np.int64)
    bo = np.empty(3 * cap, np.int64)
    fan_start = np.full(m + 1, -1, np.int64)
    fan_end = np.full(m + 1, -1, np.int64)

    a, b, c = 0, 1, 2
    o = orient(x, y, a, b, c)
    if o == 0:
        info[0] = 1
        info[1] = order[0]
        info[2] = order[1]
        info[3] = order[2]
        return np.empty((0, 2), np.int64), info
    if o < 0:
        b, c = c, b
    # finite triangle 0 and the three ghosts around it
    V[0, 0], V[0, 1], V[0, 2] = a, b, c
    V[1, 0], V[1, 1], V[1, 2] = b, a, g
    V[2, 0], V[2, 1], V[2, 2] = c, b, g
    V[3, 0], V[3, 1], V[3, 2] = a, c, g
    N[0, 0], N[0, 1], N[0, 2] = 2, 3, 1
    N[1, 0], N[1, 1], N[1, 2] = 3, 2, 0
    N[2, 0], N[2, 1], N[2, 2] = 1, 3, 0
    N[3, 0], N[3, 1], N[3, 2] = 2, 1, 0
    for t in range(4):
        alive[t] = True
    used = 4
    ghost_last = 2 if V[2, 0] == 2 or V[2, 1] == 2 else 3

    for p in range(3, m):
        last = p - 1
        # the two ghosts at the last site
        g1 = ghost_last
        k = 0
        while V[g1, k] == last or V[g1, k] == g:
            k += 1
        g2 = N[g1, k]
        start = -1
        for cand in (g1, g2):
            r = conflict(x, y, V, cand, p, g, info)
            if r < 0:
                break
            stamp[cand] = p
            conf[cand] = r
            if r == 1:
                start = cand
                break
        if info[0] != 0:
            break
        if start < 0:
            info[0] = 3
            break
        ns = 1
        stack[0] = start
        nc = 0
        nb_count = 0
        while ns > 0:
            ns -= 1
            t = stack[ns]
            cavity[nc] = t
            nc += 1
            for i in range(3):
                nb = N[t, i]
                if stamp[nb] != p:
                    r = conflict(x, y, V, nb, p, g, info)
                    if r < 0:
                        break
                    stamp[nb] = p
                    conf[nb] = r
                    if r == 1:
                        stack[ns] = nb
                        ns += 1
                if conf[nb] == 0:
                    bu[nb_count] = V[t, (i + 1) % 3]
                    bv[nb_count] = V[t, (i + 2) % 3]
                    bo[nb_count] = nb
                    nb_count += 1
            if info[0] != 0:
                break
        if info[0] != 0:
            break
        for i in range(nc):
            alive[cavity[i]] = False
            free[nfree] = cavity[i]
            nfree += 1
        for i in range(nb_count):
            if nfree > 0:
                nfree -= 1
                t = free[nfree]
            else:
                t = used
                used += 1
            u = bu[i]
            v = bv[i]
            V[t, 0], V[t, 1], V[t, 2] = u, v, p
            alive[t] = True
            stamp[t] = -1
            out = bo[i]
            N[t, 2] = out
            N[out, third(V, out, u, v)] = t
            fan_start[u] = t
            fan_end[v] = t
            if u == g or v == g:
                ghost_last = t
        for i in range(nb_count):
            t = fan_start[bu[i]]
            # across (v, p) sits the triangle starting at v, across (p, u) the one ending at u
            N[t, 0] = fan_start[V[t, 1]]
            N[t, 1] = fan_end[V[t, 0]]

    if info[0] != 0:
        for i in range(1, 6):
            if info[i] >= 0 and info[i] < m:
                info[i] = order[info[i]]
        return np.empty((0, 2), np.int64), info
    cnt = 0
    edges = np.empty((3 * m, 2), np.int64)
    for t in range(used):
        if not alive[t]:
            continue
        for i in range(3):
            u = V[t, (i + 1) % 3]
            v = V[t, (i + 2) % 3]
            if u < v and v < g:
                edges[cnt, 0] = order[u]
                edges[cnt, 1] = order[v]
                cnt += 1
    return edges[:cnt], info


def kernels():
    """The compiled successor scans ``(clip_low_end, ccw_most)``."""
    return clip_low_end, ccw_most


def delaunay_kernel():
    return delaunay_edges


def arrays(ps) -> tuple[np.ndarray, np.ndarray]:
    """Read-only int64 views of the scaled coordinates, shifted to start at 0."""
    xs = np.asarray(ps.xs, dtype=object)
    ys = np.asarray(ps.ys, dtype=object)
    ax = np.array(xs - min(ps.xs), dtype=np.int64)
    ay = np.array(ys - min(ps.ys), dtype=np.int64)
    ax.flags.writeable = False
    ay.flags.writeable = False
    return ax, ay
