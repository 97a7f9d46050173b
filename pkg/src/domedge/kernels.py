"""Bitset search kernels.

Every function here is nopython-compatible and compiled with numba unless
``DOMEDGE_DISABLE_NUMBA`` is set (see ``_backend``). Edge sets are int64
bitmasks, so callers must keep ``m <= 62``.
"""

import numpy as np

from ._backend import njit

# scalar search state slots, see bnb_search
S_DEPTH = 0
S_NCLS = 1
S_NODES = 2
S_BEST = 3
S_DONE = 4
S_OPEN = 5
N_STATE = 6


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def edge_neighbor_masks(edges, n):
    m = edges.shape[0]
    inc = np.zeros(n, np.int64)
    one = np.int64(1)
    for i in range(m):
        inc[edges[i, 0]] |= one << i
        inc[edges[i, 1]] |= one << i
    nbr = np.zeros(m, np.int64)
    for i in range(m):
        nbr[i] = (inc[edges[i, 0]] | inc[edges[i, 1]]) & ~(one << i)
    return nbr


@njit(cache=True)
def pair_feasibility_masks(nbr):
    # {f, g} is a matching inside N(e) for some e: disjoint, common neighbor edge
    m = nbr.shape[0]
    out = np.zeros(m, np.int64)
    one = np.int64(1)
    for f in range(m):
        for g in range(m):
            if f != g and (nbr[f] >> g) & 1 == 0 and nbr[f] & nbr[g] != 0:
                out[f] |= one << g
    return out


@njit(cache=True)
def _class_bound(used, rem, open_mask, rem_mask, pair):
    # each open singleton absorbs at most one remaining edge; the rest pair up at best
    s = 0
    x = open_mask
    while x:
        low = x & -x
        f = 0
        while (low >> f) != 1:
            f += 1
        if pair[f] & rem_mask:
            s += 1
        x ^= low
    left = rem - s
    if left <= 0:
        return used
    return used + (left + 1) // 2


@njit(cache=True)
def bnb_search(order, pair, suffix, assign, best_assign, cls_edge, cls_size, opt, opened,
               state, node_chunk, lower):
    """Resumable depth-first branch and bound over edges in ``order``.

    Edge ``order[p]`` joins an open singleton class it is pair-feasible with,
    or opens class ``n_classes``. All arrays are mutated in place so a later
    call continues where this one stopped; returns after ``node_chunk`` nodes
    or when the tree is exhausted (``state[S_DONE] = 1``).
    """
    m = order.shape[0]
    one = np.int64(1)
    p = state[S_DEPTH]
    ncls = state[S_NCLS]
    nodes = state[S_NODES]
    best = state[S_BEST]
    omask = state[S_OPEN]
    done = 0
    stop_at = nodes + node_chunk
    while True:
        if p < 0:
            done = 1
            break
        if p == m:
            if ncls < best:
                best = ncls
                for i in range(m):
                    best_assign[i] = assign[i]
                if best <= lower:
                    done = 1
                    break
            p -= 1
            continue
        e = order[p]
        c = assign[e]
        if c >= 0:
            if opened[p]:
                ncls -= 1
                cls_size[c] = 0
                omask &= ~(one << e)
            else:
                cls_size[c] = 1
                omask |= one << cls_edge[c]
            assign[e] = -1
        rem = m - p - 1
        rem_mask = suffix[p + 1]
        chosen = -1
        c = opt[p]
        while c <= ncls:
            if c < ncls:
                if cls_size[c] == 1 and (pair[cls_edge[c]] >> e) & 1:
                    om2 = omask & ~(one << cls_edge[c])
                    if _class_bound(ncls, rem, om2, rem_mask, pair) < best:
                        chosen = c
                        break
            else:
                om2 = omask | (one << e)
                if _class_bound(ncls + 1, rem, om2, rem_mask, pair) < best:
                    chosen = c
                    break
            c += 1
        if chosen < 0:
            opt[p] = 0
            p -= 1
            continue
        opt[p] = chosen + 1
        if chosen == ncls:
            opened[p] = 1
            cls_edge[chosen] = e
            cls_size[chosen] = 1
            ncls += 1
            omask |= one << e
        else:
            opened[p] = 0
            cls_size[chosen] = 2
            omask &= ~(one << cls_edge[chosen])
        assign[e] = chosen
        p += 1
        if p < m:
            opt[p] = 0
        nodes += 1
        if nodes >= stop_at:
            break
    state[S_DEPTH] = p
    state[S_NCLS] = ncls
    state[S_NODES] = nodes
    state[S_BEST] = best
    state[S_DONE] = done
    state[S_OPEN] = omask
    return done


@njit(cache=True)
def min_dominating_subset(nbr, total):
    """Smallest edge set (as a bitmask) dominating every edge; -1 if none.

    ``total=False``: every edge outside the set has a neighbor in it.
    ``total=True``: every edge, members included, has a neighbor in it.
    Subsets are enumerated in increasing size (Gosper's hack), so the first
    hit is minimum and the least mask of that size.
    """
    m = nbr.shape[0]
    one = np.int64(1)
    if m == 0:
        return np.int64(0)
    if total:
        for f in range(m):
            if nbr[f] == 0:
                return np.int64(-1)
    full = (one << m) - 1
    for k in range(1, m + 1):
        x = (one << k) - 1
        while x <= full:
            ok = True
            for f in range(m):
                if total or not (x >> f) & 1:
                    if nbr[f] & x == 0:
                        ok = False
                        break
            if ok:
                return x
            u = x & -x
            v = x + u
            x = v + (((v ^ x) // u) >> 2)
    return np.int64(-1)
