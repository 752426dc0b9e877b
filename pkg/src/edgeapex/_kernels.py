"""Compiled inner loops for canonical labeling and level augmentation.

Everything here is written in the numba-compatible subset of Python and
operates on ``int64`` arrays of adjacency bitmasks.  When numba is not
installed the functions run as ordinary (slow) Python; results are identical.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def canon_order(adj, n):
    """Vertex order whose relabeling has the lexicographically least
    upper triangle in graph6 column order.

    ``order[i]`` is the original vertex placed at position ``i``.  The search
    is a depth-first branch and bound over prefixes: at depth ``j`` every
    remaining vertex carries a code (its adjacency to the placed prefix,
    earliest placed vertex most significant), only minimal codes are
    extended, and twins are explored once since swapping them is an
    automorphism that fixes the prefix.
    """
    twin_of = np.zeros(n, np.int64)
    for w in range(n):
        aw = adj[w]
        for x in range(w + 1):
            if (aw & ~(1 << x)) == (adj[x] & ~(1 << w)):
                twin_of[w] = x
                break
    codes = np.zeros((n + 1, n), np.int64)
    rem = np.zeros(n + 1, np.int64)
    cand = np.zeros((n, n), np.int64)
    ncand = np.zeros(n, np.int64)
    idx = np.zeros(n, np.int64)
    less = np.zeros(n + 1, np.bool_)
    cols = np.zeros(n, np.int64)
    order = np.zeros(n, np.int64)
    best_cols = np.zeros(n, np.int64)
    best_order = np.zeros(n, np.int64)
    have_best = False
    rem[0] = (1 << n) - 1
    d = 0
    entering = True
    while d >= 0:
        if entering:
            if d == n:
                best_cols[:] = cols
                best_order[:] = order
                have_best = True
                d -= 1
                entering = False
                continue
            r = rem[d]
            m = np.int64(1) << 62
            for x in range(n):
                if (r >> x) & 1 and codes[d, x] < m:
                    m = codes[d, x]
            lf = less[d]
            if have_best and not lf:
                if m > best_cols[d]:
                    d -= 1
                    entering = False
                    continue
                if m < best_cols[d]:
                    lf = True
            less[d] = lf
            cols[d] = m
            seen = 0
            k = 0
            for x in range(n):
                if (r >> x) & 1 and codes[d, x] == m:
                    t = 1 << twin_of[x]
                    if not (seen & t):
                        seen |= t
                        cand[d, k] = x
                        k += 1
            ncand[d] = k
            idx[d] = 0
        else:
            # a child returned, so a leaf now shares this prefix
            less[d] = False
        if idx[d] < ncand[d]:
            w = cand[d, idx[d]]
            idx[d] += 1
            order[d] = w
            r2 = rem[d] & ~(1 << w)
            aw = adj[w]
            for x in range(n):
                if (r2 >> x) & 1:
                    codes[d + 1, x] = (codes[d, x] << 1) | ((aw >> x) & 1)
            rem[d + 1] = r2
            less[d + 1] = less[d]
            d += 1
            entering = True
        else:
            d -= 1
            entering = False
    return best_order


@njit(cache=True)
def relabel_rows(adj, n, order):
    pos = np.zeros(n, np.int64)
    for i in range(n):
        pos[order[i]] = i
    out = np.zeros(n, np.int64)
    for i in range(n):
        a = adj[order[i]]
        row = 0
        for u in range(n):
            if (a >> u) & 1:
                row |= 1 << pos[u]
        out[i] = row
    return out


@njit(cache=True)
def canon_rows(adj, n):
    return relabel_rows(adj, n, canon_order(adj, n))


@njit(cache=True)
def upper_bits(rows, n):
    """Upper-triangle bits in graph6 column order as one integer (n <= 11)."""
    bits = 0
    for j in range(1, n):
        r = rows[j]
        for i in range(j):
            bits = (bits << 1) | ((r >> i) & 1)
    return bits


@njit(cache=True)
def _neighbor_key_less(adj, deg, n, v, w, d):
    # True if the sorted neighbor-degree list of v is lexicographically
    # smaller than that of w; both vertices have degree d.
    kv = np.zeros(d, np.int64)
    kw = np.zeros(d, np.int64)
    i = 0
    j = 0
    for u in range(n):
        if (adj[v] >> u) & 1:
            kv[i] = deg[u]
            i += 1
        if (adj[w] >> u) & 1:
            kw[j] = deg[u]
            j += 1
    kv.sort()
    kw.sort()
    for t in range(d):
        if kv[t] != kw[t]:
            return kv[t] < kw[t]
    return False


@njit(cache=True)
def augment(parent, n):
    """Canonical adjacency rows of every accepted one-vertex extension.

    ``parent`` has ``n - 1`` vertices.  The new vertex (index ``n - 1``)
    receives every neighborhood in turn; an extension is kept only if the
    new vertex has minimum degree and, among minimum-degree vertices, the
    least sorted neighbor-degree list.  Every graph has such a vertex, so
    every order-``n`` graph arises from the parent obtained by deleting it.
    """
    m = n - 1
    pdeg = np.zeros(m, np.int64)
    mindeg = n
    for u in range(m):
        pdeg[u] = popcount(parent[u])
        if pdeg[u] < mindeg:
            mindeg = pdeg[u]
    if m == 0:
        mindeg = 0
    cap = 64
    out = np.zeros((cap, n), np.int64)
    count = 0
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    newbit = 1 << m
    for nb in range(1 << m):
        d = popcount(nb)
        if d > mindeg + 1:
            continue
        ok = True
        for u in range(m):
            du = pdeg[u] + ((nb >> u) & 1)
            if du < d:
                ok = False
                break
            deg[u] = du
        if not ok:
            continue
        deg[m] = d
        for u in range(m):
            if (nb >> u) & 1:
                adj[u] = parent[u] | newbit
            else:
                adj[u] = parent[u]
        adj[m] = nb
        for v in range(m):
            if deg[v] == d and _neighbor_key_less(adj, deg, n, v, m, d):
                ok = False
                break
        if not ok:
            continue
        if count == cap:
            bigger = np.zeros((cap * 2, n), np.int64)
            bigger[:cap] = out
            out = bigger
            cap *= 2
        out[count] = canon_rows(adj, n)
        count += 1
    return out[:count]
