"""Compiled kernels for the hot BFS and level-sweep loops.

Graphs arrive as int64 CSR pairs (indptr, indices). Each function here has a
vectorized twin in ``_kernels_numpy`` with the same signature and the same
integer results; ``topcent.backend`` picks one module at import time.

Closeness comparisons inside kernels are exact: products of the form
S * (r-1)^2 can exceed 64 bits, so they go through a 128-bit limb compare.
"""

import numpy as np
from numba import njit

NAME = "numba"

_M32 = np.uint64(0xFFFFFFFF)
_S32 = np.uint64(32)


@njit(cache=True, nogil=True)
def _mul128(a, b):
    # (hi, lo) of a*b for 0 <= a, b < 2**63
    ua = np.uint64(a)
    ub = np.uint64(b)
    ah = ua >> _S32
    al = ua & _M32
    bh = ub >> _S32
    bl = ub & _M32
    t = al * bl
    u = ah * bl + (t >> _S32)
    v = al * bh + (u & _M32)
    hi = ah * bh + (u >> _S32) + (v >> _S32)
    lo = (t & _M32) | ((v & _M32) << _S32)
    return hi, lo


@njit(cache=True, nogil=True)
def _prod_gt(a, b, c, d):
    # a*b > c*d, exact, non-negative int64 operands
    h1, l1 = _mul128(a, b)
    h2, l2 = _mul128(c, d)
    if h1 != h2:
        return h1 > h2
    return l1 > l2


@njit(cache=True, nogil=True)
def _prod_lt(a, b, c, d):
    h1, l1 = _mul128(a, b)
    h2, l2 = _mul128(c, d)
    if h1 != h2:
        return h1 < h2
    return l1 < l2


@njit(cache=True, nogil=True)
def bfs(indptr, indices, n, src):
    """Plain BFS. Returns (dist, order, reached, visited_arcs); dist -1 if unreached."""
    dist = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    dist[src] = 0
    order[0] = src
    head = 0
    tail = 1
    arcs = 0
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u] + 1
        for e in range(indptr[u], indptr[u + 1]):
            arcs += 1
            w = indices[e]
            if dist[w] < 0:
                dist[w] = du
                order[tail] = w
                tail += 1
    return dist, order, tail, arcs


@njit(cache=True, nogil=True)
def sum_all_closeness(indptr, indices, n):
    """One BFS per source: total distance and reach count for every node."""
    sumdist = np.zeros(n, np.int64)
    reached = np.zeros(n, np.int64)
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    stamp = np.zeros(n, np.int64)
    arcs = 0
    for src in range(n):
        tok = src + 1
        queue[0] = src
        stamp[src] = tok
        dist[src] = 0
        head = 0
        tail = 1
        s = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                arcs += 1
                w = indices[e]
                if stamp[w] != tok:
                    stamp[w] = tok
                    dist[w] = du
                    s += du
                    queue[tail] = w
                    tail += 1
        sumdist[src] = s
        reached[src] = tail
    return sumdist, reached, arcs


@njit(cache=True, nogil=True)
def sum_all_harmonic(indptr, indices, n):
    """One BFS per source: harmonic score (sum of reciprocal distances)."""
    hval = np.zeros(n, np.float64)
    dist = np.zeros(n, np.int64)
    queue = np.empty(n, np.int64)
    stamp = np.zeros(n, np.int64)
    arcs = 0
    for src in range(n):
        tok = src + 1
        queue[0] = src
        stamp[src] = tok
        dist[src] = 0
        head = 0
        tail = 1
        h = 0.0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                arcs += 1
                w = indices[e]
                if stamp[w] != tok:
                    stamp[w] = tok
                    dist[w] = du
                    h += 1.0 / du
                    queue[tail] = w
                    tail += 1
        hval[src] = h
    return hval, arcs


@njit(cache=True, nogil=True)
def tree_level_sums(indptr, indices, n):
    """Distance sums for every node of a tree via the per-level count sweep.

    Returns (sums, levels_used). Exact on trees only.
    """
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
    cur = deg.copy()          # counts at current level k-1
    prev = np.zeros(n, np.int64)
    new = np.empty(n, np.int64)
    sums = deg.astype(np.int64).copy()
    levels = 1
    k = 2
    while k <= n:
        done = True
        for s in range(n):
            acc = 0
            for e in range(indptr[s], indptr[s + 1]):
                acc += cur[indices[e]]
            if k == 2:
                acc -= deg[s]
            else:
                acc -= prev[s] * (deg[s] - 1)
            new[s] = acc
        for s in range(n):
            prev[s] = cur[s]
            cur[s] = new[s]
            if cur[s] > 0:
                sums[s] += k * cur[s]
                done = False
        levels = k
        if done:
            break
        k += 1
    return sums, levels


@njit(cache=True, nogil=True)
def nb_exact(indptr, indices, deg, reach, n, undirected):
    """Neighborhood level-count sweep with known per-node reach counts.

    deg is degree (undirected, with the subtraction recurrence) or out-degree
    (directed, plain sums). Counts saturate at n: only min(count, remaining)
    feeds the bound, but unchecked counts can blow up exponentially.

    Returns (s_lb, h_ub, finish_level, levels_used): an integer lower bound on
    each node's total distance and a float upper bound on its harmonic score.
    """
    cap = np.int64(n)
    cur = deg.astype(np.int64).copy()
    prev = np.zeros(n, np.int64)
    new = np.empty(n, np.int64)
    s_lb = np.zeros(n, np.int64)
    h_ub = np.zeros(n, np.float64)
    finish = np.zeros(n, np.int64)
    visited = np.empty(n, np.int64)
    done = np.zeros(n, np.uint8)
    n_done = 0
    for v in range(n):
        r = reach[v]
        take = cur[v] if cur[v] < r - 1 else r - 1
        if take < 0:
            take = 0
        s_lb[v] = take
        h_ub[v] = float(take)
        visited[v] = 1 + cur[v]
        if visited[v] >= r or cur[v] == 0:
            done[v] = 1
            finish[v] = 1
            n_done += 1
        if cur[v] > cap:
            cur[v] = cap
    levels = 1
    k = 2
    while n_done < n and k <= n + 1:
        for s in range(n):
            acc = 0
            for e in range(indptr[s], indptr[s + 1]):
                acc += cur[indices[e]]
            if undirected:
                if k == 2:
                    acc -= deg[s]
                else:
                    acc -= prev[s] * (deg[s] - 1)
            if acc < 0:
                acc = 0
            elif acc > cap:
                acc = cap
            new[s] = acc
        for s in range(n):
            prev[s] = cur[s]
            cur[s] = new[s]
            if done[s]:
                continue
            g = cur[s]
            r = reach[s]
            nv = visited[s] + g
            if nv < r and g > 0:
                s_lb[s] += k * g
                h_ub[s] += g / k
                visited[s] = nv
            else:
                rem = r - visited[s]
                if rem > g:
                    rem = g  # count sequence died early; keep the partial bound
                if rem > 0:
                    s_lb[s] += k * rem
                    h_ub[s] += rem / k
                visited[s] = nv
                done[s] = 1
                finish[s] = k
                n_done += 1
        levels = k
        k += 1
    return s_lb, h_ub, finish, levels


@njit(cache=True, nogil=True)
def nb_interval(indptr, indices, odeg, lo, hi, n):
    """Directed neighborhood sweep when only reach intervals [lo, hi] are known.

    For each node the farness lower bound is minimized over the candidate
    reach values: lo, hi, and every running prefix sum strictly between them.
    The winning candidate is returned as an exact (numerator, reach) pair.
    Also returns the harmonic upper bound computed against hi.
    """
    cap = np.int64(n)
    cur = odeg.astype(np.int64).copy()
    new = np.empty(n, np.int64)
    best_s = np.zeros(n, np.int64)
    best_r = np.zeros(n, np.int64)
    h_ub = np.zeros(n, np.float64)
    finish = np.zeros(n, np.int64)
    s_run = np.zeros(n, np.int64)
    cum = np.ones(n, np.int64)
    done = np.zeros(n, np.uint8)
    n_done = 0

    for v in range(n):
        if hi[v] <= 1 or odeg[v] == 0:
            done[v] = 1
            best_r[v] = 1
            n_done += 1

    k = np.int64(1)
    while n_done < n and k <= n + 1:
        if k > 1:
            for s in range(n):
                acc = 0
                for e in range(indptr[s], indptr[s + 1]):
                    acc += cur[indices[e]]
                if acc > cap:
                    acc = cap
                new[s] = acc
            for s in range(n):
                cur[s] = new[s]
        for v in range(n):
            if done[v]:
                continue
            g = cur[v]
            c0 = cum[v]
            c1 = c0 + g
            # harmonic: front-load counts until hi is exhausted
            hrem = hi[v] - c0
            htake = g if g < hrem else hrem
            if htake > 0:
                h_ub[v] += htake / k
            if g == 0:
                # counts died out below hi: remaining candidates share s_run,
                # minimized at reach hi
                s_cand = s_run[v]
                if best_r[v] == 0 or _prod_lt(s_cand, (best_r[v] - 1) ** 2,
                                              best_s[v], (hi[v] - 1) ** 2):
                    best_s[v] = s_cand
                    best_r[v] = hi[v]
                done[v] = 1
                finish[v] = k
                n_done += 1
                continue
            if c0 < lo[v] and lo[v] <= c1:
                s_cand = s_run[v] + k * (lo[v] - c0)
                if best_r[v] == 0 or _prod_lt(s_cand, (best_r[v] - 1) ** 2,
                                              best_s[v], (lo[v] - 1) ** 2):
                    best_s[v] = s_cand
                    best_r[v] = lo[v]
            if c1 >= hi[v]:
                s_cand = s_run[v] + k * (hi[v] - c0)
                if best_r[v] == 0 or _prod_lt(s_cand, (best_r[v] - 1) ** 2,
                                              best_s[v], (hi[v] - 1) ** 2):
                    best_s[v] = s_cand
                    best_r[v] = hi[v]
                done[v] = 1
                finish[v] = k
                n_done += 1
            elif c1 >= lo[v] and c1 >= 2:
                # prefix-sum candidate strictly below hi
                s_cand = s_run[v] + k * g
                if best_r[v] == 0 or _prod_lt(s_cand, (best_r[v] - 1) ** 2,
                                              best_s[v], (c1 - 1) ** 2):
                    best_s[v] = s_cand
                    best_r[v] = c1
            s_run[v] += k * g
            cum[v] = c1
        k += 1
    return best_s, best_r, h_ub, finish, k - 1


@njit(cache=True, nogil=True)
def bfs_cut_closeness(indptr, indices, base, n, src, r_lo, r_hi,
                      has_xp, xs, xr, has_xf, xf, undirected):
    """BFS from src that aborts once the running farness bound beats the cutoff.

    The bound at each completed level d assumes the next-level size estimate
    base-sum (out-degrees, or degree-1 for undirected) and distance d+2 for
    everything else reachable. Hits on already-visited nodes tighten the
    estimate one arc at a time; for undirected graphs the first hit per
    scanned node is the arc back toward the root and is skipped.

    Cutoff forms: exact pair (xs, xr) meaning farness (n-1)*xs/(xr-1)^2, or
    float xf. Pruning requires the bound to be strictly greater.

    Returns (pruned, sum_dist, reach, visited_arcs, nlevels, lvl_lo, lvl_hi)
    where lvl_*[d] hold the raw per-level bound numerators for both reach
    endpoints.
    """
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    lvl_lo = np.zeros(n + 2, np.int64)
    lvl_hi = np.zeros(n + 2, np.int64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    s_sum = 0
    nd = 1
    u_cur = np.int64(0)
    u_next = np.int64(0)
    d = np.int64(0)
    arcs = 0
    nlev = 0
    st_lo = np.int64(0)
    st_hi = np.int64(0)
    xr1sq = (xr - 1) * (xr - 1) if has_xp else np.int64(0)
    rlo1sq = (r_lo - 1) * (r_lo - 1)
    rhi1sq = (r_hi - 1) * (r_hi - 1)
    nm1 = np.float64(n - 1)
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du > d:
            d = du
            u_cur = u_next
            u_next = 0
            st_lo = s_sum - u_cur + (d + 2) * (r_lo - nd)
            st_hi = s_sum - u_cur + (d + 2) * (r_hi - nd)
            lvl_lo[d] = st_lo
            lvl_hi[d] = st_hi
            nlev = d
            if _cut_prune(st_lo, st_hi, rlo1sq, rhi1sq, r_lo == r_hi,
                          has_xp, xs, xr1sq, has_xf, xf, nm1):
                return True, np.int64(0), np.int64(0), arcs, nlev, lvl_lo, lvl_hi
        skipped = False
        for e in range(indptr[u], indptr[u + 1]):
            arcs += 1
            w = indices[e]
            if dist[w] < 0:
                dist[w] = du + 1
                s_sum += du + 1
                nd += 1
                u_next += base[w]
                queue[tail] = w
                tail += 1
            else:
                if undirected and not skipped:
                    skipped = True
                    continue
                if u_cur > 0:
                    u_cur -= 1
                    st_lo += 1
                    st_hi += 1
                    if _cut_prune(st_lo, st_hi, rlo1sq, rhi1sq, r_lo == r_hi,
                                  has_xp, xs, xr1sq, has_xf, xf, nm1):
                        return True, np.int64(0), np.int64(0), arcs, nlev, lvl_lo, lvl_hi
    return False, np.int64(s_sum), np.int64(nd), arcs, nlev, lvl_lo, lvl_hi


@njit(cache=True, nogil=True)
def _cut_prune(st_lo, st_hi, rlo1sq, rhi1sq, single, has_xp, xs, xr1sq, has_xf, xf, nm1):
    a_lo = st_lo if st_lo > 0 else np.int64(0)
    a_hi = st_hi if st_hi > 0 else np.int64(0)
    if has_xp:
        over_lo = _prod_gt(a_lo, xr1sq, xs, rlo1sq)
        over_hi = over_lo if single else _prod_gt(a_hi, xr1sq, xs, rhi1sq)
        if over_lo and over_hi:
            return True
    if has_xf:
        f_lo = nm1 * a_lo / rlo1sq
        f_hi = f_lo if single else nm1 * a_hi / rhi1sq
        if f_lo > xf and f_hi > xf:
            return True
    return False


@njit(cache=True, nogil=True)
def bfs_cut_harmonic(indptr, indices, base, n, src, r_hi,
                     has_x, x, margin, undirected):
    """Harmonic-score mirror of bfs_cut_closeness.

    Maintains an upper bound on the score: visited nodes contribute exactly,
    at most min(next-level estimate, remaining) land at d+1, the rest at d+2.
    Prunes when the bound drops strictly below x - margin.

    Returns (pruned, score, reach, visited_arcs, nlevels, lvl_ub).
    """
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    lvl_ub = np.zeros(n + 2, np.float64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    hsum = 0.0
    nd = np.int64(1)
    u_cur = np.int64(0)
    u_next = np.int64(0)
    d = np.int64(0)
    arcs = 0
    nlev = 0
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if du > d:
            d = du
            u_cur = u_next
            u_next = 0
            ub = _harm_ub(hsum, u_cur, r_hi - nd, d)
            lvl_ub[d] = ub
            nlev = d
            if has_x and ub < x - margin:
                return True, 0.0, np.int64(0), arcs, nlev, lvl_ub
        skipped = False
        for e in range(indptr[u], indptr[u + 1]):
            arcs += 1
            w = indices[e]
            if dist[w] < 0:
                dist[w] = du + 1
                hsum += 1.0 / (du + 1)
                nd += 1
                u_next += base[w]
                queue[tail] = w
                tail += 1
            else:
                if undirected and not skipped:
                    skipped = True
                    continue
                if u_cur > 0:
                    u_cur -= 1
                    if has_x:
                        ub = _harm_ub(hsum, u_cur, r_hi - nd, d)
                        if ub < x - margin:
                            return True, 0.0, np.int64(0), arcs, nlev, lvl_ub
    return False, hsum, np.int64(nd), arcs, nlev, lvl_ub


@njit(cache=True, nogil=True)
def _harm_ub(hsum, u_tilde, remaining, d):
    near = u_tilde if u_tilde < remaining else remaining
    if near < 0:
        near = 0
    far = remaining - near
    return hsum + near / (d + 1.0) + far / (d + 2.0)
