"""Pure-numpy fallback for the compiled kernels.

Same signatures and integer results as ``_kernels_numba``, implemented with
level-synchronous frontier expansion instead of per-node queues. Float
accumulation order differs, so harmonic scores may drift by rounding only.
Select with TOPCENT_BACKEND=numpy.
"""

import numpy as np

NAME = "numpy"


def _row_ids(indptr, n):
    return np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))


def _gather(indptr, indices, nodes):
    """Concatenated adjacency rows of ``nodes``, preserving row order."""
    counts = indptr[nodes + 1] - indptr[nodes]
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, np.int64)
    offs = np.concatenate(([0], np.cumsum(counts)[:-1]))
    take = np.repeat(indptr[nodes] - offs, counts) + np.arange(total, dtype=np.int64)
    return indices[take]


def _stable_new(targets, dist):
    """Unvisited targets, first occurrence first (matches sequential BFS order)."""
    fresh = targets[dist[targets] < 0]
    if fresh.size == 0:
        return fresh
    _, first = np.unique(fresh, return_index=True)
    return fresh[np.sort(first)]


def bfs(indptr, indices, n, src):
    dist = np.full(n, -1, np.int64)
    order = np.full(n, -1, np.int64)
    dist[src] = 0
    order[0] = src
    frontier = np.array([src], dtype=np.int64)
    reached = 1
    arcs = 0
    d = 0
    while frontier.size:
        targets = _gather(indptr, indices, frontier)
        arcs += targets.size
        new = _stable_new(targets, dist)
        dist[new] = d + 1
        order[reached:reached + new.size] = new
        reached += new.size
        frontier = new
        d += 1
    return dist, order, reached, arcs


def sum_all_closeness(indptr, indices, n):
    sumdist = np.zeros(n, np.int64)
    reached = np.zeros(n, np.int64)
    arcs = 0
    for src in range(n):
        dist = np.full(n, -1, np.int64)
        dist[src] = 0
        frontier = np.array([src], dtype=np.int64)
        s = 0
        cnt = 1
        d = 0
        while frontier.size:
            targets = _gather(indptr, indices, frontier)
            arcs += targets.size
            new = _stable_new(targets, dist)
            dist[new] = d + 1
            s += (d + 1) * new.size
            cnt += new.size
            frontier = new
            d += 1
        sumdist[src] = s
        reached[src] = cnt
    return sumdist, reached, arcs


def sum_all_harmonic(indptr, indices, n):
    hval = np.zeros(n, np.float64)
    arcs = 0
    for src in range(n):
        dist = np.full(n, -1, np.int64)
        dist[src] = 0
        frontier = np.array([src], dtype=np.int64)
        h = 0.0
        d = 0
        while frontier.size:
            targets = _gather(indptr, indices, frontier)
            arcs += targets.size
            new = _stable_new(targets, dist)
            dist[new] = d + 1
            h += new.size / (d + 1.0)
            frontier = new
            d += 1
        hval[src] = h
    return hval, arcs


def _neighbor_sums(row, indices, values, n):
    # exact for values <= 2^42: float64 holds integers below 2^53
    acc = np.bincount(row, weights=values[indices], minlength=n)
    return acc.astype(np.int64)


def tree_level_sums(indptr, indices, n):
    deg = np.diff(indptr).astype(np.int64)
    row = _row_ids(indptr, n)
    cur = deg.copy()
    prev = np.zeros(n, np.int64)
    sums = deg.copy()
    levels = 1
    k = 2
    while k <= n:
        new = _neighbor_sums(row, indices, cur, n)
        if k == 2:
            new -= deg
        else:
            new -= prev * (deg - 1)
        prev, cur = cur, new
        sums += k * np.maximum(cur, 0)
        levels = k
        if not (cur > 0).any():
            break
        k += 1
    return sums, levels


def nb_exact(indptr, indices, deg, reach, n, undirected):
    cap = np.int64(n)
    row = _row_ids(indptr, n)
    deg = deg.astype(np.int64)
    cur = deg.copy()
    prev = np.zeros(n, np.int64)
    s_lb = np.minimum(cur, reach - 1).clip(min=0).astype(np.int64)
    h_ub = s_lb.astype(np.float64)
    visited = 1 + cur
    finish = np.zeros(n, np.int64)
    done = (visited >= reach) | (cur == 0)
    finish[done] = 1
    np.minimum(cur, cap, out=cur)
    levels = 1
    k = 2
    while not done.all() and k <= n + 1:
        new = _neighbor_sums(row, indices, cur, n)
        if undirected:
            if k == 2:
                new -= deg
            else:
                new -= prev * (deg - 1)
        np.clip(new, 0, cap, out=new)
        prev, cur = cur, new
        g = cur
        nv = visited + g
        act = ~done
        fin = act & ((nv >= reach) | (g == 0))
        cont = act & ~fin
        s_lb[cont] += k * g[cont]
        h_ub[cont] += g[cont] / k
        rem = np.minimum(reach - visited, g)
        np.clip(rem, 0, None, out=rem)
        s_lb[fin] += k * rem[fin]
        h_ub[fin] += rem[fin] / k
        visited[act] = nv[act]
        finish[fin] = k
        done |= fin
        levels = k
        k += 1
    return s_lb, h_ub, finish, levels


def nb_interval(indptr, indices, odeg, lo, hi, n):
    cap = np.int64(n)
    row = _row_ids(indptr, n)
    cur = odeg.astype(np.int64).copy()
    best_s = np.zeros(n, np.int64)
    best_r = np.zeros(n, np.int64)
    h_ub = np.zeros(n, np.float64)
    finish = np.zeros(n, np.int64)
    s_run = np.zeros(n, np.int64)
    cum = np.ones(n, np.int64)
    done = (hi <= 1) | (odeg == 0)
    best_r[done] = 1

    def consider(v, s_cand, r_cand):
        if best_r[v] == 0 or \
                int(s_cand) * (int(best_r[v]) - 1) ** 2 < int(best_s[v]) * (int(r_cand) - 1) ** 2:
            best_s[v] = s_cand
            best_r[v] = r_cand

    k = 1
    while not done.all() and k <= n + 1:
        if k > 1:
            new = _neighbor_sums(row, indices, cur, n)
            np.minimum(new, cap, out=new)
            cur = new
        act = np.flatnonzero(~done)
        g = cur[act]
        c0 = cum[act]
        htake = np.minimum(g, hi[act] - c0).clip(min=0)
        h_ub[act] += htake / k
        for i, v in enumerate(act):
            gi = int(g[i])
            a = int(c0[i])
            b = a + gi
            if gi == 0:
                consider(v, int(s_run[v]), int(hi[v]))
                done[v] = True
                finish[v] = k
                continue
            if a < lo[v] <= b:
                consider(v, int(s_run[v]) + k * (int(lo[v]) - a), int(lo[v]))
            if b >= hi[v]:
                consider(v, int(s_run[v]) + k * (int(hi[v]) - a), int(hi[v]))
                done[v] = True
                finish[v] = k
            elif b >= lo[v] and b >= 2:
                consider(v, int(s_run[v]) + k * gi, b)
            s_run[v] += k * gi
            cum[v] = b
        k += 1
    return best_s, best_r, h_ub, finish, k - 1


def _pair_gt(a, b, c, d):
    return a * b > c * d  # python ints, exact


def bfs_cut_closeness(indptr, indices, base, n, src, r_lo, r_hi,
                      has_xp, xs, xr, has_xf, xf, undirected):
    dist = np.full(n, -1, np.int64)
    lvl_lo = np.zeros(n + 2, np.int64)
    lvl_hi = np.zeros(n + 2, np.int64)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    s_sum = 0
    nd = 1
    u_cur = 0
    d = 0
    arcs = 0
    nlev = 0
    r_lo = int(r_lo)
    r_hi = int(r_hi)
    xr1sq = (int(xr) - 1) ** 2 if has_xp else 0
    rlo1sq = (r_lo - 1) ** 2
    rhi1sq = (r_hi - 1) ** 2
    xs = int(xs)
    nm1 = float(n - 1)

    def prune(st_lo, st_hi):
        a_lo = max(st_lo, 0)
        a_hi = max(st_hi, 0)
        if has_xp:
            if _pair_gt(a_lo, xr1sq, xs, rlo1sq) and _pair_gt(a_hi, xr1sq, xs, rhi1sq):
                return True
        if has_xf:
            if nm1 * a_lo / rlo1sq > xf and nm1 * a_hi / rhi1sq > xf:
                return True
        return False

    while frontier.size:
        st_lo = st_hi = 0
        if d >= 1:
            st_lo = s_sum - u_cur + (d + 2) * (r_lo - nd)
            st_hi = s_sum - u_cur + (d + 2) * (r_hi - nd)
            lvl_lo[d] = st_lo
            lvl_hi[d] = st_hi
            nlev = d
            if prune(st_lo, st_hi):
                return True, 0, 0, arcs, nlev, lvl_lo, lvl_hi
        targets = _gather(indptr, indices, frontier)
        arcs += targets.size
        new = _stable_new(targets, dist)
        dist[new] = d + 1
        s_sum += (d + 1) * new.size
        nd += new.size
        u_next = int(base[new].sum())
        hits = targets.size - new.size
        if undirected and d >= 1:
            hits -= frontier.size  # one arc per node points back a level
        if d >= 1 and hits > 0:
            take = min(u_cur, hits)
            u_cur -= take
            st_lo += take
            st_hi += take
            if prune(st_lo, st_hi):
                return True, 0, 0, arcs, nlev, lvl_lo, lvl_hi
        u_cur = u_next
        frontier = new
        d += 1
    return False, s_sum, nd, arcs, nlev, lvl_lo, lvl_hi


def bfs_cut_harmonic(indptr, indices, base, n, src, r_hi,
                     has_x, x, margin, undirected):
    dist = np.full(n, -1, np.int64)
    lvl_ub = np.zeros(n + 2, np.float64)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    hsum = 0.0
    nd = 1
    u_cur = 0
    d = 0
    arcs = 0
    nlev = 0
    r_hi = int(r_hi)

    def upper(u_tilde):
        near = min(u_tilde, r_hi - nd)
        near = max(near, 0)
        far = (r_hi - nd) - near
        return hsum + near / (d + 1.0) + far / (d + 2.0)

    while frontier.size:
        if d >= 1:
            ub = upper(u_cur)
            lvl_ub[d] = ub
            nlev = d
            if has_x and ub < x - margin:
                return True, 0.0, 0, arcs, nlev, lvl_ub
        targets = _gather(indptr, indices, frontier)
        arcs += targets.size
        new = _stable_new(targets, dist)
        dist[new] = d + 1
        hsum += new.size / (d + 1.0)
        nd += new.size
        u_next = int(base[new].sum())
        hits = targets.size - new.size
        if undirected and d >= 1:
            hits -= frontier.size
        if d >= 1 and hits > 0:
            u_cur = max(u_cur - hits, 0)
            if has_x and upper(u_cur) < x - margin:
                return True, 0.0, 0, arcs, nlev, lvl_ub
        u_cur = u_next
        frontier = new
        d += 1
    return False, hsum, nd, arcs, nlev, lvl_ub
