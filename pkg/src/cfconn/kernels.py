"""Hot loops of the exhaustive searches.

Graphs arrive in CSR form (``indptr``, ``indices``, ``edge_ids``); colors are
0-based inside the kernels. Everything here is compiled with numba unless
``CFCONN_DISABLE_NUMBA`` is set, in which case the same code runs in Python.
"""

import numpy as np

from ._accel import njit

MODE_VERTEX = 0
MODE_EDGE = 1
MODE_RANKING = 2


@njit
def vertex_pair_has_cf_path(indptr, indices, colors, s, t, on_path, cnt, stk_v, stk_i):
    """Depth-first search for a simple s-t path with a color used exactly once.

    ``on_path`` and ``cnt`` must be all-zero on entry and are left all-zero.
    """
    cs = colors[s]
    cnt[cs] += 1
    singles = 1
    on_path[s] = True
    stk_v[0] = s
    stk_i[0] = indptr[s]
    depth = 0
    found = False
    while depth >= 0:
        v = stk_v[depth]
        i = stk_i[depth]
        if i < indptr[v + 1]:
            stk_i[depth] = i + 1
            w = indices[i]
            if on_path[w]:
                continue
            cw = colors[w]
            x = cnt[cw]
            if x == 0:
                ns = singles + 1
            elif x == 1:
                ns = singles - 1
            else:
                ns = singles
            if w == t:
                if ns > 0:
                    found = True
                    break
                continue
            cnt[cw] = x + 1
            singles = ns
            on_path[w] = True
            depth += 1
            stk_v[depth] = w
            stk_i[depth] = indptr[w]
        else:
            cv = colors[v]
            x = cnt[cv]
            cnt[cv] = x - 1
            if x == 1:
                singles -= 1
            elif x == 2:
                singles += 1
            on_path[v] = False
            depth -= 1
    if found:
        for j in range(depth + 1):
            u = stk_v[j]
            cnt[colors[u]] -= 1
            on_path[u] = False
    return found


@njit
def vertex_first_fail(indptr, indices, colors, ncolors):
    """First pair (lexicographic) with no conflict-free path, encoded ``u*n+v``; -1 if none."""
    n = indptr.shape[0] - 1
    on_path = np.zeros(n, dtype=np.bool_)
    cnt = np.zeros(ncolors, dtype=np.int64)
    stk_v = np.zeros(n, dtype=np.int64)
    stk_i = np.zeros(n, dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if not vertex_pair_has_cf_path(indptr, indices, colors, u, v, on_path, cnt, stk_v, stk_i):
                return u * n + v
    return -1


@njit
def edge_pair_has_cf_path(indptr, indices, eids, ecolors, s, t, on_path, cnt, stk_v, stk_i, stk_c):
    """Edge analogue of :func:`vertex_pair_has_cf_path`; ``stk_c`` holds entering edge colors."""
    singles = 0
    on_path[s] = True
    stk_v[0] = s
    stk_i[0] = indptr[s]
    stk_c[0] = -1
    depth = 0
    found = False
    while depth >= 0:
        v = stk_v[depth]
        i = stk_i[depth]
        if i < indptr[v + 1]:
            stk_i[depth] = i + 1
            w = indices[i]
            if on_path[w]:
                continue
            c = ecolors[eids[i]]
            x = cnt[c]
            if x == 0:
                ns = singles + 1
            elif x == 1:
                ns = singles - 1
            else:
                ns = singles
            if w == t:
                if ns > 0:
                    found = True
                    break
                continue
            cnt[c] = x + 1
            singles = ns
            on_path[w] = True
            depth += 1
            stk_v[depth] = w
            stk_i[depth] = indptr[w]
            stk_c[depth] = c
        else:
            c = stk_c[depth]
            if c >= 0:
                x = cnt[c]
                cnt[c] = x - 1
                if x == 1:
                    singles -= 1
                elif x == 2:
                    singles += 1
            on_path[v] = False
            depth -= 1
    if found:
        for j in range(depth + 1):
            on_path[stk_v[j]] = False
            if stk_c[j] >= 0:
                cnt[stk_c[j]] -= 1
    return found


@njit
def edge_first_fail(indptr, indices, eids, ecolors, ncolors):
    n = indptr.shape[0] - 1
    on_path = np.zeros(n, dtype=np.bool_)
    cnt = np.zeros(ncolors, dtype=np.int64)
    stk_v = np.zeros(n, dtype=np.int64)
    stk_i = np.zeros(n, dtype=np.int64)
    stk_c = np.zeros(n, dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if not edge_pair_has_cf_path(indptr, indices, eids, ecolors, u, v, on_path, cnt, stk_v, stk_i, stk_c):
                return u * n + v
    return -1


@njit
def ranking_first_fail(indptr, indices, labels):
    """First equal-label pair joined by a path with no larger label; -1 if the ranking is valid.

    Such a path exists iff the pair is connected inside the subgraph induced
    by labels <= their common label, so a reachability sweep decides it.
    """
    n = indptr.shape[0] - 1
    seen = np.zeros(n, dtype=np.int64)
    queue = np.zeros(n, dtype=np.int64)
    stamp = 0
    for u in range(n):
        lab = labels[u]
        stamp += 1
        seen[u] = stamp
        head = 0
        tail = 1
        queue[0] = u
        best = n
        while head < tail:
            x = queue[head]
            head += 1
            for i in range(indptr[x], indptr[x + 1]):
                w = indices[i]
                if seen[w] == stamp or labels[w] > lab:
                    continue
                seen[w] = stamp
                queue[tail] = w
                tail += 1
                if labels[w] == lab and w > u and w < best:
                    best = w
        if best < n:
            return u * n + best
    return -1


@njit
def _tree_path_ok(mode, col, lo, hi, path_items, cnt):
    if mode == MODE_RANKING:
        lab = col[path_items[lo]]
        if col[path_items[hi - 1]] != lab:
            return True
        for j in range(lo + 1, hi - 1):
            if col[path_items[j]] > lab:
                return True
        return False
    for j in range(lo, hi):
        cnt[col[path_items[j]]] += 1
    ok = False
    for j in range(lo, hi):
        c = col[path_items[j]]
        if cnt[c] == 1:
            ok = True
        cnt[c] = 0
    return ok


@njit
def search(mode, m, k, surjective, tree, sched_ptr, sched_pair, path_ptr, path_items, indptr, indices, eids):
    """Enumerate assignments of ``k`` labels to ``m`` items in lexicographic order.

    With ``surjective`` the assignments are restricted growth strings using
    exactly ``k`` labels, one representative per color-class permutation.
    For trees every pair's unique path is checked as soon as its last item
    is assigned, pruning dead prefixes; otherwise complete assignments are
    verified by path search. Returns ``(found, assignment, explored)`` where
    ``explored`` counts complete assignments plus pruned prefixes.
    """
    col = np.full(m, -1, dtype=np.int64)
    used = np.zeros(m, dtype=np.int64)
    cnt = np.zeros(k, dtype=np.int64)
    explored = 0
    d = 0
    while d >= 0:
        prev = used[d - 1] if d > 0 else 0
        c = col[d] + 1
        if surjective:
            limit = prev if prev < k else k - 1
        else:
            limit = k - 1
        if c > limit:
            col[d] = -1
            d -= 1
            continue
        col[d] = c
        if surjective:
            nu = prev + 1 if c == prev else prev
            if nu + (m - d - 1) < k:
                continue
            used[d] = nu
        ok = True
        if tree:
            for s in range(sched_ptr[d], sched_ptr[d + 1]):
                p = sched_pair[s]
                if not _tree_path_ok(mode, col, path_ptr[p], path_ptr[p + 1], path_items, cnt):
                    ok = False
                    break
            if not ok:
                explored += 1
                continue
        if d == m - 1:
            explored += 1
            if not tree:
                if mode == MODE_VERTEX:
                    ok = vertex_first_fail(indptr, indices, col, k) < 0
                elif mode == MODE_EDGE:
                    ok = edge_first_fail(indptr, indices, eids, col, k) < 0
                else:
                    ok = ranking_first_fail(indptr, indices, col) < 0
            if ok:
                return True, col.copy(), explored
            continue
        d += 1
    return False, col, explored


@njit
def min_adjacency_code(adjmat, perms):
    """Smallest upper-triangle adjacency code over the given vertex permutations.

    Bits are taken row-major over pairs ``i < j`` of the relabeled graph, the
    first pair most significant. Returns ``(code, index of first minimizing perm)``.
    """
    n = adjmat.shape[0]
    nbits = n * (n - 1) // 2
    best = np.int64(-1)
    best_idx = -1
    for q in range(perms.shape[0]):
        code = np.int64(0)
        bit = nbits
        state = 0 if best >= 0 else -1
        for i in range(n):
            pi = perms[q, i]
            for j in range(i + 1, n):
                bit -= 1
                code = (code << 1) | adjmat[pi, perms[q, j]]
                if state == 0:
                    prefix = best >> bit
                    if code > prefix:
                        state = 1
                        break
                    if code < prefix:
                        state = -1
            if state == 1:
                break
        if state == 1:
            continue
        if best < 0 or code < best:
            best = code
            best_idx = q
    return best, best_idx


@njit
def tree_first_fail(indptr, indices, eids, colors, ncolors, edge_mode):
    """Conflict-free check of a colored tree in O(n^2).

    One depth-first sweep per source walks every tree path out of it while
    maintaining per-color counts, so each pair costs O(1) beyond the sweep.
    ``colors`` is indexed by vertex, or by edge id when ``edge_mode`` is set.
    Returns the first failing pair as ``u*n+v`` or -1.
    """
    n = indptr.shape[0] - 1
    cnt = np.zeros(ncolors, dtype=np.int64)
    stk_v = np.zeros(n, dtype=np.int64)
    stk_p = np.zeros(n, dtype=np.int64)
    stk_i = np.zeros(n, dtype=np.int64)
    stk_c = np.zeros(n, dtype=np.int64)
    for u in range(n):
        worst = n
        singles = 0
        if edge_mode:
            stk_c[0] = -1
        else:
            cnt[colors[u]] = 1
            singles = 1
            stk_c[0] = colors[u]
        stk_v[0] = u
        stk_p[0] = -1
        stk_i[0] = indptr[u]
        depth = 0
        while depth >= 0:
            v = stk_v[depth]
            i = stk_i[depth]
            if i < indptr[v + 1]:
                stk_i[depth] = i + 1
                w = indices[i]
                if w == stk_p[depth]:
                    continue
                c = colors[eids[i]] if edge_mode else colors[w]
                x = cnt[c]
                cnt[c] = x + 1
                if x == 0:
                    singles += 1
                elif x == 1:
                    singles -= 1
                if w > u and singles == 0 and w < worst:
                    worst = w
                depth += 1
                stk_v[depth] = w
                stk_p[depth] = v
                stk_i[depth] = indptr[w]
                stk_c[depth] = c
            else:
                c = stk_c[depth]
                if c >= 0:
                    x = cnt[c]
                    cnt[c] = x - 1
                    if x == 1:
                        singles -= 1
                    elif x == 2:
                        singles += 1
                depth -= 1
        if worst < n:
            return u * n + worst
    return -1
