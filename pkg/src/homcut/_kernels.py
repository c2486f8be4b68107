"""Search kernels shared by the homomorphism and cut engines.

The two functions below are written in a numba-compatible subset of Python
(scalar loops over numpy arrays).  When numba is importable they are compiled
with ``@njit(cache=True)``; setting ``HOMCUT_DISABLE_NUMBA=1`` forces the
interpreted fallback.  Both paths execute the same statements, so results are
bit-identical; only speed differs (see ``benchmarks/bench_kernels.py``).
"""
from __future__ import annotations

import os

import numpy as np


def _numba_wanted() -> bool:
    flag = os.environ.get("HOMCUT_DISABLE_NUMBA", "").strip().lower()
    return flag not in {"1", "true", "yes"}


BACKEND = "python"
_njit = None
if _numba_wanted():
    try:
        from numba import njit as _njit

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _njit = None


def _jit(fn):
    if _njit is not None:
        return _njit(cache=True)(fn)
    return fn


@_jit
def hom_search(
    order,        # int32[n_g]      static variable order
    g_nbr_start,  # int32[n_g + 1]  CSR neighbour offsets (loops excluded)
    g_nbr,        # int32[...]      CSR neighbour ids
    g_inc_start,  # int32[n_g + 1]  CSR incident-edge offsets
    g_inc_edge,   # int32[...]      CSR incident-edge ids
    edge_u,       # int32[m_g]      edge endpoints (loops excluded)
    edge_v,       # int32[m_g]
    allowed,      # uint8[n_g, n_h] per-vertex candidate targets
    hadj,         # uint8[n_h, n_h] target adjacency, diagonal = loops
    h_eidx,       # int32[n_h, n_h] non-loop target edge index, -1 if none
    n_h_edges,    # int64           number of non-loop target edges
    mode,         # int64           0 plain/list, 1 surjective, 2 compaction
    out,          # int8[cap, n_g]  result buffer
    cap,          # int64
):
    """Depth-first search for edge-preserving maps, in canonical order.

    Values are tried ascending per vertex, so the emission order (and hence
    the first witness) is fully deterministic.  Returns ``(count, truncated)``
    where ``truncated`` signals that the buffer filled before the search space
    was exhausted.
    """
    n_g = order.shape[0]
    n_h = hadj.shape[0]
    img = np.full(n_g, -1, np.int8)
    hit = np.zeros(n_h, np.int64)
    unhit = n_h
    m_g = edge_u.shape[0]
    re = np.full(m_g, 2, np.int8)  # unassigned endpoints per input edge
    edges_open = m_g
    cover = np.zeros(n_h_edges + 1, np.int64)
    uncovered = n_h_edges
    mark = np.full(n_h_edges + 1, -1, np.int64)
    stamp = 0
    cand = np.zeros(n_g, np.int64)
    count = 0
    truncated = 0
    if cap == 0:
        return 0, 1
    depth = 0
    cand[0] = 0
    while depth >= 0:
        u = order[depth]
        x = cand[depth]
        descended = False
        while x < n_h:
            if allowed[u, x] == 0:
                x += 1
                continue
            consistent = True
            for t in range(g_nbr_start[u], g_nbr_start[u + 1]):
                iw = img[g_nbr[t]]
                if iw >= 0 and hadj[x, iw] == 0:
                    consistent = False
                    break
            if not consistent:
                x += 1
                continue
            # effect of assigning u -> x, computed without mutating state
            new_unhit = unhit
            if hit[x] == 0:
                new_unhit -= 1
            stamp += 1
            newly_closed = 0
            newly_covered = 0
            for t in range(g_inc_start[u], g_inc_start[u + 1]):
                e = g_inc_edge[t]
                if re[e] != 1:
                    continue
                newly_closed += 1
                w = edge_v[e] if edge_u[e] == u else edge_u[e]
                y = img[w]
                if y != x:
                    ei = h_eidx[x, y]
                    if ei >= 0 and cover[ei] == 0 and mark[ei] != stamp:
                        mark[ei] = stamp
                        newly_covered += 1
            new_uncovered = uncovered - newly_covered
            new_open = edges_open - newly_closed
            if depth + 1 == n_g:
                ok = True
                if mode == 1 and new_unhit > 0:
                    ok = False
                if mode == 2 and new_uncovered > 0:
                    ok = False
                if ok:
                    img[u] = x
                    for t in range(n_g):
                        out[count, t] = img[t]
                    img[u] = -1
                    count += 1
                    if count == cap:
                        truncated = 1
                        depth = -1
                        break
                x += 1
                continue
            viable = True
            if mode == 1 and n_g - depth - 1 < new_unhit:
                viable = False
            if mode == 2 and new_uncovered > new_open:
                viable = False
            if not viable:
                x += 1
                continue
            # commit the assignment
            img[u] = x
            hit[x] += 1
            unhit = new_unhit
            for t in range(g_inc_start[u], g_inc_start[u + 1]):
                e = g_inc_edge[t]
                re[e] -= 1
                if re[e] == 0:
                    edges_open -= 1
                    a = img[edge_u[e]]
                    b = img[edge_v[e]]
                    if a != b:
                        ei = h_eidx[a, b]
                        if ei >= 0:
                            cover[ei] += 1
                            if cover[ei] == 1:
                                uncovered -= 1
            cand[depth] = x
            depth += 1
            cand[depth] = 0
            descended = True
            break
        if truncated == 1:
            break
        if descended:
            continue
        # values exhausted at this depth: undo the assignment one level up
        depth -= 1
        if depth < 0:
            break
        u = order[depth]
        x = img[u]
        for t in range(g_inc_start[u], g_inc_start[u + 1]):
            e = g_inc_edge[t]
            if re[e] == 0:
                edges_open += 1
                a = img[edge_u[e]]
                b = img[edge_v[e]]
                if a != b:
                    ei = h_eidx[a, b]
                    if ei >= 0:
                        cover[ei] -= 1
                        if cover[ei] == 0:
                            uncovered += 1
            re[e] += 1
        hit[x] -= 1
        if hit[x] == 0:
            unhit += 1
        img[u] = -1
        cand[depth] = x + 1
    return count, truncated


@_jit
def cut_search(
    nbr_start,  # int32[n + 1] CSR neighbour offsets (graph is irreflexive)
    nbr,        # int32[2m]
    bound1,     # int64        crossing-degree bound on side 1
    bound2,     # int64        crossing-degree bound on side 2
    fix_first,  # int64        1 to pin vertex 0 to side 1 (orientation quotient)
    out,        # int8[cap, n] side vectors of the valid cuts
    cap,        # int64
):
    """Enumerate two-part vertex cuts whose crossing degrees respect the
    per-side bounds.

    Branches on the lowest unassigned vertex (side 1 first) and applies unit
    propagation: once an assigned vertex reaches its crossing bound, all its
    unassigned neighbours are forced to its side.  Complete and exact; the
    propagation only removes provably invalid completions.
    """
    n = nbr_start.shape[0] - 1
    count = 0
    truncated = 0
    if n < 2 or cap == 0:
        return 0, 0
    side = np.zeros(n, np.int8)
    cross = np.zeros(n, np.int64)
    trail = np.empty(n, np.int32)
    tp = 0
    dec_v = np.empty(n, np.int32)
    dec_next = np.empty(n, np.int8)
    dec_tp = np.empty(n, np.int32)
    qcap = 2 * nbr.shape[0] + n + 8
    force_v = np.empty(qcap, np.int32)
    force_s = np.empty(qcap, np.int8)
    dec_v[0] = 0
    dec_next[0] = 1
    dec_tp[0] = 0
    depth = 1
    while depth > 0:
        d = depth - 1
        # roll back whatever the previous branch of this decision applied
        while tp > dec_tp[d]:
            tp -= 1
            v = trail[tp]
            s = side[v]
            for t in range(nbr_start[v], nbr_start[v + 1]):
                w = nbr[t]
                if side[w] != 0 and side[w] != s:
                    cross[w] -= 1
            side[v] = 0
            cross[v] = 0
        s = dec_next[d]
        maxs = 1 if (fix_first == 1 and dec_v[d] == 0) else 2
        if s > maxs:
            depth -= 1
            continue
        dec_next[d] = s + 1
        # assign the decision vertex and propagate forced moves
        ok = True
        qh = 0
        qt = 0
        force_v[qt] = dec_v[d]
        force_s[qt] = s
        qt += 1
        while qh < qt:
            v = force_v[qh]
            sv = force_s[qh]
            qh += 1
            if side[v] == sv:
                continue
            if side[v] != 0:
                ok = False
                break
            side[v] = sv
            trail[tp] = v
            tp += 1
            bv = bound1 if sv == 1 else bound2
            # bookkeeping must complete even on failure, or the rollback
            # would decrement contributions that were never applied
            c = 0
            for t in range(nbr_start[v], nbr_start[v + 1]):
                w = nbr[t]
                sw = side[w]
                if sw == 0 or sw == sv:
                    continue
                c += 1
                cross[w] += 1
                bw = bound1 if sw == 1 else bound2
                if cross[w] > bw:
                    ok = False
                elif cross[w] == bw and ok:
                    for t2 in range(nbr_start[w], nbr_start[w + 1]):
                        z = nbr[t2]
                        if side[z] == 0:
                            force_v[qt] = z
                            force_s[qt] = sw
                            qt += 1
            cross[v] = c
            if c > bv:
                ok = False
            if not ok:
                break
            if c == bv:
                for t in range(nbr_start[v], nbr_start[v + 1]):
                    z = nbr[t]
                    if side[z] == 0:
                        force_v[qt] = z
                        force_s[qt] = sv
                        qt += 1
        if not ok:
            continue
        # descend to the next decision, or emit a complete assignment
        v = 0
        while v < n and side[v] != 0:
            v += 1
        if v == n:
            n1 = 0
            for t in range(n):
                if side[t] == 1:
                    n1 += 1
            if 0 < n1 < n:
                for t in range(n):
                    out[count, t] = side[t]
                count += 1
                if count == cap:
                    truncated = 1
                    break
            continue
        dec_v[depth] = v
        dec_next[depth] = 1
        dec_tp[depth] = tp
        depth += 1
    return count, truncated
