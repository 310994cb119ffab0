# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: the fast twin of cfhyper._kernels_py.

Same API, same deterministic search order, same node accounting; only the
data structures differ (flat C arrays instead of Python lists). The test
suite pins exact agreement between the two backends.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "compiled"

FOUND = 0
UNSAT = 1
BUDGET = 2

CONFLICT_FREE = 0
PROPER = 1

cdef enum:
    VAL_IN = 1
    VAL_OUT = 2
    MODE_PROPER = 1


cdef struct DCState:
    int n
    int m
    int* eu
    int* ev
    int* lo
    int* hi
    int* vptr
    int* vedges
    int* state
    int* chosen
    int* undec
    int* trail
    int trail_len
    int* pend_edge
    int* pend_val
    int pend_cap


cdef int _check_vertex(DCState* s, int v, int* pend_len) except -2:
    # 0 dead end, 1 fine; may append forced edges to the pending queue
    cdef int c = s.chosen[v]
    cdef int u = s.undec[v]
    cdef int t1 = s.lo[v]
    cdef int t2 = s.hi[v]
    cdef int ok1 = c <= t1 <= c + u
    cdef int ok2 = t1 != t2 and c <= t2 <= c + u
    cdef int t, val, j, e
    if not ok1 and not ok2:
        return 0
    if (ok1 and ok2) or u == 0:
        return 1
    t = t1 if ok1 else t2
    if t == c:
        val = VAL_OUT
    elif t == c + u:
        val = VAL_IN
    else:
        return 1
    for j in range(s.vptr[v], s.vptr[v + 1]):
        e = s.vedges[j]
        if s.state[e] == 0:
            if pend_len[0] >= s.pend_cap:
                return -1  # caller grows the queue and retries from scratch
            s.pend_edge[pend_len[0]] = e
            s.pend_val[pend_len[0]] = val
            pend_len[0] += 1
    return 1


cdef int _assign(DCState* s, int e, int val, int* pend_len) except -2:
    cdef int st = s.state[e]
    cdef int a, b, ra
    if st != 0:
        return 1 if st == val else 0
    s.state[e] = val
    s.trail[s.trail_len] = e
    s.trail_len += 1
    a = s.eu[e]
    b = s.ev[e]
    s.undec[a] -= 1
    s.undec[b] -= 1
    if val == VAL_IN:
        s.chosen[a] += 1
        s.chosen[b] += 1
    ra = _check_vertex(s, a, pend_len)
    if ra != 1:
        return ra
    return _check_vertex(s, b, pend_len)


cdef int _run_queue(DCState* s, int* pend_len) except -2:
    cdef int qi = 0
    cdef int r
    while qi < pend_len[0]:
        r = _assign(s, s.pend_edge[qi], s.pend_val[qi], pend_len)
        qi += 1
        if r != 1:
            return r
    return 1


cdef void _undo_to(DCState* s, int mark):
    cdef int e, val, a, b
    while s.trail_len > mark:
        s.trail_len -= 1
        e = s.trail[s.trail_len]
        val = s.state[e]
        s.state[e] = 0
        a = s.eu[e]
        b = s.ev[e]
        s.undec[a] += 1
        s.undec[b] += 1
        if val == VAL_IN:
            s.chosen[a] -= 1
            s.chosen[b] -= 1


cdef int _grow_pending(DCState* s) except -1:
    cdef int cap = s.pend_cap * 2
    cdef int* pe = <int*> malloc(cap * sizeof(int))
    cdef int* pv = <int*> malloc(cap * sizeof(int))
    if pe == NULL or pv == NULL:
        if pe != NULL:
            free(pe)
        if pv != NULL:
            free(pv)
        raise MemoryError()
    free(s.pend_edge)
    free(s.pend_val)
    s.pend_edge = pe
    s.pend_val = pv
    s.pend_cap = cap
    return 0


cdef inline int _edge_ok(int e, int* eptr, int* everts, int* colors,
                         int* cnt, int mode):
    cdef int j, c0, ok
    if mode == MODE_PROPER:
        c0 = colors[everts[eptr[e]]]
        for j in range(eptr[e], eptr[e + 1]):
            if colors[everts[j]] != c0:
                return 1
        return 0
    ok = 0
    for j in range(eptr[e], eptr[e + 1]):
        cnt[colors[everts[j]]] += 1
    for j in range(eptr[e], eptr[e + 1]):
        if cnt[colors[everts[j]]] == 1:
            ok = 1
            break
    for j in range(eptr[e], eptr[e + 1]):
        cnt[colors[everts[j]]] = 0
    return ok


def solve_degree_constrained(n, eu, ev, lo, hi, budget):
    """See cfhyper._kernels_py.solve_degree_constrained."""
    cdef int cn = n
    cdef int m = len(eu)
    cdef long long cbudget = budget
    cdef long long nodes = 0
    cdef DCState s
    cdef int i, v, e, r, scan, edge, phase, mark, depth
    cdef int pend_len
    cdef int* frame_edge = NULL
    cdef int* frame_phase = NULL
    cdef int* frame_mark = NULL
    cdef int* fill = NULL
    cdef list selection

    memset(&s, 0, sizeof(DCState))
    s.n = cn
    s.m = m
    try:
        s.eu = <int*> malloc(max(m, 1) * sizeof(int))
        s.ev = <int*> malloc(max(m, 1) * sizeof(int))
        s.lo = <int*> malloc(max(cn, 1) * sizeof(int))
        s.hi = <int*> malloc(max(cn, 1) * sizeof(int))
        s.vptr = <int*> malloc((cn + 1) * sizeof(int))
        s.vedges = <int*> malloc(max(2 * m, 1) * sizeof(int))
        s.state = <int*> malloc(max(m, 1) * sizeof(int))
        s.chosen = <int*> malloc(max(cn, 1) * sizeof(int))
        s.undec = <int*> malloc(max(cn, 1) * sizeof(int))
        s.trail = <int*> malloc(max(m, 1) * sizeof(int))
        s.pend_cap = 4 * m + 16
        s.pend_edge = <int*> malloc(s.pend_cap * sizeof(int))
        s.pend_val = <int*> malloc(s.pend_cap * sizeof(int))
        fill = <int*> malloc(max(cn, 1) * sizeof(int))
        frame_edge = <int*> malloc(max(m, 1) * sizeof(int))
        frame_phase = <int*> malloc(max(m, 1) * sizeof(int))
        frame_mark = <int*> malloc(max(m, 1) * sizeof(int))
        if (s.eu == NULL or s.ev == NULL or s.lo == NULL or s.hi == NULL
                or s.vptr == NULL or s.vedges == NULL or s.state == NULL
                or s.chosen == NULL or s.undec == NULL or s.trail == NULL
                or s.pend_edge == NULL or s.pend_val == NULL or fill == NULL
                or frame_edge == NULL or frame_phase == NULL
                or frame_mark == NULL):
            raise MemoryError()

        for i in range(m):
            s.eu[i] = eu[i]
            s.ev[i] = ev[i]
        for v in range(cn):
            s.lo[v] = lo[v]
            s.hi[v] = hi[v]
            s.chosen[v] = 0
            s.undec[v] = 0
        for i in range(m):
            s.undec[s.eu[i]] += 1
            s.undec[s.ev[i]] += 1
        s.vptr[0] = 0
        for v in range(cn):
            s.vptr[v + 1] = s.vptr[v] + s.undec[v]
            fill[v] = s.vptr[v]
        for i in range(m):
            s.vedges[fill[s.eu[i]]] = i
            fill[s.eu[i]] += 1
            s.vedges[fill[s.ev[i]]] = i
            fill[s.ev[i]] += 1
        for i in range(m):
            s.state[i] = 0
        s.trail_len = 0

        # root propagation; -1 means the pending queue overflowed mid-run,
        # in which case we grow it and redo the root from scratch
        while True:
            pend_len = 0
            r = 1
            for v in range(cn):
                r = _check_vertex(&s, v, &pend_len)
                if r != 1:
                    break
            if r == 1:
                r = _run_queue(&s, &pend_len)
            if r == 0:
                return (UNSAT, None, 0)
            if r == 1:
                break
            _undo_to(&s, 0)
            _grow_pending(&s)

        depth = 0
        scan = 0
        while True:
            while scan < m and s.state[scan] != 0:
                scan += 1
            if scan == m:
                selection = [0] * m
                for i in range(m):
                    if s.state[i] == VAL_IN:
                        selection[i] = 1
                return (FOUND, selection, nodes)
            frame_edge[depth] = scan
            frame_phase[depth] = 0
            frame_mark[depth] = s.trail_len
            depth += 1
            while True:
                edge = frame_edge[depth - 1]
                phase = frame_phase[depth - 1]
                mark = frame_mark[depth - 1]
                if phase == 2:
                    depth -= 1
                    if depth == 0:
                        return (UNSAT, None, nodes)
                    _undo_to(&s, frame_mark[depth - 1])
                    frame_phase[depth - 1] += 1
                    continue
                nodes += 1
                if nodes > cbudget:
                    return (BUDGET, None, nodes)
                while True:
                    pend_len = 1
                    s.pend_edge[0] = edge
                    s.pend_val[0] = VAL_IN if phase == 0 else VAL_OUT
                    r = _run_queue(&s, &pend_len)
                    if r != -1:
                        break
                    _undo_to(&s, mark)
                    _grow_pending(&s)
                if r == 1:
                    scan = edge + 1
                    break
                _undo_to(&s, mark)
                frame_phase[depth - 1] += 1
    finally:
        free(s.eu)
        free(s.ev)
        free(s.lo)
        free(s.hi)
        free(s.vptr)
        free(s.vedges)
        free(s.state)
        free(s.chosen)
        free(s.undec)
        free(s.trail)
        free(s.pend_edge)
        free(s.pend_val)
        free(fill)
        free(frame_edge)
        free(frame_phase)
        free(frame_mark)


def color_search(n, edges, k, mode):
    """See cfhyper._kernels_py.color_search."""
    cdef int cn = n
    cdef int ck = k
    cdef int cmode = mode
    cdef int m = len(edges)
    cdef long long nodes = 0
    cdef int* eptr = NULL
    cdef int* everts = NULL
    cdef int* vptr = NULL
    cdef int* vinc = NULL
    cdef int* vfill = NULL
    cdef int* uncolored = NULL
    cdef int* colors = NULL
    cdef int* cnt = NULL
    cdef int* attempt = NULL
    cdef int* maxused = NULL
    cdef int total = 0
    cdef int i, j, v, c, e, limit, placed, ok

    if cn == 0:
        return ([], 0)

    for edge in edges:
        total += len(edge)

    try:
        eptr = <int*> malloc((m + 1) * sizeof(int))
        everts = <int*> malloc(max(total, 1) * sizeof(int))
        vptr = <int*> malloc((cn + 1) * sizeof(int))
        vinc = <int*> malloc(max(total, 1) * sizeof(int))
        vfill = <int*> malloc(cn * sizeof(int))
        uncolored = <int*> malloc(max(m, 1) * sizeof(int))
        colors = <int*> malloc(cn * sizeof(int))
        cnt = <int*> malloc((ck + 2) * sizeof(int))
        attempt = <int*> malloc(cn * sizeof(int))
        maxused = <int*> malloc((cn + 1) * sizeof(int))
        if (eptr == NULL or everts == NULL or vptr == NULL or vinc == NULL
                or vfill == NULL or uncolored == NULL or colors == NULL
                or cnt == NULL or attempt == NULL or maxused == NULL):
            raise MemoryError()

        eptr[0] = 0
        i = 0
        j = 0
        for edge in edges:
            for v in edge:
                everts[j] = v
                j += 1
            i += 1
            eptr[i] = j
        for v in range(cn):
            vfill[v] = 0
        for j in range(total):
            vfill[everts[j]] += 1
        vptr[0] = 0
        for v in range(cn):
            vptr[v + 1] = vptr[v] + vfill[v]
            vfill[v] = vptr[v]
        for i in range(m):
            uncolored[i] = eptr[i + 1] - eptr[i]
            for j in range(eptr[i], eptr[i + 1]):
                v = everts[j]
                vinc[vfill[v]] = i
                vfill[v] += 1
        for v in range(cn):
            colors[v] = 0
            attempt[v] = 0
        for c in range(ck + 2):
            cnt[c] = 0
        maxused[0] = 0

        v = 0
        while True:
            limit = maxused[v] + 1
            if limit > ck:
                limit = ck
            c = attempt[v] + 1
            placed = 0
            while c <= limit:
                nodes += 1
                # place v with color c, checking edges it completes
                colors[v] = c
                ok = 1
                for j in range(vptr[v], vptr[v + 1]):
                    uncolored[vinc[j]] -= 1
                for j in range(vptr[v], vptr[v + 1]):
                    e = vinc[j]
                    if uncolored[e] == 0 and not _edge_ok(
                            e, eptr, everts, colors, cnt, cmode):
                        ok = 0
                        break
                if ok:
                    placed = 1
                    break
                for j in range(vptr[v], vptr[v + 1]):
                    uncolored[vinc[j]] += 1
                colors[v] = 0
                c += 1
            if placed:
                attempt[v] = c
                maxused[v + 1] = maxused[v] if c <= maxused[v] else c
                v += 1
                if v == cn:
                    return ([colors[i] for i in range(cn)], nodes)
                attempt[v] = 0
            else:
                attempt[v] = 0
                if v == 0:
                    return (None, nodes)
                v -= 1
                for j in range(vptr[v], vptr[v + 1]):
                    uncolored[vinc[j]] += 1
                colors[v] = 0
    finally:
        free(eptr)
        free(everts)
        free(vptr)
        free(vinc)
        free(vfill)
        free(uncolored)
        free(colors)
        free(cnt)
        free(attempt)
        free(maxused)
