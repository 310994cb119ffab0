"""Pure-Python search kernels: the portable reference implementation.

Two exhaustive searches live here because they dominate the toolkit's
runtime: degree-constrained edge selection (factor search inside one
biconnected block) and backtracking k-colorability (conflict-free or
proper). cfhyper.kernels picks this module or its compiled twin at import
time; both must explore the identical search tree so that verdicts,
witnesses, and node counts agree exactly.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "pure"

# solve_degree_constrained status codes
FOUND = 0
UNSAT = 1
BUDGET = 2

# color_search modes
CONFLICT_FREE = 0
PROPER = 1


def solve_degree_constrained(
    n: int,
    eu: Sequence[int],
    ev: Sequence[int],
    lo: Sequence[int],
    hi: Sequence[int],
    budget: int,
) -> tuple[int, list[int] | None, int]:
    """Exhaustive search for an edge subset with constrained vertex degrees.

    Edge i joins 0-based vertices eu[i] and ev[i]. The selected degree of
    vertex v must equal lo[v] or hi[v] (lo[v] <= hi[v]; equal for an exact
    target). Edges are branched in ascending index order, trying "selected"
    before "excluded", with unit propagation: a vertex whose remaining
    feasible target is pinned forces all its undecided edges one way.

    Returns (status, selection, nodes) where selection is a 0/1 list per
    edge when status == FOUND and nodes counts branch decisions. UNSAT is
    only reported after the whole tree is refuted; BUDGET after more than
    ``budget`` branch decisions.
    """
    m = len(eu)
    deg = [0] * n
    for i in range(m):
        deg[eu[i]] += 1
        deg[ev[i]] += 1
    vptr = [0] * (n + 1)
    for v in range(n):
        vptr[v + 1] = vptr[v] + deg[v]
    vedges = [0] * (2 * m)
    fill = vptr[:-1]  # slice copy: running insertion cursors per vertex
    for i in range(m):
        vedges[fill[eu[i]]] = i
        fill[eu[i]] += 1
        vedges[fill[ev[i]]] = i
        fill[ev[i]] += 1

    state = [0] * m  # 0 undecided, 1 in, 2 out
    chosen = [0] * n
    undec = deg[:]
    trail: list[int] = []
    nodes = 0

    def check_vertex(v: int, pending: list[tuple[int, int]]) -> bool:
        # dead end -> False; pins the vertex's undecided edges when forced
        c = chosen[v]
        u = undec[v]
        t1 = lo[v]
        t2 = hi[v]
        ok1 = c <= t1 <= c + u
        ok2 = t1 != t2 and c <= t2 <= c + u
        if not ok1 and not ok2:
            return False
        if ok1 and ok2 or u == 0:
            return True
        t = t1 if ok1 else t2
        if t == c:
            val = 2
        elif t == c + u:
            val = 1
        else:
            return True
        for j in range(vptr[v], vptr[v + 1]):
            e = vedges[j]
            if state[e] == 0:
                pending.append((e, val))
        return True

    def assign(e: int, val: int, pending: list[tuple[int, int]]) -> bool:
        s = state[e]
        if s != 0:
            return s == val
        state[e] = val
        trail.append(e)
        a = eu[e]
        b = ev[e]
        undec[a] -= 1
        undec[b] -= 1
        if val == 1:
            chosen[a] += 1
            chosen[b] += 1
        return check_vertex(a, pending) and check_vertex(b, pending)

    def run_queue(pending: list[tuple[int, int]]) -> bool:
        qi = 0
        while qi < len(pending):
            e, val = pending[qi]
            qi += 1
            if not assign(e, val, pending):
                return False
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            e = trail.pop()
            val = state[e]
            state[e] = 0
            a = eu[e]
            b = ev[e]
            undec[a] += 1
            undec[b] += 1
            if val == 1:
                chosen[a] -= 1
                chosen[b] -= 1

    # root propagation: unconditional forcings and degree sanity
    pending: list[tuple[int, int]] = []
    for v in range(n):
        if not check_vertex(v, pending):
            return (UNSAT, None, 0)
    if not run_queue(pending):
        return (UNSAT, None, 0)

    stack: list[list[int]] = []  # frames [edge, next_phase, trail_mark]
    scan = 0
    while True:
        while scan < m and state[scan] != 0:
            scan += 1
        if scan == m:
            return (FOUND, [1 if s == 1 else 0 for s in state], nodes)
        stack.append([scan, 0, len(trail)])
        while True:
            top = stack[-1]
            edge, phase, mark = top
            if phase == 2:
                stack.pop()
                if not stack:
                    return (UNSAT, None, nodes)
                parent = stack[-1]
                undo_to(parent[2])
                parent[1] += 1
                continue
            nodes += 1
            if nodes > budget:
                return (BUDGET, None, nodes)
            if run_queue([(edge, 1 if phase == 0 else 2)]):
                scan = edge + 1
                break
            undo_to(mark)
            top[1] += 1


def color_search(
    n: int,
    edges: Sequence[Sequence[int]],
    k: int,
    mode: int,
) -> tuple[list[int] | None, int]:
    """Find a k-coloring by exhaustive backtracking with symmetry breaking.

    Edges list 0-based vertex ids. Vertices are colored in ascending order
    and vertex v only tries colors up to one more than the largest color
    used before it, so each palette is explored once up to renaming. An
    edge is checked the moment its last vertex is colored: it must contain
    a color appearing exactly once (CONFLICT_FREE mode) or two distinct
    colors (PROPER mode).

    Returns (colors, nodes) with colors a 1-based list per vertex, or
    (None, nodes) when no coloring with k colors exists; nodes counts
    attempted vertex-color assignments.
    """
    if n == 0:
        return ([], 0)
    vinc: list[list[int]] = [[] for _ in range(n)]
    for i, edge in enumerate(edges):
        for v in edge:
            vinc[v].append(i)
    uncolored = [len(e) for e in edges]
    colors = [0] * n
    cnt = [0] * (k + 2)
    nodes = 0

    def edge_ok(i: int) -> bool:
        edge = edges[i]
        if mode == PROPER:
            c0 = colors[edge[0]]
            for v in edge:
                if colors[v] != c0:
                    return True
            return False
        ok = False
        for v in edge:
            cnt[colors[v]] += 1
        for v in edge:
            if cnt[colors[v]] == 1:
                ok = True
                break
        for v in edge:
            cnt[colors[v]] = 0
        return ok

    def place(v: int, c: int) -> bool:
        colors[v] = c
        for i in vinc[v]:
            uncolored[i] -= 1
        for i in vinc[v]:
            if uncolored[i] == 0 and not edge_ok(i):
                return False
        return True

    def unplace(v: int) -> None:
        for i in vinc[v]:
            uncolored[i] += 1
        colors[v] = 0

    maxused = [0] * (n + 1)
    attempt = [0] * n
    v = 0
    while True:
        limit = maxused[v] + 1
        if limit > k:
            limit = k
        c = attempt[v] + 1
        placed = False
        while c <= limit:
            nodes += 1
            if place(v, c):
                placed = True
                break
            unplace(v)
            c += 1
        if placed:
            attempt[v] = c
            maxused[v + 1] = maxused[v] if c <= maxused[v] else c
            v += 1
            if v == n:
                return (colors[:], nodes)
            attempt[v] = 0
        else:
            attempt[v] = 0
            if v == 0:
                return (None, nodes)
            v -= 1
            unplace(v)
