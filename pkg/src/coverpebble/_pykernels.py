"""Pure-Python kernels; reference twins of ``_ckernels.pyx``.

Both backends expose the same functions with the same arguments and return
values, and both must agree exactly (tests run them side by side).

``search``
    Depth-first reachability search for a distribution containing ``w``.
    Returns ``(status, path, states, max_depth)`` where ``path`` is a list of
    arc indices.  ``status`` is one of FOUND, EXHAUSTED, STATE_LIMIT,
    TIME_LIMIT.
``cover_table``
    Exact cover flag for every distribution with at most ``T`` pebbles,
    indexed by :func:`rank`.
"""

from math import comb
from time import perf_counter

FOUND, EXHAUSTED, STATE_LIMIT, TIME_LIMIT = 1, 0, -1, -2

_TIME_CHECK_EVERY = 1024


def search(n, arcs, coef, wvals, w, d, prune, max_states, max_seconds):
    start = perf_counter()
    state = list(d)
    deficit = sum(1 for i in range(n) if state[i] < w[i])
    if deficit == 0:
        return FOUND, [], 1, 0

    # delta[a][v]: change of the singleton value at v caused by arc a
    delta = [[coef[q][v] - 2 * coef[p][v] for v in range(n)] for p, q in arcs]
    vals = [sum(state[u] * coef[u][v] for u in range(n)) for v in range(n)]
    narcs = len(arcs)
    visited = {tuple(state)}
    states = 1
    max_depth = 0
    path = []
    next_arc = [0]

    while True:
        depth = len(path)
        i = next_arc[depth]
        while i < narcs and state[arcs[i][0]] < 2:
            i += 1
        if i == narcs:
            if depth == 0:
                return EXHAUSTED, [], states, max_depth
            a = path.pop()
            next_arc.pop()
            p, q = arcs[a]
            deficit += _undo(state, w, p, q)
            dv = delta[a]
            for v in range(n):
                vals[v] -= dv[v]
            continue
        next_arc[depth] = i + 1

        p, q = arcs[i]
        deficit += _apply(state, w, p, q)
        key = tuple(state)
        if key in visited:
            deficit += _undo(state, w, p, q)
            continue
        visited.add(key)
        states += 1
        if states > max_states:
            return STATE_LIMIT, [], states, max_depth
        if max_seconds > 0 and states % _TIME_CHECK_EVERY == 0 and perf_counter() - start > max_seconds:
            return TIME_LIMIT, [], states, max_depth
        if deficit == 0:
            path.append(i)
            return FOUND, path, states, max(max_depth, len(path))

        dv = delta[i]
        for v in range(n):
            vals[v] += dv[v]
        if prune and any(vals[v] < wvals[v] for v in range(n)):
            for v in range(n):
                vals[v] -= dv[v]
            deficit += _undo(state, w, p, q)
            continue
        path.append(i)
        next_arc.append(0)
        if len(path) > max_depth:
            max_depth = len(path)


def _apply(state, w, p, q):
    """Apply p->q in place; return the change in the deficient-vertex count."""
    change = 0
    if state[p] >= w[p] > state[p] - 2:
        change += 1
    state[p] -= 2
    if state[q] < w[q] <= state[q] + 1:
        change -= 1
    state[q] += 1
    return change


def _undo(state, w, p, q):
    change = 0
    if state[q] >= w[q] > state[q] - 1:
        change += 1
    state[q] -= 1
    if state[p] < w[p] <= state[p] + 2:
        change -= 1
    state[p] += 2
    return change


def rank(v, T):
    """Position of ``v`` among all vectors with sum <= T in lexicographic order."""
    n = len(v)
    r = 0
    rem = T
    for i, x in enumerate(v):
        m = n - i
        r += comb(rem + m, m) - comb(rem - x + m, m)
        rem -= x
    return r


def _compositions(t, n):
    if n == 1:
        yield (t,)
        return
    for a in range(t + 1):
        for rest in _compositions(t - a, n - 1):
            yield (a,) + rest


def cover_table(n, arcs, w, T):
    table = bytearray(comb(T + n, n))
    w = tuple(w)
    for t in range(T + 1):
        for v in _compositions(t, n):
            if all(a >= b for a, b in zip(v, w)):
                table[rank(v, T)] = 1
                continue
            for p, q in arcs:
                if v[p] >= 2:
                    child = list(v)
                    child[p] -= 2
                    child[q] += 1
                    if table[rank(child, T)]:
                        table[rank(v, T)] = 1
                        break
    return table
