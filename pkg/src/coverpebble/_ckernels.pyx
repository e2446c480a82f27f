# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of the kernels in ``_pykernels``.

Callers must make sure every quantity fits in 64 bits (see
``kernels.fits_int64``); the pure-Python twin handles the rest.
"""

from libc.stdint cimport int64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from time import perf_counter

cdef int TIME_CHECK_EVERY = 1024

cdef int FOUND = 1
cdef int EXHAUSTED = 0
cdef int STATE_LIMIT = -1
cdef int TIME_LIMIT = -2


def search(int n, arcs, coef, wvals, w, d, bint prune, int64_t max_states, double max_seconds):
    cdef double start = perf_counter()
    cdef int narcs = len(arcs)
    cdef vector[int] src = vector[int](narcs)
    cdef vector[int] dst = vector[int](narcs)
    cdef vector[int64_t] state = vector[int64_t](n)
    cdef vector[int64_t] target = vector[int64_t](n)
    cdef vector[int64_t] vals = vector[int64_t](n)
    cdef vector[int64_t] wv = vector[int64_t](n)
    cdef vector[int64_t] delta = vector[int64_t](narcs * n)
    cdef vector[int64_t] radix = vector[int64_t](n)
    cdef int i, v, p, q, a, depth, deficit = 0
    cdef int64_t tot = 0, key, states = 1
    cdef int max_depth = 0
    cdef bint pruned

    for i in range(narcs):
        src[i] = arcs[i][0]
        dst[i] = arcs[i][1]
    for v in range(n):
        state[v] = d[v]
        target[v] = w[v]
        wv[v] = wvals[v]
        tot += state[v]
        if state[v] < target[v]:
            deficit += 1
    if deficit == 0:
        return FOUND, [], 1, 0

    for v in range(n):
        vals[v] = 0
        for i in range(n):
            vals[v] += state[i] * <int64_t>coef[i][v]
    for a in range(narcs):
        for v in range(n):
            delta[a * n + v] = <int64_t>coef[dst[a]][v] - 2 * <int64_t>coef[src[a]][v]

    # mixed-radix key with base tot + 1
    key = 0
    for v in range(n):
        radix[v] = 1 if v == 0 else radix[v - 1] * (tot + 1)
        key += state[v] * radix[v]

    cdef unordered_set[int64_t] visited
    visited.insert(key)
    # every move removes a pebble, so depth never exceeds tot
    cdef vector[int] path = vector[int](tot + 1)
    cdef vector[int] next_arc = vector[int](tot + 2)
    depth = 0
    next_arc[0] = 0

    while True:
        i = next_arc[depth]
        while i < narcs and state[src[i]] < 2:
            i += 1
        if i == narcs:
            if depth == 0:
                return EXHAUSTED, [], states, max_depth
            depth -= 1
            a = path[depth]
            p = src[a]
            q = dst[a]
            if state[q] >= target[q] and state[q] - 1 < target[q]:
                deficit += 1
            state[q] -= 1
            if state[p] < target[p] and state[p] + 2 >= target[p]:
                deficit -= 1
            state[p] += 2
            key += 2 * radix[p] - radix[q]
            for v in range(n):
                vals[v] -= delta[a * n + v]
            continue
        next_arc[depth] = i + 1

        p = src[i]
        q = dst[i]
        key += radix[q] - 2 * radix[p]
        if visited.count(key):
            key += 2 * radix[p] - radix[q]
            continue
        visited.insert(key)
        states += 1
        if states > max_states:
            return STATE_LIMIT, [], states, max_depth
        if max_seconds > 0 and states % TIME_CHECK_EVERY == 0 and perf_counter() - start > max_seconds:
            return TIME_LIMIT, [], states, max_depth

        if state[p] >= target[p] and state[p] - 2 < target[p]:
            deficit += 1
        state[p] -= 2
        if state[q] < target[q] and state[q] + 1 >= target[q]:
            deficit -= 1
        state[q] += 1
        if deficit == 0:
            path[depth] = i
            return FOUND, [path[k] for k in range(depth + 1)], states, max(max_depth, depth + 1)

        pruned = False
        for v in range(n):
            vals[v] += delta[i * n + v]
            if vals[v] < wv[v]:
                pruned = True
        if prune and pruned:
            for v in range(n):
                vals[v] -= delta[i * n + v]
            if state[q] >= target[q] and state[q] - 1 < target[q]:
                deficit += 1
            state[q] -= 1
            if state[p] < target[p] and state[p] + 2 >= target[p]:
                deficit -= 1
            state[p] += 2
            key += 2 * radix[p] - radix[q]
            continue
        path[depth] = i
        depth += 1
        next_arc[depth] = 0
        if depth > max_depth:
            max_depth = depth


cdef inline int64_t _rank(int64_t* v, int n, int T, int64_t* binom, int stride) nogil:
    # binom[m * stride + t] = C(t + m, m)
    cdef int64_t r = 0
    cdef int rem = T
    cdef int i, m
    for i in range(n):
        m = n - i
        r += binom[m * stride + rem] - binom[m * stride + rem - v[i]]
        rem -= v[i]
    return r


def cover_table(int n, arcs, w, int T):
    cdef int narcs = len(arcs)
    cdef vector[int] src = vector[int](narcs)
    cdef vector[int] dst = vector[int](narcs)
    cdef vector[int64_t] target = vector[int64_t](n)
    cdef vector[int64_t] v = vector[int64_t](n)
    cdef int stride = T + 1
    cdef vector[int64_t] binom = vector[int64_t]((n + 1) * stride)
    cdef int i, m, t, a, p, q, k
    cdef int64_t r, size
    cdef bint ok

    for i in range(narcs):
        src[i] = arcs[i][0]
        dst[i] = arcs[i][1]
    for i in range(n):
        target[i] = w[i]
    for t in range(stride):
        binom[t] = 1
    for m in range(1, n + 1):
        binom[m * stride] = 1
        for t in range(1, stride):
            binom[m * stride + t] = binom[m * stride + t - 1] + binom[(m - 1) * stride + t]
    size = binom[n * stride + T]
    table = bytearray(size)
    cdef unsigned char[::1] tab = table

    with nogil:
        for t in range(T + 1):
            # odometer over compositions of t into n parts, lexicographic
            for i in range(n):
                v[i] = 0
            v[n - 1] = t
            while True:
                ok = True
                for i in range(n):
                    if v[i] < target[i]:
                        ok = False
                        break
                r = _rank(&v[0], n, T, &binom[0], stride)
                if not ok:
                    for a in range(narcs):
                        p = src[a]
                        q = dst[a]
                        if v[p] >= 2:
                            v[p] -= 2
                            v[q] += 1
                            ok = tab[_rank(&v[0], n, T, &binom[0], stride)] != 0
                            v[p] += 2
                            v[q] -= 1
                            if ok:
                                break
                tab[r] = 1 if ok else 0
                # advance: move one unit leftwards from the last nonzero tail
                if n == 1:
                    break
                k = n - 1
                while k > 0 and v[k] == 0:
                    k -= 1
                if k == 0:
                    break
                # v[k] > 0, k >= 1: increment v[k-1], put the remainder of the tail at the end
                v[k - 1] += 1
                r = v[k] - 1
                v[k] = 0
                v[n - 1] = r
    return table
