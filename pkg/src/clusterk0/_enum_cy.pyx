# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking kernel for angulation search.

Same search order as ``_enum_py``; the crossing table is flattened into a
byte buffer and the blocked counters live in a C array.
"""

from libc.stdlib cimport malloc, free


class NodeLimitExceeded(RuntimeError):
    pass


cdef object _search(object cross, int k, object limit, object max_nodes, bint collect):
    cdef int N = len(cross)
    cdef unsigned char *tab = <unsigned char *> malloc(max(N * N, 1))
    cdef int *blocked = <int *> malloc(max(N, 1) * sizeof(int))
    cdef int *chosen = <int *> malloc((k + 1) * sizeof(int))
    cdef int *stack = <int *> malloc((k + 2) * sizeof(int))
    cdef int i, j, depth, sp, start, nxt, last
    cdef long long count = 0, nodes = 0
    cdef long long lim = -1 if limit is None else limit
    cdef long long cap = -1 if max_nodes is None else max_nodes
    cdef unsigned char *row
    out = []
    try:
        for i in range(N):
            r = cross[i]
            for j in range(N):
                tab[i * N + j] = 1 if r[j] else 0
            blocked[i] = 0
        depth = 0
        sp = 0
        stack[0] = 0
        while sp >= 0:
            start = stack[sp]
            if depth == k:
                count += 1
                if collect:
                    out.append(tuple([chosen[i] for i in range(k)]))
                if lim >= 0 and count >= lim:
                    break
                sp -= 1
                depth -= 1
                last = chosen[depth]
                row = tab + last * N
                for j in range(N):
                    blocked[j] -= row[j]
                continue
            nxt = -1
            for i in range(start, N - (k - depth) + 1):
                if blocked[i] == 0:
                    nxt = i
                    break
            if nxt < 0:
                sp -= 1
                if depth > 0:
                    depth -= 1
                    last = chosen[depth]
                    row = tab + last * N
                    for j in range(N):
                        blocked[j] -= row[j]
                continue
            nodes += 1
            if cap >= 0 and nodes > cap:
                raise NodeLimitExceeded(f"search exceeded {cap} nodes")
            stack[sp] = nxt + 1
            chosen[depth] = nxt
            depth += 1
            row = tab + nxt * N
            for j in range(N):
                blocked[j] += row[j]
            sp += 1
            stack[sp] = nxt + 1
    finally:
        free(tab)
        free(blocked)
        free(chosen)
        free(stack)
    return out, count


def angulations(cross, int k, limit=None, max_nodes=None):
    return _search(cross, k, limit, max_nodes, True)[0]


def count_angulations(cross, int k, max_nodes=None):
    return _search(cross, k, None, max_nodes, False)[1]
