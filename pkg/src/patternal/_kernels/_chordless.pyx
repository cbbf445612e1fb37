# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled longest chordless path search; same algorithm as ``_chordless_py``."""

from libc.stdlib cimport malloc, calloc, free


def chordless_search(int nv, const int[:] out_ptr, const int[:] out_idx,
                     const int[:] in_ptr, const int[:] in_idx,
                     const unsigned char[:] loop, long long budget):
    cdef int *on_path = <int *> calloc(nv + 1, sizeof(int))
    cdef int *blocked = <int *> calloc(nv + 1, sizeof(int))
    cdef int *path = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *cursor = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *best = <int *> malloc((nv + 1) * sizeof(int))
    if on_path == NULL or blocked == NULL or path == NULL or cursor == NULL or best == NULL:
        free(on_path); free(blocked); free(path); free(cursor); free(best)
        raise MemoryError()

    cdef int depth = 0, best_len = 0, avail = 0
    cdef int start, top, v, u, k, i
    cdef long long expansions = 0
    cdef bint complete = True

    for v in range(nv):
        if not loop[v]:
            avail += 1

    try:
        for start in range(nv):
            if loop[start]:
                continue
            if avail <= best_len:
                break
            if expansions >= budget:
                complete = False
                break
            # push(start)
            v = start
            on_path[v] = 1
            avail -= 1
            for k in range(in_ptr[v], in_ptr[v + 1]):
                u = in_idx[k]
                if loop[u] or on_path[u]:
                    continue
                if blocked[u] == 0:
                    avail -= 1
                blocked[u] += 1
            path[depth] = v
            cursor[depth] = out_ptr[v]
            depth += 1
            expansions += 1
            if depth > best_len:
                best_len = depth
                for i in range(depth):
                    best[i] = path[i]

            while depth > 0:
                top = path[depth - 1]
                if depth + avail <= best_len or cursor[depth - 1] >= out_ptr[top + 1]:
                    # pop()
                    depth -= 1
                    v = path[depth]
                    for k in range(in_ptr[v], in_ptr[v + 1]):
                        u = in_idx[k]
                        if loop[u] or on_path[u]:
                            continue
                        blocked[u] -= 1
                        if blocked[u] == 0:
                            avail += 1
                    on_path[v] = 0
                    avail += 1
                    continue
                v = out_idx[cursor[depth - 1]]
                cursor[depth - 1] += 1
                if loop[v] or on_path[v] or blocked[v]:
                    continue
                if expansions >= budget:
                    complete = False
                    break
                # push(v)
                on_path[v] = 1
                avail -= 1
                for k in range(in_ptr[v], in_ptr[v + 1]):
                    u = in_idx[k]
                    if loop[u] or on_path[u]:
                        continue
                    if blocked[u] == 0:
                        avail -= 1
                    blocked[u] += 1
                path[depth] = v
                cursor[depth] = out_ptr[v]
                depth += 1
                expansions += 1
                if depth > best_len:
                    best_len = depth
                    for i in range(depth):
                        best[i] = path[i]
            if not complete:
                break
        result = [best[i] for i in range(best_len)]
    finally:
        free(on_path); free(blocked); free(path); free(cursor); free(best)
    return result, expansions, complete
