# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scanning kernel.

Same interface as ``keyscan._scan_py``; selected at import time by
``keyscan.scanning`` when available.
"""

from libc.stdlib cimport malloc, free


def scan_columns(cols):
    cdef Py_ssize_t k = len(cols)
    if k == 0:
        return []
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t i, j, r
    for i in range(k):
        total += len(cols[i])

    cdef int *data = <int *> malloc(total * sizeof(int))
    cdef Py_ssize_t *length = <Py_ssize_t *> malloc(k * sizeof(Py_ssize_t))
    cdef Py_ssize_t *base = <Py_ssize_t *> malloc(k * sizeof(Py_ssize_t))
    cdef Py_ssize_t *alive = <Py_ssize_t *> malloc(k * sizeof(Py_ssize_t))
    cdef int *buf = <int *> malloc(total * sizeof(int))
    if data == NULL or length == NULL or base == NULL or alive == NULL or buf == NULL:
        free(data); free(length); free(base); free(alive); free(buf)
        raise MemoryError()

    cdef Py_ssize_t pos = 0
    for i in range(k):
        base[i] = pos
        length[i] = len(cols[i])
        for r in range(length[i]):
            data[pos] = cols[i][r]
            pos += 1

    cdef Py_ssize_t s, m, a
    cdef int last, v
    result = []
    try:
        for s in range(k):
            for j in range(s, k):
                alive[j] = length[j]
            m = 0
            while alive[s] > 0:
                last = -1
                for j in range(s, k):
                    a = alive[j]
                    if a == 0:
                        continue
                    v = data[base[j] + a - 1]
                    if v >= last:
                        last = v
                        alive[j] = a - 1
                buf[m] = last
                m += 1
            out = [0] * m
            for r in range(m):
                out[r] = buf[m - 1 - r]
            result.append(tuple(out))
    finally:
        free(data); free(length); free(base); free(alive); free(buf)
    return result
