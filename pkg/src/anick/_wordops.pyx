# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word matching kernels; mirrors _wordops_py exactly."""

from libc.stdlib cimport free, malloc

DEF STACK_CAP = 96


cdef int* _as_buf(tuple w, int* stack, Py_ssize_t n) except? NULL:
    # caller frees the result iff it is not the stack buffer
    cdef int* buf
    cdef Py_ssize_t i
    if n <= STACK_CAP:
        buf = stack
    else:
        buf = <int*> malloc(n * sizeof(int))
        if buf == NULL:
            raise MemoryError()
    for i in range(n):
        buf[i] = <int> w[i]
    return buf


def find_subword(tuple w, tuple u):
    """Leftmost start index of u inside w, or -1. The empty word matches at 0."""
    cdef Py_ssize_t n = len(w), m = len(u)
    cdef Py_ssize_t i, j
    cdef int ws[STACK_CAP]
    cdef int us[STACK_CAP]
    cdef int* wb
    cdef int* ub
    cdef bint hit
    if m == 0:
        return 0
    if m > n:
        return -1
    wb = _as_buf(w, ws, n)
    ub = _as_buf(u, us, m)
    try:
        for i in range(n - m + 1):
            hit = True
            for j in range(m):
                if wb[i + j] != ub[j]:
                    hit = False
                    break
            if hit:
                return i
        return -1
    finally:
        if wb != ws:
            free(wb)
        if ub != us:
            free(ub)


cdef _scan(tuple w, tuple patterns, bint stop_at_first):
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t np = len(patterns)
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t i, j, k, m
    cdef int ws[STACK_CAP]
    cdef int* wb
    cdef int* pb = NULL
    cdef Py_ssize_t* offs = NULL
    cdef Py_ssize_t* lens = NULL
    cdef bint hit
    cdef tuple u
    cdef list out = []
    for u in patterns:
        total += len(u)
    wb = _as_buf(w, ws, n)
    try:
        if np > 0:
            offs = <Py_ssize_t*> malloc(np * sizeof(Py_ssize_t))
            lens = <Py_ssize_t*> malloc(np * sizeof(Py_ssize_t))
            if total > 0:
                pb = <int*> malloc(total * sizeof(int))
            if offs == NULL or lens == NULL or (total > 0 and pb == NULL):
                raise MemoryError()
            j = 0
            for k in range(np):
                u = <tuple> patterns[k]
                offs[k] = j
                lens[k] = len(u)
                for m in range(lens[k]):
                    pb[j] = <int> u[m]
                    j += 1
        for i in range(n + 1):
            for k in range(np):
                m = lens[k]
                if i + m > n:
                    continue
                hit = True
                for j in range(m):
                    if wb[i + j] != pb[offs[k] + j]:
                        hit = False
                        break
                if hit:
                    if stop_at_first:
                        return (i, k)
                    out.append((i, k))
        if stop_at_first:
            return (-1, -1)
        return out
    finally:
        if wb != ws:
            free(wb)
        if offs != NULL:
            free(offs)
        if lens != NULL:
            free(lens)
        if pb != NULL:
            free(pb)


def first_match(tuple w, tuple patterns):
    """Leftmost occurrence of any pattern in w as (pos, pattern_index).

    Ties at the same position break toward the lowest pattern index.
    Returns (-1, -1) when nothing matches.
    """
    return _scan(w, patterns, True)


def all_matches(tuple w, tuple patterns):
    """Every occurrence of every pattern in w as (pos, pattern_index) pairs.

    Sorted by position, then pattern index.
    """
    return _scan(w, patterns, False)


def is_normal(tuple w, tuple patterns):
    """True when w contains no pattern as a subword."""
    return first_match(w, patterns) == (-1, -1)
