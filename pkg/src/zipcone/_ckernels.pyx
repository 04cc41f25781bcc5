# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Window kernels, compiled edition.  Mirrors zipcone._kernels_py."""

from libc.stdlib cimport free, malloc


cdef int* _to_c(object w, int m) except NULL:
    cdef int* buf = <int*> malloc(m * sizeof(int))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = w[i]
    return buf


def compose(u, v):
    """Window of u*v with the right factor applied first: (u*v)(i) = u(v(i))."""
    cdef int m = len(u)
    cdef int* cu = _to_c(u, m)
    cdef int* cv = _to_c(v, m)
    cdef int i
    try:
        return tuple([cu[cv[i] - 1] for i in range(m)])
    finally:
        free(cu)
        free(cv)


def invert(w):
    cdef int m = len(w)
    cdef int* cw = _to_c(w, m)
    cdef int* out = <int*> malloc(m * sizeof(int))
    cdef int i
    if out == NULL:
        free(cw)
        raise MemoryError()
    try:
        for i in range(m):
            out[cw[i] - 1] = i + 1
        return tuple([out[i] for i in range(m)])
    finally:
        free(cw)
        free(out)


def mirror_defect(w):
    """First 1-based i with w(i) + w(2n+1-i) != 2n+1, or 0 if none."""
    cdef int m = len(w)
    cdef int* cw = _to_c(w, m)
    cdef int i
    try:
        for i in range(m):
            if cw[i] + cw[m - 1 - i] != m + 1:
                return i + 1
        return 0
    finally:
        free(cw)


def length(w):
    """Coxeter length M(w) + N(w) counted over the first half of the window."""
    cdef int m = len(w)
    cdef int n = m // 2
    cdef int bound = m + 1
    cdef int* cw = _to_c(w, m)
    cdef int i, j, wi
    cdef long total = 0
    try:
        for i in range(n):
            wi = cw[i]
            if 2 * wi > bound:
                total += 1
            for j in range(i + 1, n):
                if wi > cw[j]:
                    total += 1
                if wi + cw[j] > bound:
                    total += 1
        return total
    finally:
        free(cw)


def bruhat_leq(w1, w2):
    """Rank-matrix criterion: r_{w1}(i,j) >= r_{w2}(i,j) for all i, j."""
    cdef int m = len(w1)
    cdef int* c1 = _to_c(w1, m)
    cdef int* c2 = _to_c(w2, m)
    cdef int* r1 = <int*> malloc(m * sizeof(int))
    cdef int* r2 = <int*> malloc(m * sizeof(int))
    cdef int i, j
    cdef bint ok = True
    if r1 == NULL or r2 == NULL:
        free(c1); free(c2)
        if r1 != NULL: free(r1)
        if r2 != NULL: free(r2)
        raise MemoryError()
    try:
        for j in range(m):
            r1[j] = 0
            r2[j] = 0
        for i in range(m):
            for j in range(c1[i] - 1, m):
                r1[j] += 1
            for j in range(c2[i] - 1, m):
                r2[j] += 1
            for j in range(m):
                if r1[j] < r2[j]:
                    ok = False
                    break
            if not ok:
                break
        return ok
    finally:
        free(c1); free(c2); free(r1); free(r2)


def rank_entry(w, int i, int j):
    """r_w(i,j) = #{k <= i : w(k) <= j} with 1-based i, j."""
    cdef int m = len(w)
    cdef int* cw = _to_c(w, m)
    cdef int k, c = 0
    try:
        for k in range(i):
            if cw[k] <= j:
                c += 1
        return c
    finally:
        free(cw)


def admissible_pairs(w):
    """All 1-based pairs (i, j), i < j, with w(i) > w(j) and no intermediate
    position whose value lies strictly between w(j) and w(i)."""
    cdef int m = len(w)
    cdef int* cw = _to_c(w, m)
    cdef int i, j, wi, wj, best
    out = []
    try:
        for i in range(m - 1):
            wi = cw[i]
            best = 0
            for j in range(i + 1, m):
                wj = cw[j]
                if wj < wi:
                    if best < wj:
                        out.append((i + 1, j + 1))
                    if wj > best:
                        best = wj
        return tuple(out)
    finally:
        free(cw)
