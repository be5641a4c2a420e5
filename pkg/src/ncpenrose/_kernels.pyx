# cython: language_level=3
"""Compiled versions of the kernels in ``_kernels_py``; same semantics."""

from libc.stdlib cimport malloc, free


def avoiding_masks(int length, int r):
    cdef long long m, run, top = 1LL << length
    cdef int s
    out = []
    m = 0
    while m < top:
        run = m
        for s in range(1, r + 1):
            run &= m >> s
        if run == 0:
            out.append(m)
        m += 1
    return out


cdef void _isort(long long *a, int n) noexcept nogil:
    cdef int i, j
    cdef long long key
    for i in range(1, n):
        key = a[i]
        j = i - 1
        while j >= 0 and a[j] > key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key


def unit_hom_check(src_rows, src_cols, img_ptr, img_codes, int src_dim, int tgt_dim):
    cdef int n = len(src_rows)
    cdef int total = len(img_codes)
    cdef int *rows = <int *> malloc(n * sizeof(int))
    cdef int *cols = <int *> malloc(n * sizeof(int))
    cdef int *ptr = <int *> malloc((n + 1) * sizeof(int))
    cdef long long *codes = <long long *> malloc((total + 1) * sizeof(long long))
    cdef int *trow = <int *> malloc((total + 1) * sizeof(int))
    cdef int *lookup = <int *> malloc(src_dim * src_dim * sizeof(int))
    cdef int *mark = <int *> malloc((tgt_dim + 1) * sizeof(int))
    cdef int maxlen = 0
    cdef int u, v, w, a, b, k, l, np_
    cdef long long cu, cv
    cdef long long *buf = NULL
    cdef int fu = -1, fv = -1
    try:
        for u in range(n):
            rows[u] = src_rows[u]
            cols[u] = src_cols[u]
        for u in range(n + 1):
            ptr[u] = img_ptr[u]
        for k in range(total):
            codes[k] = img_codes[k]
            trow[k] = <int> (codes[k] // tgt_dim)
        for k in range(src_dim * src_dim):
            lookup[k] = -1
        for k in range(tgt_dim):
            mark[k] = -1
        for u in range(n):
            lookup[rows[u] * src_dim + cols[u]] = u
            if ptr[u + 1] - ptr[u] > maxlen:
                maxlen = ptr[u + 1] - ptr[u]
        buf = <long long *> malloc((maxlen * maxlen + 1) * sizeof(long long))
        with nogil:
            for u in range(n):
                # stamp the target columns used by img(u)
                for a in range(ptr[u], ptr[u + 1]):
                    mark[codes[a] % tgt_dim] = u
                for v in range(n):
                    if rows[v] != cols[u]:
                        # the product must vanish: no row of img(v) meets a column of img(u)
                        for b in range(ptr[v], ptr[v + 1]):
                            if mark[trow[b]] == u:
                                fu = u
                                fv = v
                                break
                        if fu >= 0:
                            break
                        continue
                    np_ = 0
                    for a in range(ptr[u], ptr[u + 1]):
                        cu = codes[a]
                        for b in range(ptr[v], ptr[v + 1]):
                            cv = codes[b]
                            if cu % tgt_dim == trow[b]:
                                buf[np_] = (cu // tgt_dim) * tgt_dim + cv % tgt_dim
                                np_ += 1
                    w = lookup[rows[u] * src_dim + cols[v]]
                    if w < 0 or np_ != ptr[w + 1] - ptr[w]:
                        fu = u
                        fv = v
                        break
                    _isort(buf, np_)
                    l = ptr[w]
                    for k in range(np_):
                        if buf[k] != codes[l + k]:
                            fu = u
                            fv = v
                            break
                    if fu >= 0:
                        break
                if fu >= 0:
                    break
    finally:
        free(buf)
        free(rows)
        free(cols)
        free(ptr)
        free(codes)
        free(trow)
        free(lookup)
        free(mark)
    return fu, fv
