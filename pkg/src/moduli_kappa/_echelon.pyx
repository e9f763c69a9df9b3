# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer Gauss-Jordan elimination.

Same contract and bit-identical output as ``_echelon_py.rref_int``. The matrix
is first reduced in a C ``int64`` buffer with overflow checks on every
multiply and subtract; if any step would overflow, the work is discarded and
the elimination reruns on Python integers.
"""

from libc.stdlib cimport free, malloc
from math import gcd

cdef extern from *:
    """
    static inline int mk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int mk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    #define MK_LLONG_MIN (-9223372036854775807LL - 1)
    #define MK_LLONG_MAX 9223372036854775807LL
    """
    int mk_mul_ovf(long long a, long long b, long long *r) nogil
    int mk_sub_ovf(long long a, long long b, long long *r) nogil
    long long MK_LLONG_MIN
    long long MK_LLONG_MAX


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    # callers guarantee a, b != LLONG_MIN
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _row_content(long long* row, Py_ssize_t ncols) noexcept nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return 1
    return g


cdef int _rref_i64(long long** rowp, Py_ssize_t nrows, Py_ssize_t ncols,
                   Py_ssize_t* piv, Py_ssize_t* npiv) noexcept nogil:
    """Return 0 on success, 1 on overflow."""
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef long long *prow
    cdef long long *row
    cdef long long *tmp
    cdef long long a, b, g, ma, mb, t1, t2
    npiv[0] = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not rowp[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            tmp = rowp[r]
            rowp[r] = rowp[p]
            rowp[p] = tmp
        prow = rowp[r]
        g = _row_content(prow, ncols)
        if prow[c] < 0:
            g = -g
        if g != 1:
            for j in range(ncols):
                prow[j] = prow[j] // g
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rowp[i]
            b = row[c]
            if not b:
                continue
            g = _gcd(a, b)
            ma = a // g
            mb = b // g
            for j in range(ncols):
                if prow[j]:
                    if mk_mul_ovf(mb, prow[j], &t2):
                        return 1
                else:
                    t2 = 0
                if ma != 1:
                    if mk_mul_ovf(ma, row[j], &t1):
                        return 1
                else:
                    t1 = row[j]
                if mk_sub_ovf(t1, t2, &row[j]):
                    return 1
                if row[j] == MK_LLONG_MIN:
                    return 1
            g = _row_content(row, ncols)
            if g > 1:
                for j in range(ncols):
                    row[j] = row[j] // g
        piv[npiv[0]] = c
        npiv[0] += 1
        r += 1
    return 0


cdef list _rref_obj(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list pivots = []
    cdef list prow, row, new
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not (<list>rows[p])[c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = <list>rows[r]
        g = gcd(*prow)
        if prow[c] < 0:
            g = -g
        if g != 1:
            prow = [x // g for x in prow]
            rows[r] = prow
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            b = row[c]
            if not b:
                continue
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            new = [None] * ncols
            for j in range(ncols):
                y = prow[j]
                if y:
                    new[j] = ma * row[j] - mb * y
                else:
                    new[j] = ma * row[j]
            g = gcd(*new)
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return pivots


def rref_int(list rows, Py_ssize_t ncols):
    """Row-reduce an integer matrix in place and return its pivot columns."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, npiv = 0
    cdef long long *buf
    cdef long long **rowp
    cdef Py_ssize_t *piv
    cdef int status
    cdef list row
    if nrows == 0 or ncols == 0:
        return []
    for i in range(nrows):
        row = <list>rows[i]
        for j in range(ncols):
            x = row[j]
            if x < -MK_LLONG_MAX or x > MK_LLONG_MAX:
                return _rref_obj(rows, ncols)
    buf = <long long*>malloc(nrows * ncols * sizeof(long long))
    rowp = <long long**>malloc(nrows * sizeof(long long*))
    piv = <Py_ssize_t*>malloc(ncols * sizeof(Py_ssize_t))
    if buf == NULL or rowp == NULL or piv == NULL:
        free(buf)
        free(rowp)
        free(piv)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = <list>rows[i]
            rowp[i] = buf + i * ncols
            for j in range(ncols):
                rowp[i][j] = row[j]
        with nogil:
            status = _rref_i64(rowp, nrows, ncols, piv, &npiv)
        if status:
            return _rref_obj(rows, ncols)
        for i in range(nrows):
            rows[i] = [rowp[i][j] for j in range(ncols)]
        return [piv[j] for j in range(npiv)]
    finally:
        free(buf)
        free(rowp)
        free(piv)
