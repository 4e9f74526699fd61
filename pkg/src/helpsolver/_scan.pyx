# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice scan. Same contract as ``_scan_py.scan_box``.

Values are held in 64-bit integers; callers must check that no row value
can overflow (see ``scan.fits_int64``).
"""

from libc.stdlib cimport malloc, free


def scan_box(A, C, D, U, lo, hi, long long last_lo, long long last_hi, bint has_last):
    cdef Py_ssize_t nrows = len(C), nfree = len(lo)
    cdef Py_ssize_t r, i
    cdef long long *a = <long long *> malloc(max(nrows * nfree, 1) * sizeof(long long))
    cdef long long *val = <long long *> malloc(max(nrows, 1) * sizeof(long long))
    cdef long long *den = <long long *> malloc(max(nrows, 1) * sizeof(long long))
    cdef long long *up = <long long *> malloc(max(nrows, 1) * sizeof(long long))
    cdef long long *cur = <long long *> malloc(max(nfree, 1) * sizeof(long long))
    cdef long long *blo = <long long *> malloc(max(nfree, 1) * sizeof(long long))
    cdef long long *bhi = <long long *> malloc(max(nfree, 1) * sizeof(long long))
    cdef long long total, last, v, span
    cdef bint ok
    found = []
    try:
        for i in range(nfree):
            blo[i] = lo[i]
            bhi[i] = hi[i]
            if blo[i] > bhi[i]:
                return found
            cur[i] = blo[i]
        total = 0
        for i in range(nfree):
            total += cur[i]
        for r in range(nrows):
            den[r] = D[r]
            up[r] = U[r]
            val[r] = C[r]
            row = A[r]
            for i in range(nfree):
                a[r * nfree + i] = row[i]
                val[r] += a[r * nfree + i] * cur[i]
        while True:
            ok = True
            last = 1 - total
            if has_last and (last < last_lo or last > last_hi):
                ok = False
            if ok:
                for r in range(nrows):
                    v = val[r]
                    if v < 0 or v > up[r] or v % den[r] != 0:
                        ok = False
                        break
            if ok:
                point = tuple([cur[i] for i in range(nfree)])
                found.append(point + (last,) if has_last else point)
            # odometer step, updating row values incrementally
            i = nfree - 1
            while i >= 0:
                if cur[i] < bhi[i]:
                    cur[i] += 1
                    total += 1
                    for r in range(nrows):
                        val[r] += a[r * nfree + i]
                    break
                span = bhi[i] - blo[i]
                cur[i] = blo[i]
                total -= span
                for r in range(nrows):
                    val[r] -= a[r * nfree + i] * span
                i -= 1
            if i < 0:
                return found
    finally:
        free(a)
        free(val)
        free(den)
        free(up)
        free(cur)
        free(blo)
        free(bhi)
