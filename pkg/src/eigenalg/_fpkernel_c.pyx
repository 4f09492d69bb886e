# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled row reduction over F_p (word-sized primes).

Same contract as the pure-Python fallback eigenalg._fpkernel.rref_mod_p.
"""

from libc.stdlib cimport malloc, free


def rref_mod_p(rows, int cols, long p):
    cdef int nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef long *m = <long *> malloc(nrows * cols * sizeof(long))
    if m == NULL:
        raise MemoryError()
    cdef int i, j, r, c, piv
    cdef long f, inv, x
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(cols):
                m[i * cols + j] = row[j] % p
        pivots = []
        r = 0
        for c in range(cols):
            piv = -1
            for i in range(r, nrows):
                if m[i * cols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    x = m[r * cols + j]
                    m[r * cols + j] = m[piv * cols + j]
                    m[piv * cols + j] = x
            inv = pow(m[r * cols + c], -1, p)
            if inv != 1:
                for j in range(c, cols):
                    m[r * cols + j] = (m[r * cols + j] * inv) % p
            for i in range(nrows):
                if i != r and m[i * cols + c] != 0:
                    f = m[i * cols + c]
                    for j in range(c, cols):
                        if m[r * cols + j] != 0:
                            m[i * cols + j] = (m[i * cols + j]
                                               - f * m[r * cols + j]) % p
                            if m[i * cols + j] < 0:
                                m[i * cols + j] += p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        out = [[m[i * cols + j] for j in range(cols)] for i in range(r)]
        return out, pivots
    finally:
        free(m)
