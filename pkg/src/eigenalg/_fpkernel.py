"""Pure-Python row reduction over F_p.

This is the fallback for the compiled Cython kernel ``_fpkernel_c``; both
expose the same ``rref_mod_p`` signature and must produce identical output.
"""


def rref_mod_p(rows, cols, p):
    """Reduced row echelon form of integer rows mod p.

    Mutates a copy; returns (list of nonzero reduced rows, pivot column list).
    """
    work = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(work)
    for c in range(cols):
        piv = None
        for i in range(r, nrows):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], -1, p)
        if inv != 1:
            work[r] = [(x * inv) % p for x in work[r]]
        prow = work[r]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                wi = work[i]
                for j in range(c, cols):
                    if prow[j]:
                        wi[j] = (wi[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots
