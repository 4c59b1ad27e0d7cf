"""Pure-Python twin of the compiled elimination kernel (same API and results)."""

import numpy as np


def rref_modp(M, p):
    A = [[int(x) % p for x in row] for row in np.asarray(M, dtype=np.int64).tolist()]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        row = [(x * inv) % p for x in A[r]]
        A[r] = row
        for i in range(nrows):
            f = A[i][c]
            if i != r and f:
                Ai = A[i]
                for j in range(c, ncols):
                    if row[j]:
                        Ai[j] = (Ai[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return np.array(A, dtype=np.int64).reshape(nrows, ncols), pivots
