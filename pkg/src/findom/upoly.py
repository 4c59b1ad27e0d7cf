"""Dense univariate polynomials over a field, coefficient lists low degree first."""

from __future__ import annotations


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def deg(a):
    return len(a) - 1 if a else -1


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        out.append(x + y if x is not None and y is not None else (x if y is None else y))
    return trim(out)


def neg(a):
    return [-x for x in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    zero = a[0] * 0
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    zero = b[0] * 0
    q = [zero] * max(len(a) - len(b) + 1, 0)
    lead_inv = 1 / b[-1]
    while a and len(a) >= len(b):
        c = a[-1] * lead_inv
        s = len(a) - len(b)
        q[s] = c
        a = trim([x - c * b[i - s] if s <= i else x for i, x in enumerate(a)])
    return trim(q), a


def monic(a):
    a = trim(a)
    if not a:
        return a
    inv = 1 / a[-1]
    return [x * inv for x in a]


def strip_t(a):
    """Remove factors of t (units in the Laurent ring)."""
    a = trim(a)
    i = 0
    while i < len(a) and not a[i]:
        i += 1
    return a[i:]


def smith_invariants(M, zero):
    """Nonzero diagonal of the Smith normal form of a polynomial matrix.

    ``M`` is a list of rows of coefficient lists; it is not modified.
    """
    A = [[trim(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or deg(A[i][j]) < deg(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = A[t][t]
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q, r = divmod_(A[i][t], piv)
                    A[i] = [sub(x, mul(q, y)) for x, y in zip(A[i], A[t])]
                    if r:
                        A[t], A[i] = A[i], A[t]
                        changed = True
                        break
            if changed:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = divmod_(A[t][j], piv)
                    for row in A:
                        row[j] = sub(row[j], mul(row[t], q))
                    if r:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        changed = True
                        break
            if changed:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] and divmod_(A[i][j], piv)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [add(x, y) for x, y in zip(A[t], A[bad])]
        diag.append(monic(A[t][t]))
        t += 1
    return diag
