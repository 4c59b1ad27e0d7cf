"""Exact linear algebra over the ground field.

Prime-field work goes through ``rref_modp``, compiled when the extension is
built and pure Python otherwise; ``KERNEL`` names the active backend.
Rational work uses sparse row reduction on ``Fraction`` dict rows.
"""

from __future__ import annotations

import heapq
import os

import numpy as np

from .fields import PrimeField, ModP

try:
    if os.environ.get("FINDOM_PURE_PYTHON"):
        raise ImportError
    from ._kernel import rref_modp
    KERNEL = "compiled"
except ImportError:  # extension not built
    from ._kernel_py import rref_modp
    KERNEL = "python"


def _to_int(x, p):
    return x.v if isinstance(x, ModP) else int(x) % p


class SparseEchelon:
    """Incremental forward elimination; pivot rows have leading entry 1."""

    def __init__(self, field):
        self.field = field
        self.pivots = {}

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v}
        heap = [c for c in row if c in self.pivots]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            f = row.get(c)
            if not f:
                continue
            for j, v in self.pivots[c].items():
                w = row.get(j)
                w = -f * v if w is None else w - f * v
                if w:
                    row[j] = w
                    if j in self.pivots and j not in seen:
                        heapq.heappush(heap, j)
                else:
                    row.pop(j, None)
        return row

    def add(self, row):
        """Insert a row; returns True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c]
        self.pivots[c] = {j: v * inv for j, v in row.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows, ncols, field):
    """Rank of a matrix given as a list of sparse dict rows."""
    if not rows or ncols == 0:
        return 0
    if isinstance(field, PrimeField):
        M = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, r in enumerate(rows):
            for j, v in r.items():
                M[i, j] = _to_int(v, field.p)
        return len(rref_modp(M, field.p)[1])
    ech = SparseEchelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def solve(rows, rhs, ncols, field):
    """One solution x (dict col -> value) of ``rows . x = rhs`` or ``None``.

    ``rows`` are sparse dict rows, ``rhs`` a list of field elements.
    Free variables are set to zero.
    """
    aug = ncols
    if isinstance(field, PrimeField):
        p = field.p
        M = np.zeros((len(rows), ncols + 1), dtype=np.int64)
        for i, r in enumerate(rows):
            for j, v in r.items():
                M[i, j] = _to_int(v, p)
            M[i, aug] = _to_int(rhs[i], p)
        R, pivots = rref_modp(M, p)
        if pivots and pivots[-1] == aug:
            return None
        return {c: ModP(int(R[i, aug]), p) for i, c in enumerate(pivots) if R[i, aug]}
    ech = SparseEchelon(field)
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[aug] = b
        ech.add(row)
    if aug in ech.pivots:
        return None
    x = {}
    for c in sorted(ech.pivots, reverse=True):
        row = ech.pivots[c]
        val = row.get(aug, 0)
        for j, v in row.items():
            if j != c and j != aug:
                xj = x.get(j)
                if xj:
                    val = val - v * xj
        if val:
            x[c] = field.convert(val) if isinstance(val, int) else val
    return x
