"""Small dense matrices over any ring-like entry type.

Matrices act on column vectors from the left, so ``(A @ B)`` is "first B,
then A", matching right-module conventions.
"""

from __future__ import annotations


class Matrix:
    __slots__ = ("rows", "ncols", "zero")

    def __init__(self, rows, ncols=None, zero=None):
        self.rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if zero is None:
            if not self.rows or not ncols:
                raise ValueError("zero element required for empty matrix")
            zero = self.rows[0][0] * 0 if not hasattr(self.rows[0][0], "ring") \
                else self.rows[0][0].ring.zero()
        self.zero = zero
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows, ncols, zero):
        return cls([[zero] * ncols for _ in range(nrows)], ncols, zero)

    @classmethod
    def identity(cls, n, zero, one):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n, zero)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    @property
    def nrows(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield i, j, x

    def map(self, f, zero=None):
        return Matrix([[f(x) for x in r] for r in self.rows], self.ncols,
                      self.zero if zero is None else zero)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        zero = self.zero
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                s = zero
                for k, a in enumerate(r):
                    if a:
                        b = other.rows[k][j]
                        if b:
                            s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(out, other.ncols, zero)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s + %s" % (self.shape, other.shape))
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols, self.zero)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows], self.ncols, self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def transpose(self):
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                      self.nrows, self.zero)

    def copy(self):
        return Matrix(self.rows, self.ncols, self.zero)

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)


def block(blocks, zero):
    """Assemble a block matrix from a 2D list of Matrix (or None for zero blocks)."""
    row_sizes = []
    col_sizes = []
    for bi, brow in enumerate(blocks):
        for bj, b in enumerate(brow):
            if b is not None:
                if len(row_sizes) <= bi:
                    row_sizes.extend([None] * (bi + 1 - len(row_sizes)))
                if len(col_sizes) <= bj:
                    col_sizes.extend([None] * (bj + 1 - len(col_sizes)))
                row_sizes[bi] = b.nrows
                col_sizes[bj] = b.ncols
    if None in row_sizes or None in col_sizes:
        raise ValueError("cannot infer block sizes")
    rows = []
    for bi, brow in enumerate(blocks):
        for i in range(row_sizes[bi]):
            row = []
            for bj in range(len(col_sizes)):
                b = brow[bj] if bj < len(brow) else None
                if b is None:
                    row.extend([zero] * col_sizes[bj])
                else:
                    row.extend(b.rows[i])
            rows.append(row)
    return Matrix(rows, sum(col_sizes), zero)
