"""Twisted truncated powers of finitely presented R0-modules.

For M = coker(P : R0^g -> R0^f) the power (M (x) R)<<t>> consists of
sequences (x_k) with x_k in M (x) R_k, and Phi sends such a sequence to
sum_k x_k in M (x) R<<t>>.  Psi splits an element into its components.
Both are taken degreewise on cosets; classes in M (x) R_k are compared by
reducing modulo the K-span of the image of P (x) R_k.  This needs R_k
finite dimensional over K, so the module is gated to component-finite rings.
"""

from __future__ import annotations

from .errors import GatingError, Verdict
from .linalg import SparseEchelon
from .matrix import Matrix


class FinitePresentation:
    """Presentation R0^g --P--> R0^f of an R0-module; P has degree 0 entries."""

    def __init__(self, ring, relations: Matrix, ngens=None):
        if not getattr(ring, "component_finite", False):
            raise GatingError("truncated powers need finite dimensional components")
        for _, _, x in relations.entries():
            if x and not x.is_homogeneous(0):
                raise ValueError("presentation entries must lie in R0")
        self.ring = ring
        self.P = relations
        self.f = relations.nrows if ngens is None else ngens
        self.g = relations.ncols
        self._ech = {}

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, Matrix.zeros(rank, 0, ring.zero()), rank)

    # K-linear coordinates of R_k^f
    def _vec(self, k, xs):
        ring = self.ring
        dim = ring.component_dim(k)
        out = {}
        for r, x in enumerate(xs):
            a = x.comps.get(k)
            if a is None:
                continue
            for j, v in enumerate(ring.payload_to_vector(k, a)):
                if v:
                    out[r * dim + j] = v
        return out

    def _unit(self, k, j):
        ring = self.ring
        dim = ring.component_dim(k)
        v = [ring.field.zero()] * dim
        v[j] = ring.field.one()
        return ring.homogeneous(k, ring.vector_to_payload(k, v))

    def _image_rows(self, k):
        """Images of the K-basis of R_k^g, tagged by (column, basis index)."""
        ring = self.ring
        for c in range(self.g):
            for j in range(ring.component_dim(k)):
                b = self._unit(k, j)
                yield (c, j), [self.P.rows[r][c] * b for r in range(self.f)]

    def echelon(self, k):
        e = self._ech.get(k)
        if e is None:
            e = SparseEchelon(self.ring.field)
            for _, col in self._image_rows(k):
                e.add(self._vec(k, col))
            self._ech[k] = e
        return e

    def in_image(self, k, xs):
        return not self.echelon(k).reduce(self._vec(k, xs))

    def equivalent(self, k, xs, ys):
        return self.in_image(k, [x - y for x, y in zip(xs, ys)])

    def lift(self, k, xs):
        """y in R_k^g with P y = xs, or None when xs is not in the image."""
        ring = self.ring
        tags, rows = [], []
        for tag, col in self._image_rows(k):
            tags.append(tag)
            rows.append(self._vec(k, col))
        # row reduce the transposed system with bookkeeping of combinations
        e = SparseEchelon(ring.field)
        width = 1 + max([max(r) for r in rows if r] + [self.f * ring.component_dim(k)])
        for n, r in enumerate(rows):
            aug = dict(r)
            aug[width + n] = ring.field.one()
            e.add(aug)
        target = self._vec(k, xs)
        red = e.reduce(target)
        if any(c < width for c in red):
            return None
        # target - sum(coeff * row) reduces to -red on the bookkeeping part
        y = [ring.zero() for _ in range(self.g)]
        for c, v in red.items():
            col, j = tags[c - width]
            y[col] = y[col] - self._unit(k, j) * v
        return y

    def apply(self, ys):
        """P y for a column of elements."""
        ring = self.ring
        out = [ring.zero() for _ in range(self.f)]
        for r in range(self.f):
            for c in range(self.g):
                if self.P.rows[r][c] and ys[c]:
                    out[r] = out[r] + self.P.rows[r][c] * ys[c]
        return out


def phi(pres: FinitePresentation, seq):
    """(x_k) -> sum_k x_k, coordinates on the generators of F."""
    ring = pres.ring
    out = [ring.zero() for _ in range(pres.f)]
    for k, xs in seq.items():
        for r, x in enumerate(xs):
            out[r] = out[r] + x.restrict(k, k)
    return out


def psi(pres: FinitePresentation, xs, window):
    """Split coordinates into homogeneous components on ``window``."""
    lo, hi = window
    return {k: [x.component(k) for x in xs] for k in range(lo, hi + 1)}


def truncated_power_maps(pres: FinitePresentation, xs, window):
    """Returns ``(Psi(x), Phi(Psi(x)))`` for x in M (x) R<<t>> truncated to ``window``."""
    s = psi(pres, xs, window)
    return s, phi(pres, s)


def classes_equal(pres, xs, ys, window):
    """Equality in M (x) R<<t>> on ``window``, component by component."""
    a, b = psi(pres, xs, window), psi(pres, ys, window)
    return all(pres.equivalent(k, a[k], b[k]) for k in a)


def random_sequence(pres, rng, window):
    ring = pres.ring
    return {k: [ring.random_homogeneous(rng, k) for _ in range(pres.f)]
            for k in range(window[0], window[1] + 1)}


def check_power_maps(pres: FinitePresentation, rng, window=(-3, 3), samples=10) -> Verdict:
    """Phi and Psi are mutually inverse and respect the relations on ``window``.

    Well-definedness descends along the presentation: moving each x_k by
    P y_k moves Phi(x) by P (sum_k y_k), and a sequence whose image lies in
    the submodule generated by P has every component there.
    """
    ring = pres.ring
    lo, hi = window
    for n in range(samples):
        seq = random_sequence(pres, rng, window)
        if psi(pres, phi(pres, seq), window) != seq:
            return Verdict.failed("Psi Phi != id on sample %d" % n, sample=n)
        xs = [ring.random_element(rng, lo, hi) for _ in range(pres.f)]
        if phi(pres, psi(pres, xs, window)) != xs:
            return Verdict.failed("Phi Psi != id on sample %d" % n, sample=n)
        ys = {k: [ring.random_homogeneous(rng, k) for _ in range(pres.g)] for k in seq}
        moved = {k: [a + b for a, b in zip(seq[k], pres.apply(ys[k]))] for k in seq}
        total = [ring.zero() for _ in range(pres.g)]
        for k in ys:
            total = [a + b for a, b in zip(total, ys[k])]
        diff = [a - b for a, b in zip(phi(pres, moved), phi(pres, seq))]
        if diff != pres.apply(total):
            return Verdict.failed("Phi does not respect the relations on sample %d" % n,
                                  sample=n)
        for k in seq:
            y = pres.lift(k, pres.apply(ys[k]))
            if y is None or pres.apply(y) != pres.apply(ys[k]):
                return Verdict.failed("lift along the presentation failed in degree %d" % k,
                                      sample=n, degree=k)
    return Verdict.passed()


def module_map_is_defined(A: Matrix, src: FinitePresentation, tgt: FinitePresentation, window):
    """A : F -> F' (R0 entries) descends to coker P -> coker P' on ``window``."""
    ring = src.ring
    for k in range(window[0], window[1] + 1):
        for (c, j), _ in src._image_rows(k):
            col = [src.P.rows[r][c] * src._unit(k, j) for r in range(src.f)]
            img = [sum((A.rows[r][q] * col[q] for q in range(src.f)), ring.zero())
                   for r in range(tgt.f)]
            if not tgt.in_image(k, img):
                return False
    return True


def naturality_check(A: Matrix, src, tgt, rng, window=(-3, 3), samples=10) -> Verdict:
    """Phi' (A x) = A Phi(x) in M' (x) R<<t>> for a module map given by A."""
    ring = src.ring
    if not module_map_is_defined(A, src, tgt, window):
        return Verdict.failed("matrix does not map relations into relations")

    def act(xs):
        return [sum((A.rows[r][q] * xs[q] for q in range(src.f)), ring.zero())
                for r in range(tgt.f)]
    for n in range(samples):
        seq = random_sequence(src, rng, window)
        lhs = phi(tgt, {k: act(v) for k, v in seq.items()})
        rhs = act(phi(src, seq))
        if not classes_equal(tgt, lhs, rhs, window):
            return Verdict.failed("naturality square fails on sample %d" % n, sample=n)
    return Verdict.passed()
