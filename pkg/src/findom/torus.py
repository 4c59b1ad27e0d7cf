"""Induced modules in slot form, the canonical resolution, and the algebraic torus.

For a free module with basis (e_i) the induced module M (x)_{R0} R[t,t^-1]
is identified with the free module on slots (i, k), k the left degree:
the pure tensor e_i a (x) r with a homogeneous of degree k is the slot
(i, k) carrying the value a r.  Every map below acts on slot values by left
multiplication, so it is right linear.
"""

from __future__ import annotations

from .complexes import EMPTY, FreeComplex, degree_range, homogeneous_split
from .errors import WindowError
from .matrix import Matrix
from .rings import PartitionOfUnity, derive_partition


class InducedElement:
    __slots__ = ("ring", "slots")

    def __init__(self, ring, slots=None):
        self.ring = ring
        self.slots = {s: w for s, w in (slots or {}).items() if w}

    @classmethod
    def slot(cls, ring, i, k, w):
        return cls(ring, {(i, k): w})

    def __add__(self, other):
        out = dict(self.slots)
        for s, w in other.slots.items():
            v = out.get(s)
            out[s] = w if v is None else v + w
        return InducedElement(self.ring, out)

    def __neg__(self):
        return InducedElement(self.ring, {s: -w for s, w in self.slots.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, r):
        """Right action of the ring."""
        return InducedElement(self.ring, {s: w * r for s, w in self.slots.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.slots
        if not isinstance(other, InducedElement):
            return NotImplemented
        return self.slots == other.slots

    __hash__ = None

    def __bool__(self):
        return bool(self.slots)

    def shift(self, by=-1):
        """Same values, left degrees moved by ``by``."""
        return InducedElement(self.ring, {(i, k + by): w for (i, k), w in self.slots.items()})

    def pieces(self):
        """Yield ``(i, k, g, w_g)``: homogeneous pieces of every slot value."""
        for (i, k), w in sorted(self.slots.items()):
            for g, piece in sorted(w.split().items()):
                yield i, k, g, piece

    def right_degrees(self):
        return sorted({g - k for i, k, g, _ in self.pieces()})

    def __repr__(self):
        inner = ", ".join("(%d,%d): %r" % (i, k, w) for (i, k), w in sorted(self.slots.items()))
        return "InducedElement({%s})" % inner


def induce(ring, m, r):
    """Canonical form of ``m (x) r``.

    ``m`` is either a pair ``(i, a)`` meaning e_i a, or a list of
    coordinates (one GradedScalar per generator).
    """
    if isinstance(m, tuple):
        m = {m[0]: m[1]}
    elif isinstance(m, list):
        m = dict(enumerate(m))
    slots = {}
    for i, a in m.items():
        for k, ak in a.split().items():
            v = ak * r
            s = slots.get((i, k))
            slots[(i, k)] = v if s is None else s + v
    return InducedElement(ring, slots)


def _as_pure_tensors(x, k_part=None):
    """Write each slot (i, k) value w as sum_l e_i a_l (x) b_l w, (a_l, b_l) of type (k, -k)."""
    ring = x.ring
    for (i, k), w in sorted(x.slots.items()):
        part = derive_partition(ring, k) if k_part is None else k_part(k)
        for a, b in part.pairs:
            yield i, a, b * w


def mu_literal(x: InducedElement, pou: PartitionOfUnity = None) -> InducedElement:
    """c (x) r -> c (x) r - sum_j c x_j (x) y_j r via a partition of type (-1, 1)."""
    ring = x.ring
    pou = pou or ring.pou_minus
    if pou.n != -1:
        raise ValueError("mu needs a partition of unity of type (-1, 1)")
    out = InducedElement(ring)
    for i, a, r in _as_pure_tensors(x):
        out = out + induce(ring, (i, a), r)
        for xj, yj in pou.pairs:
            out = out - induce(ring, (i, a * xj), yj * r)
    return out


def mu_apply(x: InducedElement) -> InducedElement:
    """mu in slot form: identity minus the shift (i, k) -> (i, k - 1)."""
    return x - x.shift(-1)


def pi_map(x: InducedElement, rank=None):
    """m (x) r -> m r, as a coordinate list."""
    ring = x.ring
    n = rank if rank is not None else (max((i for i, _ in x.slots), default=-1) + 1)
    out = [ring.zero() for _ in range(n)]
    for (i, _), w in x.slots.items():
        out[i] = out[i] + w
    return out


def iota_map(ring, m):
    """m -> m (x) 1."""
    return induce(ring, list(m), ring.one())


def tau_literal(x: InducedElement) -> InducedElement:
    """The contracting map of the canonical resolution, built from partitions of unity.

    A piece e_i a (x) r_n with r_n of degree n goes to
    -sum_{k=1}^{n} sum_l e_i a x^(k)_l (x) y^(-k)_l r_n for n > 0 and to
    sum_{k=0}^{-n-1} sum_l e_i a x^(-k)_l (x) y^(k)_l r_n for n < 0.
    """
    ring = x.ring
    out = InducedElement(ring)
    for i, k0, g, w in x.pieces():
        for a, b in derive_partition(ring, k0).pairs:
            r = b * w
            n = g - k0
            if n > 0:
                for k in range(1, n + 1):
                    for u, v in derive_partition(ring, k).pairs:
                        out = out - induce(ring, (i, a * u), v * r)
            elif n < 0:
                for k in range(0, -n):
                    for u, v in derive_partition(ring, -k).pairs:
                        out = out + induce(ring, (i, a * u), v * r)
    return out


def tau_apply(x: InducedElement) -> InducedElement:
    """tau in slot form (same map as ``tau_literal``)."""
    ring = x.ring
    slots = {}

    def put(s, w):
        v = slots.get(s)
        slots[s] = w if v is None else v + w

    for i, k0, g, w in x.pieces():
        n = g - k0
        if n > 0:
            for k in range(1, n + 1):
                put((i, k0 + k), -w)
        elif n < 0:
            for k in range(0, -n):
                put((i, k0 - k), w)
    return InducedElement(ring, slots)


def random_induced(ring, rng, rank=2, left=(-2, 2), right=(-3, 3), nslots=3):
    slots = {}
    for _ in range(nslots):
        i = rng.randrange(rank)
        k = rng.randint(*left)
        w = ring.random_element(rng, k + right[0], k + right[1])
        if w:
            slots[(i, k)] = slots.get((i, k), ring.zero()) + w
    return InducedElement(ring, slots)


def perturbed_partition(pou: PartitionOfUnity, a) -> PartitionOfUnity:
    """Another partition of the same type: (x_j a, y_j), (x_j (1 - a), y_j), a in R_0."""
    ring = pou.ring
    pairs = []
    for x, y in pou.pairs:
        pairs.append((x * a, y))
        pairs.append((x * (ring.one() - a), y))
    return PartitionOfUnity(ring, pou.n, tuple(p for p in pairs if p[0]))


# --------------------------------------------------------------------------
# the algebraic torus on a finite slot window


class SlotBasis:
    """Ordered slots (i, k), i < rank, k in [lo, hi]."""

    def __init__(self, rank, lo, hi):
        self.rank, self.lo, self.hi = rank, lo, hi
        self.slots = [(i, k) for i in range(rank) for k in range(lo, hi + 1)]
        self.index = {s: n for n, s in enumerate(self.slots)}

    def __len__(self):
        return len(self.slots)


class Torus:
    """A finite subcomplex of cone(mu) that is quasi-isomorphic to C.

    ``x_basis[c]`` are the slots of C_c in the shifted (source) copy and
    ``y_basis[c]`` the slots in the target copy; T_n = X_{n-1} + Y_n with
    differential [[-d (x) 1, 0], [mu, d (x) 1]].
    """

    def __init__(self, C, complex_, x_basis, y_basis):
        self.base = C
        self.complex = complex_
        self.x_basis = x_basis
        self.y_basis = y_basis

    def projection(self, n):
        """The quasi-isomorphism T(C)_n -> C_n (pi on the target copy)."""
        C = self.base
        ring = C.ring
        xb = self.x_basis.get(n - 1)
        yb = self.y_basis.get(n)
        nx = len(xb) if xb else 0
        ny = len(yb) if yb else 0
        M = Matrix.zeros(C.rank(n), nx + ny, ring.zero())
        if yb:
            for c, (i, _) in enumerate(yb.slots):
                M.rows[i][nx + c] = ring.one()
        return M


def tensor_blocks(M, src: SlotBasis, tgt: SlotBasis, zero):
    """Matrix of d (x) 1 between slot bases; entry (j, k+g) <- (i, k) is (d_ji)_g."""
    out = Matrix.zeros(len(tgt), len(src), zero)
    for g, piece in homogeneous_split(M).items():
        for c, (i, k) in enumerate(src.slots):
            for j in range(piece.nrows):
                x = piece.rows[j][i]
                if x:
                    r = tgt.index.get((j, k + g))
                    if r is None:
                        raise WindowError("slot (%d, %d) leaves the window" % (j, k + g),
                                          required=(j, k + g))
                    out.rows[r][c] = out.rows[r][c] + x
    return out


def torus(C: FreeComplex, window=(0, 0)) -> Torus:
    """T(C) restricted to slot windows growing from ``window`` at the top index."""
    lo, hi = window
    if lo > hi:
        raise WindowError("slot window [%d, %d] contains no slot" % (lo, hi))
    ring = C.ring
    zero = ring.zero()
    if C.is_zero():
        return Torus(C, FreeComplex(ring, {}), {}, {})
    xw = {C.top: (lo, hi)}
    for n in range(C.top, C.bottom, -1):
        rng = degree_range(C.d(n))
        a, b = (0, 0) if rng is EMPTY else (max(-rng[0], 0), max(rng[1], 0))
        lo, hi = lo - a, hi + b
        xw[n - 1] = (lo, hi)
    xb = {c: SlotBasis(C.rank(c), l, h) for c, (l, h) in xw.items()}
    yb = {c: SlotBasis(C.rank(c), l - 1, h) for c, (l, h) in xw.items()}
    ranks = {}
    for n in range(C.bottom, C.top + 2):
        ranks[n] = (len(xb[n - 1]) if n - 1 in xb else 0) + (len(yb[n]) if n in yb else 0)
    diffs = {}
    for n in ranks:
        if n - 1 not in ranks:
            continue
        X1, Y1 = xb.get(n - 1), yb.get(n)
        X0, Y0 = xb.get(n - 2), yb.get(n - 1)
        nX1, nY1 = len(X1) if X1 else 0, len(Y1) if Y1 else 0
        nX0, nY0 = len(X0) if X0 else 0, len(Y0) if Y0 else 0
        M = Matrix.zeros(nX0 + nY0, nX1 + nY1, zero)
        if X1 and X0:
            dx = tensor_blocks(C.d(n - 1), X1, X0, zero)
            for r in range(nX0):
                for c in range(nX1):
                    M.rows[r][c] = -dx.rows[r][c]
        if X1 and Y0:
            one = ring.one()
            for c, (i, k) in enumerate(X1.slots):
                M.rows[nX0 + Y0.index[(i, k)]][c] = one
                M.rows[nX0 + Y0.index[(i, k - 1)]][c] = -one
        if Y1 and Y0:
            dy = tensor_blocks(C.d(n), Y1, Y0, zero)
            for r in range(nY0):
                for c in range(nY1):
                    M.rows[nX0 + r][nX1 + c] = dy.rows[r][c]
        diffs[n] = M
    return Torus(C, FreeComplex(ring, ranks, diffs), xb, yb)
