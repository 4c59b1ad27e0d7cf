"""The Mather trick for the algebraic torus and contractions from domination data.

Modules of the form M (x)_{R0} R[t,t^-1] are handled in slot form (see
``torus``): C (x) R has slots (i, k) for every generator i of C_n and every
k, while D (x) R has one slot per summand R_k of the R0-complex D.  An
R0-linear map between such modules is a ``SlotMap``: homogeneous
coefficients acting on slot values by left multiplication.

The right degree of a piece w_g sitting in a slot of degree k is g - k.
R0-maps tensored with the identity preserve it, mu raises the shifted half
by one, and zeta raises it by one.  All Novikov-side series below are
truncated by right degree, which is safe because it never decreases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import FreeComplex, R0Complex, homogeneous_split, reverse_complex
from .errors import FindomError, GatingError, Verdict, WindowError
from .matrix import Matrix
from .novikov import ContractionCertificate, contraction_verify, precision_needed
from .rings import reverse_grading
from .torus import InducedElement, tau_apply


class SlotMap:
    """Sparse R0-linear map: ``cols[src] = {tgt: homogeneous coefficient}``.

    ``window`` (lo, hi) bounds the source slot degrees on which the map is
    known; sources outside it raise WindowError.  Without a window every
    unlisted source maps to zero.
    """

    def __init__(self, cols=None, window=None):
        self.cols = {s: {t: c for t, c in col.items() if c} for s, col in (cols or {}).items()}
        self.window = window

    def column(self, src):
        if self.window is not None and not (self.window[0] <= src[1] <= self.window[1]):
            raise WindowError("map needed on slot %r outside its window [%d, %d]"
                              % (src, self.window[0], self.window[1]), required=src)
        return self.cols.get(src, {})

    def apply(self, x: InducedElement) -> InducedElement:
        out = {}
        for s, w in x.slots.items():
            for t, c in self.column(s).items():
                v = c * w
                u = out.get(t)
                out[t] = v if u is None else u + v
        return InducedElement(x.ring, out)

    def reversed(self, rring):
        cols = {(s[0], -s[1]): {(t[0], -t[1]): c.shift_degrees(rring, -1) for t, c in col.items()}
                for s, col in self.cols.items()}
        w = None if self.window is None else (-self.window[1], -self.window[0])
        return SlotMap(cols, w)

    def __repr__(self):
        return "SlotMap(%d columns, window=%r)" % (len(self.cols), self.window)


def zero_map():
    return SlotMap({})


def truncate_rd(x: InducedElement, rmax) -> InducedElement:
    """Drop all pieces of right degree > rmax."""
    out = {}
    for (i, k), w in x.slots.items():
        v = w.restrict(hi=rmax + k)
        if v:
            out[(i, k)] = v
    return InducedElement(x.ring, out)


def min_rd(x: InducedElement):
    return min((g - k for (_, k), w in x.slots.items() for g in w.comps), default=None)


class _ComplexOps:
    """d (x) 1 on the slot form of C (x) R, with split differentials cached."""

    def __init__(self, C: FreeComplex):
        self.C = C
        self._splits = {}

    def split(self, n):
        s = self._splits.get(n)
        if s is None:
            s = self._splits[n] = homogeneous_split(self.C.d(n))
        return s

    def d(self, n, x: InducedElement) -> InducedElement:
        out = {}
        for g, piece in self.split(n).items():
            for (i, k), w in x.slots.items():
                for j in range(piece.nrows):
                    c = piece.rows[j][i]
                    if c:
                        v = c * w
                        u = out.get((j, k + g))
                        out[(j, k + g)] = v if u is None else u + v
        return InducedElement(x.ring, out)


def r0_slotmap(D: R0Complex, n) -> SlotMap:
    M = D.d(n)
    src, tgt = D.slots(n), D.slots(n - 1)
    cols = {}
    for r, c, x in M.entries():
        if x:
            cols.setdefault(src[c], {})[tgt[r]] = x
    return SlotMap(cols)


def _basis_element(ring, slot):
    return InducedElement(ring, {slot: ring.one()})


@dataclass
class DominationData:
    """R0-chain maps alpha: C -> D, beta: D -> C and homotopies.

    ``H[n]`` : C_n -> C_{n+1} with dH + Hd = id - beta alpha;
    ``G[n]`` : D_n -> D_{n+1} with dG + Gd = id - alpha beta (zero if omitted).
    ``window`` is the range of C slot degrees on which alpha and H are known.
    """

    C: FreeComplex
    D: R0Complex
    alpha: dict
    beta: dict
    H: dict
    G: dict = field(default_factory=dict)
    window: tuple = (0, 0)

    def __post_init__(self):
        self.ops = _ComplexOps(self.C)

    @property
    def ring(self):
        return self.C.ring

    def _m(self, maps, n):
        return maps.get(n) or zero_map()

    def a(self, n, x):
        return self._m(self.alpha, n).apply(x)

    def b(self, n, x):
        return self._m(self.beta, n).apply(x)

    def h(self, n, x):
        return self._m(self.H, n).apply(x)

    def g(self, n, x):
        return self._m(self.G, n).apply(x)

    def dC(self, n, x):
        return self.ops.d(n, x)

    def dD(self, n, x):
        return r0_slotmap(self.D, n).apply(x) if n in self.D.diffs else InducedElement(self.ring)

    # the maps of the Mather trick, on elements
    def nu(self, n, x):
        """(alpha (x) 1) mu (beta (x) 1) on D_n (x) R."""
        y = self.b(n, x)
        return self.a(n, y - y.shift(-1))

    def zeta(self, n, x):
        return self.a(n, self.b(n, x).shift(-1))

    def J(self, n, x):
        """(alpha (x) 1) mu (H (x) 1) : C_n (x) R -> D_{n+1} (x) R."""
        y = self.h(n, x)
        return self.a(n + 1, y - y.shift(-1))

    def alpha_star(self, n, c):
        """T(C)_n = C_{n-1} + C_n  ->  cone(nu)_n = D_{n-1} + D_n."""
        x, y = c
        return (self.a(n - 1, x), self.J(n - 1, x) + self.a(n, y))

    def beta_star(self, n, c):
        """cone(nu)_n -> T(C)_n, [[beta, 0], [-H mu beta, beta]]."""
        u, v = c
        bu = self.b(n - 1, u)
        return (bu, -self.h(n - 1, bu - bu.shift(-1)) + self.b(n, v))

    def theta(self, n, c):
        """Homotopy id - beta* alpha* = D Theta + Theta D on T(C); T_n -> T_{n+1}."""
        x, y = c
        hx = self.h(n - 1, x)
        return (-hx, self.h(n, hx - hx.shift(-1)) + self.h(n, y))

    # checks
    def c_slots(self, n):
        lo, hi = self.window
        return [(i, k) for i in range(self.C.rank(n)) for k in range(lo, hi + 1)]

    def verify(self) -> Verdict:
        """Chain map and homotopy identities on every slot inside the window."""
        ring = self.ring
        lo, hi = self.window
        idx = sorted(set(self.C.indices) | set(self.D.indices))
        for n in idx:
            for s in self.c_slots(n):
                e = _basis_element(ring, s)
                try:
                    de = self.dC(n, e)
                    if any(not (lo <= k <= hi) for _, k in de.slots):
                        continue  # image leaves the window; checked from the other side
                    if self.dD(n, self.a(n, e)) != self.a(n - 1, de):
                        return Verdict.failed("alpha is not a chain map at index %d, slot %r"
                                              % (n, s), index=n, slot=s)
                    lhs = self.dC(n + 1, self.h(n, e)) + self.h(n - 1, de)
                    rhs = e - self.b(n, self.a(n, e))
                except WindowError:
                    continue
                if lhs != rhs:
                    return Verdict.failed("dH + Hd != id - beta alpha at index %d, slot %r"
                                          % (n, s), index=n, slot=s)
            for s in self.D.slots(n):
                e = _basis_element(ring, s)
                if self.dC(n, self.b(n, e)) != self.b(n - 1, self.dD(n, e)):
                    return Verdict.failed("beta is not a chain map at index %d, slot %r"
                                          % (n, s), index=n, slot=s)
                lhs = self.dD(n + 1, self.g(n, e)) + self.g(n - 1, self.dD(n, e))
                try:
                    rhs = e - self.a(n, self.b(n, e))
                except WindowError as exc:
                    return Verdict.failed("alpha beta leaves the window: %s" % exc, index=n)
                if lhs != rhs:
                    return Verdict.failed("dG + Gd != id - alpha beta at index %d, slot %r"
                                          % (n, s), index=n, slot=s)
        return Verdict.passed()

    def reversed(self):
        rring = reverse_grading(self.ring)
        C = reverse_complex(self.C, rring)
        D = R0Complex(rring,
                      {n: tuple((i, -k) for i, k in s) for n, s in self.D.modules.items()},
                      {n: M.map(lambda x: x.shift_degrees(rring, -1), rring.zero())
                       for n, M in self.D.diffs.items()})

        def rev(maps):
            return {n: m.reversed(rring) for n, m in maps.items()}
        return DominationData(C, D, rev(self.alpha), rev(self.beta), rev(self.H), rev(self.G),
                              (-self.window[1], -self.window[0]))


# --------------------------------------------------------------------------
# cone(nu) as a finite free complex over R


def _coeff_sum(ring, pairs):
    s = ring.zero()
    for a, b in pairs:
        s = s + a * b
    return s


def nu_pieces(data: DominationData, n):
    """Coefficient matrices of alpha beta and zeta on D_n (x) R (rows/cols = D slots)."""
    ring = data.ring
    slots = data.D.slots(n)
    index = {s: r for r, s in enumerate(slots)}
    ab = Matrix.zeros(len(slots), len(slots), ring.zero())
    ze = Matrix.zeros(len(slots), len(slots), ring.zero())
    beta = data._m(data.beta, n)
    alpha = data._m(data.alpha, n)
    for c, s in enumerate(slots):
        for (j, l), b in beta.column(s).items():
            for t, a in alpha.column((j, l)).items():
                ab.rows[index[t]][c] = ab.rows[index[t]][c] + a * b
            for t, a in alpha.column((j, l - 1)).items():
                ze.rows[index[t]][c] = ze.rows[index[t]][c] + a * b
    return ab, ze


def nu_build(data: DominationData):
    """``{n: (nu, alpha beta, zeta)}`` as matrices over R on the D slots."""
    out = {}
    for n in data.D.indices:
        ab, ze = nu_pieces(data, n)
        out[n] = (ab - ze, ab, ze)
    return out


def cone_nu(data: DominationData) -> FreeComplex:
    """cone(nu)_n = D_{n-1} (x) R + D_n (x) R, differential [[-d, 0], [nu, d]]."""
    ring = data.ring
    zero = ring.zero()
    D = data.D
    nus = nu_build(data)
    idx = set(D.indices) | {n + 1 for n in D.indices}
    ranks = {n: len(D.slots(n - 1)) + len(D.slots(n)) for n in idx}
    diffs = {}
    for n in idx:
        if n - 1 not in idx:
            continue
        a, b = len(D.slots(n - 1)), len(D.slots(n))
        c, e = len(D.slots(n - 2)), len(D.slots(n - 1))
        M = Matrix.zeros(c + e, a + b, zero)
        dprev = D.d(n - 1)
        for r in range(c):
            for k in range(a):
                M.rows[r][k] = -dprev.rows[r][k]
        if n - 1 in nus:
            nu = nus[n - 1][0]
            for r in range(e):
                for k in range(a):
                    M.rows[c + r][k] = nu.rows[r][k]
        dn = D.d(n)
        for r in range(e):
            for k in range(b):
                M.rows[c + r][a + k] = dn.rows[r][k]
        diffs[n] = M
    return FreeComplex(ring, ranks, diffs)


# --------------------------------------------------------------------------
# the bicomplex E and its totalisations


class Bicomplex:
    """E_{n,m} = D_{n+m-1} (x) R_{-n}  +  D_{n+m} (x) R_{-n}, realised on columns [n_lo, n_hi].

    Each cell basis element is a D slot; in column n it stands for the
    component R_{k-n} of R_k (x) R_{-n}.  Both differentials are matrices of
    homogeneous coefficients acting by left multiplication:
    d_H = [[0, 0], [zeta, 0]] and d_V = [[-d, 0], [alpha beta, d]].
    """

    def __init__(self, data: DominationData, n_lo, n_hi):
        self.data = data
        self.ring = data.ring
        self.n_lo, self.n_hi = n_lo, n_hi
        D = data.D
        self.pieces = {n: nu_pieces(data, n) for n in D.indices}

    def cell(self, n, m):
        D = self.data.D
        return list(D.slots(n + m - 1)), list(D.slots(n + m))

    def _z(self, r, c):
        return Matrix.zeros(r, c, self.ring.zero())

    def _assemble(self, tl, tr, bl, br, rows, cols):
        M = self._z(rows[0] + rows[1], cols[0] + cols[1])
        for blk, (ro, co) in ((tl, (0, 0)), (tr, (0, cols[0])), (bl, (rows[0], 0)),
                              (br, (rows[0], cols[0]))):
            if blk is None:
                continue
            for r in range(blk.nrows):
                for c in range(blk.ncols):
                    M.rows[ro + r][co + c] = blk.rows[r][c]
        return M

    def dV(self, n, m):
        """E_{n,m} -> E_{n,m-1}."""
        D = self.data.D
        k = n + m
        src = (len(D.slots(k - 1)), len(D.slots(k)))
        tgt = (len(D.slots(k - 2)), len(D.slots(k - 1)))
        ab = self.pieces[k - 1][0] if k - 1 in self.pieces else None
        return self._assemble(-D.d(k - 1), None, ab, D.d(k), tgt, src)

    def dH(self, n, m):
        """E_{n,m} -> E_{n-1,m}."""
        D = self.data.D
        k = n + m
        src = (len(D.slots(k - 1)), len(D.slots(k)))
        tgt = (len(D.slots(k - 2)), len(D.slots(k - 1)))
        ze = self.pieces[k - 1][1] if k - 1 in self.pieces else None
        return self._assemble(None, None, ze, None, tgt, src)

    def cells(self):
        D = self.data.D
        if not D.indices:
            return []
        lo, hi = min(D.indices), max(D.indices) + 1
        return [(n, m) for n in range(self.n_lo, self.n_hi + 1)
                for m in range(lo - n, hi - n + 1)]

    def check(self) -> Verdict:
        """dH^2 = 0, dV^2 = 0 and dH dV + dV dH = 0 on every realised cell."""
        for n, m in self.cells():
            if not (self.dV(n, m - 1) @ self.dV(n, m)).is_zero():
                return Verdict.failed("dV dV != 0 at (%d, %d)" % (n, m), cell=(n, m))
            if not (self.dH(n - 1, m) @ self.dH(n, m)).is_zero():
                return Verdict.failed("dH dH != 0 at (%d, %d)" % (n, m), cell=(n, m))
            anti = self.dH(n, m - 1) @ self.dV(n, m) + self.dV(n - 1, m) @ self.dH(n, m)
            if not anti.is_zero():
                return Verdict.failed("dH dV + dV dH != 0 at (%d, %d)" % (n, m), cell=(n, m))
        return Verdict.passed()


def _cone_split(cone, ell, slots_src, slots_tgt):
    """Cone differential entries split as (vertical, horizontal) homogeneous matrices."""
    M = cone.d(ell)
    ring = cone.ring
    V = Matrix.zeros(M.nrows, M.ncols, ring.zero())
    Hm = Matrix.zeros(M.nrows, M.ncols, ring.zero())
    stray = []
    for r, c, x in M.entries():
        base = slots_tgt[r][1] - slots_src[c][1]
        for g, piece in x.split().items():
            if g == base:
                V.rows[r][c] = piece
            elif g == base + 1:
                Hm.rows[r][c] = piece
            else:
                stray.append((r, c, g))
    return V, Hm, stray


def tot_matches_cone(E: Bicomplex, cone: FreeComplex) -> Verdict:
    """tot(E) equals cone(nu) under the sign change (-1)^(right degree).

    For each total degree l and column n the vertical part of the tot
    differential must equal the right-degree preserving pieces of the
    cone(nu) matrix, and minus the horizontal part the pieces raising the
    right degree by one.
    """
    D = E.data.D
    for n, m in E.cells():
        ell = n + m
        src = list(D.slots(ell - 1)) + list(D.slots(ell))
        tgt = list(D.slots(ell - 2)) + list(D.slots(ell - 1))
        if not src or not tgt:
            continue
        V, Hm, stray = _cone_split(cone, ell, src, tgt)
        if stray:
            r, c, g = stray[0]
            return Verdict.failed("cone(nu) entry (%d, %d) at %d has a piece of unexpected "
                                  "degree %d" % (r, c, ell, g), index=ell)
        if E.dV(n, m) != V:
            return Verdict.failed("vertical part differs from cone(nu) at (%d, %d)" % (n, m),
                                  cell=(n, m))
        if -E.dH(n, m) != Hm:
            return Verdict.failed("horizontal part differs from cone(nu) at (%d, %d)" % (n, m),
                                  cell=(n, m))
    return Verdict.passed()


class TruncatedTotal:
    """Right truncated totalisation of E on right degrees [r_lo, r_hi].

    Basis of degree l: triples (r, part, slot) with part 0 for D_{l-1} and 1
    for D_l; the entry from (r, ., s) to (r', ., s') is homogeneous of degree
    (k' + r') - (k + r).  Columns with right degree > r_hi are dropped, which
    is the truncation of the product direction.
    """

    def __init__(self, E: Bicomplex, r_lo, r_hi):
        self.E = E
        self.r_lo, self.r_hi = r_lo, r_hi
        self.ring = E.ring

    def basis(self, ell):
        D = self.E.data.D
        out = []
        for r in range(self.r_lo, self.r_hi + 1):
            out += [(r, 0, s) for s in D.slots(ell - 1)] + [(r, 1, s) for s in D.slots(ell)]
        return out

    def differential(self, ell):
        src, tgt = self.basis(ell), self.basis(ell - 1)
        where = {b: i for i, b in enumerate(tgt)}
        M = Matrix.zeros(len(tgt), len(src), self.ring.zero())
        per = len(self.E.data.D.slots(ell - 1)) + len(self.E.data.D.slots(ell))
        per_t = len(tgt) // max(self.r_hi - self.r_lo + 1, 1)
        for r in range(self.r_lo, self.r_hi + 1):
            n = -r
            m = ell - n
            blocks = [(self.E.dV(n, m), r)]
            if r + 1 <= self.r_hi:
                blocks.append((self.E.dH(n, m), r + 1))
            for B, r2 in blocks:
                for i, j, x in B.entries():
                    if x:
                        c = (r - self.r_lo) * per + j
                        row = where[(r2,) + tgt[(r2 - self.r_lo) * per_t + i][1:]]
                        M.rows[row][c] = x
        return M


def totrt_build(E: Bicomplex, T, r_lo=0):
    return TruncatedTotal(E, r_lo, T)


def cone_on_window(cone: FreeComplex, D: R0Complex, ell, r_lo, r_hi):
    """cone(nu) (x) Novikov in degree l, materialised on right degrees [r_lo, r_hi]."""
    ring = cone.ring
    src_slots = list(D.slots(ell - 1)) + list(D.slots(ell))
    tgt_slots = list(D.slots(ell - 2)) + list(D.slots(ell - 1))
    na, nb = len(D.slots(ell - 1)), len(D.slots(ell - 2))
    src = [(r, 0 if j < na else 1, s) for r in range(r_lo, r_hi + 1)
           for j, s in enumerate(src_slots)]
    tgt = [(r, 0 if j < nb else 1, s) for r in range(r_lo, r_hi + 1)
           for j, s in enumerate(tgt_slots)]
    where = {b: i for i, b in enumerate(tgt)}
    M = Matrix.zeros(len(tgt), len(src), ring.zero())
    Dm = cone.d(ell)
    for c, (r, part, s) in enumerate(src):
        j = (na if part else 0) + ([x for x in src_slots[na:]].index(s) if part
                                   else src_slots[:na].index(s))
        for i in range(Dm.nrows):
            x = Dm.rows[i][j]
            for g, piece in x.split().items():
                t = tgt_slots[i]
                r2 = g - t[1] + s[1] + r
                if r2 > r_hi:
                    continue
                if r2 < r_lo:
                    raise WindowError("cone entry lowers the right degree below the window")
                key = (r2, 0 if i < nb else 1, t)
                M.rows[where[key]][c] = M.rows[where[key]][c] + piece
    return M


def totrt_matches_cone(Tt: TruncatedTotal, cone: FreeComplex) -> Verdict:
    D = Tt.E.data.D
    idx = set(D.indices) | {n + 1 for n in D.indices}
    for ell in sorted(idx):
        if ell - 1 not in idx:
            continue
        A = Tt.differential(ell)
        B = cone_on_window(cone, D, ell, Tt.r_lo, Tt.r_hi)
        src, tgt = Tt.basis(ell), Tt.basis(ell - 1)
        for i, j, x in A.entries():
            sign = -1 if (tgt[i][0] - src[j][0]) % 2 else 1
            if (x * sign if x else x) != B.rows[i][j]:
                return Verdict.failed("entry (%d, %d) of degree %d differs" % (i, j, ell),
                                      index=ell, row=i, col=j)
    return Verdict.passed()


# --------------------------------------------------------------------------
# contraction of C (x) Novikov from domination data


class _ConeContraction:
    """Contraction of cone(nu) (x) R((t)) from the column contraction.

    Columns are cones of alpha beta = id - (dG + Gd), contracted by
    S = [[-G, 1], [-G^2, G]].  With delta = delta_V + h (h = -zeta, raising
    the right degree) Y = delta S + S delta = 1 + hS + Sh commutes with delta,
    so s = S Y^-1 = S sum_k (-(hS + Sh))^k is a contraction of the total
    complex; the series converges because every term raises the right degree.
    """

    def __init__(self, data: DominationData, rmax):
        self.data = data
        self.rmax = rmax

    def S(self, n, c):
        u, v = c
        d = self.data
        gu = d.g(n - 1, u)
        return (v - gu, d.g(n, v) - d.g(n, gu))

    def h(self, n, c):
        u, _ = c
        return (InducedElement(self.data.ring), -self.data.zeta(n - 1, u))

    def N(self, n, c):
        a = self.h(n + 1, self.S(n, c))
        b = self.S(n - 1, self.h(n, c))
        return (a[0] + b[0], a[1] + b[1])

    def _trunc(self, c):
        return (truncate_rd(c[0], self.rmax), truncate_rd(c[1], self.rmax))

    def apply(self, n, c):
        total = c = self._trunc(c)
        while c[0] or c[1]:
            c = self.N(n, c)
            c = self._trunc((-c[0], -c[1]))
            total = (total[0] + c[0], total[1] + c[1])
        return self._trunc(self.S(n, total))


def _section(data: DominationData, n, i):
    """phi(e_i) in T(C)_n: (-tau(w_i), iota(e_i)) with w_i = (d(x)1) iota(e_i) - sum_j iota(e_j) d_ji."""
    ring = data.ring
    C = data.C
    y = InducedElement(ring, {(i, 0): ring.one()})
    w = data.dC(n, y)
    M = C.d(n)
    sub = {}
    for j in range(M.nrows):
        if M.rows[j][i]:
            sub[(j, 0)] = M.rows[j][i]
    w = w - InducedElement(ring, sub)
    return (-tau_apply(w), y)


def contraction_from_domination(data: DominationData, direction, T, margin=2):
    """Certificate for C (x) Novikov(direction) built from R0 domination data.

    s_C = pi (beta* s_nu alpha* + Theta) phi, where s_nu contracts cone(nu)
    over the Novikov ring and phi is the section of the torus projection.
    The result is checked with ``contraction_verify`` before it is returned.
    """
    if direction == "minus":
        cert = contraction_from_domination(data.reversed(), "plus", T, margin)
        return cert.reversed(data.ring)
    if direction != "plus":
        raise ValueError("direction must be 'plus' or 'minus'")
    v = data.verify()
    if not v:
        raise FindomError("domination data rejected: %s" % v.detail)
    C = data.C
    ring = data.ring
    P = precision_needed(C, T)
    rmax = P - (data.window[0] - 1) + margin
    cc = _ConeContraction(data, rmax)
    maps = {}
    for n in C.indices:
        if not C.rank(n + 1):
            continue
        M = Matrix.zeros(C.rank(n + 1), C.rank(n), ring.zero())
        for i in range(C.rank(n)):
            phi = _section(data, n, i)
            a = data.alpha_star(n, phi)
            s_nu = cc.apply(n, a)
            b = data.beta_star(n + 1, s_nu)
            th = data.theta(n, phi)
            y = b[1] + th[1]
            for (j, _), w in y.slots.items():
                M.rows[j][i] = M.rows[j][i] + w.restrict(hi=P)
        maps[n] = M
    cert = ContractionCertificate("plus", T, maps)
    v = contraction_verify(C, cert)
    if not v:
        raise FindomError("assembled certificate does not verify (%s); enlarge the window"
                          % v.detail)
    return cert


# --------------------------------------------------------------------------
# explicit domination data


def evaluation_domination(C: FreeComplex, window=(-4, 4)):
    """Domination data for [R --(t - c)--> R] over a Laurent ring, c a nonzero scalar.

    D = K in degree 0, alpha evaluates t at c, beta includes constants and
    H_0(t^k) = (t^k - c^k) / (t - c).
    """
    ring = C.ring
    if getattr(ring, "t_degree", None) != 1:
        raise GatingError("evaluation data needs the Laurent ring with t in degree 1")
    if C.ranks != {1: 1, 0: 1}:
        raise ValueError("expected a complex R -> R in indices 1, 0")
    d = C.d(1).rows[0][0]
    if set(d.comps) != {0, 1} or d.comps[1] != ring.field.one():
        raise ValueError("differential must be t - c with c a nonzero scalar")
    c = -d.comps[0]
    F = ring.field
    lo, hi = window
    D = R0Complex(ring, {0: ((0, 0),)}, {})
    alpha0 = {}
    H0 = {}
    for k in range(lo - 1, hi + 1):
        alpha0[(0, k)] = {(0, 0): ring.homogeneous(-k, F.one() * c ** k if k >= 0
                                                   else F.one() / c ** (-k))}
        col = {}
        if k >= 1:
            for j in range(0, k):
                col[(0, j)] = ring.homogeneous(j - k, F.one() * c ** (k - 1 - j))
        elif k < 0:
            for j in range(k, 0):
                col[(0, j)] = ring.homogeneous(j - k, -(F.one() / c ** (j - k + 1)))
        H0[(0, k)] = col
    alpha = {0: SlotMap(alpha0, (lo - 1, hi))}
    beta = {0: SlotMap({(0, 0): {(0, 0): ring.one()}})}
    H = {0: SlotMap(H0, (lo - 1, hi)), 1: SlotMap({}, (lo - 1, hi))}
    return DominationData(C, D, alpha, beta, H, {}, (lo, hi))


def identity_domination(C: FreeComplex, window=(-2, 2)):
    """Degenerate data D = C, alpha = beta = id, H = G = 0 on a slot window.

    Only makes sense when every differential of C has entries in R0, so that
    d (x) 1 keeps slot degrees; then nu is mu on the window.
    """
    ring = C.ring
    for n in C.indices:
        if any(g != 0 for g in homogeneous_split(C.d(n))):
            raise ValueError("identity data needs differentials with entries in R0")
    lo, hi = window
    modules = {n: tuple((i, k) for i in range(C.rank(n)) for k in range(lo, hi + 1))
               for n in C.indices}
    diffs = {}
    for n in C.indices:
        if n - 1 not in modules:
            continue
        src, tgt = modules[n], modules[n - 1]
        M = Matrix.zeros(len(tgt), len(src), ring.zero())
        d = C.d(n)
        for c, (i, k) in enumerate(src):
            for r, (j, l) in enumerate(tgt):
                if k == l and d.rows[j][i]:
                    M.rows[r][c] = d.rows[j][i]
        diffs[n] = M
    D = R0Complex(ring, modules, diffs)
    ident = {n: SlotMap({s: {s: ring.one()} for s in modules[n]}, (lo, hi)) for n in modules}
    return DominationData(C, D, ident, dict(ident), {}, {}, (lo, hi))
