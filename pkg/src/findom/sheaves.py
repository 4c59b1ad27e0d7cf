"""Twisting sheaves, window extension of complexes, and the H^0 witness.

A twisting sheaf O(q, p) is the diagram

    t^q R[t^-1]  -->  R[t, t^-1]  <--  t^-p R[t]

and all of its pieces are represented by GradedScalar values whose degree
support is checked against the relevant half line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import upoly
from .complexes import (EMPTY, FreeComplex, R0Complex, degree_range, homogeneous_split,
                        laurent_k_dimensions, validate_complex)
from .errors import FindomError, GatingError, Verdict, WindowError
from .matrix import Matrix
from .rings import LaurentRing, derive_partition


class SupportError(FindomError, ValueError):
    """An element has components outside the half line it is supposed to live on."""


def _require_support(x, lo=None, hi=None, what="element"):
    if not x:
        return
    if lo is not None and x.min_degree() < lo:
        raise SupportError("%s has a component of degree %d below %d" % (what, x.min_degree(), lo))
    if hi is not None and x.max_degree() > hi:
        raise SupportError("%s has a component of degree %d above %d" % (what, x.max_degree(), hi))


@dataclass(frozen=True)
class TwistingSheaf:
    q: int
    p: int
    ring: object

    def check(self):
        if self.q + self.p < 0:
            raise ValueError("O(%d, %d) has q + p < 0; only q + p >= 0 is supported"
                             % (self.q, self.p))

    # the split exact sequence  0 -> sum_{k=-p}^{q} R_k -> minus + plus -> R[t,t^-1] -> 0
    def delta(self, r):
        _require_support(r, -self.p, self.q, "input of Delta")
        return (r, r)

    def epsilon(self, pair):
        """The structure map difference -iota_q + _p iota."""
        x, y = pair
        _require_support(x, hi=self.q, what="minus part")
        _require_support(y, lo=-self.p, what="plus part")
        return y - x

    def sigma(self, r):
        return (-r.restrict(hi=self.q), r.restrict(lo=self.q + 1))

    def rho(self, pair):
        x, y = pair
        _require_support(x, hi=self.q, what="minus part")
        _require_support(y, lo=-self.p, what="plus part")
        return y.restrict(-self.p, self.q)

    def random_pair(self, rng, spread=3):
        ring = self.ring
        x = ring.random_element(rng, self.q - spread, self.q)
        y = ring.random_element(rng, -self.p, -self.p + spread)
        return (x, y)

    def random_window_element(self, rng):
        return self.ring.random_element(rng, -self.p, self.q)


def hogrs_splittings(q, p, ring):
    """``(Delta, sigma, rho, epsilon)`` for O(q, p); requires q + p >= 0."""
    S = TwistingSheaf(q, p, ring)
    S.check()
    return S.delta, S.sigma, S.rho, S.epsilon


def hogrs_check(S: TwistingSheaf, r_window, pair, r_any) -> Verdict:
    """The three splitting identities on one sample of each kind."""
    x, y = pair
    if S.rho(S.delta(r_window)) != r_window:
        return Verdict.failed("rho Delta != id", identity="rho_delta")
    a, b = S.sigma(S.epsilon(pair))
    c, d = S.delta(S.rho(pair))
    if a + c != x or b + d != y:
        return Verdict.failed("sigma epsilon + Delta rho != id", identity="split")
    if S.epsilon(S.sigma(r_any)) != r_any:
        return Verdict.failed("epsilon sigma != id", identity="epsilon_sigma")
    return Verdict.passed()


# --------------------------------------------------------------------------
# 0 -> R[t] -> R[t,t^-1] + R[[t]] -> R((t)) -> 0, truncated above at T


class PowerSeriesSplitting:
    """Split exact sequence of the plus side, on representatives truncated at degree T.

    Laurent polynomials are exact; power series and Novikov series are known
    in degrees <= T only, and every map is exact on those degrees.
    """

    def __init__(self, ring, T):
        self.ring = ring
        self.T = T

    def _trunc(self, x):
        return x.restrict(hi=self.T)

    def delta(self, r):
        _require_support(r, lo=0, what="polynomial in R[t]")
        return (r, self._trunc(r))

    def rho(self, pair):
        r, s = pair
        _require_support(s, lo=0, what="power series")
        return self._trunc(s - r)

    def kappa(self, pair):
        r, _ = pair
        return r.restrict(lo=0)

    def lam(self, x):
        x = self._trunc(x)
        return (-x.restrict(hi=-1), x.restrict(lo=0))

    def equal_pair(self, a, b):
        return a[0] == b[0] and self._trunc(a[1]) == self._trunc(b[1])

    def check(self, r_poly, pair, x) -> Verdict:
        if self.kappa(self.delta(r_poly)) != r_poly:
            return Verdict.failed("kappa Delta != id", identity="kappa_delta")
        a = self.lam(self.rho(pair))
        b = self.delta(self.kappa(pair))
        if not self.equal_pair((a[0] + b[0], a[1] + b[1]), pair):
            return Verdict.failed("lambda rho + Delta kappa != id", identity="split")
        if self._trunc(self.rho(self.lam(x))) != self._trunc(x):
            return Verdict.failed("rho lambda != id", identity="rho_lambda")
        return Verdict.passed()


# --------------------------------------------------------------------------
# sheaf extension of a complex and the witness H^0


@dataclass
class SheafComplex:
    base: FreeComplex
    windows: dict  # n -> (q_n, p_n)

    def window(self, n):
        q, p = self.windows[n]
        return -p, q

    def validate(self) -> Verdict:
        C = self.base
        for n, (q, p) in sorted(self.windows.items()):
            if q + p < 0:
                return Verdict.failed("window at %d has q + p = %d < 0" % (n, q + p), index=n)
        for n in sorted(C.diffs):
            rng = degree_range(C.d(n))
            if rng is EMPTY:
                continue
            lo, hi = rng
            q, p = self.windows.get(n, (None, None))
            q1, p1 = self.windows.get(n - 1, (None, None))
            if q is None or q1 is None:
                return Verdict.failed("no window at index %d or %d" % (n, n - 1), index=n)
            a, b = max(-lo, 0), max(hi, 0)
            if p1 < p + a or q1 < q + b:
                return Verdict.failed("d_%d does not map window [%d, %d] into [%d, %d]"
                                      % (n, -p, q, -p1, q1), index=n)
        return Verdict.passed()


def extend_to_sheaf(C: FreeComplex) -> SheafComplex:
    """Minimal monotone windows, (0, 0) at the top index, growing downwards."""
    if C.is_zero():
        return SheafComplex(C, {})
    windows = {C.top: (0, 0)}
    q, p = 0, 0
    for n in range(C.top, C.bottom, -1):
        rng = degree_range(C.d(n))
        a, b = (0, 0) if rng is EMPTY else (max(-rng[0], 0), max(rng[1], 0))
        p = p + a
        q = max(q + b, -p)
        windows[n - 1] = (q, p)
    return SheafComplex(C, windows)


def h0_witness(S: SheafComplex) -> R0Complex:
    """The R0-complex n -> sum_{k=-p_n}^{q_n} R_k^{k_n} with routed homogeneous blocks."""
    C = S.base
    ring = C.ring
    modules = {}
    for n, (q, p) in S.windows.items():
        if q + p < 0:
            raise WindowError("window at %d has q + p < 0" % n, required=(n, -q))
        modules[n] = tuple((i, k) for i in range(C.rank(n)) for k in range(-p, q + 1))
    diffs = {}
    for n, M in C.diffs.items():
        src, tgt = modules.get(n, ()), modules.get(n - 1, ())
        where = {s: r for r, s in enumerate(tgt)}
        out = Matrix.zeros(len(tgt), len(src), ring.zero())
        for g, piece in homogeneous_split(M).items():
            for c, (i, k) in enumerate(src):
                for j in range(piece.nrows):
                    x = piece.rows[j][i]
                    if not x:
                        continue
                    r = where.get((j, k + g))
                    if r is None:
                        raise WindowError(
                            "entry (%d, %d) of d_%d has a degree-%d piece taking slot %s "
                            "out of the target window" % (j, i, n, g, (i, k)),
                            required=(n - 1, k + g))
                    out.rows[r][c] = out.rows[r][c] + x
        diffs[n] = out
    return R0Complex(ring, modules, diffs)


# --------------------------------------------------------------------------
# hypercohomology of a diagram of complexes


@dataclass
class ComplexDiagram:
    """N^- --g_minus--> N <--g_plus-- N^+ with chain maps given per index."""

    minus: FreeComplex
    middle: FreeComplex
    plus: FreeComplex
    g_minus: dict
    g_plus: dict


def _map_matrix(f, n, src, tgt):
    M = f.get(n)
    if M is None:
        return Matrix.zeros(tgt.rank(n), src.rank(n), src.ring.zero())
    if M.shape != (tgt.rank(n), src.rank(n)):
        raise ValueError("map at index %d has shape %s, expected %s"
                         % (n, M.shape, (tgt.rank(n), src.rank(n))))
    return M


def is_chain_map(f, src, tgt) -> Verdict:
    idx = set(src.ranks) | set(n + 1 for n in src.ranks)
    for n in sorted(idx):
        lhs = tgt.d(n) @ _map_matrix(f, n, src, tgt)
        rhs = _map_matrix(f, n - 1, src, tgt) @ src.d(n)
        if lhs != rhs:
            return Verdict.failed("not a chain map at index %d" % n, index=n)
    return Verdict.passed()


def hypercohomology_tot(N: ComplexDiagram) -> FreeComplex:
    """Tot_n = N^-_n + N^+_n + N_{n+1}, (a, b, c) -> (da, db, -g^- a + g^+ b - dc)."""
    for name, f, src in (("g_minus", N.g_minus, N.minus), ("g_plus", N.g_plus, N.plus)):
        v = is_chain_map(f, src, N.middle)
        if not v:
            raise ValueError("%s: %s" % (name, v.detail))
    ring = N.middle.ring
    zero = ring.zero()
    Cm, C, Cp = N.minus, N.middle, N.plus
    idx = set(Cm.ranks) | set(Cp.ranks) | set(n - 1 for n in C.ranks)
    ranks = {n: Cm.rank(n) + Cp.rank(n) + C.rank(n + 1) for n in idx}
    diffs = {}
    for n in idx:
        if n - 1 not in idx:
            continue
        rows = []
        gm = _map_matrix(N.g_minus, n, Cm, C)
        gp = _map_matrix(N.g_plus, n, Cp, C)
        dm, dp, dc = Cm.d(n), Cp.d(n), C.d(n + 1)
        for i in range(Cm.rank(n - 1)):
            rows.append(dm.rows[i] + [zero] * (Cp.rank(n) + C.rank(n + 1)))
        for i in range(Cp.rank(n - 1)):
            rows.append([zero] * Cm.rank(n) + dp.rows[i] + [zero] * C.rank(n + 1))
        for i in range(C.rank(n)):
            rows.append([-x for x in gm.rows[i]] + gp.rows[i] + [-x for x in dc.rows[i]])
        diffs[n] = Matrix(rows, ranks[n], zero)
    return FreeComplex(ring, ranks, diffs)


# --------------------------------------------------------------------------
# adjoint isomorphisms of the twisting sheaf structure maps


class HalfLineTensor:
    """Elements of t^-p R[t] (x) R[t,t^-1] (or t^q R[t^-1] (x) R[t,t^-1]).

    Formal sums of pure tensors ``(r, s)``.  The canonical form moves
    everything across the tensor sign with the partition of unity
    ``{(u_j, v_j)}`` of the half line's edge degree: ``r (x) s =
    sum_j u_j (x) (v_j r) s``, a legal move because ``v_j r`` lies in the
    acting subring.  Two elements are equal iff their coordinate tuples
    ``c_l = v_l sum_j u_j c_j`` agree.
    """

    def __init__(self, ring, edge, side):
        self.ring = ring
        self.edge = edge  # -p on the plus side, q on the minus side
        self.side = side
        self.part = derive_partition(ring, edge)

    def _legal(self, x):
        if not x:
            return True
        return x.min_degree() >= 0 if self.side == "plus" else x.max_degree() <= 0

    def coordinates(self, terms):
        ring = self.ring
        coords = [ring.zero() for _ in self.part.pairs]
        for r, s in terms:
            if self.side == "plus":
                _require_support(r, lo=self.edge, what="left factor")
            else:
                _require_support(r, hi=self.edge, what="left factor")
            for j, (_, v) in enumerate(self.part.pairs):
                vr = v * r
                if not self._legal(vr):
                    raise SupportError("illegal balancing move: v_%d r = %r leaves the subring"
                                       % (j, vr))
                coords[j] = coords[j] + vr * s
        total = ring.zero()
        for (u, _), c in zip(self.part.pairs, coords):
            total = total + u * c
        return tuple(v * total for _, v in self.part.pairs)

    def alpha(self, terms):
        out = self.ring.zero()
        for r, s in terms:
            out = out + r * s
        return out

    def beta(self, r):
        return [(u, v * r) for u, v in self.part.pairs]


def sheaf_adjoint_check(ring, q, p, samples=20, rng=None) -> Verdict:
    """alpha beta = id and beta alpha = id for both structure maps of O(q, p)."""
    rng = rng or random.Random(0)
    for side, edge in (("plus", -p), ("minus", q)):
        H = HalfLineTensor(ring, edge, side)
        for i in range(samples):
            r = ring.random_element(rng, -3, 3)
            if H.alpha(H.beta(r)) != r:
                return Verdict.failed("%s side: alpha beta != id on sample %d" % (side, i),
                                      side=side, sample=i)
            terms = []
            for _ in range(rng.randint(1, 3)):
                if side == "plus":
                    a = ring.random_element(rng, edge, edge + 2)
                else:
                    a = ring.random_element(rng, edge - 2, edge)
                terms.append((a, ring.random_element(rng, -2, 2)))
            if H.coordinates(H.beta(H.alpha(terms))) != H.coordinates(terms):
                return Verdict.failed("%s side: beta alpha != id on sample %d" % (side, i),
                                      side=side, sample=i)
    return Verdict.passed()


def witness_pipeline(C: FreeComplex):
    """Validate, extend to a sheaf complex, and extract the witness."""
    v = validate_complex(C)
    if not v:
        raise ValueError(v.detail)
    S = extend_to_sheaf(C)
    v = S.validate()
    if not v:
        raise WindowError(v.detail)
    return S, h0_witness(S)


# --------------------------------------------------------------------------
# Betti data of the witness over K[t, t^-1]


def _lattice_matrix(M, ring, shift, side):
    """d_n on the lattices t^-p R[t] (plus) or t^q R[t^-1] (minus) as polynomial rows."""
    zero = ring.field.zero()
    s = ring.t_degree
    rows = []
    for r in M.rows:
        row = []
        for x in r:
            e = {(k * s + shift) * (1 if side == "plus" else -1): a for k, a in x.comps.items()}
            if e and min(e) < 0:
                raise WindowError("window too small for the %s lattice" % side)
            n = max(e) + 1 if e else 0
            row.append(upoly.trim([e.get(i, zero) for i in range(n)]))
        rows.append(row)
    return rows


def lattice_torsion(S: SheafComplex, side):
    """K-dimensions of the homology of D+ (x) R[[t]] (or D- (x) R[[t^-1]]) per index.

    For an untwisted Laurent ring over a field this is the t-primary (or
    t^-1-primary) torsion of H(D+) (or H(D-)), read off from the Smith form
    of the lattice differentials; it assumes C has trivial Novikov homology,
    so that no free part survives.
    """
    C = S.base
    ring = C.ring
    if not isinstance(ring, LaurentRing):
        raise GatingError("lattice torsion is computed over K[t] for Laurent rings only")
    out = {n: 0 for n in S.windows}
    for n, M in C.diffs.items():
        if not M.nrows or not M.ncols:
            continue
        (q1, p1), (q0, p0) = S.windows[n], S.windows[n - 1]
        shift = p0 - p1 if side == "plus" else q1 - q0
        for f in upoly.smith_invariants(_lattice_matrix(M, ring, shift, side), ring.field.zero()):
            out[n - 1] += next(i for i, c in enumerate(f) if c)
    return out


def witness_betti_prediction(S: SheafComplex):
    """dim H_n(C) + torsion of the two completed lattices.

    H^0 of the sheaf complex is quasi-isomorphic to its hypercohomology,
    which contains C as a retract with complement D+ (x) R[[t]] plus
    D- (x) R[[t^-1]]; so these are the Betti numbers of the witness.
    """
    h = laurent_k_dimensions(S.base)
    if any(v is None for v in h.values()):
        raise ValueError("C has free homology, so its Novikov homology is not trivial")
    tp, tm = lattice_torsion(S, "plus"), lattice_torsion(S, "minus")
    return {n: h.get(n, 0) + tp[n] + tm[n] for n in sorted(S.windows)}
