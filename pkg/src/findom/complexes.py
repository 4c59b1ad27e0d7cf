"""Bounded complexes of free modules over a graded ring, and their R0 shadows."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import upoly
from .errors import FindomError, GatingError, Verdict
from .linalg import rank as k_rank
from .matrix import Matrix
from .rings import LaurentRing


class ShapeError(FindomError, ValueError):
    pass


EMPTY = None  # degree_range of a zero matrix


class FreeComplex:
    """Chain complex ... -> R^{k_n} -d_n-> R^{k_{n-1}} -> ... of free right modules.

    ``diffs[n]`` has shape ``(ranks[n-1], ranks[n])`` and acts on columns.
    Missing differentials are zero.
    """

    def __init__(self, ring, ranks, diffs=None):
        self.ring = ring
        self.ranks = {int(n): int(k) for n, k in ranks.items() if k}
        self.diffs = {}
        for n, M in (diffs or {}).items():
            n = int(n)
            if not isinstance(M, Matrix):
                M = Matrix(M, zero=ring.zero()) if M else Matrix.zeros(0, 0, ring.zero())
            want = (self.rank(n - 1), self.rank(n))
            if M.shape != want:
                raise ShapeError("d_%d has shape %s, expected %s" % (n, M.shape, want))
            if not M.is_zero():
                self.diffs[n] = M

    def rank(self, n):
        return self.ranks.get(n, 0)

    def d(self, n):
        M = self.diffs.get(n)
        if M is None:
            return Matrix.zeros(self.rank(n - 1), self.rank(n), self.ring.zero())
        return M

    @property
    def indices(self):
        return sorted(self.ranks)

    @property
    def top(self):
        return max(self.ranks) if self.ranks else None

    @property
    def bottom(self):
        return min(self.ranks) if self.ranks else None

    def is_zero(self):
        return not self.ranks

    def map_entries(self, f, ring):
        return FreeComplex(ring, self.ranks,
                           {n: M.map(f, ring.zero()) for n, M in self.diffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        if self.ring != other.ring or self.ranks != other.ranks:
            return False
        idx = set(self.diffs) | set(other.diffs)
        return all(self.d(n) == other.d(n) for n in idx)

    __hash__ = None

    def __repr__(self):
        return "FreeComplex(%r, ranks=%r)" % (self.ring, self.ranks)


def validate_complex(C: FreeComplex) -> Verdict:
    """d_{n-1} d_n = 0 exactly; reports the first nonzero composite entry."""
    for n in sorted(C.diffs):
        if n - 1 not in C.diffs:
            continue
        comp = C.d(n - 1) @ C.d(n)
        for i, j, x in comp.entries():
            if x:
                return Verdict.failed("d_%d d_%d has nonzero entry (%d, %d): %r"
                                      % (n - 1, n, i, j, x), index=n, row=i, col=j,
                                      value=repr(x))
    return Verdict.passed()


def homogeneous_split(M: Matrix):
    """Map degree -> matrix of the degree-k components of the entries."""
    out = {}
    zero = M.zero
    for i, j, x in M.entries():
        if not x:
            continue
        for k, piece in x.split().items():
            if k not in out:
                out[k] = Matrix.zeros(M.nrows, M.ncols, zero)
            out[k].rows[i][j] = piece
    return dict(sorted(out.items()))


def degree_range(M: Matrix):
    """``(min, max)`` degree over all entries, or ``EMPTY`` for the zero matrix."""
    lo = hi = None
    for _, _, x in M.entries():
        if x:
            a, b = x.min_degree(), x.max_degree()
            lo = a if lo is None else min(lo, a)
            hi = b if hi is None else max(hi, b)
    return EMPTY if lo is None else (lo, hi)


def mapping_cone(f, C: FreeComplex, D: FreeComplex) -> FreeComplex:
    """cone(f)_n = C_{n-1} + D_n with differential [[-d_C, 0], [f, d_D]]."""
    ring = C.ring
    zero = ring.zero()
    ranks = {}
    for n in set(n + 1 for n in C.ranks) | set(D.ranks):
        ranks[n] = C.rank(n - 1) + D.rank(n)
    diffs = {}
    for n in ranks:
        if n - 1 not in ranks:
            continue
        fn = f.get(n - 1) if isinstance(f, dict) else None
        if fn is None:
            fn = Matrix.zeros(D.rank(n - 1), C.rank(n - 1), zero)
        diffs[n] = _blocks2(-C.d(n - 1), None, fn, D.d(n),
                            (C.rank(n - 2), D.rank(n - 1)), (C.rank(n - 1), D.rank(n)), zero)
    return FreeComplex(ring, ranks, diffs)


def _blocks2(a, b, c, d, rows, cols, zero):
    def z(r, s):
        return Matrix.zeros(r, s, zero)
    a = a if a is not None else z(rows[0], cols[0])
    b = b if b is not None else z(rows[0], cols[1])
    c = c if c is not None else z(rows[1], cols[0])
    d = d if d is not None else z(rows[1], cols[1])
    out = []
    for top, bot in ((a, b), (c, d)):
        for i in range(top.nrows):
            out.append(top.rows[i] + bot.rows[i])
    return Matrix(out, cols[0] + cols[1], zero)


def identity_map(C: FreeComplex):
    ring = C.ring
    return {n: Matrix.identity(k, ring.zero(), ring.one()) for n, k in C.ranks.items()}


def direct_sum(*complexes):
    ring = complexes[0].ring
    zero = ring.zero()
    ranks = {}
    for C in complexes:
        for n, k in C.ranks.items():
            ranks[n] = ranks.get(n, 0) + k
    diffs = {}
    for n in ranks:
        rows = []
        for a, C in enumerate(complexes):
            for i in range(C.rank(n - 1)):
                r = []
                for b, E in enumerate(complexes):
                    r.extend(C.d(n).rows[i] if a == b else [zero] * E.rank(n))
                rows.append(r)
        diffs[n] = Matrix(rows, ranks[n], zero)
    return FreeComplex(ring, ranks, diffs)


def reverse_complex(C: FreeComplex, rring) -> FreeComplex:
    """Same complex over the grading-reversed ring (component degrees negated)."""
    return C.map_entries(lambda x: x.shift_degrees(rring, -1), rring)


# --------------------------------------------------------------------------
# complexes of finitely generated R0-modules


@dataclass(frozen=True)
class DegreeWindow:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty window [%d, %d]" % (self.lo, self.hi))

    def __contains__(self, k):
        return self.lo <= k <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __len__(self):
        return self.hi - self.lo + 1


@dataclass
class R0Complex:
    """Complex of R0-modules sum_k R_k, one summand per slot (generator, degree k).

    ``diffs[n]`` is a Matrix with rows indexed by ``modules[n-1]`` and columns
    by ``modules[n]``; the entry from slot (i, k) to slot (j, l) is homogeneous
    of degree l - k and acts by left multiplication.
    """

    ring: object
    modules: dict
    diffs: dict = field(default_factory=dict)

    def slots(self, n):
        return self.modules.get(n, ())

    def d(self, n):
        M = self.diffs.get(n)
        if M is None:
            return Matrix.zeros(len(self.slots(n - 1)), len(self.slots(n)), self.ring.zero())
        return M

    def summands(self, n):
        """``(degree, multiplicity)`` pairs describing the module at n."""
        counts = {}
        for _, k in self.slots(n):
            counts[k] = counts.get(k, 0) + 1
        return sorted(counts.items())

    @property
    def indices(self):
        return sorted(n for n, s in self.modules.items() if s)

    def validate(self) -> Verdict:
        for n, M in sorted(self.diffs.items()):
            src, tgt = self.slots(n), self.slots(n - 1)
            if M.shape != (len(tgt), len(src)):
                return Verdict.failed("block matrix d_%d has shape %s, expected %s"
                                      % (n, M.shape, (len(tgt), len(src))), index=n)
            for r, c, x in M.entries():
                if x and not x.is_homogeneous(tgt[r][1] - src[c][1]):
                    return Verdict.failed(
                        "block d_%d from slot %s to %s is not homogeneous of degree %d"
                        % (n, src[c], tgt[r], tgt[r][1] - src[c][1]), index=n, row=r, col=c)
        for n in sorted(self.diffs):
            if n - 1 in self.diffs:
                comp = self.d(n - 1) @ self.d(n)
                for r, c, x in comp.entries():
                    if x:
                        return Verdict.failed("d_%d d_%d nonzero at (%d, %d)" % (n - 1, n, r, c),
                                              index=n, row=r, col=c)
        return Verdict.passed()


def _k_matrix(ring, M, src, tgt):
    """Sparse K-rows of the K-linear map given by block matrix M (as columns)."""
    offs_t, pos = [], 0
    for _, k in tgt:
        offs_t.append(pos)
        pos += ring.component_dim(k)
    columns = []
    for c, (_, k) in enumerate(src):
        dim = ring.component_dim(k)
        for b in range(dim):
            e = [ring.field.zero()] * dim
            e[b] = ring.field.one()
            basis = ring.homogeneous(k, ring.vector_to_payload(k, e))
            col = {}
            for r in range(M.nrows):
                x = M.rows[r][c]
                if not x:
                    continue
                y = x * basis
                l = tgt[r][1]
                if y:
                    for i, v in enumerate(ring.payload_to_vector(l, y.comps[l])):
                        if v:
                            col[offs_t[r] + i] = v
            columns.append(col)
    return columns, pos


def r0_betti(D: R0Complex):
    """K-dimensions of the homology of an R0Complex (component-finite rings only)."""
    ring = D.ring
    if not ring.component_finite:
        raise GatingError("Betti numbers need finite-dimensional components; %r is not" % ring)
    idx = set(D.indices)
    dims = {n: sum(ring.component_dim(k) for _, k in D.slots(n)) for n in idx}
    ranks = {}
    for n in set(D.diffs):
        cols, nrows = _k_matrix(ring, D.diffs[n], D.slots(n), D.slots(n - 1))
        ranks[n] = k_rank(cols, nrows, ring.field)
    return {n: dims[n] - ranks.get(n, 0) - ranks.get(n + 1, 0) for n in sorted(idx)}


# --------------------------------------------------------------------------
# homology over K[t, t^-1]


@dataclass
class HomologyData:
    free_rank: int
    factors: list  # monic polynomials in t (coefficient lists), not divisible by t

    @property
    def k_dimension(self):
        """Dimension over K, or ``None`` when infinite."""
        if self.free_rank:
            return None
        return sum(len(f) - 1 for f in self.factors)

    def is_zero(self):
        return not self.free_rank and not self.factors


def _require_laurent(C):
    if not isinstance(C.ring, LaurentRing):
        raise GatingError("homology over the ring itself is only available for Laurent rings")


def _as_polys(M, ring):
    """Matrix of Laurent entries -> (rows of K[t] coefficient lists) after a unit shift."""
    s = ring.t_degree
    exps = [k * s for _, _, x in M.entries() for k in x.comps]
    lo = min(exps) if exps else 0
    zero = ring.field.zero()
    rows = []
    for r in M.rows:
        row = []
        for x in r:
            coeffs = {k * s - lo: a for k, a in x.comps.items()}
            n = max(coeffs) + 1 if coeffs else 0
            row.append(upoly.trim([coeffs.get(i, zero) for i in range(n)]))
        rows.append(row)
    return rows


def invariant_factors(M, ring):
    """Non-unit invariant factors of M over K[t, t^-1] plus its rank."""
    if M.nrows == 0 or M.ncols == 0:
        return 0, []
    diag = upoly.smith_invariants(_as_polys(M, ring), ring.field.zero())
    factors = []
    for f in diag:
        g = upoly.monic(upoly.strip_t(f))
        if len(g) > 1:
            factors.append(g)
    return len(diag), factors


def laurent_homology(C: FreeComplex):
    """Homology of a Laurent complex: index -> HomologyData."""
    _require_laurent(C)
    info = {n: invariant_factors(C.d(n), C.ring) for n in set(C.diffs)}
    out = {}
    for n in C.indices:
        r_n = info.get(n, (0, []))[0]
        r_up, facs = info.get(n + 1, (0, []))
        out[n] = HomologyData(C.rank(n) - r_n - r_up, facs)
    return out


def laurent_k_dimensions(C: FreeComplex):
    return {n: h.k_dimension for n, h in laurent_homology(C).items()}


def format_factor(f, field):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        terms.append((field.to_str(c), i))
    out = []
    for c, i in terms:
        mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
        if mono and c == "1":
            s = mono
        elif mono and c == "-1":
            s = "-" + mono
        else:
            s = c + ("*" + mono if mono else "")
        out.append(s)
    return " + ".join(out).replace("+ -", "- ")
