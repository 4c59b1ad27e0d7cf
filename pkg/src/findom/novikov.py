"""Truncated Novikov arithmetic and chain contraction certificates.

The plus Novikov ring allows series infinite towards +infinity.  A
certificate for the plus direction is a family of finite matrices s_n with
d s + s d = id in every degree <= T.  Writing X = d s + s d - id, all
components of X sit in degrees >= T + 1 >= 1, so id + X is invertible over
the Novikov ring and commutes with d; hence (id + X)^-1 s is a genuine
contraction.  A certificate that verifies is therefore a proof of acyclicity
and not merely evidence.  The minus direction reuses all of this through the
grading-reversed ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import EMPTY, FreeComplex, degree_range, invariant_factors, reverse_complex
from .errors import GatingError, Verdict
from .linalg import solve
from .matrix import Matrix
from .rings import LaurentRing, reverse_grading

DIRECTIONS = ("plus", "minus")


def _check_direction(direction):
    if direction not in DIRECTIONS:
        raise ValueError("direction must be 'plus' or 'minus', got %r" % (direction,))


class TruncatedNovikov:
    """A Novikov series known exactly in degrees <= hi (plus) or >= lo (minus).

    ``value`` is a GradedScalar holding the known components; components
    beyond the precision bound are unknown, not zero.
    """

    __slots__ = ("direction", "value", "bound")

    def __init__(self, direction, value, bound):
        _check_direction(direction)
        self.direction = direction
        self.bound = bound
        self.value = value.restrict(hi=bound) if direction == "plus" else value.restrict(lo=bound)

    @property
    def ring(self):
        return self.value.ring

    def _combine(self, other):
        if isinstance(other, TruncatedNovikov):
            if other.direction != self.direction:
                raise ValueError("cannot mix plus and minus series")
            pick = min if self.direction == "plus" else max
            return other.value, pick(self.bound, other.bound)
        return other, self.bound

    def __add__(self, other):
        v, b = self._combine(other)
        return TruncatedNovikov(self.direction, self.value + v, b)

    def __neg__(self):
        return TruncatedNovikov(self.direction, -self.value, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product; the precision shrinks by the other factor's extreme degree."""
        v, b = self._combine(other)
        if not self.value or not v:
            return TruncatedNovikov(self.direction, self.ring.zero(), b)
        if self.direction == "plus":
            bound = min(self.bound + v.min_degree(), b + self.value.min_degree())
        else:
            bound = max(self.bound + v.max_degree(), b + self.value.max_degree())
        return TruncatedNovikov(self.direction, self.value * v, bound)

    def __rmul__(self, other):
        return TruncatedNovikov(self.direction, other, self.bound) * self

    def __eq__(self, other):
        if not isinstance(other, TruncatedNovikov):
            return NotImplemented
        return (self.direction == other.direction and self.bound == other.bound
                and self.value == other.value)

    __hash__ = None

    @classmethod
    def inverse_of(cls, x, direction, bound):
        """Inverse of a Laurent-polynomial-like element whose extreme component is a unit scalar.

        The extreme component (lowest for plus, highest for minus) must be
        c * 1 with c a nonzero field element, i.e. x = c (1 - y) with y
        strictly beyond degree 0 in the series direction; the inverse is the
        geometric series c^-1 sum_j y^j.
        """
        _check_direction(direction)
        ring = x.ring
        if not x:
            raise ZeroDivisionError("zero is not invertible")
        k = x.min_degree() if direction == "plus" else x.max_degree()
        if k != 0:
            raise ValueError("extreme component must sit in degree 0")
        try:
            c = _scalar_ratio(ring, x.comps[0], ring.p_one())
        except ValueError:
            raise ValueError("extreme component is not a nonzero multiple of 1") from None
        cinv = 1 / c
        y = ring.one() - x * cinv  # strictly beyond degree 0 in the series direction
        term = total = ring.one()
        while True:
            term = term * y
            term = term.restrict(hi=bound) if direction == "plus" else term.restrict(lo=bound)
            if not term:
                break
            total = total + term
        return cls(direction, total * cinv, bound)

    def __repr__(self):
        side = "<=" if self.direction == "plus" else ">="
        return "TruncatedNovikov(%r, exact in degrees %s %d)" % (self.value, side, self.bound)


def _scalar_ratio(ring, a, one):
    """c with a == c * one, or raise ValueError."""
    va = ring.payload_to_vector(0, a) if ring.component_finite else None
    if va is not None:
        vo = ring.payload_to_vector(0, one)
        c = None
        for x, y in zip(va, vo):
            if y:
                c = x / y
                break
        if c is not None and all(x == c * y for x, y in zip(va, vo)):
            return c
        raise ValueError("not a scalar")
    # polynomial payloads: the constant monomial only
    if len(a) == 1 and len(one) == 1 and set(a) == set(one):
        (m,) = a
        return a[m] / one[m]
    raise ValueError("not a scalar")


# --------------------------------------------------------------------------
# certificates


@dataclass
class ContractionCertificate:
    """s_n : C_n -> C_{n+1} with d s + s d = id in degrees <= T (plus) / >= -T (minus)."""

    direction: str
    truncation: int
    maps: dict = field(default_factory=dict)

    def s(self, n, C):
        M = self.maps.get(n)
        if M is None:
            return Matrix.zeros(C.rank(n + 1), C.rank(n), C.ring.zero())
        return M

    def reversed(self, rring):
        flip = {"plus": "minus", "minus": "plus"}[self.direction]
        return ContractionCertificate(
            flip, self.truncation,
            {n: M.map(lambda x: x.shift_degrees(rring, -1), rring.zero())
             for n, M in self.maps.items()})


def precision_needed(C: FreeComplex, T):
    """Highest degree of s that can affect d s + s d in degrees <= T."""
    a = 0
    for n in C.diffs:
        rng = degree_range(C.d(n))
        if rng is not EMPTY:
            a = max(a, -rng[0])
    return T + a


def contraction_verify(C: FreeComplex, cert: ContractionCertificate) -> Verdict:
    """d s + s d = id exactly in all degrees within the truncation."""
    _check_direction(cert.direction)
    if cert.truncation < 0:
        return Verdict.failed("truncation must be >= 0, got %d" % cert.truncation)
    if cert.direction == "minus":
        rring = reverse_grading(C.ring)
        v = contraction_verify(reverse_complex(C, rring), cert.reversed(rring))
        if not v and "degree" in v.location:
            loc = dict(v.location, degree=-v.location["degree"])
            v = Verdict.failed("(d s + s d)_%d entry (%d, %d) differs from the identity in "
                               "degree %d" % (loc["index"], loc["row"], loc["col"], loc["degree"]),
                               **loc)
        return v
    T = cert.truncation
    ring = C.ring
    for n, M in cert.maps.items():
        if M.shape != (C.rank(n + 1), C.rank(n)):
            return Verdict.failed("s_%d has shape %s, expected %s"
                                  % (n, M.shape, (C.rank(n + 1), C.rank(n))), index=n)
    for n in C.indices:
        lhs = C.d(n + 1) @ cert.s(n, C) + cert.s(n - 1, C) @ C.d(n)
        for i, j, x in lhs.entries():
            want = ring.one() if i == j else ring.zero()
            diff = (x - want).restrict(hi=T)
            if diff:
                g = diff.min_degree()
                return Verdict.failed(
                    "(d s + s d)_%d entry (%d, %d) differs from the identity in degree %d by %r"
                    % (n, i, j, g, diff.component(g)), index=n, row=i, col=j, degree=g)
    return Verdict.passed()


def mutate_certificate(cert: ContractionCertificate, n, i, j, degree=0):
    """Copy of ``cert`` with entry (i, j) of s_n changed by +1 in ``degree``."""
    maps = {k: M.copy() for k, M in cert.maps.items()}
    M = maps[n]
    ring = M.zero.ring
    bump = ring.one()
    part = ring.pou_plus if degree > 0 else ring.pou_minus
    for _ in range(abs(degree)):
        bump = bump * part.pairs[0][0]
    M.rows[i][j] = M.rows[i][j] + bump
    return ContractionCertificate(cert.direction, cert.truncation, maps)


# --------------------------------------------------------------------------
# search over component-finite rings


def _basis(ring, k):
    dim = ring.component_dim(k)
    out = []
    for b in range(dim):
        e = [ring.field.zero()] * dim
        e[b] = ring.field.one()
        out.append(ring.homogeneous(k, ring.vector_to_payload(k, e)))
    return out


def _search_plus(C: FreeComplex, T, lo):
    ring = C.ring
    hi = precision_needed(C, T)
    field_ = ring.field
    variables = []  # (n, row, col, degree, basis index)
    var_index = {}
    for n in C.indices:
        if not C.rank(n + 1):
            continue
        for r in range(C.rank(n + 1)):
            for c in range(C.rank(n)):
                for k in range(lo, hi + 1):
                    for b in range(ring.component_dim(k)):
                        var_index[(n, r, c, k, b)] = len(variables)
                        variables.append((n, r, c, k, b))
    splits = {n: C.d(n).map(lambda x: x.split(), None) if C.d(n).nrows and C.d(n).ncols else None
              for n in set(C.indices) | {n + 1 for n in C.indices}}
    rows = {}

    def add(key, var, vec_deg, vec):
        for e, v in enumerate(vec):
            if v:
                row = rows.setdefault((key, vec_deg, e), {})
                s = row.get(var)
                s = v if s is None else s + v
                if s:
                    row[var] = s
                else:
                    row.pop(var, None)

    bases = {k: _basis(ring, k) for k in range(lo, hi + 1)}
    for n in C.indices:
        # d_{n+1} s_n : entry (i, j) += sum_l d_{n+1}[i][l] s_n[l][j]
        dn1 = splits.get(n + 1)
        if dn1 is not None and C.rank(n + 1):
            for i in range(C.rank(n)):
                for l in range(C.rank(n + 1)):
                    pieces = dn1.rows[i][l]
                    for e, dp in pieces.items():
                        for j in range(C.rank(n)):
                            for k in range(lo, hi + 1):
                                g = e + k
                                if g > T:
                                    continue
                                for b, be in enumerate(bases[k]):
                                    y = dp * be
                                    if y:
                                        add((n, i, j), var_index[(n, l, j, k, b)], g,
                                            ring.payload_to_vector(g, y.comps[g]))
        # s_{n-1} d_n : entry (i, j) += sum_l s_{n-1}[i][l] d_n[l][j]
        dn = splits.get(n)
        if dn is not None and C.rank(n - 1) and (n - 1) in C.ranks:
            for l in range(C.rank(n - 1)):
                for j in range(C.rank(n)):
                    pieces = dn.rows[l][j]
                    for e, dp in pieces.items():
                        for i in range(C.rank(n)):
                            for k in range(lo, hi + 1):
                                g = e + k
                                if g > T:
                                    continue
                                for b, be in enumerate(bases[k]):
                                    y = be * dp
                                    if y:
                                        add((n, i, j), var_index[(n - 1, i, l, k, b)], g,
                                            ring.payload_to_vector(g, y.comps[g]))
    # identity right-hand side; every (n, i, i, degree 0) equation must exist
    one = ring.payload_to_vector(0, ring.p_one())
    for n in C.indices:
        for i in range(C.rank(n)):
            for e, v in enumerate(one):
                rows.setdefault(((n, i, i), 0, e), {})
    keys = sorted(rows)
    mat = [rows[k] for k in keys]
    rhs = []
    for (key, g, e) in keys:
        n, i, j = key
        rhs.append(one[e] if (i == j and g == 0) else field_.zero())
    x = solve(mat, rhs, len(variables), field_)
    if x is None:
        return None
    maps = {}
    for idx, val in x.items():
        n, r, c, k, b = variables[idx]
        if n not in maps:
            maps[n] = Matrix.zeros(C.rank(n + 1), C.rank(n), ring.zero())
        vec = [field_.zero()] * ring.component_dim(k)
        vec[b] = val
        M = maps[n]
        M.rows[r][c] = M.rows[r][c] + ring.homogeneous(k, ring.vector_to_payload(k, vec))
    return ContractionCertificate("plus", T, maps)


def contraction_search(C: FreeComplex, direction, T, window=None):
    """Certificate found by solving d s + s d = id degreewise, or ``None`` (inconclusive).

    ``window`` is the lowest degree allowed in s (plus direction, mirrored for
    minus); by default the search tries successively deeper windows.
    """
    _check_direction(direction)
    if not C.ring.component_finite:
        raise GatingError("contraction search needs finite-dimensional components; "
                          "use contraction_verify with a supplied certificate")
    if T < 0:
        raise ValueError("truncation must be >= 0")
    if direction == "minus":
        rring = reverse_grading(C.ring)
        cert = contraction_search(reverse_complex(C, rring), "plus", T, window)
        return None if cert is None else cert.reversed(C.ring)
    if C.is_zero():
        return ContractionCertificate("plus", T, {})
    if not all(C.rank(n + 1) or C.rank(n - 1) for n in C.indices):
        return None  # a module with nothing on either side cannot be contracted
    depths = [window] if window is not None else _default_depths(C, T)
    for lo in depths:
        cert = _search_plus(C, T, -abs(lo))
        if cert is not None:
            if not contraction_verify(C, cert):
                raise AssertionError("search produced a certificate that does not verify")
            return cert
    return None


def _default_depths(C, T):
    spread = 0
    for n in C.diffs:
        rng = degree_range(C.d(n))
        if rng is not EMPTY:
            spread = max(spread, rng[1] - rng[0])
    base = T + 2
    return [base, base + 2 * spread * len(C.indices) + 4]


# --------------------------------------------------------------------------
# exact oracle over K[t, t^-1]


def laurent_novikov_decide(C: FreeComplex):
    """``{"plus": bool, "minus": bool}``: acyclicity after tensoring with each Novikov ring.

    Both Novikov rings are fields containing K(t), so acyclicity is the rank
    condition k_n = rank d_n + rank d_{n+1} over K(t) in every index.
    """
    if not isinstance(C.ring, LaurentRing):
        raise GatingError("the exact Novikov oracle is only available for Laurent rings")
    ranks = {n: invariant_factors(C.d(n), C.ring)[0] for n in C.diffs}
    ok = all(C.rank(n) == ranks.get(n, 0) + ranks.get(n + 1, 0) for n in C.indices)
    return {"plus": ok, "minus": ok}


# --------------------------------------------------------------------------
# hand-made certificates


def geometric_certificates(ring, T):
    """Certificates for the two-step complex d_2 = (1-A, 1-B)^T, d_1 = (1-B, -(1-A)).

    Plus: s_1 = (u, 0), s_0 = (0, -u)^T with u = (1-A)^-1 = sum_j A^j.
    Minus: s_1 = (0, v), s_0 = (v, 0)^T with v = (1-B)^-1 = sum_j B^j.
    """
    A, B = ring.var("A"), ring.var("B")
    z = ring.zero()
    u = TruncatedNovikov.inverse_of(ring.one() - A, "plus", T + 1).value
    v = TruncatedNovikov.inverse_of(ring.one() - B, "minus", -(T + 1)).value
    plus = ContractionCertificate("plus", T, {
        1: Matrix([[u, z]], 2, z),
        0: Matrix([[z], [-u]], 1, z)})
    minus = ContractionCertificate("minus", T, {
        1: Matrix([[z, v]], 2, z),
        0: Matrix([[v], [z]], 1, z)})
    return plus, minus


def paper_example_complex(ring):
    e = ring.parse
    return FreeComplex(ring, {2: 1, 1: 2, 0: 1}, {
        2: [[e("1 - A")], [e("1 - B")]],
        1: [[e("1 - B"), e("A - 1")]]})
