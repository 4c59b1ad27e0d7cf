"""Z-graded rings, their elements, and partitions of unity.

Three concrete rings are provided:

* ``LaurentRing``: K[t, t^-1], every component is K.
* ``TwistedLaurentRing``: a crossed product A[t, t^-1; sigma] over a
  finite-dimensional K-algebra A given by structure constants.  The degree-n
  component is A t^n and ``(a t^n)(b t^m) = a sigma^n(b) t^(n+m)``.
* ``GradedQuotientRing``: K[x_1..x_r]/I with integer variable degrees and a
  homogeneous ideal I, elements kept in Groebner normal form.

Elements of every ring are ``GradedScalar`` values: a dict from degree to a
ring-specific payload for the homogeneous component of that degree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from .errors import RingMismatch, Verdict
from .fields import Field, QQ
from .polys import (GroebnerBasis, ORDERS, format_poly, padd, parse_poly,
                    pmul, pneg, pscale)


class GradedScalar:
    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        self.ring = ring
        self.comps = comps

    def _check(self, other):
        if not isinstance(other, GradedScalar):
            return False
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch("operands live in different rings: %r and %r"
                               % (self.ring, other.ring))
        return True

    def _lift(self, other):
        if isinstance(other, GradedScalar):
            self._check(other)
            return other
        return self.ring.from_field(other)

    def __add__(self, other):
        other = self._lift(other)
        ring = self.ring
        out = dict(self.comps)
        for k, b in other.comps.items():
            a = out.get(k)
            if a is None:
                out[k] = b
            else:
                s = ring.p_add(a, b)
                if ring.p_is_zero(s):
                    del out[k]
                else:
                    out[k] = s
        return GradedScalar(ring, out)

    def __neg__(self):
        ring = self.ring
        return GradedScalar(ring, {k: ring.p_neg(a) for k, a in self.comps.items()})

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        ring = self.ring
        if not isinstance(other, GradedScalar):
            c = ring.field.convert(other)
            if not c:
                return ring.zero()
            return GradedScalar(ring, {k: ring.p_scale(a, c) for k, a in self.comps.items()})
        self._check(other)
        out = {}
        for k, a in self.comps.items():
            for l, b in other.comps.items():
                p = ring.p_mul(k, a, l, b)
                g = k + l
                s = out.get(g)
                out[g] = p if s is None else ring.p_add(s, p)
        return GradedScalar(ring, {g: p for g, p in out.items() if not ring.p_is_zero(p)})

    def __rmul__(self, other):
        # field scalars are central
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, GradedScalar):
            if isinstance(other, int) and other == 0:
                return not self.comps
            return NotImplemented
        return self.ring == other.ring and self.comps == other.comps

    __hash__ = None

    def __bool__(self):
        return bool(self.comps)

    def is_zero(self):
        return not self.comps

    def degrees(self):
        return sorted(self.comps)

    def component(self, k):
        a = self.comps.get(k)
        if a is None:
            return self.ring.zero()
        return GradedScalar(self.ring, {k: a})

    def split(self):
        """Homogeneous components as a dict degree -> GradedScalar."""
        return {k: GradedScalar(self.ring, {k: a}) for k, a in self.comps.items()}

    def restrict(self, lo=None, hi=None):
        return GradedScalar(self.ring, {
            k: a for k, a in self.comps.items()
            if (lo is None or k >= lo) and (hi is None or k <= hi)})

    def is_homogeneous(self, k=None):
        if len(self.comps) > 1:
            return False
        if k is None or not self.comps:
            return True
        return k in self.comps

    def min_degree(self):
        return min(self.comps) if self.comps else None

    def max_degree(self):
        return max(self.comps) if self.comps else None

    def shift_degrees(self, ring, sign=-1):
        """Same payloads in ``ring`` with degrees multiplied by ``sign``."""
        return GradedScalar(ring, {sign * k: a for k, a in self.comps.items()})

    def __repr__(self):
        return self.ring.format(self)


@dataclass(frozen=True)
class PartitionOfUnity:
    """Pairs (u_j, v_j), u_j of degree n and v_j of degree -n, with sum u_j v_j = 1."""

    ring: "GradedRing"
    n: int
    pairs: tuple

    def total(self):
        s = self.ring.zero()
        for u, v in self.pairs:
            s = s + u * v
        return s

    def __len__(self):
        return len(self.pairs)


class GradedRing:
    kind = "?"
    component_finite = False

    def __init__(self, field: Field):
        self.field = field
        self._partitions = {}

    # payload protocol, overridden per ring
    def p_add(self, a, b):
        return a + b

    def p_neg(self, a):
        return -a

    def p_is_zero(self, a):
        return not a

    def p_scale(self, a, c):
        return a * c

    def p_mul(self, k, a, l, b):
        raise NotImplementedError

    def p_one(self):
        raise NotImplementedError

    # constructors
    def zero(self):
        return GradedScalar(self, {})

    def one(self):
        return GradedScalar(self, {0: self.p_one()})

    def homogeneous(self, k, payload):
        if self.p_is_zero(payload):
            return self.zero()
        return GradedScalar(self, {k: payload})

    def scalar(self, comps):
        return GradedScalar(self, {k: a for k, a in comps.items() if not self.p_is_zero(a)})

    def from_field(self, c):
        return self.one() * c

    # identity
    def key(self):
        raise NotImplementedError

    @cached_property
    def _key(self):
        return self.key()

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, GradedRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.field.name)

    # partitions
    @property
    def pou_plus(self) -> PartitionOfUnity:
        return self._pou_plus

    @property
    def pou_minus(self) -> PartitionOfUnity:
        return self._pou_minus

    def set_partitions(self, plus_pairs, minus_pairs):
        self._pou_plus = PartitionOfUnity(self, 1, tuple(plus_pairs))
        self._pou_minus = PartitionOfUnity(self, -1, tuple(minus_pairs))
        self._partitions = {}

    def partition_key(self):
        def enc(p):
            return tuple((self.encode(u).__repr__(), self.encode(v).__repr__()) for u, v in p.pairs)
        return (enc(self._pou_plus), enc(self._pou_minus))

    # sampling
    def random_payload(self, rng: random.Random, k: int):
        raise NotImplementedError

    def random_homogeneous(self, rng, k):
        return self.homogeneous(k, self.random_payload(rng, k))

    def random_element(self, rng, lo=-2, hi=2, density=0.7):
        comps = {}
        for k in range(lo, hi + 1):
            if rng.random() < density:
                comps[k] = self.random_payload(rng, k)
        return self.scalar(comps)

    # component coordinates (component-finite rings only)
    def component_dim(self, k):
        raise NotImplementedError

    def payload_to_vector(self, k, a):
        raise NotImplementedError

    def vector_to_payload(self, k, v):
        raise NotImplementedError

    # serialization
    def encode_payload(self, a):
        raise NotImplementedError

    def decode_payload(self, k, data):
        raise NotImplementedError

    def encode(self, x):
        return [[k, self.encode_payload(a)] for k, a in sorted(x.comps.items())]

    def decode(self, data):
        if isinstance(data, str):
            return self.parse(data)
        if isinstance(data, (int,)):
            return self.from_field(data)
        comps = {}
        for term in data:
            k, payload = int(term[0]), term[1]
            a = self.decode_payload(k, payload)
            if k in comps:
                a = self.p_add(comps[k], a)
            comps[k] = a
        return self.scalar(comps)

    def parse(self, text):
        raise NotImplementedError("ring %s has no string syntax" % self.kind)

    def format(self, x):
        if not x.comps:
            return "0"
        return " + ".join("[%d: %r]" % (k, a) for k, a in sorted(x.comps.items()))

    def reversed(self) -> "GradedRing":
        raise NotImplementedError

    def _adopt_reversed_partitions(self, rev):
        rev.set_partitions([(u.shift_degrees(rev), v.shift_degrees(rev))
                            for u, v in self.pou_minus.pairs],
                           [(u.shift_degrees(rev), v.shift_degrees(rev))
                            for u, v in self.pou_plus.pairs])
        return rev

    def validate(self) -> Verdict:
        """Structural checks beyond the partitions (overridden per ring)."""
        return Verdict.passed()


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentRing(GradedRing):
    kind = "laurent"
    component_finite = True

    def __init__(self, field: Field = QQ, t_degree: int = 1):
        super().__init__(field)
        if t_degree not in (1, -1):
            raise ValueError("t_degree must be +1 or -1")
        self.t_degree = t_degree
        one = field.one()
        t = self.homogeneous(1, one)
        tinv = self.homogeneous(-1, one)
        self.set_partitions([(t, tinv)], [(tinv, t)])

    def key(self):
        return ("laurent", self.field.key(), self.t_degree)

    def p_mul(self, k, a, l, b):
        return a * b

    def p_one(self):
        return self.field.one()

    def random_payload(self, rng, k):
        return self.field.random(rng)

    def component_dim(self, k):
        return 1

    def payload_to_vector(self, k, a):
        return [a]

    def vector_to_payload(self, k, v):
        return v[0]

    def encode_payload(self, a):
        return self.field.to_str(a)

    def decode_payload(self, k, data):
        return self.field.convert(data)

    def t(self):
        """The element written t (degree ``t_degree``)."""
        return self.homogeneous(self.t_degree, self.field.one())

    def parse(self, text):
        poly = parse_poly(text, ["t"], self.field, allow_negative=True)
        return self.scalar({e[0] * self.t_degree: c for e, c in poly.items()})

    def format(self, x):
        if not x.comps:
            return "0"
        poly = {(k * self.t_degree,): a for k, a in x.comps.items()}
        return format_poly(poly, ["t"], self.field)

    def from_poly(self, coeffs, shift=0):
        """``sum coeffs[i] t^(i+shift)``."""
        return self.scalar({(i + shift) * self.t_degree: self.field.convert(c)
                            for i, c in enumerate(coeffs)})

    def reversed(self):
        return self._adopt_reversed_partitions(LaurentRing(self.field, -self.t_degree))

    def __repr__(self):
        return "LaurentRing(%s%s)" % (self.field.name, "" if self.t_degree == 1 else ", reversed")


# --------------------------------------------------------------------------
# Twisted Laurent polynomials over a finite-dimensional algebra


def _mat_mul(a, b, zero):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[zero] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            x = a[i][k]
            if not x:
                continue
            row = b[k]
            o = out[i]
            for j in range(p):
                if row[j]:
                    o[j] = o[j] + x * row[j]
    return out


def _mat_inv(a, field):
    n = len(a)
    m = [list(row) + [field.one() if i == j else field.zero() for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


class TwistedLaurentRing(GradedRing):
    """A[t, t^-1; sigma] with A given by structure constants.

    ``consts[i][j]`` is the coordinate vector of ``e_i e_j``; ``sigma`` is the
    matrix whose column j holds the coordinates of ``sigma(e_j)``.
    """

    kind = "twisted_laurent"
    component_finite = True

    def __init__(self, field, consts, unit, sigma, names=None, reversed_=False):
        super().__init__(field)
        conv = field.convert
        self.dim = len(unit)
        self.consts = tuple(tuple(tuple(conv(c) for c in v) for v in row) for row in consts)
        self.unit = tuple(conv(c) for c in unit)
        self.sigma = tuple(tuple(conv(c) for c in row) for row in sigma)
        self.names = tuple(names) if names else tuple("e%d" % i for i in range(self.dim))
        self.is_reversed = reversed_
        inv = _mat_inv([list(r) for r in self.sigma], field)
        self._sigma_inv = None if inv is None else tuple(tuple(r) for r in inv)
        self._powers = {}
        t = self.homogeneous(1, self.unit)
        tinv = self.homogeneous(-1, self.unit)
        self.set_partitions([(t, tinv)], [(tinv, t)])

    def key(self):
        return ("twisted", self.field.key(), self.consts, self.unit, self.sigma,
                self.is_reversed)

    def sigma_power(self, n):
        m = self._powers.get(n)
        if m is not None:
            return m
        if self._sigma_inv is None:
            raise ValueError("twisting matrix is not invertible")
        z = self.field.zero()
        if n == 0:
            m = [[self.field.one() if i == j else z for j in range(self.dim)]
                 for i in range(self.dim)]
        elif n > 0:
            m = _mat_mul([list(r) for r in self.sigma], self.sigma_power(n - 1), z)
        else:
            m = _mat_mul([list(r) for r in self._sigma_inv], self.sigma_power(n + 1), z)
        self._powers[n] = m
        return m

    def apply_sigma(self, n, b):
        m = self.sigma_power(n)
        z = self.field.zero()
        return tuple(sum((m[i][j] * b[j] for j in range(self.dim) if b[j]), z)
                     for i in range(self.dim))

    def algebra_mul(self, a, b):
        z = self.field.zero()
        out = [z] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(self.consts[i][j]):
                    if c:
                        out[k] = out[k] + xy * c
        return tuple(out)

    def p_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def p_neg(self, a):
        return tuple(-x for x in a)

    def p_is_zero(self, a):
        return not any(a)

    def p_scale(self, a, c):
        return tuple(x * c for x in a)

    def p_mul(self, k, a, l, b):
        return self.algebra_mul(a, self.apply_sigma(k, b) if k else b)

    def p_one(self):
        return self.unit

    def random_payload(self, rng, k):
        return tuple(self.field.random(rng) for _ in range(self.dim))

    def component_dim(self, k):
        return self.dim

    def payload_to_vector(self, k, a):
        return list(a)

    def vector_to_payload(self, k, v):
        return tuple(v)

    def encode_payload(self, a):
        return [self.field.to_str(x) for x in a]

    def decode_payload(self, k, data):
        if len(data) != self.dim:
            raise ValueError("coordinate vector of length %d, expected %d" % (len(data), self.dim))
        return tuple(self.field.convert(x) for x in data)

    def basis_element(self, i, k=0):
        v = [self.field.zero()] * self.dim
        v[i] = self.field.one()
        return self.homogeneous(k, tuple(v))

    def format(self, x):
        if not x.comps:
            return "0"
        parts = []
        for k, a in sorted(x.comps.items()):
            coeffs = "+".join("%s*%s" % (self.field.to_str(c), n)
                              for c, n in zip(a, self.names) if c)
            parts.append("(%s)t^%d" % (coeffs, -k if self.is_reversed else k))
        return " + ".join(parts)

    def reversed(self):
        if self._sigma_inv is None:
            raise ValueError("twisting matrix is not invertible")
        return self._adopt_reversed_partitions(
            TwistedLaurentRing(self.field, self.consts, self.unit, self._sigma_inv,
                               self.names, not self.is_reversed))

    def validate(self):
        if self._sigma_inv is None:
            return Verdict.failed("automorphism matrix is not invertible")
        basis = [tuple(self.field.one() if i == j else self.field.zero()
                       for j in range(self.dim)) for i in range(self.dim)]
        for b in basis:
            if self.algebra_mul(self.unit, b) != b or self.algebra_mul(b, self.unit) != b:
                return Verdict.failed("declared unit is not a two-sided identity")
        if self.apply_sigma(1, self.unit) != self.unit:
            return Verdict.failed("automorphism does not fix the unit")
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                lhs = self.apply_sigma(1, self.algebra_mul(x, y))
                rhs = self.algebra_mul(self.apply_sigma(1, x), self.apply_sigma(1, y))
                if lhs != rhs:
                    return Verdict.failed("automorphism not multiplicative on (e%d, e%d)" % (i, j),
                                          pair=(i, j))
                for k, z in enumerate(basis):
                    if self.algebra_mul(self.algebra_mul(x, y), z) != \
                            self.algebra_mul(x, self.algebra_mul(y, z)):
                        return Verdict.failed("structure constants not associative", triple=(i, j, k))
        return Verdict.passed()


# --------------------------------------------------------------------------
# Graded quotients of polynomial rings


class GradedQuotientRing(GradedRing):
    kind = "graded_quotient"
    component_finite = False

    def __init__(self, field, names, degrees, relations, order="lex",
                 plus=None, minus=None):
        super().__init__(field)
        if order not in ORDERS:
            raise ValueError("unknown monomial order %r" % order)
        self.names = tuple(names)
        self.degrees = tuple(int(d) for d in degrees)
        self.order = order
        self.nvars = len(self.names)
        rels = [parse_poly(r, self.names, field) if isinstance(r, str) else r
                for r in relations]
        self.relations = tuple(rels)
        self.gb = GroebnerBasis(rels, self.nvars, order)
        self._buckets = None
        self._nf_cache = {}
        if plus is not None:
            self.set_partitions(self._pairs(plus), self._pairs(minus))

    def _pairs(self, pairs):
        out = []
        for u, v in pairs:
            out.append((self.element(u) if isinstance(u, str) else u,
                        self.element(v) if isinstance(v, str) else v))
        return out

    def key(self):
        def poly_key(p):
            return tuple(sorted((m, repr(c)) for m, c in p.items()))
        return ("gq", self.field.key(), self.names, self.degrees, self.order,
                tuple(sorted(poly_key(g) for g in self.gb.basis)))

    def mono_degree(self, m):
        return sum(e * d for e, d in zip(m, self.degrees))

    def normal_form(self, p):
        return self.gb.normal_form(p)

    def p_add(self, a, b):
        return padd(a, b)

    def p_neg(self, a):
        return pneg(a)

    def p_is_zero(self, a):
        return not a

    def p_scale(self, a, c):
        return pscale(a, c)

    def p_mul(self, k, a, l, b):
        return self.normal_form(pmul(a, b))

    def p_one(self):
        return self.normal_form({(0,) * self.nvars: self.field.one()})

    def from_poly(self, p):
        """Graded scalar of an arbitrary (not necessarily reduced) polynomial."""
        nf = self.normal_form(p)
        comps = {}
        for m, c in nf.items():
            comps.setdefault(self.mono_degree(m), {})[m] = c
        return self.scalar(comps)

    def element(self, text):
        return self.from_poly(parse_poly(text, self.names, self.field))

    def var(self, name):
        return self.element(name)

    def parse(self, text):
        return self.element(text)

    def format(self, x):
        if not x.comps:
            return "0"
        poly = {}
        for a in x.comps.values():
            poly.update(a)
        return format_poly(poly, self.names, self.field, ORDERS[self.order])

    def _monomial_buckets(self):
        if self._buckets is None:
            buckets = {}
            for m in itertools.product(range(3), repeat=self.nvars):
                if self.normal_form({m: self.field.one()}) == {m: self.field.one()}:
                    buckets.setdefault(self.mono_degree(m), []).append(m)
            self._buckets = buckets
        return self._buckets

    def random_payload(self, rng, k):
        buckets = self._monomial_buckets()
        if k in buckets:
            monos = buckets[k]
            p = {}
            for _ in range(rng.randint(1, 3)):
                p = padd(p, {rng.choice(monos): self.field.random_nonzero(rng)})
            return self.normal_form(p)
        # far degrees: multiply a near-degree sample by a partition element
        step = 1 if k > 0 else -1
        pou = self.pou_plus if k > 0 else self.pou_minus
        u = rng.choice(pou.pairs)[0]
        inner = self.random_payload(rng, k - step)
        return self.p_mul(step, u.comps[step], k - step, inner)

    def encode_payload(self, a):
        key = ORDERS[self.order]
        return [[self.field.to_str(a[m]), list(m)] for m in sorted(a, key=key, reverse=True)]

    def decode_payload(self, k, data):
        p = {}
        for c, m in data:
            m = tuple(int(e) for e in m)
            if len(m) != self.nvars:
                raise ValueError("monomial %r has wrong length" % (m,))
            if self.mono_degree(m) != k:
                raise ValueError("monomial %r has degree %d, declared %d"
                                 % (m, self.mono_degree(m), k))
            p = padd(p, {m: self.field.convert(c)})
        nf = self.normal_form(p)
        return nf

    def relations_homogeneous(self):
        for r in self.relations:
            degs = {self.mono_degree(m) for m in r}
            if len(degs) > 1:
                return r
        return None

    def reversed(self):
        rev = GradedQuotientRing(self.field, self.names, [-d for d in self.degrees],
                                 self.relations, self.order)
        return self._adopt_reversed_partitions(rev)

    def validate(self):
        r = self.relations_homogeneous()
        if r is not None:
            return Verdict.failed("relation %s is not homogeneous"
                                  % format_poly(r, self.names, self.field))
        if self.gb.is_one():
            return Verdict.failed("relations generate the unit ideal")
        return Verdict.passed()

    def __repr__(self):
        degs = ",".join("%s:%+d" % (n, d) for n, d in zip(self.names, self.degrees))
        return "GradedQuotientRing(%s[%s])" % (self.field.name, degs)


# --------------------------------------------------------------------------
# partitions of unity


def derive_partition(ring: GradedRing, n: int) -> PartitionOfUnity:
    """Partition of unity of type (n, -n) from the tuple products of pou_plus/pou_minus."""
    cached = ring._partitions.get(n)
    if cached is not None:
        return cached
    if n == 0:
        part = PartitionOfUnity(ring, 0, ((ring.one(), ring.one()),))
    else:
        base = ring.pou_plus if n > 0 else ring.pou_minus
        pairs = []
        for idx in itertools.product(range(len(base.pairs)), repeat=abs(n)):
            u = ring.one()
            v = ring.one()
            for j in idx:
                u = u * base.pairs[j][0]
                v = base.pairs[j][1] * v
            pairs.append((u, v))
        part = PartitionOfUnity(ring, n, tuple(pairs))
    ring._partitions[n] = part
    return part


def verify_partition(p: PartitionOfUnity, rng=None, samples=5) -> Verdict:
    """Degrees, sum u_j v_j = 1, and the dual-basis identity on sampled r of degree n."""
    ring = p.ring
    for j, (u, v) in enumerate(p.pairs):
        if not u.is_homogeneous(p.n):
            return Verdict.failed("u_%d is not homogeneous of degree %d" % (j, p.n), pair=j)
        if not v.is_homogeneous(-p.n):
            return Verdict.failed("v_%d is not homogeneous of degree %d" % (j, -p.n), pair=j)
    total = p.total()
    if total != ring.one():
        return Verdict.failed("sum of u_j v_j is %r, not 1" % (total,))
    rng = rng or random.Random(0)
    for s in range(samples):
        r = ring.random_homogeneous(rng, p.n)
        back = ring.zero()
        for u, v in p.pairs:
            back = back + u * (v * r)
        if back != r:
            return Verdict.failed("dual-basis identity fails on sample %d" % s, sample=s)
    return Verdict.passed()


def reverse_grading(ring: GradedRing) -> GradedRing:
    """The same ring with n-th component R_-n; pou_plus and pou_minus trade places."""
    return ring.reversed()


def reverse_scalar(x: GradedScalar, target: GradedRing) -> GradedScalar:
    return x.shift_degrees(target, -1)


def validate_ring(ring: GradedRing, rng=None) -> Verdict:
    v = ring.validate()
    if not v:
        return v
    for name, p, n in (("pou_plus", ring.pou_plus, 1), ("pou_minus", ring.pou_minus, -1)):
        if p.n != n:
            return Verdict.failed("%s declared with type %d" % (name, p.n))
        v = verify_partition(p, rng)
        if not v:
            return Verdict.failed("%s: %s" % (name, v.detail), partition=name, **v.location)
    return Verdict.passed()


# --------------------------------------------------------------------------
# bundled example rings


def abcd_ring(field: Field = QQ) -> GradedQuotientRing:
    """K[A,B,C,D]/(AB+CD-1) with A, C in degree 1 and B, D in degree -1."""
    return GradedQuotientRing(field, "ABCD", [1, -1, 1, -1], ["A*B + C*D - 1"], "lex",
                              plus=[("A", "B"), ("C", "D")],
                              minus=[("B", "A"), ("D", "C")])


def swap_twisted_ring(field: Field = QQ) -> TwistedLaurentRing:
    """(K x K)[t, t^-1] with t e_1 = e_2 t; a crossed product that is not commutative."""
    z, o = 0, 1
    consts = [[[o, z], [z, z]], [[z, z], [z, o]]]
    return TwistedLaurentRing(field, consts, [o, o], [[z, o], [o, z]], names=("e1", "e2"))
