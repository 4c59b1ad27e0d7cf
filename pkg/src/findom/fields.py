"""Exact ground fields: the rationals and prime fields F_p.

Rational elements are plain ``fractions.Fraction`` values.  Prime field
elements are ``ModP`` instances carrying their modulus so that ordinary
operators work everywhere downstream.
"""

from __future__ import annotations

from fractions import Fraction
import random


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        return ModP(other, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d mod %d" % (self.v, self.p)


class Field:
    """Base class; subclasses provide ``name``, ``convert`` and ``to_str``."""

    name = "?"

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def is_zero(self, x) -> bool:
        return not x

    def inv(self, x):
        return self.one() / x

    def random(self, rng: random.Random, bound: int = 5):
        """A random element, nonzero with high probability but not guaranteed."""
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random, bound: int = 5):
        while True:
            x = self.random(rng, bound)
            if x:
                return x

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def key(self):
        return ("Q",)

    def convert(self, x):
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, ModP):
            raise TypeError("cannot coerce F_p element into Q")
        return Fraction(x)

    def to_str(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def random(self, rng, bound=5):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    def to_doc(self):
        return {"name": "Q"}


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%d is not prime" % p)
        if p >= 2 ** 31:
            raise ValueError("prime must fit a machine word (< 2**31)")
        self.p = p
        self.characteristic = p
        self.name = "F%d" % p

    def key(self):
        return ("Fp", self.p)

    def convert(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError("element of F_%d given to F_%d" % (x.p, self.p))
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)
        return ModP(int(x), self.p)

    def to_str(self, x) -> str:
        return str(self.convert(x).v)

    def random(self, rng, bound=5):
        return ModP(rng.randrange(self.p), self.p)

    def to_doc(self):
        return {"name": "Fp", "p": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_doc(doc) -> Field:
    if isinstance(doc, str):
        doc = {"name": doc}
    name = doc.get("name")
    if name == "Q":
        return QQ
    if name == "Fp":
        return GF(int(doc["p"]))
    raise ValueError("unknown field %r" % (doc,))
