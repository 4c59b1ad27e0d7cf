import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from findom.errors import RingMismatch
from findom.fields import GF, QQ
from findom.rings import (GradedQuotientRing, LaurentRing, abcd_ring, derive_partition,
                          reverse_grading, reverse_scalar, validate_ring, verify_partition)

from conftest import RINGS


def test_bundled_rings_validate(any_ring):
    assert validate_ring(any_ring)


@pytest.mark.parametrize("n", range(-6, 7))
def test_partition_powers_verify(any_ring, n):
    p = derive_partition(any_ring, n)
    assert p.n == n
    assert verify_partition(p, random.Random(n), samples=2)


def test_abcd_square_partition():
    ring = abcd_ring(QQ)
    p = derive_partition(ring, 2)
    assert [ring.format(u) for u, _ in p.pairs] == ["A^2", "A*C", "A*C", "C^2"]
    assert p.total() == ring.one()
    assert len(derive_partition(ring, -3)) == 8


def test_broken_partition_is_reported():
    ring = abcd_ring(QQ)
    e = ring.element
    ring2 = GradedQuotientRing(QQ, "ABCD", [1, -1, 1, -1], ["A*B + C*D - 1"],
                               plus=[("A", "B")], minus=[("B", "A"), ("D", "C")])
    v = validate_ring(ring2)
    assert not v and "pou_plus" in v.detail
    assert e("A*B") + e("C*D") == ring.one()


def test_inhomogeneous_relation_is_rejected():
    ring = GradedQuotientRing(QQ, "AB", [1, -1], ["A + B - 1"])
    v = ring.validate()
    assert not v and "homogeneous" in v.detail


def test_laurent_arithmetic():
    R = LaurentRing(QQ)
    t = R.t()
    x = R.parse("t^-1 + 2")
    assert x * t == R.parse("1 + 2*t")
    assert (x - x).is_zero()
    assert R.parse("t^2").min_degree() == 2


def test_twisted_ring_is_not_commutative():
    R = [r for label, r in RINGS if label == "twisted/Q"][0]
    e1 = R.basis_element(0)
    t = R.pou_plus.pairs[0][0]
    assert t * e1 != e1 * t
    assert t * e1 == R.basis_element(1) * t


def test_mixing_rings_raises():
    with pytest.raises(RingMismatch):
        LaurentRing(QQ).one() + LaurentRing(GF(5)).one()


def test_reversal_swaps_partitions(any_ring):
    rr = reverse_grading(any_ring)
    assert validate_ring(rr)
    assert len(rr.pou_plus) == len(any_ring.pou_minus)
    rng = random.Random(3)
    x = any_ring.random_element(rng, -2, 3)
    y = reverse_scalar(x, rr)
    assert sorted(y.comps) == sorted(-k for k in x.comps)
    assert reverse_scalar(y, any_ring) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([label for label, _ in RINGS]))
def test_ring_axioms_on_samples(seed, label):
    ring = dict(RINGS)[label]
    rng = random.Random(seed)
    a, b, c = (ring.random_element(rng, -2, 2) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * ring.one() == a == ring.one() * a


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([label for label, _ in RINGS]))
def test_encode_decode_round_trip(seed, label):
    ring = dict(RINGS)[label]
    x = ring.random_element(random.Random(seed), -3, 3)
    assert ring.decode(ring.encode(x)) == x


def test_string_input_in_ring_syntax():
    ring = abcd_ring(QQ)
    assert ring.decode("1 - A") == ring.one() - ring.var("A")
    assert ring.element("3/2*A") == ring.var("A") * Fraction(3, 2)
