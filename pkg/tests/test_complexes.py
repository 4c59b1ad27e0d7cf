import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from findom.complexes import (EMPTY, FreeComplex, R0Complex, ShapeError, degree_range,
                              homogeneous_split, identity_map, invariant_factors,
                              laurent_homology, laurent_k_dimensions, mapping_cone, r0_betti,
                              validate_complex)
from findom.errors import GatingError
from findom.fields import QQ
from findom.matrix import Matrix
from findom.novikov import laurent_novikov_decide, paper_example_complex
from findom.rings import LaurentRing, abcd_ring

R = LaurentRing(QQ)


def laurent(text):
    return R.parse(text)


def one_map(x):
    return FreeComplex(R, {1: 1, 0: 1}, {1: [[x]]})


def test_two_step_example_validates(abcd):
    assert validate_complex(paper_example_complex(abcd))


def test_wrong_sign_reports_the_composite(abcd):
    e = abcd.parse
    C = FreeComplex(abcd, {2: 1, 1: 2, 0: 1}, {
        2: [[e("1 - A")], [e("1 - B")]],
        1: [[e("1 - B"), e("1 - A")]]})
    v = validate_complex(C)
    assert not v
    assert v.location["index"] == 2 and (v.location["row"], v.location["col"]) == (0, 0)
    # 2 (1 - A)(1 - B) = 2 - 2A - 2B + 2AB, and AB = 1 - CD
    comp = (C.d(1) @ C.d(2)).rows[0][0]
    assert comp == e("4 - 2*A - 2*B - 2*C*D")
    assert comp == e("2") * e("1 - A") * e("1 - B")


def test_zero_differentials_validate():
    assert validate_complex(FreeComplex(R, {1: 2, 0: 1}, {}))


def test_shape_is_checked():
    with pytest.raises(ShapeError):
        FreeComplex(R, {1: 1, 0: 2}, {1: [[R.one()]]})


def test_homogeneous_split_examples(abcd):
    M = Matrix([[abcd.parse("1 - A")]], 1, abcd.zero())
    split = homogeneous_split(M)
    assert sorted(split) == [0, 1]
    assert split[0].rows[0][0] == abcd.one()
    assert split[1].rows[0][0] == -abcd.var("A")
    s = homogeneous_split(Matrix([[laurent("t - 2")]], 1, R.zero()))
    assert s[0].rows[0][0] == laurent("-2") and s[1].rows[0][0] == laurent("t")
    assert homogeneous_split(Matrix.zeros(2, 2, R.zero())) == {}


def test_degree_ranges(abcd):
    col = Matrix([[abcd.parse("1 - A")], [abcd.parse("1 - B")]], 1, abcd.zero())
    assert degree_range(col) == (-1, 1)
    assert degree_range(Matrix([[laurent("t - 2")]], 1, R.zero())) == (0, 1)
    assert degree_range(Matrix.zeros(1, 1, R.zero())) is EMPTY


def test_laurent_homology_examples():
    h = laurent_homology(one_map(laurent("t - 2")))
    assert h[1].is_zero()
    assert h[0].free_rank == 0 and h[0].factors == [[-2, 1]]
    h = laurent_homology(FreeComplex(R, {1: 1, 0: 1}, {}))
    assert (h[1].free_rank, h[0].free_rank) == (1, 1)
    assert laurent_k_dimensions(one_map(R.one())) == {0: 0, 1: 0}
    # t is a unit, so t^3 (t - 2) has the same homology as t - 2
    assert laurent_k_dimensions(one_map(laurent("t^4 - 2*t^3"))) == {0: 1, 1: 0}


def test_smith_form_invariant_factors():
    x, z = laurent("t - 1"), R.zero()
    M = Matrix([[x, z], [z, x * laurent("t - 2")]], 2, z)
    assert invariant_factors(M, R) == (2, [[-1, 1], [2, -3, 1]])
    M = Matrix([[x, z], [z, laurent("t - 2")]], 2, z)
    assert invariant_factors(M, R) == (2, [[2, -3, 1]])
    M = Matrix([[R.one(), z], [z, laurent("t^2")]], 2, z)
    assert invariant_factors(M, R) == (2, [])


def test_homology_needs_a_laurent_ring(abcd):
    with pytest.raises(GatingError):
        laurent_homology(paper_example_complex(abcd))


coeff = st.integers(-3, 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(coeff, min_size=3, max_size=3), min_size=4, max_size=4))
def test_cokernel_dimension_is_degree_span_of_determinant(cs):
    """dim_K coker of a 2x2 Laurent matrix = span of the nonzero determinant."""
    ents = [R.scalar({k: Fraction(c) for k, c in enumerate(e) if c}) for e in cs]
    a, b, c, d = ents
    det = a * d - b * c
    if not det:
        return
    C = FreeComplex(R, {1: 2, 0: 2}, {1: [[a, b], [c, d]]})
    assert laurent_k_dimensions(C) == {1: 0, 0: det.max_degree() - det.min_degree()}


def test_cone_of_identity_is_acyclic(abcd):
    C = one_map(laurent("t - 2"))
    cone = mapping_cone(identity_map(C), C, C)
    assert validate_complex(cone)
    assert laurent_k_dimensions(cone) == {n: 0 for n in cone.indices}
    assert laurent_novikov_decide(cone) == {"plus": True, "minus": True}


def test_r0_betti_examples():
    one = R.one()
    D = R0Complex(R, {1: ((0, 0),), 0: ((0, 0), (0, 1))},
                  {1: Matrix([[-2 * one], [R.t()]], 1, R.zero())})
    assert D.validate()
    assert r0_betti(D) == {0: 1, 1: 0}
    assert r0_betti(R0Complex(R, {}, {})) == {}
    ident = R0Complex(R, {1: ((0, 0),), 0: ((0, 0),)}, {1: Matrix([[one]], 1, R.zero())})
    assert r0_betti(ident) == {0: 0, 1: 0}


def test_r0_complex_rejects_inhomogeneous_blocks():
    D = R0Complex(R, {1: ((0, 0),), 0: ((0, 0),)}, {1: Matrix([[R.t()]], 1, R.zero())})
    assert not D.validate()


def test_r0_betti_is_gated(abcd):
    D = R0Complex(abcd, {0: ((0, 0),)}, {})
    with pytest.raises(GatingError):
        r0_betti(D)
