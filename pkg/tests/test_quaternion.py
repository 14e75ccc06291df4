from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import as_matrix, mat_det, mat_mul

from loeschian.quaternion import (
    NotInvertible,
    QuatElement,
    algebra_discriminant,
    embed_3d_to_d,
    inverse,
    psi_matrix,
    qw_det,
    qw_matmul,
    qw_trace,
)

c = st.integers(-50, 50)
ds = st.integers(1, 60)


def elements(d):
    return st.builds(lambda a, b, e, f: QuatElement(d, a, b, e, f), c, c, c, c)


pairs = ds.flatmap(lambda d: st.tuples(elements(d), elements(d), elements(d)))


@given(pairs)
def test_associative_and_distributive(t):
    x, y, z = t
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(pairs)
def test_norm_multiplicative_and_psi(t):
    x, y, _ = t
    assert (x * y).nr() == x.nr() * y.nr()
    assert psi_matrix(x * y) == qw_matmul(psi_matrix(x), psi_matrix(y))
    assert qw_det(psi_matrix(x)) == (x.nr(), 0)
    assert qw_trace(psi_matrix(x)) == (x.tr(), 0)
    # independent oracle multiplication
    assert as_matrix(x.d, (x * y).coords) == mat_mul(as_matrix(x.d, x.coords), as_matrix(x.d, y.coords))
    assert mat_det(as_matrix(x.d, x.coords)) == (x.nr(), 0)


@given(pairs)
def test_inverse(t):
    x = t[0]
    if x.nr() == 0:
        with pytest.raises(NotInvertible):
            inverse(x)
        return
    one = QuatElement.scalar(x.d, 1)
    assert x * inverse(x) == one == inverse(x) * x


@given(ds.flatmap(lambda d: st.tuples(elements(3 * d), elements(3 * d))))
def test_embedding_is_a_homomorphism(t):
    x, y = t
    assert embed_3d_to_d(x * y) == embed_3d_to_d(x) * embed_3d_to_d(y)
    assert embed_3d_to_d(x).nr() == x.nr()


def test_generators():
    d = 7
    w, phi, one = QuatElement.omega(d), QuatElement.phi(d), QuatElement.scalar(d, 1)
    assert w * w + w + one == QuatElement(d, 0, 0, 0, 0)
    assert phi * phi == 7 * one
    x = QuatElement(d, 2, 5, 0, 0)
    xbar = QuatElement(d, -3, -5, 0, 0)
    assert phi * x == xbar * phi
    assert inverse(w) == QuatElement(d, -1, -1, 0, 0)
    assert w ** 3 == one and w ** -1 == w * w


def test_fractions_are_cleaned():
    x = QuatElement(5, Fraction(4, 2), 0, 0, 0)
    assert x.x1 == 2 and isinstance(x.x1, int) and x.is_integral()
    assert not QuatElement(5, Fraction(1, 2), 0, 0, 0).is_integral()
    with pytest.raises(ValueError):
        QuatElement(2, 1, 0, 0, 0) * QuatElement(3, 1, 0, 0, 0)


@pytest.mark.parametrize("d, disc", [(40, 10), (1, 1), (2, 6), (5, 15), (9, 1), (20, 15), (7, 1)])
def test_algebra_discriminant(d, disc):
    assert algebra_discriminant(d) == disc
