import pytest

from loeschian.arith import factorize, hall_divisors
from loeschian.atkin_lehner import (
    InvalidAtkinLehner,
    build,
    build_all,
    check_normalizes,
    conjugate,
    from_element,
    from_xy,
    is_hall_divisor,
    unit_multiple,
)
from loeschian.eisenstein import EisensteinInt as E
from loeschian.quaternion import QuatElement, inverse


def test_golden_elements_d40():
    w5 = from_xy(40, 5, E(1, 5), E(1, -3).conjugate())
    assert w5.w == QuatElement(40, 5, 25, 4, 3)
    assert w5.epsilon == 1 and w5.q.nr() == 1


@pytest.mark.parametrize("d", [1, 2, 6, 12, 30, 40, 45, 63, 210])
def test_every_hall_divisor(d):
    for dp in hall_divisors(factorize(d)):
        el = build(d, dp)
        assert el.w.nr() in (dp, -dp)
        assert el.w.x1 % dp == 0 and el.w.x2 % dp == 0
        assert el.w * el.w == el.q.scale(dp) and el.q.is_unit()
        assert check_normalizes(el)


def test_not_normalizing():
    assert check_normalizes(QuatElement.phi(40))
    assert not check_normalizes(QuatElement(40, 1, 0, 1, 0))
    assert not check_normalizes(QuatElement(40, 0, 0, 0, 0))


def test_from_element_rejects():
    with pytest.raises(InvalidAtkinLehner):
        from_element(5, QuatElement(40, 5, 0, 0, 0))  # norm 25
    with pytest.raises(ValueError):
        from_element(4, QuatElement(40, 4, 0, 0, 0))  # 4 is not a Hall divisor of 40
    assert is_hall_divisor(40, 8) and not is_hall_divisor(40, 4)


def test_conjugation_stays_in_order():
    for el in build_all(40, 5, 4):
        for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (3, -2, 7, 5)):
            xi = QuatElement(40, *e)
            c = conjugate(el, xi)
            assert c.is_integral() and c.nr() == xi.nr()


def test_unit_multiple():
    el = build(40, 8)
    omega = QuatElement.omega(40)
    m = unit_multiple(omega, el)
    assert m.w == omega * el.w and check_normalizes(m)
    with pytest.raises(ValueError):
        unit_multiple(QuatElement(40, 2, 0, 0, 0), el)


def test_build_all_distinct():
    els = build_all(40, 8, 5)
    assert len({e.w for e in els}) == 5
    # two Atkin-Lehner elements for the same d' differ by a unit
    a, b = els[0].w, els[1].w
    assert (a * inverse(b)).is_unit()
