from math import gcd

import pytest

from oracles import loeschian_set

from loeschian.bezout import BezoutCertificate, Mode, SearchExhausted, iter_certificates, solve, verify
from loeschian.eisenstein import EisensteinInt as E

L = loeschian_set(10**5)


def brute_first(a: int, b: int, bound: int):
    """First (v, orientation, epsilon) in the documented order, by brute force."""
    for v in range(bound + 1):
        for swapped, eps in ((False, 1), (False, -1), (True, 1), (True, -1)):
            p, q = (b, a) if swapped else (a, b)
            u, r = divmod(q * v + eps, p)
            if not r and u >= 0 and u in L and v in L:
                return v, swapped, eps, u
    return None


def test_three_five():
    c = solve(3, 5)
    assert (c.u, c.v, c.epsilon, c.swapped) == (7, 4, 1, False)
    assert verify(c)


def test_five_three_first_hit_is_swapped():
    c = solve(5, 3)
    assert (c.u, c.v, c.epsilon, c.swapped) == (7, 4, 1, True)
    o = c.oriented()
    assert (o.u, o.v, o.epsilon, o.swapped) == (4, 7, -1, False)
    assert 5 * o.u - 3 * o.v == o.epsilon


def test_five_eight():
    c = solve(5, 8)
    assert (c.u, c.v, c.epsilon) == (19, 12, -1)
    c = solve(5, 8, Mode.EXACT_ONE)
    assert (c.u, c.v, c.epsilon, c.swapped) == (21, 13, 1, False)
    assert verify(c)


def test_trivial_pair():
    c = solve(1, 1)
    assert (c.u, c.v, c.epsilon) == (1, 0, 1)


def test_search_order_matches_bruteforce():
    for a in range(1, 40):
        for b in range(1, 40):
            if gcd(a, b) != 1:
                continue
            c = solve(a, b)
            assert (c.v, c.swapped, c.epsilon, c.u) == brute_first(a, b, 2000), (a, b)


def test_input_errors():
    with pytest.raises(ValueError):
        solve(4, 6)
    with pytest.raises(ValueError):
        solve(0, 5)
    with pytest.raises(ValueError):
        solve(1, 7, Mode.NO_THREE)  # 1*7 = 1 (mod 3)
    with pytest.raises(ValueError):
        solve(3, 5, Mode.EXACT_ONE)


def test_exhausted():
    with pytest.raises(SearchExhausted) as e:
        solve(5, 8, bound=3)
    assert e.value.bound == 3


def test_verify_rejects_tampering():
    c = solve(7, 10)
    assert verify(c)
    bad = BezoutCertificate(c.d_prime, c.d_dprime, c.swapped, c.epsilon, c.x, c.y, c.u + 1, c.v)
    assert not verify(bad)
    assert not verify(BezoutCertificate(3, 5, False, 1, E(3, 1), E(2, 1), 7, 4))


def test_iter_certificates_all_verify():
    certs = list(iter_certificates(7, 11, bound=3000))
    assert certs and all(verify(c) for c in certs)
    vs = [c.v for c in certs]
    assert vs == sorted(vs)


def test_modes_for_many_pairs():
    for a in range(1, 60):
        for b in range(1, 60):
            if gcd(a, b) != 1:
                continue
            if a * b % 3 == 2:
                c = solve(a, b, Mode.NO_THREE)
                assert verify(c) and c.u * c.v % 3
            if a * b % 3:
                c = solve(a, b, Mode.EXACT_ONE)
                assert verify(c) and c.epsilon == 1 and not c.swapped
