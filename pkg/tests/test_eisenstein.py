import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import loeschian_set, norm_solutions

from loeschian.arith import FactorizationTimeout, factorize, is_prime, sqrt_mod_prime
from loeschian.eisenstein import (
    EisensteinInt as E,
    LoeschianSieve,
    NotLoeschianError,
    canonical,
    classify_loeschian,
    is_loeschian,
    multiply,
    norm,
    orbit,
    prime_element,
    represent,
    represent_all,
)

ints = st.integers(-10**6, 10**6)
elems = st.builds(E, ints, ints)

LIMIT = 20000
L = loeschian_set(LIMIT)


def test_membership_matches_bruteforce():
    assert [n for n in range(LIMIT + 1) if is_loeschian(n)] == sorted(L)
    assert [n for n in range(LIMIT + 1) if classify_loeschian(n) is not None] == sorted(L)


def test_sieve_matches_bruteforce():
    s = LoeschianSieve(1024)
    assert [n for n in range(LIMIT + 1) if n in s] == sorted(L)
    assert s.limit >= LIMIT
    assert -1 not in s


@pytest.mark.parametrize("n, rep", [(0, (0, 0)), (1, (1, 0)), (3, (2, 1)), (7, (3, 1)), (12, (4, 2)), (21, (5, 1))])
def test_represent_examples(n, rep):
    assert represent(n) == E(*rep)


def test_represent_not_loeschian():
    for n in (2, 5, 6, 8, 18):
        with pytest.raises(NotLoeschianError):
            represent(n)


def test_represent_all_counts_orbits():
    for n in range(1, 3000):
        if n not in L:
            continue
        sols = set(norm_solutions(n))
        reps = represent_all(n)
        assert all(norm(r) == n and r.a >= r.b >= 0 for r in reps)
        covered = set()
        for r in reps:
            covered |= {(z.a, z.b) for z in orbit(r)}
        assert covered == sols, n


def test_classify_shape():
    f = classify_loeschian(3**3 * 7**2 * 13 * 2**4)
    assert f.three_exp == 3 and f.split_part == ((7, 2), (13, 1)) and f.inert_root == 4
    assert f.value() == f.n
    assert classify_loeschian(18) is None
    assert classify_loeschian(0).n == 0


def test_large_values():
    p, q = 1000000007, 998244353  # p = 2 (mod 3), q = 2 (mod 3)
    assert p % 3 == 2 and q % 3 == 2
    assert not is_loeschian(p * q)
    assert is_loeschian(p * p * 7)
    x = represent(p * p * 7)
    assert norm(x) == p * p * 7


def test_factorization_timeout():
    p, q = 1000000007, 1000000009
    with pytest.raises(FactorizationTimeout):
        factorize(p * q, trial_limit=100, effort=1)
    assert factorize(p * q) == {p: 1, q: 1}


def test_prime_elements():
    for p in range(7, 5000, 6):
        if is_prime(p):
            assert norm(prime_element(p)) == p
    assert norm(prime_element(3)) == 3
    with pytest.raises(NotLoeschianError):
        prime_element(5)


def test_sqrt_mod_prime():
    for p in (7, 13, 10007, 1000003):
        for a in range(1, 50):
            r = sqrt_mod_prime(a, p)
            if r is None:
                assert pow(a, (p - 1) // 2, p) == p - 1
            else:
                assert r * r % p == a % p


@given(elems, elems)
def test_norm_is_multiplicative(x, y):
    assert norm(multiply(x, y)) == norm(x) * norm(y)


@given(elems, elems, elems)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@given(elems)
def test_orbit(x):
    o = orbit(x)
    assert all(norm(z) == norm(x) for z in o)
    assert len(o) in (1, 6, 12)
    c = canonical(x)
    assert c in o and c.a >= c.b >= 0
    assert all(canonical(z) == c for z in o)
