"""Elementary integer arithmetic: primes, factorization, modular square roots."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

TRIAL_LIMIT = 10**6
RHO_EFFORT = 10**6

# Deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorizationTimeout(ArithmeticError):
    """Pollard rho gave up before splitting a composite cofactor."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not factor {cofactor} (while factoring {n})")
        self.n = n
        self.cofactor = cofactor


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    r, s = n - 1, 0
    while r % 2 == 0:
        r //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, r, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, c: int, effort: int) -> int | None:
    """One Pollard-Brent run; returns a nontrivial factor or None."""
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    spent = 0
    m = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        spent += r
        if spent > effort:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, effort: int) -> int | None:
    for c in range(1, 20):
        f = _brent(n, c, effort)
        if f is not None:
            return f
    return None


def factorize(n: int, trial_limit: int = TRIAL_LIMIT, effort: int = RHO_EFFORT) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Trial division by primes up to ``trial_limit`` (stopping early at the
    square root of the remaining cofactor), then Pollard-Brent rho with at
    most ``effort`` iterations per split attempt.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    m = n
    for p in primes_up_to(trial_limit):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m == 1:
        return out
    stack = [m]
    while stack:
        k = stack.pop()
        if k == 1:
            continue
        if is_prime(k):
            out[k] = out.get(k, 0) + 1
            continue
        r = isqrt(k)
        if r * r == k:
            stack += [r, r]
            continue
        f = _split(k, effort)
        if f is None:
            raise FactorizationTimeout(n, k)
        stack += [f, k // f]
    return dict(sorted(out.items()))


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """Tonelli-Shanks: some x with x*x = a (mod p), or None if a is a non-residue."""
    a %= p
    if a == 0 or p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def hall_divisors(factors: dict[int, int]) -> list[int]:
    """All d' with d' || d, given the factorization of d; sorted ascending."""
    divs = [1]
    for p, e in factors.items():
        pe = p**e
        divs += [x * pe for x in divs]
    return sorted(divs)
