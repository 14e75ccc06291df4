"""Eisenstein integers a + b*w (w^2 + w + 1 = 0) and Loeschian numbers.

A nonnegative integer is Loeschian when it is a norm a^2 - ab + b^2 from
Z[w]; equivalently every prime p = 2 (mod 3) divides it to an even power.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import product
from math import isqrt

import numpy as np

from .arith import RHO_EFFORT, TRIAL_LIMIT, factorize, primes_up_to, sqrt_mod_prime


class NotLoeschianError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EisensteinInt:
    a: int
    b: int

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":
        return multiply(self, other)

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def scale(self, k: int) -> "EisensteinInt":
        return EisensteinInt(k * self.a, k * self.b)

    def conjugate(self) -> "EisensteinInt":
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return norm(self)

    def __repr__(self) -> str:
        return f"E({self.a}, {self.b})"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
THETA = EisensteinInt(1, -1)  # 1 - w, norm 3


def multiply(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """Ring product; Python integers never overflow, so no width check is needed."""
    bd = x.b * y.b
    return EisensteinInt(x.a * y.a - bd, x.a * y.b + x.b * y.a - bd)


def norm(x: EisensteinInt) -> int:
    return x.a * x.a - x.a * x.b + x.b * x.b


def power(x: EisensteinInt, k: int) -> EisensteinInt:
    out = ONE
    for _ in range(k):
        out = multiply(out, x)
    return out


def orbit(x: EisensteinInt) -> set[EisensteinInt]:
    """The (at most) 12 elements u*x and u*conj(x) for the six units u."""
    out = set()
    for z in (x, x.conjugate()):
        for _ in range(6):
            out.add(z)
            z = EisensteinInt(z.a - z.b, z.a)  # multiply by 1 + w, a unit of order 6
    return out


def canonical(x: EisensteinInt) -> EisensteinInt:
    """Lexicographically least orbit member with a >= b >= 0."""
    return min(z for z in orbit(x) if z.a >= z.b >= 0)


@dataclass(frozen=True)
class LoeschianFactorization:
    n: int
    three_exp: int
    split_part: tuple[tuple[int, int], ...]
    inert_root: int

    def value(self) -> int:
        out = 3**self.three_exp * self.inert_root**2
        for p, e in self.split_part:
            out *= p**e
        return out


def classify_loeschian(
    n: int, trial_limit: int = TRIAL_LIMIT, effort: int = RHO_EFFORT
) -> LoeschianFactorization | None:
    """Factorization shape of n, or None when n is not Loeschian.

    Raises FactorizationTimeout (not None) when n could not be factored
    within the effort cap.
    """
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    if n == 0:
        return LoeschianFactorization(0, 0, (), 0)
    three_exp, split, root = 0, [], 1
    for p, e in factorize(n, trial_limit, effort).items():
        if p == 3:
            three_exp = e
        elif p % 3 == 1:
            split.append((p, e))
        elif e % 2:
            return None
        else:
            root *= p ** (e // 2)
    return LoeschianFactorization(n, three_exp, tuple(split), root)


def is_loeschian(n: int) -> bool:
    """Membership test with early exit on the first odd inert exponent."""
    if n < 0:
        return False
    if n == 0:
        return True
    m = n
    while m % 3 == 0:
        m //= 3
    for p in primes_up_to(TRIAL_LIMIT):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if p % 3 == 2 and e % 2:
                return False
    else:
        if m > 1:
            return classify_loeschian(n) is not None
    # m is 1 or a prime with no 3 in it
    return m % 3 == 1


def _reduce_norm_lattice(v1: tuple[int, int], v2: tuple[int, int]) -> tuple[int, int]:
    """Gauss reduction of a rank-2 lattice under a^2 - ab + b^2; returns a shortest vector."""

    def q(v):
        return v[0] * v[0] - v[0] * v[1] + v[1] * v[1]

    def b2(v, w):  # twice the bilinear form
        return 2 * v[0] * w[0] - v[0] * w[1] - v[1] * w[0] + 2 * v[1] * w[1]

    while True:
        if q(v2) < q(v1):
            v1, v2 = v2, v1
        n1 = q(v1)
        mu = (b2(v1, v2) + n1) // (2 * n1)  # round(B(v1, v2) / Q(v1))
        if mu == 0:
            return v1
        v2 = (v2[0] - mu * v1[0], v2[1] - mu * v1[1])
        if q(v2) >= n1:
            return v1


def prime_element(p: int) -> EisensteinInt:
    """An element of norm p, for p = 3 or a prime p = 1 (mod 3)."""
    if p == 3:
        return THETA
    if p % 3 != 1:
        raise NotLoeschianError(f"{p} is inert in Z[w]")
    t = sqrt_mod_prime(-3, p)
    if t is None:
        raise ValueError(f"{p} is not prime")
    r = (t - 1) * pow(2, -1, p) % p  # r^2 + r + 1 = 0 (mod p)
    a, b = _reduce_norm_lattice((p, 0), (-r, 1))
    x = EisensteinInt(a, b)
    if norm(x) != p:
        raise ArithmeticError(f"lattice reduction failed for p={p}")
    return canonical(x)


def _split_options(fact: LoeschianFactorization) -> list[list[EisensteinInt]]:
    opts = []
    for p, e in fact.split_part:
        pi = prime_element(p)
        pib = pi.conjugate()
        opts.append([multiply(power(pi, j), power(pib, e - j)) for j in range(e, -1, -1)])
    return opts


def _require(n: int) -> LoeschianFactorization:
    fact = classify_loeschian(n)
    if fact is None:
        raise NotLoeschianError(f"{n} is not Loeschian")
    return fact


def represent(n: int) -> EisensteinInt:
    """Canonical (a, b), a >= b >= 0, with a^2 - ab + b^2 = n."""
    fact = _require(n)
    if n == 0:
        return ZERO
    x = power(THETA, fact.three_exp).scale(fact.inert_root)
    for choices in _split_options(fact):
        x = multiply(x, choices[0])
    out = canonical(x)
    assert norm(out) == n
    return out


def represent_all(n: int) -> list[EisensteinInt]:
    """One canonical representative per orbit of solutions of a^2 - ab + b^2 = n."""
    fact = _require(n)
    if n == 0:
        return [ZERO]
    base = power(THETA, fact.three_exp).scale(fact.inert_root)
    reps = set()
    for combo in product(*_split_options(fact)):
        x = base
        for z in combo:
            x = multiply(x, z)
        reps.add(canonical(x))
    return sorted(reps)


SIEVE_MAX = 10**8


def _build_sieve(limit: int) -> np.ndarray:
    flags = np.zeros(limit + 1, dtype=bool)
    for b in range(isqrt(limit) + 1):
        disc = 4 * limit - 3 * b * b
        if disc < 0:
            break
        amax = (b + isqrt(disc)) // 2
        a = np.arange(b, amax + 1, dtype=np.int64)
        flags[a * a - a * b + b * b] = True
    return flags


@dataclass
class LoeschianSieve:
    """Boolean table of Loeschian numbers that grows on demand up to SIEVE_MAX.

    Lookups beyond SIEVE_MAX fall back to factorization.
    """

    limit: int = 1 << 16
    flags: np.ndarray = field(init=False, repr=False)
    _lock: threading.Lock = field(init=False, repr=False, default_factory=threading.Lock)

    def __post_init__(self):
        self.flags = _build_sieve(self.limit)

    def ensure(self, n: int) -> None:
        if n <= self.limit or n > SIEVE_MAX:
            return
        with self._lock:
            if n <= self.limit:
                return
            new = self.limit
            while new < n:
                new *= 2
            new = min(new, SIEVE_MAX)
            self.flags = _build_sieve(new)
            self.limit = new

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.limit:
            if n > SIEVE_MAX:
                return is_loeschian(n)
            self.ensure(n)
        return bool(self.flags[n])


_default_sieve: LoeschianSieve | None = None


def default_sieve() -> LoeschianSieve:
    global _default_sieve
    if _default_sieve is None:
        _default_sieve = LoeschianSieve()
    return _default_sieve
