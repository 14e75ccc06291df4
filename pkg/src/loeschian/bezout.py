"""Bezout relations d'u - d''v = +-1 with u, v Loeschian."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from enum import Enum
from itertools import count
from math import gcd
from typing import Iterator

from .eisenstein import THETA, EisensteinInt, LoeschianSieve, default_sieve, multiply, norm, represent

DEFAULT_BOUND = 10**6


class Mode(str, Enum):
    ANY = "any"
    NO_THREE = "no-three"  # additionally 3 does not divide uv
    EXACT_ONE = "exact-one"  # epsilon = +1 in the given orientation


class SearchExhausted(Exception):
    """No certificate with v <= bound.  Says nothing about existence."""

    def __init__(self, d_prime: int, d_dprime: int, mode: Mode, bound: int):
        super().__init__(f"no {mode.value} certificate for ({d_prime}, {d_dprime}) with v <= {bound}")
        self.d_prime = d_prime
        self.d_dprime = d_dprime
        self.mode = mode
        self.bound = bound


@dataclass(frozen=True)
class BezoutCertificate:
    """d'u - d''v = epsilon (or d''u - d'v = epsilon when swapped), u = N(x), v = N(y)."""

    d_prime: int
    d_dprime: int
    swapped: bool
    epsilon: int
    x: EisensteinInt
    y: EisensteinInt
    u: int
    v: int

    def oriented(self) -> "BezoutCertificate":
        """The same relation written as d'u - d''v = epsilon.

        d''u - d'v = e is d'v - d''u = -e, so a swap only exchanges (u, v)
        and flips the sign.
        """
        if not self.swapped:
            return self
        return BezoutCertificate(self.d_prime, self.d_dprime, False, -self.epsilon,
                                 self.y, self.x, self.v, self.u)


def verify(cert: BezoutCertificate) -> bool:
    c = cert
    if c.epsilon not in (1, -1) or c.d_prime < 1 or c.d_dprime < 1:
        return False
    if norm(c.x) != c.u or norm(c.y) != c.v:
        return False
    a, b = (c.d_dprime, c.d_prime) if c.swapped else (c.d_prime, c.d_dprime)
    return a * c.u - b * c.v == c.epsilon


def _progression(modulus: int, residue: int, bound: int, tag: int) -> Iterator[tuple[int, int]]:
    for v in range(residue % modulus, bound + 1, modulus):
        yield v, tag


def _candidates(d1: int, d2: int, bound: int) -> Iterator[tuple[int, int]]:
    """(v, tag) in ascending v; tag = 2*swapped + (epsilon == -1)."""
    streams = []
    for tag, (a, b, eps) in enumerate(((d1, d2, 1), (d1, d2, -1), (d2, d1, 1), (d2, d1, -1))):
        # a*u - b*v = eps  needs  b*v = -eps (mod a)
        residue = 0 if a == 1 else (-eps * pow(b, -1, a)) % a
        streams.append(_progression(a, residue, bound, tag))
    return heapq.merge(*streams)


def iter_certificates(
    d_prime: int,
    d_dprime: int,
    mode: Mode = Mode.ANY,
    bound: int = DEFAULT_BOUND,
    sieve: LoeschianSieve | None = None,
) -> Iterator[BezoutCertificate]:
    """All certificates with v <= bound in search order (ANY and NO_THREE modes)."""
    _check(d_prime, d_dprime, mode)
    if mode is Mode.EXACT_ONE:
        raise ValueError("iter_certificates does not enumerate exact-one certificates")
    sieve = sieve or default_sieve()
    no_three = mode is Mode.NO_THREE
    for v, tag in _candidates(d_prime, d_dprime, bound):
        if no_three and v % 3 == 0:
            continue
        if v not in sieve:
            continue
        swapped = tag >= 2
        eps = -1 if tag & 1 else 1
        a, b = (d_dprime, d_prime) if swapped else (d_prime, d_dprime)
        u, r = divmod(b * v + eps, a)
        if r or u < 0 or (no_three and u % 3 == 0) or u not in sieve:
            continue
        cert = BezoutCertificate(d_prime, d_dprime, swapped, eps, represent(u), represent(v), u, v)
        assert verify(cert)
        yield cert


def _check(d_prime: int, d_dprime: int, mode: Mode) -> None:
    if d_prime < 1 or d_dprime < 1:
        raise ValueError("d' and d'' must be positive")
    if gcd(d_prime, d_dprime) != 1:
        raise ValueError(f"gcd({d_prime}, {d_dprime}) != 1")
    prod3 = d_prime * d_dprime % 3
    if mode is Mode.NO_THREE and prod3 == 1:
        # u, v = 1 (mod 3) forces d'u - d''v = d' - d'' = 0 (mod 3)
        raise ValueError("no-three mode is impossible when d'd'' = 1 (mod 3)")
    if mode is Mode.EXACT_ONE and prod3 == 0:
        raise ValueError("exact-one mode needs 3 not dividing d'd''")


def solve(
    d_prime: int,
    d_dprime: int,
    mode: Mode = Mode.ANY,
    bound: int = DEFAULT_BOUND,
    sieve: LoeschianSieve | None = None,
) -> BezoutCertificate:
    """First certificate in search order; raises SearchExhausted past ``bound``."""
    mode = Mode(mode)
    _check(d_prime, d_dprime, mode)
    if mode is Mode.EXACT_ONE:
        return _exact_one(d_prime, d_dprime, bound, sieve)
    for cert in iter_certificates(d_prime, d_dprime, mode, bound, sieve):
        return cert
    raise SearchExhausted(d_prime, d_dprime, mode, bound)


def _exact_one(d1: int, d2: int, bound: int, sieve: LoeschianSieve | None) -> BezoutCertificate:
    # Each branch reduces mod 3 to force epsilon = +1 in the oriented relation.
    r1, r2 = d1 % 3, d2 % 3
    try:
        if r1 == 1:
            c = solve(d1, 3 * d2, Mode.ANY, bound, sieve).oriented()
            x, y = c.x, multiply(THETA, c.y)
        elif r2 == 2:
            c = solve(3 * d1, d2, Mode.ANY, bound, sieve).oriented()
            x, y = multiply(THETA, c.x), c.y
        else:
            c = solve(d1, d2, Mode.NO_THREE, bound, sieve).oriented()
            x, y = c.x, c.y
        cert = BezoutCertificate(d1, d2, False, c.epsilon, x, y, norm(x), norm(y))
        if cert.epsilon == 1 and verify(cert):
            return cert
    except SearchExhausted:
        pass
    return _blind_exact_one(d1, d2, bound, sieve)


def _blind_exact_one(d1: int, d2: int, bound: int, sieve: LoeschianSieve | None) -> BezoutCertificate:
    sieve = sieve or default_sieve()
    residue = 0 if d1 == 1 else (-pow(d2, -1, d1)) % d1
    for v in range(residue, bound + 1, d1):
        u = (d2 * v + 1) // d1
        if v in sieve and u in sieve:
            return BezoutCertificate(d1, d2, False, 1, represent(u), represent(v), u, v)
    raise SearchExhausted(d1, d2, Mode.EXACT_ONE, bound)
