"""Atkin-Lehner elements w = d'x + y*phi of O(d) built from Bezout certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bezout import DEFAULT_BOUND, BezoutCertificate, Mode, iter_certificates, solve
from .eisenstein import EisensteinInt, LoeschianSieve
from .quaternion import QuatElement, conjugate_by, mul


class InvalidAtkinLehner(ValueError):
    pass


@dataclass(frozen=True)
class AtkinLehnerElement:
    d: int
    d_prime: int
    w: QuatElement
    q: QuatElement  # w^2 = d' q
    epsilon: int  # Nr(w) = d' epsilon

    @property
    def d_dprime(self) -> int:
        return self.d // self.d_prime


def is_hall_divisor(d: int, d_prime: int) -> bool:
    return d_prime >= 1 and d % d_prime == 0 and gcd(d_prime, d // d_prime) == 1


def _check_hall(d: int, d_prime: int) -> None:
    if not is_hall_divisor(d, d_prime):
        raise ValueError(f"{d_prime} is not a Hall divisor of {d}")


def from_element(d_prime: int, w: QuatElement) -> AtkinLehnerElement:
    """Wrap w, checking Nr(w) = +-d' and w^2 = d' q with q a unit of O."""
    _check_hall(w.d, d_prime)
    if not w.is_integral():
        raise InvalidAtkinLehner(f"{w} is not in O")
    n = w.nr()
    if n not in (d_prime, -d_prime):
        raise InvalidAtkinLehner(f"Nr({w}) = {n}, expected +-{d_prime}")
    q = mul(w, w).scale(Fraction(1, d_prime))
    if not q.is_integral() or q.nr() != 1:
        raise InvalidAtkinLehner(f"w^2 / {d_prime} = {q} is not a norm-1 element of O")
    return AtkinLehnerElement(w.d, d_prime, w, q, n // d_prime)


def from_xy(d: int, d_prime: int, x: EisensteinInt, y: EisensteinInt) -> AtkinLehnerElement:
    w = QuatElement(d, d_prime * x.a, d_prime * x.b, y.a, y.b)
    return from_element(d_prime, w)


def from_certificate(d: int, cert: BezoutCertificate) -> AtkinLehnerElement:
    c = cert.oriented()
    if c.d_prime * c.d_dprime != d:
        raise ValueError(f"certificate is for d = {c.d_prime * c.d_dprime}, not {d}")
    return from_xy(d, c.d_prime, c.x, c.y)


def build(
    d: int, d_prime: int, bound: int = DEFAULT_BOUND, sieve: LoeschianSieve | None = None
) -> AtkinLehnerElement:
    """w_{d'} from the first Bezout certificate for (d', d/d').

    A swapped certificate is re-oriented rather than re-searched, since
    d''u - d'v = e is the same relation as d'v - d''u = -e.
    """
    _check_hall(d, d_prime)
    return from_certificate(d, solve(d_prime, d // d_prime, Mode.ANY, bound, sieve))


def build_all(d: int, d_prime: int, limit: int, bound: int = DEFAULT_BOUND) -> list[AtkinLehnerElement]:
    """The first ``limit`` distinct Atkin-Lehner elements in certificate search order."""
    _check_hall(d, d_prime)
    out = []
    for cert in iter_certificates(d_prime, d // d_prime, Mode.ANY, bound):
        el = from_certificate(d, cert)
        if el.w not in (e.w for e in out):
            out.append(el)
        if len(out) >= limit:
            break
    return out


def check_normalizes(w: AtkinLehnerElement | QuatElement) -> bool:
    """True iff w conjugates each of 1, w, phi, w*phi into O."""
    el = w.w if isinstance(w, AtkinLehnerElement) else w
    if el.nr() == 0:
        return False
    d = el.d
    for basis in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
        if not conjugate_by(el, QuatElement(d, *basis)).is_integral():
            return False
    return True


def conjugate(w: AtkinLehnerElement, xi: QuatElement) -> QuatElement:
    """w xi w^-1, which lies in O whenever xi does."""
    out = conjugate_by(w.w, xi)
    if xi.is_integral() and not out.is_integral():
        raise InvalidAtkinLehner(f"{w.w} does not normalize O")
    return out


def unit_multiple(alpha: QuatElement, w: AtkinLehnerElement) -> AtkinLehnerElement:
    """alpha * w for a unit alpha, again of the form d'x' + y'phi."""
    if not alpha.is_unit():
        raise ValueError(f"{alpha} is not a unit of O")
    prod = mul(alpha, w.w)
    if prod.x1 % w.d_prime or prod.x2 % w.d_prime:
        raise InvalidAtkinLehner(f"{prod} is not of the form d'x + y phi")
    return from_element(w.d_prime, prod)
