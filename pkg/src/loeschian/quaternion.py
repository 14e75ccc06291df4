"""The quaternion algebra H(d) = {x + y*phi : x, y in Q(w)}, phi^2 = d, phi*x = conj(x)*phi.

Elements are stored by their four rational coordinates in the basis
1, w, phi, w*phi.  The order O(d) consists of the elements with integral
coordinates, and its unit group is {xi in O : Nr(xi) = +-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .arith import factorize

# An element of Q(w) as a pair (alpha, beta) meaning alpha + beta*w.
QwPair = tuple[Rational, Rational]


class NotInvertible(ZeroDivisionError):
    pass


def _clean(v) -> Rational:
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    if isinstance(v, (int, Fraction)):
        return v
    raise TypeError(f"coordinates must be int or Fraction, got {type(v).__name__}")


def qw_mul(x: QwPair, y: QwPair) -> QwPair:
    bd = x[1] * y[1]
    return (x[0] * y[0] - bd, x[0] * y[1] + x[1] * y[0] - bd)


def qw_conj(x: QwPair) -> QwPair:
    return (x[0] - x[1], -x[1])


def qw_add(x: QwPair, y: QwPair) -> QwPair:
    return (x[0] + y[0], x[1] + y[1])


def qw_norm(x: QwPair) -> Rational:
    return x[0] * x[0] - x[0] * x[1] + x[1] * x[1]


@dataclass(frozen=True)
class QuatElement:
    d: int
    x1: Rational
    x2: Rational
    x3: Rational
    x4: Rational

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        for name in ("x1", "x2", "x3", "x4"):
            object.__setattr__(self, name, _clean(getattr(self, name)))

    @classmethod
    def from_pairs(cls, d: int, x: QwPair, y: QwPair) -> "QuatElement":
        return cls(d, x[0], x[1], y[0], y[1])

    @classmethod
    def scalar(cls, d: int, c: Rational) -> "QuatElement":
        return cls(d, c, 0, 0, 0)

    @classmethod
    def phi(cls, d: int) -> "QuatElement":
        return cls(d, 0, 0, 1, 0)

    @classmethod
    def omega(cls, d: int) -> "QuatElement":
        return cls(d, 0, 1, 0, 0)

    @property
    def coords(self) -> tuple[Rational, Rational, Rational, Rational]:
        return (self.x1, self.x2, self.x3, self.x4)

    @property
    def x(self) -> QwPair:
        return (self.x1, self.x2)

    @property
    def y(self) -> QwPair:
        return (self.x3, self.x4)

    def nr(self) -> Rational:
        return qw_norm(self.x) - self.d * qw_norm(self.y)

    def tr(self) -> Rational:
        return 2 * self.x1 - self.x2

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def is_unit(self) -> bool:
        """Membership in the unit group of O."""
        return self.is_integral() and self.nr() in (1, -1)

    def _same_d(self, other: "QuatElement") -> None:
        if self.d != other.d:
            raise ValueError(f"elements of H({self.d}) and H({other.d}) cannot be combined")

    def __mul__(self, other):
        if isinstance(other, QuatElement):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __add__(self, other: "QuatElement") -> "QuatElement":
        self._same_d(other)
        return QuatElement(self.d, *(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "QuatElement") -> "QuatElement":
        return self + (-other)

    def __neg__(self) -> "QuatElement":
        return self.scale(-1)

    def scale(self, c: Rational) -> "QuatElement":
        return QuatElement(self.d, *(c * a for a in self.coords))

    def __pow__(self, k: int) -> "QuatElement":
        if k < 0:
            return inverse(self) ** (-k)
        out = QuatElement.scalar(self.d, 1)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __repr__(self) -> str:
        return f"H{self.d}({self.x1}, {self.x2}, {self.x3}, {self.x4})"


def mul(xi: QuatElement, eta: QuatElement) -> QuatElement:
    """(x + y phi)(z + t phi) = (x z + d y conj(t)) + (x t + y conj(z)) phi."""
    xi._same_d(eta)
    x, y, z, t = xi.x, xi.y, eta.x, eta.y
    d = xi.d
    yt = qw_mul(y, qw_conj(t))
    first = qw_add(qw_mul(x, z), (d * yt[0], d * yt[1]))
    second = qw_add(qw_mul(x, t), qw_mul(y, qw_conj(z)))
    return QuatElement.from_pairs(d, first, second)


def nr_tr(xi: QuatElement) -> tuple[Rational, Rational]:
    return xi.nr(), xi.tr()


def inverse(xi: QuatElement) -> QuatElement:
    n = xi.nr()
    if n == 0:
        raise NotInvertible(f"{xi} has reduced norm 0")
    xb = qw_conj(xi.x)
    return QuatElement(xi.d, Fraction(xb[0], 1) / n, Fraction(xb[1], 1) / n,
                       Fraction(-xi.x3, 1) / n, Fraction(-xi.x4, 1) / n)


def conjugate_by(alpha: QuatElement, xi: QuatElement) -> QuatElement:
    """alpha * xi * alpha^-1."""
    return mul(mul(alpha, xi), inverse(alpha))


def psi_matrix(xi: QuatElement) -> tuple[tuple[QwPair, QwPair], tuple[QwPair, QwPair]]:
    """The 2x2 matrix ((x, y), (d conj(y), conj(x))) over Q(w)."""
    yb = qw_conj(xi.y)
    return ((xi.x, xi.y), ((xi.d * yb[0], xi.d * yb[1]), qw_conj(xi.x)))


def qw_matmul(m, n):
    return tuple(
        tuple(qw_add(qw_mul(m[i][0], n[0][j]), qw_mul(m[i][1], n[1][j])) for j in range(2))
        for i in range(2)
    )


def qw_det(m) -> QwPair:
    p, q = qw_mul(m[0][0], m[1][1]), qw_mul(m[0][1], m[1][0])
    return (p[0] - q[0], p[1] - q[1])


def qw_trace(m) -> QwPair:
    return qw_add(m[0][0], m[1][1])


THETA: QwPair = (1, -1)  # 1 - w, norm 3


def embed_3d_to_d(xi: QuatElement) -> QuatElement:
    """The isomorphism H(3d) -> H(d), x + y phi_{3d} -> x + (1 - w) y phi_d."""
    if xi.d % 3:
        raise ValueError(f"expected an element of H(3d), got d={xi.d}")
    return QuatElement.from_pairs(xi.d // 3, xi.x, qw_mul(THETA, xi.y))


def algebra_discriminant(d: int) -> int:
    """Discriminant of H(d) as an informational value.

    With d_H the product of the primes p = 2 (mod 3) dividing d to an odd
    power, this is d_H when d_H = 1 (mod 3) and 3 d_H otherwise.
    """
    d_h = 1
    for p, e in factorize(d).items():
        if p % 3 == 2 and e % 2:
            d_h *= p
    return d_h if d_h % 3 == 1 else 3 * d_h
