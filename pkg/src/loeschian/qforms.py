"""Binary quadratic forms A x^2 + B xy + C y^2 and the Pell equation."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))
PELL_STEP_LIMIT = 10**7


class IndefiniteFormError(ValueError):
    pass


@dataclass(frozen=True)
class BinaryQF:
    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y

    def __neg__(self) -> "BinaryQF":
        return BinaryQF(-self.A, -self.B, -self.C)

    def compose(self, t: Matrix2) -> "BinaryQF":
        """The form (X, Y) -> f(pX + qY, rX + sY) for t = ((p, q), (r, s))."""
        (p, q), (r, s) = t
        A, B, C = self.A, self.B, self.C
        return BinaryQF(
            A * p * p + B * p * r + C * r * r,
            2 * A * p * q + B * (p * s + q * r) + 2 * C * r * s,
            A * q * q + B * q * s + C * s * s,
        )

    def is_reduced(self) -> bool:
        A, B, C = self.A, self.B, self.C
        return 0 < A and -A < B <= A <= C and not (A == C and B < 0)


@dataclass(frozen=True)
class PellSolution:
    n: int
    x0: int
    y0: int


def matmul(s: Matrix2, t: Matrix2) -> Matrix2:
    (a, b), (c, d) = s
    (e, f), (g, h) = t
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def reduce(f: BinaryQF) -> tuple[BinaryQF, Matrix2]:
    """Gaussian reduction of a definite form.

    Returns (g, T) with g = f.compose(T), T unimodular.  For positive definite f
    the result is reduced (-A < B <= A <= C, B >= 0 when A == C); for negative
    definite f, -g is reduced.
    """
    if f.disc >= 0:
        raise IndefiniteFormError(f"{f} is not definite (disc {f.disc})")
    sign = 1 if f.A > 0 else -1
    A, B, C = sign * f.A, sign * f.B, sign * f.C
    t = IDENTITY
    while True:
        k = (A - B) // (2 * A)
        if k:
            B, C = B + 2 * k * A, A * k * k + B * k + C
            t = matmul(t, ((1, k), (0, 1)))
        if A > C or (A == C and B < 0):
            A, B, C = C, -B, A
            t = matmul(t, ((0, -1), (1, 0)))
            continue
        break
    g = BinaryQF(sign * A, sign * B, sign * C)
    assert f.compose(t) == g
    return g, t


def represent_unit(f: BinaryQF) -> tuple[int, int, int] | None:
    """Some (k, l, eps) with f(k, l) = eps in {1, -1}, or None if f represents neither."""
    if f.disc >= 0:
        raise IndefiniteFormError(f"{f} is not definite (disc {f.disc})")
    eps = 1 if f.A > 0 else -1
    g, t = reduce(f)
    if eps * g.A != 1:
        return None
    k, l = t[0][0], t[1][0]
    assert f(k, l) == eps
    return k, l, eps


def pell_min_solution(n: int, step_limit: int = PELL_STEP_LIMIT) -> PellSolution:
    """Fundamental solution of x^2 - n y^2 = 1 from the continued fraction of sqrt(n)."""
    a0 = isqrt(n)
    if n < 2 or a0 * a0 == n:
        raise ValueError(f"Pell equation needs a nonsquare n >= 2, got {n}")
    m, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for _ in range(step_limit):
        if h * h - n * k * k == 1:
            return PellSolution(n, h, k)
        m = q * a - m
        q = (n - m * m) // q
        a = (a0 + m) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    raise ArithmeticError(f"continued fraction of sqrt({n}) exceeded {step_limit} steps")
