"""Elements of order 3 in O(d): construction, enumeration and conjugacy.

An element xi = x1 + x2 w + x3 phi + x4 w phi of O has order 3 exactly when
x2 = 2 x1 + 1 and 3 x1 (x1 + 1) = d N(x3 + x4 w).  Its invariant pair is
(gcd(x1, d), gcd(x1 + 1, d)), whose product is d ("full" stratum) or d/3
("third" stratum).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import xgcd
from .atkin_lehner import build as build_atkin_lehner
from .atkin_lehner import conjugate as al_conjugate
from .bezout import DEFAULT_BOUND, Mode, solve
from .eisenstein import THETA, EisensteinInt, LoeschianSieve, default_sieve, multiply, represent_all
from .qforms import BinaryQF, represent_unit
from .quaternion import QuatElement, mul


class CaseTag(str, Enum):
    FULL = "Full"
    THIRD = "Third"


class EquationViolated(ValueError):
    pass


class DegenerateIntertwiner(ArithmeticError):
    pass


class NotRealizable(ValueError):
    """No order-3 element can carry the requested invariant pair."""


@dataclass(frozen=True)
class Order3Element:
    elem: QuatElement
    d_prime_inv: int
    d_dprime_inv: int
    case_tag: CaseTag

    @property
    def d(self) -> int:
        return self.elem.d

    @property
    def x1(self) -> int:
        return self.elem.x1

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return self.elem.coords

    @property
    def invariants(self) -> tuple[int, int]:
        return self.d_prime_inv, self.d_dprime_inv

    def y_norm(self) -> int:
        x3, x4 = self.elem.x3, self.elem.x4
        return x3 * x3 - x3 * x4 + x4 * x4

    def __repr__(self) -> str:
        return f"Order3({self.d}: {self.coords}, inv={self.invariants}, {self.case_tag.value})"


def _invariants(d: int, x1: int) -> tuple[int, int]:
    return gcd(x1, d), gcd(x1 + 1, d)


def from_element(elem: QuatElement) -> Order3Element:
    """Check that elem has order 3 and attach its invariants."""
    if not elem.is_integral():
        raise EquationViolated(f"{elem} is not in O")
    d, (x1, x2, x3, x4) = elem.d, elem.coords
    if x2 != 2 * x1 + 1:
        raise EquationViolated(f"x2 = 2 x1 + 1 fails: {x2} != {2 * x1 + 1}")
    lhs, n = 3 * x1 * (x1 + 1), x3 * x3 - x3 * x4 + x4 * x4
    if lhs != d * n:
        raise EquationViolated(f"3 x1 (x1 + 1) = d N(y) fails: {lhs} != {d} * {n}")
    one = QuatElement.scalar(d, 1)
    if elem == one or mul(mul(elem, elem), elem) != one:
        raise EquationViolated(f"{elem} does not have order 3")
    dp, ddp = _invariants(d, x1)
    if gcd(dp, ddp) != 1 or dp * ddp not in (d, d // 3 if d % 3 == 0 else d):
        raise ArithmeticError(f"invariant pair ({dp}, {ddp}) is impossible for d={d}")
    full = dp * ddp == d
    if full != (n % 3 == 0):
        raise ArithmeticError(f"stratum and 3 | N(y) disagree for {elem}")
    return Order3Element(elem, dp, ddp, CaseTag.FULL if full else CaseTag.THIRD)


def make(d: int, x1: int, x3: int, x4: int) -> Order3Element:
    return from_element(QuatElement(d, x1, 2 * x1 + 1, x3, x4))


def star(xi: Order3Element) -> Order3Element:
    """phi xi^2 phi^-1, which is x1 + x2 w + (x4 - x3) phi + x4 w phi."""
    x1, x2, x3, x4 = xi.coords
    return Order3Element(QuatElement(xi.d, x1, x2, x4 - x3, x4), xi.d_prime_inv, xi.d_dprime_inv, xi.case_tag)


def square(xi: Order3Element) -> Order3Element:
    """xi^2 = -1 - xi; the invariant pair is swapped."""
    return Order3Element(-QuatElement.scalar(xi.d, 1) - xi.elem, xi.d_dprime_inv, xi.d_prime_inv, xi.case_tag)


def enumerate(d: int, x1_bound: int, sieve: LoeschianSieve | None = None) -> list[Order3Element]:
    """Order-3 elements with -x1_bound - 1 <= x1 <= x1_bound.

    The range is closed under squaring (x1 -> -1 - x1).  For each x1 there is
    one (x3, x4) per unit orbit plus its star.  Ordered by x1, then by the canonical (x3, x4), each followed by its star
    partner when the coordinates differ.
    """
    if x1_bound < 0:
        raise ValueError("x1_bound must be >= 0")
    sieve = sieve or default_sieve()
    out = []
    for x1 in range(-x1_bound - 1, x1_bound + 1):
        k, r = divmod(3 * x1 * (x1 + 1), d)
        if r or k not in sieve:
            continue
        for y in represent_all(k):
            xi = make(d, x1, y.a, y.b)
            out.append(xi)
            xs = star(xi)
            if xs.elem != xi.elem:
                out.append(xs)
    return out


# -- integer lattices ---------------------------------------------------------


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """A basis of {v in Z^n : M v = 0}, saturated, as a list of vectors.

    Column operations on M are mirrored on an n x n unimodular U; the columns
    of U under the zero columns of M U span the kernel over Z.
    """
    m = [list(r) for r in rows]
    n = len(m[0])
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(j, k, a, b, c, e):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + e col_k), a e - b c = +-1
        for mat in (m, u):
            for row in mat:
                row[j], row[k] = a * row[j] + b * row[k], c * row[j] + e * row[k]

    piv = 0
    for i in range(len(m)):
        if piv == n:
            break
        for k in range(piv + 1, n):
            if m[i][k]:
                p, q = m[i][piv], m[i][k]
                g, s, t = xgcd(p, q)
                colop(piv, k, s, t, -q // g, p // g)
        if m[i][piv]:
            piv += 1
    return [[u[r][j] for r in range(n)] for j in range(piv, n)]


def hermite_rows(vectors: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``."""
    a = [list(v) for v in vectors]
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        for k in range(r + 1, len(a)):
            if a[k][c]:
                p, q = a[r][c], a[k][c]
                g, s, t = xgcd(p, q)
                a[r], a[k] = (
                    [s * x + t * y for x, y in zip(a[r], a[k])],
                    [(-q // g) * x + (p // g) * y for x, y in zip(a[r], a[k])],
                )
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for k in range(r):
                f = a[k][c] // a[r][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
            r += 1
    return [row for row in a if any(row)]


# -- conjugacy ------------------------------------------------------------------


@dataclass(frozen=True)
class IntertwinerLattice:
    xi: Order3Element
    eta: Order3Element
    basis: tuple[QuatElement, QuatElement]
    form: BinaryQF


@dataclass(frozen=True)
class ConjugacyWitness:
    alpha: QuatElement  # eta alpha = alpha xi, Nr(alpha) = +-1


_UNIT_VECTORS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def intertwiner(xi: Order3Element, eta: Order3Element) -> IntertwinerLattice:
    """The lattice {alpha in O : eta alpha = alpha xi} with Nr on it as a binary form."""
    d = xi.d
    if eta.d != d:
        raise ValueError(f"elements live in O({xi.d}) and O({eta.d})")
    images = []
    for e in _UNIT_VECTORS:
        b = QuatElement(d, *e)
        images.append((mul(eta.elem, b) - mul(b, xi.elem)).coords)
    matrix = [[images[j][i] for j in range(4)] for i in range(4)]
    kernel = integer_kernel(matrix)
    if len(kernel) != 2:
        raise DegenerateIntertwiner(f"solution space of eta a = a xi has dimension {len(kernel)}")
    b1, b2 = (QuatElement(d, *v) for v in hermite_rows(kernel))
    for b in (b1, b2):
        assert mul(eta.elem, b) == mul(b, xi.elem)
    A, C = b1.nr(), b2.nr()
    form = BinaryQF(A, (b1 + b2).nr() - A - C, C)
    if form.disc >= 0:
        raise DegenerateIntertwiner(f"norm form {form} on the intertwiner is not definite")
    return IntertwinerLattice(xi, eta, (b1, b2), form)


def verify_witness(xi: Order3Element, eta: Order3Element, w: ConjugacyWitness) -> bool:
    a = w.alpha
    return a.d == xi.d and a.is_unit() and mul(eta.elem, a) == mul(a, xi.elem)


def conjugacy_witness(xi: Order3Element, eta: Order3Element) -> ConjugacyWitness | None:
    """A unit alpha with eta = alpha xi alpha^-1, or None when none exists."""
    if xi.invariants != eta.invariants:
        return None
    lat = intertwiner(xi, eta)
    rep = represent_unit(lat.form)
    if rep is None:
        return None
    k, l, _ = rep
    b1, b2 = lat.basis
    w = ConjugacyWitness(b1.scale(k) + b2.scale(l))
    if not verify_witness(xi, eta, w):
        raise ArithmeticError(f"witness {w.alpha} failed re-verification")
    return w


# -- construction -----------------------------------------------------------------


def _check_pair(d: int, d_prime: int, d_dprime: int) -> CaseTag:
    if d_prime < 1 or d_dprime < 1 or gcd(d_prime, d_dprime) != 1:
        raise ValueError(f"({d_prime}, {d_dprime}) is not a coprime pair")
    if d_prime * d_dprime == d:
        return CaseTag.FULL
    if 3 * d_prime * d_dprime == d:
        return CaseTag.THIRD
    raise ValueError(f"{d_prime} * {d_dprime} is neither {d} nor {d}/3")


def _from_cert_values(d: int, x1: int, y: EisensteinInt) -> Order3Element:
    return make(d, x1, y.a, y.b)


def construct_with_invariants(
    d: int,
    d_prime: int,
    d_dprime: int,
    bound: int = DEFAULT_BOUND,
    sieve: LoeschianSieve | None = None,
) -> Order3Element:
    """An order-3 element with invariant pair (d', d'') built from a Bezout certificate.

    Raises SearchExhausted when no certificate is found below ``bound`` and
    NotRealizable for third-stratum pairs with d'd'' = 1 (mod 3).
    """
    tag = _check_pair(d, d_prime, d_dprime)
    if tag is CaseTag.THIRD and d_prime * d_dprime % 3 == 1:
        raise NotRealizable(f"no order-3 element of O({d}) has invariants ({d_prime}, {d_dprime})")
    mode = Mode.ANY if tag is CaseTag.FULL else Mode.NO_THREE
    c = solve(d_prime, d_dprime, mode, bound, sieve).oriented()
    xy = multiply(c.x, c.y)
    y = multiply(THETA, xy) if tag is CaseTag.FULL else xy
    if c.epsilon == -1:
        # d'u + 1 = d''v
        xi = _from_cert_values(d, d_prime * c.u, y)
    else:
        # d''v + 1 = d'u gives the swapped pair; squaring swaps it back
        xi = _from_cert_values(d, d_dprime * c.v, y)
        if xi.invariants != (d_prime, d_dprime):
            xi = square(xi)
    assert xi.invariants == (d_prime, d_dprime), xi
    return xi


def transport(
    xi: Order3Element,
    d_prime: int,
    d_dprime: int,
    bound: int = DEFAULT_BOUND,
    sieve: LoeschianSieve | None = None,
) -> Order3Element:
    """Move a third-stratum xi to the pair (d', d'') by Atkin-Lehner conjugation."""
    d = xi.d
    if xi.case_tag is not CaseTag.THIRD or _check_pair(d, d_prime, d_dprime) is not CaseTag.THIRD:
        raise ValueError("transport works inside the third stratum")
    if xi.invariants == (d_prime, d_dprime):
        return xi
    # first reach (d/3, 1)
    if (xi.x1 + 1) % 3 == 0:
        xi = square(xi)
    if xi.invariants != (d // 3, 1):
        w = build_atkin_lehner(d, xi.d_dprime_inv, bound, sieve)
        xi = from_element(al_conjugate(w, xi.elem))
    assert xi.invariants == (d // 3, 1), xi
    if (d_prime, d_dprime) == (d // 3, 1):
        return xi
    # then (d', d'') with 3 not dividing d'; square afterwards if needed
    flip = d_prime % 3 == 0
    a, b = (d_dprime, d_prime) if flip else (d_prime, d_dprime)
    if (a, b) != (d // 3, 1):
        w = build_atkin_lehner(d, 3 * b, bound, sieve)
        xi = from_element(al_conjugate(w, xi.elem))
    if flip:
        xi = square(xi)
    assert xi.invariants == (d_prime, d_dprime), xi
    return xi
