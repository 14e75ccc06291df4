"""Counting conjugacy classes of order-3 elements and the conjecture harnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .arith import factorize, hall_divisors, is_square
from .bezout import DEFAULT_BOUND, BezoutCertificate, Mode, SearchExhausted, solve, verify
from .eisenstein import EisensteinInt, LoeschianSieve, default_sieve, is_loeschian
from .order3 import Order3Element, construct_with_invariants, make, star, transport
from .qforms import PellSolution, pell_min_solution


class Case(str, Enum):
    A = "A"  # 3 does not divide d
    B = "B"  # 9 divides d
    C_I = "C_i"  # 3 || d, d/3 = 1 (mod 3)
    C_II = "C_ii"  # 3 || d, d/3 = 2 (mod 3)


class ThirdStatus(str, Enum):
    REALIZED = "Realized"
    NOT_REALIZED = "NotRealized"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ThirdCaseStatus:
    kind: ThirdStatus
    witness: Order3Element | None = None
    bound: int | None = None


@dataclass(frozen=True)
class Representative:
    xi: Order3Element
    is_star: bool

    @property
    def key(self) -> tuple[int, int, bool]:
        return self.xi.d_prime_inv, self.xi.d_dprime_inv, self.is_star


@dataclass(frozen=True)
class ClassReport:
    d: int
    r: int
    case: Case
    C_d: int | None  # None when the third stratum is undecided
    C_d_subgroups: int | None
    representatives: tuple[Representative, ...]
    third_case_status: ThirdCaseStatus


def classify_case(d: int, factors: dict[int, int] | None = None) -> Case:
    k = (factors or factorize(d)).get(3, 0)
    if k == 0:
        return Case.A
    if k >= 2:
        return Case.B
    return Case.C_I if (d // 3) % 3 == 1 else Case.C_II


def formula_count(case: Case, r: int, third_realized: bool | None = None) -> int | None:
    if case in (Case.A, Case.C_I):
        return 2**r
    if case is Case.C_II:
        return 2 ** (r + 1)
    if third_realized is None:
        return None
    return 3 * 2**r if third_realized else 2**r


def _third_stratum(
    d: int, bound: int, sieve: LoeschianSieve | None
) -> list[Order3Element] | None:
    """One element per Hall pair of d/3, or None if no pair could be realized."""
    dt = d // 3
    pairs = [(h, dt // h) for h in hall_divisors(factorize(dt))]
    found: dict[tuple[int, int], Order3Element] = {}
    for p in pairs:
        try:
            found[p] = construct_with_invariants(d, *p, bound, sieve)
        except SearchExhausted:
            continue
    if not found:
        seed = _pell_element(d)
        if seed is None:
            return None
        found[seed.invariants] = seed
    seed = next(iter(found.values()))
    return [found.get(p) or transport(seed, *p, bound, sieve) for p in pairs]


def count_classes(d: int, search_bound: int = DEFAULT_BOUND, sieve: LoeschianSieve | None = None) -> ClassReport:
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    factors = factorize(d)
    r = len(factors)
    case = classify_case(d, factors)
    reps = [Representative(construct_with_invariants(d, h, d // h, search_bound, sieve), False)
            for h in hall_divisors(factors)]
    if case in (Case.A, Case.C_I):
        status = ThirdCaseStatus(ThirdStatus.NOT_REALIZED)
    else:
        third = _third_stratum(d, search_bound, sieve)
        if third is None:
            if case is Case.C_II:
                raise ArithmeticError(f"no third-stratum certificate for d={d} below {search_bound}")
            status = ThirdCaseStatus(ThirdStatus.UNKNOWN, bound=search_bound)
        else:
            status = ThirdCaseStatus(ThirdStatus.REALIZED, witness=third[0])
            for xi in third:
                reps += [Representative(xi, False), Representative(star(xi), True)]
    realized = {ThirdStatus.REALIZED: True, ThirdStatus.NOT_REALIZED: False}.get(status.kind)
    c_d = formula_count(case, r, realized)
    if c_d is not None and len(reps) != c_d:
        raise ArithmeticError(f"d={d}: built {len(reps)} representatives, formula gives {c_d}")
    subgroups = None if c_d is None else (1 if d == 1 else c_d // 2)
    reps.sort(key=lambda rep: rep.key)
    return ClassReport(d, r, case, c_d, subgroups, tuple(reps), status)


# -- conjecture harnesses -------------------------------------------------------


class Method(str, Enum):
    DIRECT_SEARCH = "DirectSearch"
    PELL = "Pell"
    COROLLARY = "Corollary"


@dataclass(frozen=True)
class ConjectureStatus:
    d_star: int
    verified: bool
    witness: tuple[int, int] | None = None
    method: Method = Method.DIRECT_SEARCH
    bound: int | None = None


def _loeschian_v(bound: int, sieve: LoeschianSieve):
    sieve.ensure(bound)
    for v in range(1, bound + 1):
        if v % 3 and v in sieve:
            yield v


def verify_conjecture2(
    d_star: int, bound: int = DEFAULT_BOUND, sieve: LoeschianSieve | None = None
) -> ConjectureStatus:
    """Search u - 3 d* v = 1 with u, v Loeschian and 3 not dividing uv, v ascending."""
    if d_star < 1 or d_star % 3 != 1:
        raise ValueError(f"d* must be a positive integer = 1 (mod 3), got {d_star}")
    sieve = sieve or default_sieve()
    m = 3 * d_star
    for v in _loeschian_v(bound, sieve):
        u = m * v + 1  # = 1 (mod 3)
        if u in sieve:
            return ConjectureStatus(d_star, True, (u, v), Method.DIRECT_SEARCH)
    return ConjectureStatus(d_star, False, None, Method.DIRECT_SEARCH, bound)


def search_conjecture2_fast(d_star: int, vs: list[int], sieve_flags, sieve_limit: int) -> tuple[int, int] | None:
    """Hot loop of the sweep: candidate v's precomputed, u checked by table or factoring."""
    m = 3 * d_star
    for v in vs:
        u = m * v + 1
        if (sieve_flags[u] if u <= sieve_limit else is_loeschian(u)):
            return u, v
    return None


@dataclass(frozen=True)
class PellCriterion:
    d: int
    holds: bool  # False means the criterion is inapplicable, not that the conjecture fails
    solution: PellSolution | None = None

    def witness(self) -> tuple[int, int] | None:
        """(u, v) = (x0^2, y0^2), so u - (d/3) v = 1 with 3 not dividing uv."""
        if not self.holds:
            return None
        return self.solution.x0**2, self.solution.y0**2


def pell_criterion(d: int) -> PellCriterion:
    if d < 9 or d % 9:
        raise ValueError(f"the Pell criterion needs 9 | d, got {d}")
    dt = d // 3
    if is_square(dt):
        return PellCriterion(d, False)
    sol = pell_min_solution(dt)
    return PellCriterion(d, sol.y0 % 3 != 0, sol)


def _pell_element(d: int) -> Order3Element | None:
    if d % 9:
        return None
    pc = pell_criterion(d)
    if not pc.holds:
        return None
    x0, y0 = pc.solution.x0, pc.solution.y0
    # x0^2 - (d/3) y0^2 = 1: x1 = (d/3) y0^2, x1 + 1 = x0^2, N(y) = x0^2 y0^2
    return make(d, (d // 3) * y0 * y0, x0 * y0, 0)


class GStatus(str, Enum):
    IN_G = "InG"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GMembership:
    d: int
    status: GStatus
    route: str | None = None
    witness: object = None
    bound: int | None = None


def _three_split(d: int) -> tuple[int, int]:
    k = 0
    while d % 3 == 0:
        d //= 3
        k += 1
    return k, d


def g_membership(d: int, bound: int = DEFAULT_BOUND, sieve: LoeschianSieve | None = None) -> GMembership:
    """Decide whether d lies in G, trying cheap sufficient conditions first."""
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    if d % 9:
        return GMembership(d, GStatus.IN_G, "not-divisible-by-9")
    if is_loeschian(d):
        return GMembership(d, GStatus.IN_G, "loeschian")
    _, d_star = _three_split(d)
    if d_star % 3 == 2:
        return GMembership(d, GStatus.IN_G, "dstar-2-mod-3")
    pc = pell_criterion(d)
    if pc.holds:
        return GMembership(d, GStatus.IN_G, "pell", pc.witness())
    if (d // 3) % 9 == 0 and g_membership(d // 3, bound, sieve).status is GStatus.IN_G:
        return GMembership(d, GStatus.IN_G, "times-3", d // 3)
    dt = d // 3
    for h in hall_divisors(factorize(dt)):
        try:
            cert = solve(h, dt // h, Mode.NO_THREE, bound, sieve)
        except SearchExhausted:
            continue
        return GMembership(d, GStatus.IN_G, "bezout-search", cert)
    return GMembership(d, GStatus.UNKNOWN, bound=bound)


# -- serialization ---------------------------------------------------------------


def _jsonable(x):
    """Integers become decimal strings so that 64-bit consumers cannot truncate them."""
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, Order3Element):
        return {
            "coords": _jsonable(x.coords),
            "d_prime_inv": str(x.d_prime_inv),
            "d_dprime_inv": str(x.d_dprime_inv),
            "case_tag": x.case_tag.value,
        }
    if isinstance(x, EisensteinInt):
        return [str(x.a), str(x.b)]
    if isinstance(x, BezoutCertificate):
        if not verify(x):
            raise ArithmeticError(f"refusing to emit unverified certificate {x}")
        return {k: _jsonable(getattr(x, k)) for k in
                ("d_prime", "d_dprime", "swapped", "epsilon", "x", "y", "u", "v")}
    if isinstance(x, Representative):
        return {"element": _jsonable(x.xi), "star": x.is_star}
    if hasattr(x, "__dataclass_fields__"):
        return {k: _jsonable(getattr(x, k)) for k in x.__dataclass_fields__}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def to_json(obj, **kw) -> str:
    return json.dumps(_jsonable(obj), **kw)


CSV_FIELDS = ("d", "r", "case", "C_d", "status")


def csv_row(report: ClassReport) -> list[str]:
    c_d = "" if report.C_d is None else str(report.C_d)
    return [str(report.d), str(report.r), report.case.value, c_d, report.third_case_status.kind.value]
