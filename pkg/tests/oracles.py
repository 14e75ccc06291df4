"""Slow, independent reference implementations used to check the package."""

from math import isqrt


def loeschian_set(limit: int) -> set[int]:
    out = set()
    for a in range(isqrt(4 * limit // 3) + 2):
        for b in range(a + 1):
            n = a * a - a * b + b * b
            if n <= limit:
                out.add(n)
    return out


def norm_solutions(n: int) -> list[tuple[int, int]]:
    """Every (a, b) in Z^2 with a^2 - ab + b^2 = n."""
    out = []
    r = isqrt(4 * n // 3) + 1
    for a in range(-r, r + 1):
        disc = 4 * n - 3 * a * a  # (2b - a)^2 = disc
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for t in {s, -s}:
            if (a + t) % 2 == 0:
                out.append((a, (a + t) // 2))
    return sorted(out)


def trial_factor(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def class_count_formula(d: int) -> int:
    """C_d, with the third stratum assumed realized when 9 | d."""
    f = trial_factor(d)
    r, k = len(f), f.get(3, 0)
    if k == 0:
        return 2**r
    if k == 1:
        return 2**r if (d // 3) % 3 == 1 else 2 ** (r + 1)
    return 3 * 2**r


def pell_brute(n: int, ymax: int = 10**4):
    for y in range(1, ymax + 1):
        x2 = 1 + n * y * y
        x = isqrt(x2)
        if x * x == x2:
            return x, y
    return None


# Z[w] as pairs, and elements of H(d) as 2x2 matrices over Z[w]:
# x + y phi  ->  [[x, y], [d conj(y), conj(x)]]


def zw_mul(x, y):
    bd = x[1] * y[1]
    return (x[0] * y[0] - bd, x[0] * y[1] + x[1] * y[0] - bd)


def zw_add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def zw_conj(x):
    return (x[0] - x[1], -x[1])


def as_matrix(d: int, coords):
    x1, x2, x3, x4 = coords
    x, y = (x1, x2), (x3, x4)
    yb = zw_conj(y)
    return ((x, y), ((d * yb[0], d * yb[1]), zw_conj(x)))


def mat_mul(m, n):
    return tuple(
        tuple(zw_add(zw_mul(m[i][0], n[0][j]), zw_mul(m[i][1], n[1][j])) for j in range(2))
        for i in range(2)
    )


def mat_det(m):
    p, q = zw_mul(m[0][0], m[1][1]), zw_mul(m[0][1], m[1][0])
    return (p[0] - q[0], p[1] - q[1])
