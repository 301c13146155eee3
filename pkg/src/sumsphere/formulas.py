"""Closed formulas and bound evaluators.

Exact integer formulas for the extremal sizes that admit them, Delannoy
numbers, the Delsarte-style binomial bound, harmonic space dimensions, and
double-precision evaluators for the published asymptotic bounds.  The bound
evaluators make no asymptotic claim; they only evaluate expressions.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, sqrt

from .groups import GroupSpec, self_inverse_count

__all__ = [
    "tau_closed",
    "tau3_cyclic",
    "phi_closed",
    "delannoy",
    "delannoy_table",
    "delsarte_bound",
    "harmonic_dimension",
    "two_distance_bounds",
    "tau_asymptotic_bounds",
    "phi2_asymptotic_bounds",
    "design3_nonexistence_interval",
    "design3_excluded_sizes",
]


def tau_closed(G: GroupSpec, t: int) -> int:
    """Largest t-independent set size for t = 1 or 2.

    t=1: everything but the identity.  t=2: one element from each inverse
    pair {g, -g} with g not self-inverse, hence (|G| - |L|)/2 where L is the
    set of solutions of 2g = 0, identity included.
    """
    if t == 1:
        return G.order - 1
    if t == 2:
        diff = G.order - self_inverse_count(G)
        assert diff % 2 == 0
        return diff // 2
    raise ValueError("closed form available only for t = 1 or 2")


def tau3_cyclic(n: int) -> int:
    """Largest 3-independent set size in Z_n, by the three-case formula.

    Even n: floor(n/4).  Odd n with a prime divisor congruent to 5 mod 6:
    (1 + 1/p) * n/6 where p is the smallest such divisor.  Otherwise
    floor(n/6).
    """
    if n < 2:
        raise ValueError("group order must be at least 2")
    if n % 2 == 0:
        return n // 4
    fives = [p for p in _prime_divisors(n) if p % 6 == 5]
    if fives:
        p = min(fives)
        value = Fraction(n * (p + 1), 6 * p)
        assert value.denominator == 1, "p | n and 6 | p+1 make this an integer"
        return int(value)
    return n // 6


def _prime_divisors(n: int) -> list[int]:
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


def phi_closed(G: GroupSpec) -> int:
    """Smallest 1-spanning set size: (|G| + |L| - 2)/2, empty set for Z_1."""
    total = G.order + self_inverse_count(G) - 2
    assert total % 2 == 0
    return total // 2


def delannoy(m: int, s: int) -> int:
    """Number of integer vectors in Z^m with 1-norm at most s."""
    if m < 0 or s < 0:
        raise ValueError("both arguments must be nonnegative")
    return sum(comb(s, i) * comb(m, i) * 2**i for i in range(min(m, s) + 1))


def delannoy_table(max_m: int, max_s: int) -> list[list[int]]:
    """Table a[m][s] for 0 <= m <= max_m, 0 <= s <= max_s, by the recursion
    a(m,s) = a(m-1,s) + a(m-1,s-1) + a(m,s-1) with unit boundary rows."""
    table = [[1] * (max_s + 1) for _ in range(max_m + 1)]
    for m in range(1, max_m + 1):
        for s in range(1, max_s + 1):
            table[m][s] = table[m - 1][s] + table[m - 1][s - 1] + table[m][s - 1]
    return table


def delsarte_bound(d: int, k: int) -> int:
    """C(d + floor(k/2), d) + C(d + floor((k-1)/2), d).

    Lower bound on the size of a k-design on S^d and, with k = 2s, upper
    bound on the size of an s-distance set.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    return comb(d + k // 2, d) + comb(d + (k - 1) // 2, d)


def harmonic_dimension(d: int, k: int) -> int:
    """Dimension of the degree-k homogeneous harmonic polynomials on S^d."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    low = comb(d + k - 2, d) if d + k - 2 >= 0 else 0
    return comb(d + k, d) - low


def two_distance_bounds(d: int) -> tuple[int, int]:
    """The pair ((d^2+5d+4)/2, (d^2+3d+2)/2) bracketing two-distance sizes.

    Returned as named numbers without asserting an order between them; the
    first is the Delsarte-side cap, the second the midpoint-of-simplex-edges
    construction size.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    return ((d * d + 5 * d + 4) // 2, (d * d + 3 * d + 2) // 2)


def tau_asymptotic_bounds(n: int, t: int, eps: float = 0.0) -> tuple[float, float]:
    """Evaluate the large-n envelope for the largest t-independent set size."""
    if t < 2 or n < 2:
        raise ValueError("need t >= 2 and n >= 2")
    exponent = 1.0 / (t // 2)
    lower = (1.0 / (t * ((t + 1) // 2)) - eps) * n**exponent
    upper = (factorial(t // 2) / 2.0) * n**exponent
    return (lower, upper)


def phi2_asymptotic_bounds(n: int, eps: float = 0.0, delta: float = 0.0) -> tuple[float, float]:
    """Evaluate the sqrt-n envelope for the smallest 2-spanning set size."""
    if n < 1:
        raise ValueError("need n >= 1")
    root = sqrt(n)
    return ((1.0 / sqrt(2.0) - eps) * root, (1.0 + delta) * root)


def design3_nonexistence_interval(d: int) -> tuple[float, float]:
    """Open interval of odd sizes N admitting no 3-design on S^d."""
    if d < 1:
        raise ValueError("need d >= 1")
    lo = 2.0 * (d + 1)
    hi = (1.0 + 2.0 ** (1.0 / 3.0)) * (d + 1) + 0.300176
    return (lo, hi)


def design3_excluded_sizes(d: int, n_cap: int | None = None) -> list[int]:
    """Odd N strictly inside the nonexistence interval, optionally capped."""
    lo, hi = design3_nonexistence_interval(d)
    first = int(lo) + 1
    if first % 2 == 0:
        first += 1
    out = []
    n = first
    while n < hi and (n_cap is None or n < n_cap):
        out.append(n)
        n += 2
    return out
