"""Closed-form counting formulas and the explicit constant pipeline.

Everything here is exact big-integer arithmetic; no floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import StructureError


def lb_formula(n):
    """sum_{k=0}^{floor(n/2)} C(n,2k) k! - the matching-family lower bound."""
    if n < 0:
        raise StructureError("n must be >= 0")
    return sum(comb(n, 2 * k) * factorial(k) for k in range(n // 2 + 1))


def catalan(k):
    if k < 0:
        raise StructureError("k must be >= 0")
    return comb(2 * k, k) // (k + 1)


def telephone(n):
    """Involution numbers T(n) = T(n-1) + (n-1) T(n-2); partial matchings on [n]."""
    if n < 0:
        raise StructureError("n must be >= 0")
    a, b = 1, 1  # T(0), T(1)
    if n == 0:
        return a
    for i in range(2, n + 1):
        a, b = b, b + (i - 1) * a
    return b


def double_factorial_odd(k):
    """(2k-1)!! - perfect matchings on [2k]."""
    out = 1
    for i in range(1, 2 * k, 2):
        out *= i
    return out


def g_d(d, x):
    """g_D(x) = sum_{i=0}^{D-1} (i+1) C(x,i); the largest drop of the
    weight when a vertex of 2-degree x leaves a hypergraph with edges of
    size <= D.  For x > 3D the value is checked against the strict bound
    2D C(x, D-1)."""
    if d < 1:
        raise StructureError("D must be >= 1")
    if x < 0:
        raise StructureError("x must be >= 0")
    total = sum((i + 1) * comb(x, i) for i in range(d))
    if x > 3 * d and not total < 2 * d * comb(x, d - 1):
        raise ArithmeticError(f"g_D bound fails at D={d}, x={x}")
    return total


def c_bound(k):
    """Upper bound 2 k^4 C(k^2, k) for the single-permutation-matrix constant."""
    if k < 1:
        raise StructureError("k must be >= 1")
    return 2 * k**4 * comb(k * k, k)


def c_one(k):
    """C_1(k) = 2 C_bound(k+1) + 1, the two-ones-per-row constant."""
    return 2 * c_bound(k + 1) + 1


@dataclass(frozen=True)
class ConstantsRecord:
    k: int
    C_bound: int
    C_1: int
    c_k: int
    threshold_2_pow: int


@lru_cache(maxsize=None)
def constants(k):
    """The full constant pipeline at k, with the 2^{8k^3} threshold check."""
    if k < 1:
        raise StructureError("k must be >= 1")
    cb = c_bound(k)
    c1 = c_one(k)
    ck = 32 * k**4 * comb(16 * k**6 * c1, 4 * k**3)
    threshold = 2 ** (8 * k**3)
    if not ck > threshold:
        raise ArithmeticError(f"c_k <= 2^(8k^3) at k={k}")
    return ConstantsRecord(k=k, C_bound=cb, C_1=c1, c_k=ck, threshold_2_pow=threshold)


def f_recurrence_bound(n, k):
    """Iterate the extremal-ones recurrence with t = 2k^2 and D = (2k-1)t
    down to the distinct-rows base case f(n,k) = n 2^n for n <= 8k^3;
    checks the result against c_k * n."""
    if n < 1 or k < 1:
        raise StructureError("n and k must be >= 1")
    t = 2 * k * k
    d = (2 * k - 1) * t
    c1 = c_one(k)
    tail = comb(t, 2 * k) * (k - 1) + g_d(d, 2 * comb(d, 2) * c1)

    @lru_cache(maxsize=None)
    def f(m):
        if m <= 8 * k**3:
            return m * 2**m
        return (2 * k - 1) * k * f((m + t - 1) // t) + tail * m

    out = f(n)
    if not out < constants(k).c_k * n:
        raise ArithmeticError(f"recurrence exceeds c_k n at n={n}, k={k}")
    return out
