"""Exact rational arithmetic and small integer combinatorics.

Scalars throughout the package are :class:`fractions.Fraction` values; this
module adds the handful of integer helpers the rest of the code relies on.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

Rational = Fraction

__all__ = ["Rational", "binomial", "moebius", "divisors", "rational_to_str",
           "rational_from_str", "as_rational"]


def as_rational(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_str(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def binomial(n, k):
    """Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


@lru_cache(maxsize=None)
def _factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(sorted(out.items()))


def moebius(k):
    if not isinstance(k, int) or k <= 0:
        raise ValueError(f"moebius is defined for positive integers, got {k!r}")
    fac = _factor(k)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(d):
    if not isinstance(d, int) or d <= 0:
        raise ValueError(f"divisors needs a positive integer, got {d!r}")
    small, large = [], []
    i = 1
    while i * i <= d:
        if d % i == 0:
            small.append(i)
            if i * i != d:
                large.append(d // i)
        i += 1
    return small + large[::-1]


def rational_to_str(x):
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s):
    return Fraction(s.strip())
