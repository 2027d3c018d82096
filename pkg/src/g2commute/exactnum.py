"""Exact rationals with p-adic valuations.

The scalar type is :class:`fractions.Fraction`; it is already kept in lowest
terms with a positive denominator, so equality is structural.  This module
adds the p-local queries on top of it and the ``"num/den"`` text form used in
every JSON document the package reads or writes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

PRational = Fraction

#: Returned by :func:`valuation` for zero.
INFINITY = math.inf

RationalLike = Union[Fraction, int, str]


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def _int_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def valuation(q: RationalLike, p: int) -> Union[int, float]:
    """Exponent of ``p`` in ``q``; ``INFINITY`` when ``q`` is zero."""
    _check_prime(p)
    q = as_rational(q)
    if q == 0:
        return INFINITY
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


def in_Zp(q: RationalLike, p: int) -> bool:
    """True iff ``q`` lies in the localization Z_(p)."""
    _check_prime(p)
    return as_rational(q).denominator % p != 0


def is_unit(q: RationalLike, p: int) -> bool:
    """True iff ``q`` is invertible in Z_(p)."""
    return valuation(q, p) == 0


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: RationalLike) -> str:
    """``"num/den"``, with the denominator omitted when it is 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"{s!r}: only exact num/den rationals are accepted")
    num, _, den = s.partition("/")
    q = Fraction(int(num), int(den)) if den else Fraction(int(num))
    return q


def factorial_form(q: RationalLike, max_n: int = 20, max_coeff: int = 12) -> str:
    """Render ``q`` as ``c*N!/5!^j`` when such a short form exists.

    Used for side-by-side comparison of large scalars such as 9!/5!; falls back
    to :func:`format_rational`.
    """
    q = as_rational(q)
    if q == 0 or abs(q) < 100:
        return format_rational(q)
    best = None
    for n in range(5, max_n + 1):
        fn = math.factorial(n)
        for j in range(4):
            c = q * 120**j / fn
            if c.denominator == 1 and 0 < abs(c.numerator) <= max_coeff:
                key = (abs(c.numerator), j, n)
                if best is None or key < best[0]:
                    best = (key, c, n, j)
    if best is None:
        return format_rational(q)
    _, c, n, j = best
    head = "" if c == 1 else "-" if c == -1 else f"{c.numerator}*"
    tail = "" if j == 0 else "/5!" if j == 1 else f"/(5!)^{j}"
    return f"{head}{n}!{tail}"
