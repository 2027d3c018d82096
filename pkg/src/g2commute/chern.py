"""Power sums, Newton identities and the idempotent E on H*(BU).

``E`` is the self map of BU that kills the Chern character in degrees
``2m`` with ``m`` not congruent to 2 mod 4 and fixes it otherwise.  Its effect
on Chern classes follows from the Newton identities: applying ``E*`` to

    s_m - c_1 s_{m-1} + ... + (-1)^{m-1} c_{m-1} s_1 + (-1)^m m c_m = 0

and using ``E* s_j = s_j`` (j = 2 mod 4), ``E* s_j = 0`` otherwise, gives

    E* c_m = -(1/m) * sum_{j = 2 mod 4, j <= m} (E* c_{m-j}) s_j .
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .gradedring import (
    GradedPoly,
    MonomialFilter,
    RingMap,
    RingSpec,
    apply_map,
    reduce_mod,
)

TRUNCATION = 40

BU = RingSpec("H*(BU)", tuple((f"c{i}", 2 * i) for i in range(1, TRUNCATION // 2 + 1)), TRUNCATION)

MAX_INDEX = TRUNCATION // 2

LEMMA_EC_INDICES = (2, 4, 6, 8, 10, 12, 14, 16, 18)


def partitions(n: int, largest: int = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _check_index(i: int, low: int = 1) -> None:
    if not isinstance(i, int) or i < low:
        raise ValueError(f"index must be an integer >= {low}, got {i!r}")
    if i > MAX_INDEX:
        raise ValueError(f"index {i} exceeds the truncation of {BU.name} (max {MAX_INDEX})")


@lru_cache(maxsize=None)
def girard_power_sum(i: int) -> GradedPoly:
    """The power sum ``s_i`` in Chern classes, by Girard's formula.

    Sum over ``r_1 + 2 r_2 + ... + i r_i = i`` of
    ``(-1)^(i + sum r) * i * (sum r - 1)! / prod(r_k!) * c_1^r_1 ... c_i^r_i``.
    """
    _check_index(i)
    terms = {}
    for lam in partitions(i):
        mult: Dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        total = len(lam)
        coeff = Fraction(i * math.factorial(total - 1))
        for r in mult.values():
            coeff /= math.factorial(r)
        if (i + total) % 2:
            coeff = -coeff
        mono = tuple(sorted((part - 1, r) for part, r in mult.items()))
        terms[mono] = coeff
    return GradedPoly(BU, terms)


def c(i: int) -> GradedPoly:
    if i == 0:
        return BU.one()
    return BU.var(f"c{i}")


def newton_residual(n: int) -> GradedPoly:
    """``s_n - c_1 s_{n-1} + ... + (-1)^{n-1} c_{n-1} s_1 + (-1)^n n c_n``; identically zero."""
    _check_index(n)
    acc = girard_power_sum(n)
    for k in range(1, n):
        term = c(k) * girard_power_sum(n - k)
        acc = acc - term if k % 2 else acc + term
    last = c(n).scale(n)
    return acc + last if n % 2 == 0 else acc - last


_lock = threading.Lock()
_e_cache: Dict[int, GradedPoly] = {}


def e_pullback_c(n: int) -> GradedPoly:
    """``E* c_n`` as a polynomial in ``c_1, ..., c_n``."""
    _check_index(n, low=0)
    hit = _e_cache.get(n)
    if hit is not None:
        return hit
    if n == 0:
        value = BU.one()
    else:
        acc = BU.zero()
        for j in range(2, n + 1, 4):
            acc = acc + e_pullback_c(n - j) * girard_power_sum(j)
        value = acc.scale(Fraction(-1, n))
    with _lock:
        return _e_cache.setdefault(n, value)


def ec_congruence_filter() -> MonomialFilter:
    """Monomials containing ``c_k`` for odd ``k`` or ``k >= 7``, or
    ``c_2^p c_4^q c_6^r`` with ``p + 2q + r >= 4``."""

    def pred(e: Dict[str, int]) -> bool:
        for name in e:
            k = int(name[1:])
            if k % 2 or k >= 7:
                return True
        return e.get("c2", 0) + 2 * e.get("c4", 0) + e.get("c6", 0) >= 4

    return MonomialFilter(pred, "(c_odd, c_k>=7) + ((c2,c6)^2 + (c4))^2")


def lemma_ec_table() -> List[Tuple[int, GradedPoly]]:
    """``E* c_n`` modulo :func:`ec_congruence_filter` for ``n = 2, 4, ..., 18``."""
    filt = ec_congruence_filter()
    return [(n, reduce_mod(e_pullback_c(n), filt)) for n in LEMMA_EC_INDICES]


def indecomposable_coefficient(n: int) -> Fraction:
    """Coefficient of the linear monomial ``c_n`` in ``E* c_n``."""
    return e_pullback_c(n).coeff({f"c{n}": 1})


def e_map(max_index: int = MAX_INDEX) -> RingMap:
    """``E*`` as an endomorphism of H*(BU); generators above ``max_index`` go to 0."""
    images = {f"c{i}": e_pullback_c(i) for i in range(1, max_index + 1)}
    return RingMap(BU, BU, images)


def e_idempotence_check(max_degree: int) -> bool:
    """True iff ``E*(E* c_n) == E* c_n`` for every ``2n <= max_degree``."""
    if max_degree > BU.truncation:
        raise ValueError(f"degree bound {max_degree} exceeds truncation {BU.truncation}")
    top = max_degree // 2
    f = e_map(top)
    return all(apply_map(f, e_pullback_c(n)) == e_pullback_c(n) for n in range(1, top + 1))


def power_sum_on_e(m: int) -> GradedPoly:
    """``s_m`` evaluated at ``c_i -> E* c_i``, i.e. ``E* s_m`` computed from Girard's formula."""
    return apply_map(e_map(m), girard_power_sum(m))


def characterization_holds(m: int) -> bool:
    """``E* s_m`` is ``s_m`` for ``m = 2 mod 4`` and ``0`` otherwise."""
    expected = girard_power_sum(m) if m % 4 == 2 else BU.zero()
    return power_sum_on_e(m) == expected
