"""Threshold predicates for higher homotopy commutativity of Lie groups.

Each predicate returns a :class:`Verdict` whose answer is YES, NO or UNKNOWN.
UNKNOWN means none of the known criteria decides the question; the oracle
never extrapolates past them.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .exactnum import is_prime


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    cited: Optional[str] = None

    def __post_init__(self):
        if self.answer is not Answer.UNKNOWN and not self.cited:
            raise ValueError("a YES/NO verdict needs a citation")

    def to_json(self) -> dict:
        return {"answer": self.answer.value, "cited": self.cited}


UNKNOWN = Verdict(Answer.UNKNOWN)


@dataclass(frozen=True)
class LieType:
    name: str
    type: Tuple[int, ...]
    dimension: int

    @property
    def top(self) -> int:
        """The largest entry n_l."""
        return self.type[-1]

    def check(self) -> None:
        t = self.type
        if list(t) != sorted(t) or t[0] != 2 or any(n < 1 for n in t):
            raise ValueError(f"malformed type for {self.name}: {t}")
        if sum(2 * n - 1 for n in t) != self.dimension:
            raise ValueError(f"type of {self.name} does not add up to dimension {self.dimension}")


_EXCEPTIONAL: Dict[str, Tuple[Tuple[int, ...], int]] = {
    "G2": ((2, 6), 14),
    "F4": ((2, 6, 8, 12), 52),
    "E6": ((2, 5, 6, 8, 9, 12), 78),
    "E7": ((2, 6, 8, 10, 12, 14, 18), 133),
    "E8": ((2, 8, 12, 14, 18, 20, 24, 30), 248),
}

_CLASSICAL = re.compile(r"^(SU|Sp|Spin)\((\d+)\)$")


def canonical_name(name: str) -> str:
    s = name.strip().replace(" ", "")
    m = _CLASSICAL.match(s)
    if m:
        return f"{m.group(1)}({int(m.group(2))})"
    up = s.upper().replace("_", "")
    if up in _EXCEPTIONAL:
        return up
    raise ValueError(f"unknown Lie group {name!r}")


def group_type(name: str) -> LieType:
    name = canonical_name(name)
    if name in _EXCEPTIONAL:
        t, dim = _EXCEPTIONAL[name]
        lt = LieType(name, t, dim)
    else:
        family, n = _CLASSICAL.match(name).groups()
        n = int(n)
        if family == "SU":
            if n < 2:
                raise ValueError("SU(n) needs n >= 2")
            lt = LieType(name, tuple(range(2, n + 1)), n * n - 1)
        elif family == "Sp":
            if n < 1:
                raise ValueError("Sp(n) needs n >= 1")
            lt = LieType(name, tuple(range(2, 2 * n + 1, 2)), n * (2 * n + 1))
        else:
            if n < 3 or n == 4:
                raise ValueError(f"Spin({n}) is not a simple group")
            if n % 2:
                r = (n - 1) // 2
                t = tuple(range(2, 2 * r + 1, 2))
            else:
                r = n // 2
                t = tuple(sorted(tuple(range(2, 2 * r - 1, 2)) + (r,)))
            lt = LieType(name, t, n * (n - 1) // 2)
    lt.check()
    return lt


#: groups covered by the table, for integrity checks
TABLE_SAMPLE = (
    [f"SU({n})" for n in range(2, 12)]
    + [f"Sp({n})" for n in range(1, 10)]
    + [f"Spin({n})" for n in range(3, 20) if n != 4]
    + list(_EXCEPTIONAL)
)


def _same_group(lt: LieType, name: str) -> bool:
    aliases = {"Sp(2)": {"Sp(2)", "Spin(5)"}, "G2": {"G2"}}
    return lt.name in aliases[name]


def _check_args(p: int, *positives: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    for k in positives:
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"expected a positive integer, got {k!r}")


def sugawara_local(group: str, p: int, k: int) -> Verdict:
    _check_args(p, k)
    lt = group_type(group)
    if p > k * lt.top:
        return Verdict(Answer.YES, "Thm A")
    return UNKNOWN


def williams_verdict(group: str, p: int, k: int, assume_monotone: bool = False) -> Verdict:
    """Is the p-localization a Williams C_k-space?

    ``assume_monotone`` lets the G2 result at k = 3 propagate to k = 4, i.e.
    assumes Williams C_k implies Williams C_{k-1}.
    """
    _check_args(p, k)
    if k < 2:
        raise ValueError("Williams C_k criteria need k >= 2")
    lt = group_type(group)
    bound = k * lt.top
    if p > bound:
        return Verdict(Answer.YES, "Thm 1.1(1)")
    if p == bound:
        return UNKNOWN
    if _same_group(lt, "Sp(2)") and p == 3 and k == 2:
        return Verdict(Answer.YES, "Thm 1.1 exception: homotopy commutative")
    if _same_group(lt, "G2") and p == 5 and k <= 4:
        if k == 2:
            return Verdict(Answer.YES, "Thm 1.1 exception: homotopy commutative")
        if k == 3:
            return Verdict(Answer.NO, "Thm D")
        if assume_monotone:
            return Verdict(Answer.NO, "Thm D + monotonicity")
        return UNKNOWN
    return Verdict(Answer.NO, "Thm 1.1(2)")


def gauge_verdict(group: str, p: int, n: int, k: int) -> Verdict:
    """Gauge group of the bundle over the n-th projective space B_nG."""
    _check_args(p, n, k)
    top = group_type(group).top
    if p > (n + k) * top:
        return Verdict(Answer.YES, "Thm B(1)")
    if (n + 1) * top < p < (n + k) * top:
        return Verdict(Answer.NO, "Thm B(2)")
    return UNKNOWN


def gauge_catB(group: str, p: int, cat_b: int, k: int) -> Verdict:
    """Gauge group of any bundle over a finite complex of category ``cat_b``."""
    _check_args(p, cat_b, k)
    if p > (cat_b + k) * group_type(group).top:
        return Verdict(Answer.YES, "Thm B'")
    return UNKNOWN


def gauge_sphere(group: str, p: int, i: int, k: int) -> Verdict:
    """Gauge group of any bundle over S^{2 n_i} (``i`` is 1-based)."""
    _check_args(p, k)
    lt = group_type(group)
    if not isinstance(i, int) or not 1 <= i <= len(lt.type):
        raise ValueError(f"sphere index {i!r} out of range for type {lt.type}")
    if p >= k * lt.top + lt.type[i - 1]:
        return Verdict(Answer.YES, "Thm C")
    return UNKNOWN
