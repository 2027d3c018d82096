"""Cohomology and K-theory of (Sigma A)^3 and the evaluation of mu*.

H*(Sigma A; Z_(5)) has basis ``1, Sx3, Sx11`` in degrees 0, 4, 12 with all
products of positive-degree classes zero.  Triple tensors are dictionaries
keyed by basis-index triples.  The tri-positive part (no factor equal to 1) is
identified with H*(Sigma^2 A^3) with coefficient +1.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from .chern import BU, e_pullback_c
from .exactnum import RationalLike, as_rational, format_rational
from .g2 import B, BG2, rho, transgression_basis
from .gradedring import GradedPoly, apply_map

BASIS = ("1", "Sx3", "Sx11")
BASIS_DEGREES = (0, 4, 12)

Triple = Tuple[int, int, int]

#: b19, b27, b35 as the sets of tri-positive basis triples they sum over
B_CLASSES: Dict[int, Tuple[Triple, ...]] = {
    19: ((2, 1, 1), (1, 2, 1), (1, 1, 2)),
    27: ((2, 2, 1), (2, 1, 2), (1, 2, 2)),
    35: ((2, 2, 2),),
}

CH_SCALINGS = {10: math.factorial(9), 14: math.factorial(13), 18: math.factorial(17)}


class SymmetryError(RuntimeError):
    """A tri-positive component is not a multiple of the expected b-class."""


@dataclass(frozen=True)
class SuspClass:
    """Element of H*(Sigma A) as coefficients on ``(1, Sx3, Sx11)``."""

    one: Fraction = Fraction(0)
    x3: Fraction = Fraction(0)
    x11: Fraction = Fraction(0)

    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (Fraction(self.one), Fraction(self.x3), Fraction(self.x11))

    def __mul__(self, other: "SuspClass") -> "SuspClass":
        a, b = self.coeffs(), other.coeffs()
        return SuspClass(a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[2] * b[0])

    def __add__(self, other: "SuspClass") -> "SuspClass":
        return SuspClass(*(x + y for x, y in zip(self.coeffs(), other.coeffs())))

    def __str__(self):
        parts = [f"{format_rational(q)}*{name}" for q, name in zip(self.coeffs(), BASIS) if q]
        return " + ".join(parts) or "0"


def _basis_mul(i: int, j: int):
    if i == 0:
        return j
    if j == 0:
        return i
    return None


class TripleTensor:
    """Element of H*(Sigma A)^{(x)3}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Triple, RationalLike] = None):
        self.coeffs: Dict[Triple, Fraction] = {}
        for k, q in (coeffs or {}).items():
            q = as_rational(q)
            if q:
                self.coeffs[tuple(k)] = q

    @classmethod
    def one(cls) -> "TripleTensor":
        return cls({(0, 0, 0): 1})

    @classmethod
    def tensor(cls, a: SuspClass, b: SuspClass, c: SuspClass) -> "TripleTensor":
        out = {}
        for i, j, k in itertools.product(range(3), repeat=3):
            q = a.coeffs()[i] * b.coeffs()[j] * c.coeffs()[k]
            if q:
                out[(i, j, k)] = q
        return cls(out)

    def __add__(self, other: "TripleTensor") -> "TripleTensor":
        out = dict(self.coeffs)
        for k, q in other.coeffs.items():
            out[k] = out.get(k, 0) + q
        return TripleTensor(out)

    def __sub__(self, other: "TripleTensor") -> "TripleTensor":
        return self + other.scale(-1)

    def scale(self, q: RationalLike) -> "TripleTensor":
        q = as_rational(q)
        return TripleTensor({k: v * q for k, v in self.coeffs.items()})

    def __mul__(self, other: "TripleTensor") -> "TripleTensor":
        out: Dict[Triple, Fraction] = {}
        for k1, q1 in self.coeffs.items():
            for k2, q2 in other.coeffs.items():
                k = tuple(_basis_mul(a, b) for a, b in zip(k1, k2))
                if None in k:
                    continue
                out[k] = out.get(k, 0) + q1 * q2
        return TripleTensor(out)

    def __pow__(self, n: int) -> "TripleTensor":
        out = TripleTensor.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleTensor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def degree_of(k: Triple) -> int:
        return sum(BASIS_DEGREES[i] for i in k)

    def degree_part(self, d: int) -> "TripleTensor":
        return TripleTensor({k: q for k, q in self.coeffs.items() if self.degree_of(k) == d})

    def tri_positive(self) -> "TripleTensor":
        return TripleTensor({k: q for k, q in self.coeffs.items() if 0 not in k})

    def permute(self, perm: Sequence[int]) -> "TripleTensor":
        """Move tensor factor ``i`` to slot ``perm[i]``."""
        out = {}
        for k, q in self.coeffs.items():
            new = [0, 0, 0]
            for i, slot in enumerate(perm):
                new[slot] = k[i]
            out[tuple(new)] = q
        return TripleTensor(out)

    def is_symmetric(self) -> bool:
        return all(self.permute(p) == self for p in itertools.permutations(range(3)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for k in sorted(self.coeffs, key=lambda k: (self.degree_of(k), tuple(-i for i in k))):
            q = self.coeffs[k]
            body = f"{format_rational(abs(q))}*" + "(x)".join(BASIS[i] for i in k)
            if out:
                out.append(f" {'-' if q < 0 else '+'} {body}")
            else:
                out.append(("-" if q < 0 else "") + body)
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"factors": [BASIS[i] for i in k], "coeff": format_rational(q)}
                for k, q in sorted(self.coeffs.items(), key=lambda kv: (self.degree_of(kv[0]), kv[0]))
            ]
        }


# -- cohomology side -----------------------------------------------------------

def suspension_restriction(y: GradedPoly) -> SuspClass:
    """H*(BG2) -> H*(Sigma A): ``y4 -> -Sx3``, ``y12 -> -Sx11``, decomposables -> 0."""
    if y.ring != BG2:
        raise ValueError("expected an element of H*(BG2)")
    out = [Fraction(0)] * 3
    for m, q in y.terms.items():
        names = y.mono_names(m)
        if not names:
            out[0] += q
        elif names == {"y4": 1}:
            out[1] -= q
        elif names == {"y12": 1}:
            out[2] -= q
    return SuspClass(*out)


def restrict_to_A(x: GradedPoly) -> SuspClass:
    """H*(BU) -> H*(Sigma A) through BG2; ``c2 -> Sx3``, ``c6 -> Sx11``."""
    if x.ring != BU:
        raise ValueError("expected an element of H*(BU)")
    return suspension_restriction(apply_map(rho, x))


def triple_cartan(n: int) -> List[Tuple[Tuple[int, int, int], Tuple[GradedPoly, GradedPoly, GradedPoly]]]:
    """Summands ``E*c_p (x) E*c_q (x) E*c_r`` over ``p + q + r = n``."""
    if n < 0 or n > 18:
        raise ValueError("triple_cartan needs 0 <= n <= 18")
    out = []
    for p in range(n, -1, -1):
        for q in range(n - p, -1, -1):
            r = n - p - q
            out.append(((p, q, r), (e_pullback_c(p), e_pullback_c(q), e_pullback_c(r))))
    return out


@functools.lru_cache(maxsize=None)
def _z_image(name: str) -> TripleTensor:
    degree = int(name[1:])
    total = TripleTensor()
    for _, factors in triple_cartan(degree // 2):
        total = total + TripleTensor.tensor(*(restrict_to_A(f) for f in factors))
    return total


def mu_tilde_pullback(zeta: GradedPoly) -> TripleTensor:
    """Pull a class of H*(B) back along (Sigma A)^3 -> B^3 -> B."""
    if zeta.ring != B:
        raise ValueError("expected an element of H*(B)")
    if any(d > 36 for d in zeta.degrees()):
        raise ValueError("mu_tilde_pullback is defined up to degree 36")
    images = {v: _z_image(v) for v in B.names}
    total = TripleTensor()
    for m, q in zeta.terms.items():
        term = TripleTensor.one()
        for i, e in m:
            term = term * images[B.variables[i][0]] ** e
        total = total + term.scale(q)
    return total


def b_coefficient(t: TripleTensor, index: int) -> Fraction:
    """The multiple of ``b_index`` carried by the tri-positive part of ``t``."""
    support = B_CLASSES[index]
    tp = t.tri_positive()
    stray = [k for k in tp.coeffs if k not in support]
    if stray:
        raise SymmetryError(f"tri-positive part has terms outside b{index}: {stray}")
    values = {tp.coeffs.get(k, Fraction(0)) for k in support}
    if len(values) != 1:
        raise SymmetryError(f"coefficients on b{index} are not all equal: {sorted(values)}")
    return values.pop()


def b_class(index: int) -> TripleTensor:
    return TripleTensor({k: 1 for k in B_CLASSES[index]})


def mu_star(index: int) -> Fraction:
    """Coefficient ``m`` with ``mu*(a_index) = m * b_index``."""
    if index not in B_CLASSES:
        raise ValueError(f"index must be one of 19, 27, 35, got {index!r}")
    return b_coefficient(mu_tilde_pullback(transgression_basis(index + 1)), index)


# -- K-theory side ---------------------------------------------------------------

CH = {"g": SuspClass(0, 1, Fraction(1, 120)), "h": SuspClass(0, 0, 1)}

KGEN_ORDER = tuple("".join(w) for w in itertools.product("gh", repeat=3))


@dataclass(frozen=True)
class KGen:
    """A tensor monomial such as ``h (x) g (x) g`` in K(Sigma A)^{(x)3}."""

    factors: Tuple[str, str, str]

    def __post_init__(self):
        if len(self.factors) != 3 or any(f not in CH for f in self.factors):
            raise ValueError(f"bad K-theory generator {self.factors!r}")

    @classmethod
    def parse(cls, word: str) -> "KGen":
        return cls(tuple(word.replace("(x)", "").replace("*", "")))

    def ch(self) -> TripleTensor:
        return TripleTensor.tensor(*(CH[f] for f in self.factors))

    def __str__(self):
        return "(x)".join(self.factors)


def ch_component(xi, m: int) -> TripleTensor:
    """``(m-1)! ch_m(xi)``: the degree ``2m`` part of the Chern character, scaled."""
    if m not in CH_SCALINGS:
        raise ValueError(f"m must be one of 10, 14, 18, got {m!r}")
    gens = [xi] if isinstance(xi, KGen) else list(xi)
    total = TripleTensor()
    for g in gens:
        total = total + g.ch()
    part = total.degree_part(2 * m).scale(CH_SCALINGS[m])
    if any(TripleTensor.degree_of(k) != 2 * m for k in part.coeffs):
        raise AssertionError("degree bookkeeping failed")
    return part


def symmetrized(word: str) -> List[KGen]:
    """Distinct factor permutations of ``word``."""
    return [KGen(p) for p in sorted(set(itertools.permutations(word)))]


SYMMETRIC_COLUMNS = ("ggg", "hgg", "hhg", "hhh")
TARGET = (Fraction(3, 2), Fraction(2), Fraction(2))
ROW_DEGREES = (10, 14, 18)
ROW_INDICES = (19, 27, 35)


def phi_matrix() -> Tuple[List[List[Fraction]], List[Fraction]]:
    """The 3x4 system: b-class coefficients of the symmetrized generators."""
    rows = []
    for m, idx in zip(ROW_DEGREES, ROW_INDICES):
        rows.append([b_coefficient(ch_component(symmetrized(w), m), idx) for w in SYMMETRIC_COLUMNS])
    return rows, list(TARGET)


def full_phi_rows() -> List[Triple]:
    return [k for idx in ROW_INDICES for k in B_CLASSES[idx]]


def full_phi_matrix() -> Tuple[List[List[Fraction]], List[Fraction]]:
    """The unsymmetrized 7x8 system on the tri-positive basis."""
    rows = []
    target = []
    for m, idx in zip(ROW_DEGREES, ROW_INDICES):
        images = [ch_component(KGen.parse(w), m) for w in KGEN_ORDER]
        for k in B_CLASSES[idx]:
            rows.append([img.coeffs.get(k, Fraction(0)) for img in images])
            target.append(TARGET[ROW_INDICES.index(idx)])
    return rows, target


def ch_table() -> List[Tuple[str, int, TripleTensor]]:
    """The displayed values on ggg, hgg, hhg, hhh for m = 10, 14, 18."""
    return [(w, m, ch_component(KGen.parse(w), m)) for w in SYMMETRIC_COLUMNS for m in ROW_DEGREES]
