"""Pullbacks into H*(BG2; Z_(5)) = Z_(5)[y4, y12].

``rho*`` restricts Chern classes along G2 -> SU(7).  Composing with the
idempotent ``E*`` gives ``j*`` on the generators ``z_{8n-4}`` of H*(B), and
the transgressions of the fibre W of ``j`` are recovered as kernel elements
of ``j*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from . import linalg
from .chern import BU, e_pullback_c
from .gradedring import (
    GradedPoly,
    Monomial,
    MonomialFilter,
    RingMap,
    RingSpec,
    apply_map,
    containing,
    power_of,
    reduce_mod,
    word_length_at_least,
)

BG2 = RingSpec("H*(BG2)", (("y4", 4), ("y12", 12)), 40)

B = RingSpec("H*(B)", (("z4", 4), ("z12", 12), ("z20", 20), ("z28", 28), ("z36", 36)), 40)

#: z_{8n-4} for n = 1..5
Z_INDICES = {1: 4, 2: 12, 3: 20, 4: 28, 5: 36}

TRANSGRESSION_DEGREES = (20, 28, 36)


class KernelError(RuntimeError):
    """The kernel of j* does not have the expected shape."""


def _rho() -> RingMap:
    y4, y12 = BG2.var("y4"), BG2.var("y12")
    return RingMap(BU, BG2, {"c2": -y4, "c4": (y4 * y4).scale(Fraction(1, 4)), "c6": -y12})


rho = _rho()


def jz(n: int) -> GradedPoly:
    """``j* z_{8n-4} = rho*(E* c_{4n-2})``, exactly."""
    if n not in Z_INDICES:
        raise ValueError(f"jz index must be in 1..5, got {n!r}")
    return apply_map(rho, e_pullback_c(4 * n - 2))


def j_star() -> RingMap:
    return RingMap(B, BG2, {f"z{Z_INDICES[n]}": jz(n) for n in Z_INDICES})


def y_quartic_filter() -> MonomialFilter:
    """``(y4, y12)^4``."""
    return word_length_at_least(("y4", "y12"), 4)


def transgression_ideal(d: int) -> MonomialFilter:
    """The ideal modulo which the transgression in degree ``d`` is pinned down."""
    if d == 20:
        return power_of("z4", 5)
    if d == 28:
        return containing(["z20"]) | word_length_at_least(("z4", "z12"), 4)
    if d == 36:
        return containing(["z20", "z28"]) | word_length_at_least(("z4", "z12"), 4)
    raise ValueError(f"unsupported transgression degree {d!r}")


def _priority(m: Monomial, d: int) -> tuple:
    names = {B.variables[i][0]: e for i, e in m}
    word = sum(names.get(v, 0) for v in ("z4", "z12"))
    if names == {f"z{d}": 1}:
        tier = 0
    elif "z36" in names:
        tier = 1
    elif "z28" in names:
        tier = 2
    elif "z20" in names:
        tier = 3
    else:
        tier = 4 + word
    dense = tuple(-names.get(v, 0) for v in reversed(B.names))
    return (tier, dense)


def _kernel(d: int) -> Tuple[List[Monomial], List[List[Fraction]]]:
    """Monomials of degree ``d`` in priority order and an RREF basis of ker j*."""
    f = j_star()
    monos = sorted(B.monomials_of_degree(d), key=lambda m: _priority(m, d))
    images = [apply_map(f, GradedPoly(B, {m: Fraction(1)})) for m in monos]
    targets = sorted({t for img in images for t in img.terms})
    matrix = [[img.terms.get(t, Fraction(0)) for img in images] for t in targets]
    basis = linalg.nullspace(matrix, len(monos))
    reduced, _ = linalg.rref(basis) if basis else ([], [])
    return monos, reduced


def kernel_dimensions(d: int) -> Tuple[int, int]:
    """(dim ker j* in degree d, dim of it modulo products of lower transgressions)."""
    if d not in TRANSGRESSION_DEGREES:
        raise ValueError(f"unsupported transgression degree {d!r}")
    monos, basis = _kernel(d)
    products = []
    for e in TRANSGRESSION_DEGREES:
        if e >= d:
            continue
        tau = transgression_basis(e)
        for m in B.monomials_of_degree(d - e):
            prod = tau * GradedPoly(B, {m: Fraction(1)})
            products.append([prod.terms.get(x, Fraction(0)) for x in monos])
    decomposable = linalg.rank(products) if products else 0
    return len(basis), len(basis) - decomposable


def transgression_basis(d: int) -> GradedPoly:
    """Normalized kernel element of j* in degree ``d`` with leading term ``z_d``."""
    if d not in TRANSGRESSION_DEGREES:
        raise ValueError(f"unsupported transgression degree {d!r}")
    monos, basis = _kernel(d)
    if not basis or not basis[0][0]:
        raise KernelError(f"no kernel element of j* in degree {d} has a z{d} term")
    row = basis[0]
    if row[0] != 1:
        raise KernelError("kernel representative is not normalized")
    return GradedPoly(B, {m: q for m, q in zip(monos, row) if q})


def transgression_class(d: int) -> GradedPoly:
    """:func:`transgression_basis` reduced modulo :func:`transgression_ideal`."""
    return reduce_mod(transgression_basis(d), transgression_ideal(d))


@dataclass(frozen=True)
class G2Model:
    cohomology: RingSpec = BG2
    base: RingSpec = B
    rho: RingMap = field(default=rho, compare=False)

    def jz(self, n: int) -> GradedPoly:
        return jz(n)

    def transgression(self, d: int) -> GradedPoly:
        return transgression_basis(d)

    def rho_images(self) -> Dict[str, GradedPoly]:
        return {v: self.rho.image(v) for v in BU.names if self.rho.image(v)}
