"""Sparse graded polynomial rings over the rationals.

All rings here are concentrated in even degrees, so they are honestly
commutative.  A :class:`RingSpec` fixes the generators and a truncation
degree; monomials above the truncation are dropped on construction.

Monomials are stored sparsely as sorted tuples of ``(variable index,
exponent)`` pairs.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .exactnum import RationalLike, as_rational, format_rational

Monomial = Tuple[Tuple[int, int], ...]

ONE: Monomial = ()


@dataclass(frozen=True)
class RingSpec:
    name: str
    variables: Tuple[Tuple[str, int], ...]
    truncation: int = 40

    def __post_init__(self):
        names = [v for v, _ in self.variables]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {self.name}")
        for v, d in self.variables:
            if d <= 0 or d % 2:
                raise ValueError(f"variable {v} must have positive even degree, got {d}")
        if self.truncation <= 0:
            raise ValueError("truncation degree must be positive")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{self.name} has no variable {name!r}") from None

    def var_degree(self, i: int) -> int:
        return self.variables[i][1]

    def mono_degree(self, mono: Monomial) -> int:
        return sum(self.variables[i][1] * e for i, e in mono)

    def var(self, name: str) -> "GradedPoly":
        return GradedPoly(self, {((self.index(name), 1),): Fraction(1)})

    def gens(self) -> Dict[str, "GradedPoly"]:
        return {v: self.var(v) for v in self.names}

    def one(self) -> "GradedPoly":
        return GradedPoly(self, {ONE: Fraction(1)})

    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    def const(self, q: RationalLike) -> "GradedPoly":
        return GradedPoly(self, {ONE: as_rational(q)})

    def monomial(self, exps: Mapping[str, int], coeff: RationalLike = 1) -> "GradedPoly":
        return GradedPoly(self, {self.mono_from_names(exps): as_rational(coeff)})

    def mono_from_names(self, exps: Mapping[str, int]) -> Monomial:
        pairs = []
        for name, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                pairs.append((self.index(name), e))
        return tuple(sorted(pairs))

    def monomials_of_degree(self, d: int) -> Iterator[Monomial]:
        """All monomials of topological degree exactly ``d``."""

        def rec(i: int, rest: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
            if rest == 0:
                yield ()
                return
            if i < 0:
                return
            deg = self.variables[i][1]
            for e in range(rest // deg, -1, -1):
                for tail in rec(i - 1, rest - e * deg):
                    yield (((i, e),) if e else ()) + tail

        for m in rec(len(self.variables) - 1, d):
            yield tuple(sorted(m))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for i, e in b:
        out[i] = out.get(i, 0) + e
    return tuple(sorted(out.items()))


class GradedPoly:
    """Immutable sparse polynomial; no zero coefficients are ever stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.ring = ring
        clean = {}
        if terms:
            for m, c in terms.items():
                if c and ring.mono_degree(m) <= ring.truncation:
                    clean[m] = Fraction(c)
        self.terms: Dict[Monomial, Fraction] = clean
        self._hash = None

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "GradedPoly") -> None:
        if not isinstance(other, GradedPoly):
            raise TypeError(f"expected GradedPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            self._check(other)
            return other
        return self.ring.const(as_rational(other))

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GradedPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        top = ring.truncation
        out: Dict[Monomial, Fraction] = {}
        other_items = [(m, c, ring.mono_degree(m)) for m, c in other.terms.items()]
        for m1, c1 in self.terms.items():
            d1 = ring.mono_degree(m1)
            for m2, c2, d2 in other_items:
                if d1 + d2 > top:
                    continue
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPoly(ring, out)

    def __rmul__(self, other) -> "GradedPoly":
        return self.scale(other)

    def scale(self, q: RationalLike) -> "GradedPoly":
        q = as_rational(q)
        return GradedPoly(self.ring, {m: c * q for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "GradedPoly":
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({ONE: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- queries -------------------------------------------------------------

    def coeff(self, exps: Mapping[str, int]) -> Fraction:
        return self.terms.get(self.ring.mono_from_names(exps), Fraction(0))

    def degrees(self) -> set:
        return {self.ring.mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """The common degree of a nonzero homogeneous polynomial."""
        ds = self.degrees()
        if len(ds) != 1:
            return None
        return ds.pop()

    def degree_component(self, d: int) -> "GradedPoly":
        ring = self.ring
        return GradedPoly(ring, {m: c for m, c in self.terms.items() if ring.mono_degree(m) == d})

    def support(self) -> Tuple[Monomial, ...]:
        return tuple(self.sorted_monomials())

    def sorted_monomials(self) -> list:
        # degree ascending, then higher-indexed variables first
        ring = self.ring
        n = len(ring.variables)

        def key(m):
            dense = [0] * n
            for i, e in m:
                dense[i] = e
            return (ring.mono_degree(m), tuple(-e for e in reversed(dense)))

        return sorted(self.terms, key=key)

    def mono_names(self, m: Monomial) -> Dict[str, int]:
        return {self.ring.variables[i][0]: e for i, e in m}

    # -- output --------------------------------------------------------------

    def _mono_str(self, m: Monomial) -> str:
        parts = []
        for i, e in sorted(m, reverse=True):
            v = self.ring.variables[i][0]
            parts.append(v if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def to_str(self, fmt: Callable[[Fraction], str] = format_rational) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, m in enumerate(self.sorted_monomials()):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = self._mono_str(m)
            if not body:
                text = fmt(a)
            elif a == 1:
                text = body
            else:
                text = f"{fmt(a)}*{body}"
            if k == 0:
                out.append(("-" if sign == "-" else "") + text)
            else:
                out.append(f" {sign} {text}")
        return "".join(out)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"GradedPoly({self.ring.name}: {self.to_str()})"

    def to_json(self) -> dict:
        return {
            "ring": self.ring.name,
            "terms": [
                {"mono": self.mono_names(m), "coeff": format_rational(self.terms[m])}
                for m in self.sorted_monomials()
            ],
        }


def poly_from_json(data: Mapping, rings: Mapping[str, RingSpec]) -> GradedPoly:
    ring = rings[data["ring"]]
    terms: Dict[Monomial, Fraction] = {}
    for t in data["terms"]:
        m = ring.mono_from_names(t["mono"])
        terms[m] = terms.get(m, 0) + as_rational(t["coeff"])
    return GradedPoly(ring, terms)


def ring_arith(a: GradedPoly, b, op: str) -> GradedPoly:
    """Dispatch form of the ring operations: ``add``, ``sub``, ``mul``, ``scale``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if not isinstance(b, GradedPoly):
            raise TypeError("mul expects two polynomials; use scale for scalars")
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown ring operation {op!r}")


class RingMap:
    """Ring homomorphism determined by homogeneous images of the generators."""

    def __init__(self, source: RingSpec, target: RingSpec, images: Mapping[str, GradedPoly]):
        self.source = source
        self.target = target
        imgs = []
        for name, deg in source.variables:
            img = images.get(name, target.zero())
            if img.ring != target:
                raise ValueError(f"image of {name} is not in {target.name}")
            if img and img.degrees() != {deg}:
                raise ValueError(f"image of {name} is not homogeneous of degree {deg}")
            imgs.append(img)
        self._images = tuple(imgs)
        self._cache: Dict[Monomial, GradedPoly] = {ONE: target.one()}

    def image(self, name: str) -> GradedPoly:
        return self._images[self.source.index(name)]

    def _mono_image(self, m: Monomial) -> GradedPoly:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        # peel off one factor of the lowest variable and recurse
        i, e = m[0]
        if not self._images[i]:
            img = self.target.zero()
        else:
            rest = ((i, e - 1),) + m[1:] if e > 1 else m[1:]
            img = self._mono_image(rest) * self._images[i]
        self._cache[m] = img
        return img

    def __call__(self, x: GradedPoly) -> GradedPoly:
        return apply_map(self, x)

    def compose(self, inner: "RingMap") -> "RingMap":
        """``self`` after ``inner``."""
        if inner.target != self.source:
            raise ValueError("maps are not composable")
        return RingMap(inner.source, self.target, {v: self(inner.image(v)) for v in inner.source.names})


def apply_map(f: RingMap, x: GradedPoly) -> GradedPoly:
    if x.ring != f.source:
        raise ValueError(f"ring mismatch: map from {f.source.name}, element of {x.ring.name}")
    out: Dict[Monomial, Fraction] = {}
    for m, c in x.terms.items():
        if any(not f._images[i] for i, _ in m):
            continue
        for m2, c2 in f._mono_image(m).terms.items():
            out[m2] = out.get(m2, 0) + c * c2
    return GradedPoly(f.target, out)


class MonomialFilter:
    """A monomial ideal, given by a predicate on exponent maps ``{name: exp}``.

    The predicate must be upward closed: if it discards a monomial it must
    discard every multiple of it.
    """

    def __init__(self, predicate: Callable[[Dict[str, int]], bool], name: str = "filter"):
        self.predicate = predicate
        self.name = name

    def discards(self, exps: Mapping[str, int]) -> bool:
        return bool(self.predicate({k: v for k, v in exps.items() if v}))

    def __or__(self, other: "MonomialFilter") -> "MonomialFilter":
        return MonomialFilter(
            lambda e: self.predicate(e) or other.predicate(e), f"{self.name} + {other.name}"
        )

    def __repr__(self):
        return f"MonomialFilter({self.name})"


def reduce_mod(x: GradedPoly, ideal: MonomialFilter) -> GradedPoly:
    keep = {m: c for m, c in x.terms.items() if not ideal.discards(x.mono_names(m))}
    return GradedPoly(x.ring, keep)


def degree_component(x: GradedPoly, d: int) -> GradedPoly:
    return x.degree_component(d)


# -- stock ideals -------------------------------------------------------------


def containing(names: Iterable[str]) -> MonomialFilter:
    names = frozenset(names)
    return MonomialFilter(lambda e: any(v in names for v in e), f"({', '.join(sorted(names))})")


def word_length_at_least(names: Sequence[str], n: int) -> MonomialFilter:
    """``(v_1, ..., v_r)^n``: total exponent in the listed variables is at least ``n``."""
    names = tuple(names)
    return MonomialFilter(
        lambda e: sum(e.get(v, 0) for v in names) >= n, f"({', '.join(names)})^{n}"
    )


def power_of(name: str, n: int) -> MonomialFilter:
    return MonomialFilter(lambda e: e.get(name, 0) >= n, f"({name}^{n})")


def decomposables() -> MonomialFilter:
    return MonomialFilter(lambda e: sum(e.values()) >= 2, "decomposables")


def is_ideal_on(filt: MonomialFilter, ring: RingSpec, max_degree: Optional[int] = None) -> bool:
    """Exhaustively check upward closure of ``filt`` below ``max_degree``."""
    top = ring.truncation if max_degree is None else max_degree
    monos = [m for d in range(0, top + 1, 2) for m in ring.monomials_of_degree(d)]
    for m, (i, _) in itertools.product(monos, enumerate(ring.variables)):
        if ring.mono_degree(m) + ring.var_degree(i) > top:
            continue
        big = mono_mul(m, ((i, 1),))
        names_m = {ring.variables[j][0]: e for j, e in m}
        names_big = {ring.variables[j][0]: e for j, e in big}
        if filt.discards(names_m) and not filt.discards(names_big):
            return False
    return True


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(ring: RingSpec, text: str) -> GradedPoly:
    """Parse ``"c6 - c4*c2 + 1/2*c2^3"``-style text (as printed by ``str``)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    out = ring.zero()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or not m.group(2).strip():
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps: Dict[str, int] = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if factor[0].isdigit():
                coeff *= as_rational(factor)
                continue
            name, _, e = factor.partition("^")
            exps[name] = exps.get(name, 0) + (int(e) if e else 1)
        out = out + ring.monomial(exps, coeff)
        pos = m.end()
    return out
