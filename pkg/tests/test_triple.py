import itertools
import math
import random
from fractions import Fraction

import pytest

from g2commute import dvr
from g2commute.chern import BU, e_pullback_c
from g2commute.g2 import B, transgression_basis
from g2commute.gradedring import GradedPoly, parse_poly
from g2commute.triple import (
    B_CLASSES,
    CH,
    KGEN_ORDER,
    KGen,
    SuspClass,
    SymmetryError,
    TripleTensor,
    b_class,
    b_coefficient,
    ch_component,
    full_phi_matrix,
    mu_star,
    mu_tilde_pullback,
    phi_matrix,
    restrict_to_A,
    triple_cartan,
)

f = math.factorial
S3, S11 = 1, 2


def test_restrict_examples():
    c = BU.gens()
    assert restrict_to_A(c["c2"]) == SuspClass(0, 1, 0)
    assert restrict_to_A(e_pullback_c(6)) == SuspClass(0, 0, 1)
    assert restrict_to_A(c["c4"]) == SuspClass(0, 0, 0)


def test_triple_cartan_counts():
    assert [k for k, _ in triple_cartan(0)] == [(0, 0, 0)]
    keys = {k for k, _ in triple_cartan(2)}
    assert {(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)} == keys
    assert len(triple_cartan(10)) == 66


def test_suspension_products_vanish():
    x = TripleTensor({(1, 0, 0): 1})
    assert (x * x).is_zero()
    y = TripleTensor({(0, 2, 0): 3})
    assert x * y == TripleTensor({(1, 2, 0): 3})


@pytest.mark.parametrize(
    "cls, index, coeff",
    [
        ("z20 - 5/4*z12*z4^2", 19, Fraction(-3, 2)),
        ("z28 - 3/2*z12^2*z4", 27, Fraction(-2)),
        ("z36 - 1/2*z12^3", 35, Fraction(-2)),
    ],
)
def test_pullback_of_displayed_classes(cls, index, coeff):
    t = mu_tilde_pullback(parse_poly(B, cls)).tri_positive()
    assert t == b_class(index).scale(coeff)


def test_mu_star_values():
    assert mu_star(19) == Fraction(-3, 2)
    assert mu_star(27) == -2
    assert mu_star(35) == -2


@pytest.mark.parametrize("d", [20, 28, 36])
def test_pullback_symmetric(d):
    t = mu_tilde_pullback(transgression_basis(d))
    assert t.is_symmetric()


def test_random_pullbacks_symmetric():
    rng = random.Random(5)
    for _ in range(25):
        terms = {}
        for _ in range(4):
            monos = list(B.monomials_of_degree(rng.randrange(4, 37, 4)))
            if monos:
                terms[rng.choice(monos)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert mu_tilde_pullback(GradedPoly(B, terms)).is_symmetric()


def test_b_coefficient_rejects_asymmetric():
    t = TripleTensor({(1, 1, 2): 1, (1, 2, 1): 2, (2, 1, 1): 1})
    with pytest.raises(SymmetryError):
        b_coefficient(t, 19)


def test_ch_examples():
    ggg = ch_component(KGen.parse("ggg"), 10)
    assert ggg == b_class(19).scale(Fraction(f(9), f(5)))
    assert ch_component(KGen.parse("hhg"), 10).is_zero()
    assert ch_component(KGen.parse("hhh"), 18) == b_class(35).scale(f(17))


def _factor_ch(letter, half_degree):
    # per-factor ch_j: ch(g) = Sx3 + Sx11/120 sits in degrees 4 and 12
    s = CH[letter]
    return {2: s.x3, 6: s.x11}.get(half_degree, Fraction(0))


@pytest.mark.parametrize("word", KGEN_ORDER)
@pytest.mark.parametrize("m", [10, 14, 18])
def test_ch_multiplicative(word, m):
    expected = {}
    for js in itertools.product((2, 6), repeat=3):
        if sum(js) != m:
            continue
        q = f(m - 1)
        for letter, j in zip(word, js):
            q *= _factor_ch(letter, j)
        if q:
            expected[tuple(S3 if j == 2 else S11 for j in js)] = q
    got = ch_component(KGen.parse(word), m)
    assert got == TripleTensor(expected)
    assert all(TripleTensor.degree_of(k) == 2 * m for k in got.coeffs)


def test_ch_permutation_variants():
    for word in KGEN_ORDER:
        for perm in itertools.permutations(range(3)):
            moved = "".join(word[perm.index(i)] for i in range(3))
            for m in (10, 14, 18):
                assert ch_component(KGen.parse(word), m).permute(perm) == ch_component(KGen.parse(moved), m)


def test_phi_matrix_entries():
    a, t = phi_matrix()
    assert a[0][0] == Fraction(f(9), f(5))
    assert a[1][1] == 2 * Fraction(f(13), f(5))
    assert a[2][3] == f(17)
    assert t == [Fraction(3, 2), 2, 2]


def _expand(target3):
    return [q for q, idx in zip(target3, (19, 27, 35)) for _ in B_CLASSES[idx]]


def _average(x):
    # symmetric coordinates: ggg, mean over one-h words, mean over two-h words, hhh
    groups = {0: [], 1: [], 2: [], 3: []}
    for w, v in zip(KGEN_ORDER, x):
        groups[w.count("h")].append(v)
    return [sum(g, Fraction(0)) / len(g) for _, g in sorted(groups.items())]


def test_full_and_symmetric_systems_agree():
    a_full, _ = full_phi_matrix()
    a_sym, _ = phi_matrix()
    rng = random.Random(7)
    targets = [[Fraction(3, 2), 2, 2], [Fraction(3, 2), 2, -2], [1, 0, 0], [0, 0, 1]]
    targets += [[Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(3)] for _ in range(20)]
    for t in targets:
        full = dvr.solve_checked(dvr.DVRSystem.build(a_full, _expand(t), 5))
        sym = dvr.solve_checked(dvr.DVRSystem.build(a_sym, t, 5))
        assert full.verdict == sym.verdict, t
        if full.solvable:
            y = _average(full.witness)
            assert all(v.denominator % 5 for v in y)
            rows = [sum((p * q for p, q in zip(row, y)), Fraction(0)) for row in a_sym]
            assert rows == [Fraction(v) for v in t]
