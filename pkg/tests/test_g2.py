from fractions import Fraction

import pytest

from g2commute.chern import BU
from g2commute.exactnum import in_Zp
from g2commute.g2 import (
    B,
    BG2,
    jz,
    j_star,
    kernel_dimensions,
    rho,
    transgression_basis,
    transgression_class,
    y_quartic_filter,
)
from g2commute.gradedring import apply_map, parse_poly, reduce_mod


def test_rho_images():
    assert rho.image("c2") == parse_poly(BG2, "-y4")
    assert rho.image("c4") == parse_poly(BG2, "1/4*y4^2")
    assert rho.image("c6") == parse_poly(BG2, "-y12")
    for i in range(1, 21):
        if i not in (2, 4, 6):
            assert rho.image(f"c{i}").is_zero()


def test_jz_exact_low():
    assert jz(1) == parse_poly(BG2, "-y4")
    assert jz(2) == parse_poly(BG2, "-y12 - 1/4*y4^3")


@pytest.mark.parametrize(
    "n, reduced", [(3, "-5/4*y12*y4^2"), (4, "-3/2*y12^2*y4"), (5, "-1/2*y12^3")]
)
def test_jz_reduced(n, reduced):
    assert reduce_mod(jz(n), y_quartic_filter()) == parse_poly(BG2, reduced)


def test_jz_exact_values():
    # engine values, cross-checked by the kernel computation below
    assert jz(3) == parse_poly(BG2, "-5/4*y12*y4^2 - 1/16*y4^5")
    assert jz(4) == parse_poly(BG2, "-3/2*y12^2*y4 - 13/16*y12*y4^4 - 1/64*y4^7")


@pytest.mark.parametrize("n", range(1, 6))
def test_jz_homogeneous_and_local(n):
    x = jz(n)
    assert x.degrees() == {8 * n - 4}
    assert all(in_Zp(q, 5) for q in x.terms.values())


def test_jz_bad_index():
    with pytest.raises(ValueError):
        jz(6)


@pytest.mark.parametrize(
    "d, mono, coeff",
    [(20, {"z12": 1, "z4": 2}, Fraction(-5, 4)), (28, {"z12": 2, "z4": 1}, Fraction(-3, 2)), (36, {"z12": 3}, Fraction(-1, 2))],
)
def test_transgression_coefficients(d, mono, coeff):
    tau = transgression_basis(d)
    assert tau.coeff({f"z{d}": 1}) == 1
    assert tau.coeff(mono) == coeff


@pytest.mark.parametrize("d", [20, 28, 36])
def test_transgression_in_kernel_exactly(d):
    assert apply_map(j_star(), transgression_basis(d)).is_zero()


def test_kernel_dimensions():
    assert kernel_dimensions(20) == (1, 1)
    assert kernel_dimensions(28) == (2, 1)
    assert kernel_dimensions(36) == (4, 1)


def test_transgression_classes():
    assert transgression_class(20) == parse_poly(B, "z20 - 5/4*z12*z4^2")
    assert transgression_class(28) == parse_poly(B, "z28 - 3/2*z12^2*z4")
    assert transgression_class(36) == parse_poly(B, "z36 - 1/2*z12^3")


def test_j_star_is_rho_after_e():
    # j* z_{8n-4} factors through BU
    for n in range(1, 6):
        assert j_star().image(f"z{8 * n - 4}").ring == BG2
    assert rho.source == BU


def test_bad_degree():
    with pytest.raises(ValueError):
        transgression_basis(24)
