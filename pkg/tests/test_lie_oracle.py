import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2commute.exactnum import is_prime
from g2commute.lie_oracle import (
    TABLE_SAMPLE,
    Answer,
    Verdict,
    gauge_catB,
    gauge_sphere,
    gauge_verdict,
    group_type,
    sugawara_local,
    williams_verdict,
)

YES, NO, UNKNOWN = Answer.YES, Answer.NO, Answer.UNKNOWN
PRIMES = [p for p in range(2, 200) if is_prime(p)]


def test_types():
    assert group_type("G2").type == (2, 6)
    assert group_type("SU(2)").type == (2,)
    assert group_type("Sp(2)").type == (2, 4)
    assert group_type("SU(3)").type == (2, 3)
    assert group_type("Spin(8)").type == (2, 4, 4, 6)
    assert group_type("E8").top == 30


@pytest.mark.parametrize("name", TABLE_SAMPLE)
def test_dimension_identity(name):
    lt = group_type(name)
    lt.check()
    assert sum(2 * n - 1 for n in lt.type) == lt.dimension


@pytest.mark.parametrize("name", ["G7", "SU(1)", "Spin(4)", "Spin(2)", "Sp(0)", "U(3)"])
def test_unknown_groups(name):
    with pytest.raises(ValueError):
        group_type(name)


def test_verdict_needs_citation():
    with pytest.raises(ValueError):
        Verdict(YES)


@pytest.mark.parametrize(
    "args, answer, cited",
    [
        (("G2", 13, 2), YES, "Thm A"),
        (("G2", 11, 2), UNKNOWN, None),
        (("SU(2)", 7, 3), YES, "Thm A"),
    ],
)
def test_sugawara(args, answer, cited):
    v = sugawara_local(*args)
    assert (v.answer, v.cited) == (answer, cited)


def test_williams_exceptions():
    assert williams_verdict("Sp(2)", 3, 2).answer is YES
    assert williams_verdict("Spin(5)", 3, 2).answer is YES
    assert williams_verdict("G2", 5, 2).answer is YES
    assert williams_verdict("G2", 5, 3) == Verdict(NO, "Thm D")
    assert williams_verdict("G2", 5, 4).answer is UNKNOWN
    assert williams_verdict("G2", 5, 4, assume_monotone=True).answer is NO
    assert williams_verdict("G2", 7, 2) == Verdict(NO, "Thm 1.1(2)")
    assert williams_verdict("G2", 13, 2) == Verdict(YES, "Thm 1.1(1)")
    assert williams_verdict("SU(3)", 3, 2) == Verdict(NO, "Thm 1.1(2)")


def test_williams_rejects_bad_input():
    with pytest.raises(ValueError):
        williams_verdict("G2", 5, 1)
    with pytest.raises(ValueError):
        williams_verdict("G2", 9, 3)


def test_gauge_examples():
    assert gauge_verdict("SU(2)", 11, 2, 3) == Verdict(YES, "Thm B(1)")
    assert gauge_verdict("SU(2)", 7, 2, 3) == Verdict(NO, "Thm B(2)")
    assert gauge_verdict("G2", 13, 1, 1).answer is YES
    assert gauge_catB("G2", 31, 2, 3) == Verdict(YES, "Thm B'")
    assert gauge_catB("G2", 29, 2, 3).answer is UNKNOWN
    assert gauge_catB("SU(3)", 13, 1, 3).answer is YES
    assert gauge_sphere("SU(2)", 7, 1, 2) == Verdict(YES, "Thm C")
    assert gauge_sphere("G2", 13, 1, 2).answer is UNKNOWN
    assert gauge_sphere("G2", 17, 2, 2).answer is UNKNOWN
    with pytest.raises(ValueError):
        gauge_sphere("G2", 17, 3, 2)


groups = st.sampled_from(TABLE_SAMPLE)
primes = st.sampled_from(PRIMES)
ks = st.integers(2, 6)


@given(groups, primes, ks)
def test_sugawara_never_contradicts_williams(g, p, k):
    if sugawara_local(g, p, k).answer is YES:
        assert williams_verdict(g, p, k).answer is not NO


@given(groups, primes, ks)
def test_sugawara_monotone_in_p(g, p, k):
    if sugawara_local(g, p, k).answer is YES:
        assert all(sugawara_local(g, q, k).answer is YES for q in PRIMES if q > p)


@given(groups, primes, st.integers(1, 4), st.integers(1, 4))
def test_gauge_regions(g, p, n, k):
    top = group_type(g).top
    v = gauge_verdict(g, p, n, k)
    if v.answer is YES:
        assert p > (n + k) * top
    elif v.answer is NO:
        assert (n + 1) * top < p < (n + k) * top
    # the base-category bound with cat = n never says less than the B_n bound
    if v.answer is YES:
        assert gauge_catB(g, p, n, k).answer is YES
