import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidtwist.bennequin import (
    QuasipositiveFactorization,
    Status,
    check_chi_bookkeeping,
    check_fdtc_bennequin,
    check_qp_fdtc_bound,
    check_writhe_bennequin,
    format_factorization,
    parse_factorization,
    qp_build,
    qp_chi4,
    qp_g4,
    random_factorization,
    run_all_checks,
)
from braidtwist.errors import BadStrandCount, EmptyFactorization, IndexOutOfRange, MalformedToken
from braidtwist.intervals import RationalInterval
from braidtwist.words import BraidWord, closure_components, delta_small, full_twist, writhe

QF = QuasipositiveFactorization


def W(n, *letters):
    return BraidWord(n, letters)


def plain(n, *indices):
    return QF(n, tuple((W(n), i) for i in indices))


TREFOIL_B2 = plain(2, 1, 1, 1)
DELTA2_B3 = plain(3, 1, 2, 1, 2, 1, 2)


@st.composite
def factorizations(draw, min_n=3, max_n=4, max_factors=4, max_conj=4):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    return random_factorization(random.Random(seed), n, max_factors, max_conj)


class TestFormat:
    def test_parse(self):
        f = parse_factorization("2:1;:2", 3)
        assert f.factors == ((W(3, 2), 1), (W(3), 2))
        assert qp_build(f).letters == (2, 1, -2, 2)

    def test_round_trip(self):
        text = "1 -2:1;:2;-1 -1:2"
        assert format_factorization(parse_factorization(text, 3)) == text

    def test_empty(self):
        assert len(parse_factorization("", 3)) == 0

    @pytest.mark.parametrize("text", ["2", "2:x", "a:1"])
    def test_malformed(self, text):
        with pytest.raises(MalformedToken):
            parse_factorization(text, 3)

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_factorization(":3", 3)
        with pytest.raises(IndexOutOfRange):
            QF(3, ((W(3), 0),))


class TestBuild:
    def test_examples(self):
        assert qp_build(plain(3, 1, 2)) == delta_small(3)
        assert qp_build(QF(3, ((W(3, 2), 1),))).letters == (2, 1, -2)
        assert qp_build(QF(3)).letters == ()

    @given(factorizations(min_n=2, max_n=5, max_factors=6))
    def test_writhe_is_l(self, f):
        assert writhe(qp_build(f)) == len(f)


class TestChi4:
    def test_trefoil(self):
        assert qp_chi4(TREFOIL_B2) == -1
        assert qp_g4(TREFOIL_B2) == 1

    def test_unknot(self):
        assert qp_chi4(plain(3, 1, 2)) == 1
        assert qp_g4(plain(3, 1, 2)) == 0

    def test_unlink(self):
        f = QF(3, ((W(3, 2), 1),))
        assert qp_chi4(f) == 2
        assert closure_components(qp_build(f)) == 2
        with pytest.raises(ValueError):
            qp_g4(f)


class TestWritheBennequin:
    def test_trefoil(self):
        r = check_writhe_bennequin(TREFOIL_B2)
        assert (r.lhs, r.rhs, r.status) == (3, 3, Status.VERIFIED)
        assert r.equality
        assert r.details["g4"] == 1

    def test_empty(self):
        r = check_writhe_bennequin(QF(3))
        assert (r.lhs, r.rhs, r.status) == (0, 0, Status.VERIFIED)

    def test_multi_component_reports_chi_only(self):
        r = check_writhe_bennequin(QF(3, ((W(3, 2), 1),)))
        assert "g4" not in r.to_json()
        assert r.to_json()["chi4"] == 2

    @given(factorizations(min_n=2, max_n=5, max_factors=8))
    def test_equality(self, f):
        r = check_writhe_bennequin(f)
        assert r.status is Status.VERIFIED and r.equality


class TestFdtcChecks:
    def test_rejects_b2(self):
        with pytest.raises(BadStrandCount):
            check_fdtc_bennequin(TREFOIL_B2)
        with pytest.raises(BadStrandCount):
            check_qp_fdtc_bound(TREFOIL_B2)

    def test_delta_squared(self):
        r = check_fdtc_bennequin(DELTA2_B3, k=16)
        assert r.lhs in RationalInterval(1, F(17, 16))
        assert r.rhs == 6
        assert r.status is Status.VERIFIED
        q = check_qp_fdtc_bound(DELTA2_B3, k=16)
        assert q.rhs == 5 and q.status is Status.VERIFIED

    def test_delta_small(self):
        r = check_qp_fdtc_bound(plain(3, 1, 2), k=12)
        assert r.lhs == RationalInterval(F(1, 3), F(5, 12))
        assert r.rhs == 1
        assert r.status is Status.VERIFIED

    def test_empty_rejected(self):
        with pytest.raises(EmptyFactorization):
            check_qp_fdtc_bound(QF(3))

    def test_inconclusive_and_monotone(self):
        # a single generator: omega(a_1) = 0 and the bound is 0, so the
        # enclosure [0, 1/k] straddles it at every k
        f = plain(3, 1)
        for k in (1, 2, 4, 8):
            assert check_qp_fdtc_bound(f, k).status is Status.INCONCLUSIVE

    @settings(max_examples=30)
    @given(factorizations(max_factors=3, max_conj=3), st.integers(1, 6))
    def test_status_monotone(self, f, k):
        order = {Status.INCONCLUSIVE: 0, Status.VERIFIED: 1, Status.VIOLATED: 2}
        checks = [check_fdtc_bennequin]
        if len(f):
            checks.append(check_qp_fdtc_bound)
        for check in checks:
            a, b = check(f, k).status, check(f, 2 * k).status
            assert Status.VIOLATED not in (a, b)
            assert order[b] >= order[a]

    def test_status_rule(self):
        # Violated only when the whole enclosure exceeds the bound
        omega = RationalInterval(F(7, 2), F(15, 4))
        f = plain(3, 1, 2, 1, 2)
        assert check_qp_fdtc_bound(f, 4, omega).status is Status.VIOLATED
        omega = RationalInterval(3, F(13, 4))
        assert check_qp_fdtc_bound(f, 4, omega).status is Status.INCONCLUSIVE


class TestBookkeeping:
    def test_trefoil_like(self):
        r = check_chi_bookkeeping(plain(3, 1, 1, 1), 2)
        assert (r.lhs, r.rhs) == (18, 18)
        assert r.status is Status.VERIFIED

    def test_empty(self):
        r = check_chi_bookkeeping(QF(3), 1)
        assert r.status is Status.VERIFIED
        assert r.lhs <= r.rhs

    def test_bad_k(self):
        with pytest.raises(ValueError):
            check_chi_bookkeeping(QF(3), 0)

    @given(factorizations(min_n=2, max_n=5, max_factors=6), st.integers(1, 2))
    def test_equality(self, f, k):
        r = check_chi_bookkeeping(f, k)
        assert r.lhs == r.rhs == f.strands * k * len(f)


def test_power_times_delta():
    f = plain(3, 1, 2)
    g = f.power_times_delta(2)
    assert len(g) == 2 * 2 + 2
    assert qp_build(g) == BraidWord(3, (1, 2) * 3)


def test_run_all_checks():
    reports = run_all_checks(DELTA2_B3, k=8)
    assert [r.name for r in reports] == ["writhe-bennequin", "chi-bookkeeping", "fdtc-bennequin", "qp-fdtc-bound"]
    assert all(r.status is Status.VERIFIED for r in reports)
    assert [r.name for r in run_all_checks(TREFOIL_B2)] == ["writhe-bennequin", "chi-bookkeeping"]


def test_random_factorization_is_deterministic():
    a = random_factorization(random.Random(3), 4, 5, 4)
    b = random_factorization(random.Random(3), 4, 5, 4)
    assert a == b
    assert qp_build(plain(3, 1, 2).power_times_delta(0)) == delta_small(3)
    assert full_twist(3) == qp_build(DELTA2_B3)
