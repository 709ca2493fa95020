from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from superres.blockdata import (d21a_lambda, d21a_principal, d21a_table, f4_table_from_file,
                                f4_table_load, g3_lambda, g3_table, locate, osp32_lambda,
                                osp32_table, parse_f4_text)
from superres.dimensions import g0_dim
from superres.errors import ParameterError, ParseError, UnsupportedCase, UsageError
from superres.growth import sequence_degree
from superres.rootdata import Family, SuperWeight, atypicality, build_datum, is_dominant

FIXTURE = Path(__file__).parent / "fixtures" / "f4_extrapolated.txt"


def test_osp32_table():
    assert [osp32_lambda(l) for l in (0, 1, 4)] == [(0, 0), (0, 1), (3, 4)]
    with pytest.raises(UsageError):
        osp32_lambda(-1)
    assert osp32_table().casimir == 0


def test_d21a_examples():
    assert all(d21a_lambda(1, 1, 0, l) == (l + 2, l, l) for l in range(20))
    assert d21a_lambda(1, 1, 1, 0) == (1, 0, 0)
    assert d21a_lambda(1, 1, 0, 0) == (2, 0, 0)
    with pytest.raises(ParameterError):
        d21a_lambda(2, 4, 1, 0)
    with pytest.raises(ParameterError):
        d21a_lambda(1, 1, -1, 0)


def test_d21a_principal_is_shifted_table():
    assert d21a_principal(0) == (0, 0, 0)
    for l in range(1, 30):
        assert d21a_principal(l) == d21a_lambda(3, 2, 0, l - 1) == (l + 1, l - 1, l - 1)


def test_d21a_casimir():
    t = d21a_table(Family.d21a(2, 3), 2)
    assert t.casimir == Fraction(2 * 5 * 4, 2)
    with pytest.raises(UnsupportedCase):
        d21a_table(Family.d21a(irrational=True), 1)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 2), (1, 5)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_d21a_boundaries(p, q, k):
    kp, kq = k * p, k * q
    # l = 0 is where the middle branches overlap
    assert d21a_lambda(p, q, k, 0) == (1, kp - 1, kq - 1)
    assert d21a_lambda(p, q, k, -kp) == (kp + 2, 0, kp + kq)
    assert d21a_lambda(p, q, k, -kp + 1) == (kp, 0, kp + kq - 2)
    assert d21a_lambda(p, q, k, kq) == (kq + 2, kp + kq, 0)
    assert d21a_lambda(p, q, k, kq - 1) == (kq, kp + kq - 2, 0)


@given(st.sampled_from([(1, 1), (2, 3), (3, 2), (1, 4)]), st.integers(0, 4),
       st.integers(-60, 60))
def test_d21a_dominant_and_located(pq, k, l):
    p, q = pq
    fam = Family.d21a(p, q)
    if k == 0:
        l = abs(l)
    t = d21a_table(fam, k)
    lam = t.weight_at(l)
    assert is_dominant(build_datum(fam), lam)
    assert locate(lam) == (k, l)
    assert atypicality(build_datum(fam), lam).block == (k, l)


def test_d21a_irrational_principal_only():
    fam = Family.d21a(irrational=True)
    D = build_datum(fam)
    for l in range(20):
        lam = d21a_table(fam, 0).weight_at(l)
        assert atypicality(D, lam).degree == 1
    assert atypicality(D, SuperWeight(fam, 3, (1, 2))).degree == 0


def test_g3_examples():
    assert g3_lambda(0, 0) == (0, 0, 0)
    assert g3_lambda(0, 1) == (5, 0, 0)
    assert g3_lambda(1, 2) == (5, 1, 0)
    assert g3_lambda(1, 5) == (9, 1, 2)
    assert g3_lambda(3, 0) == (2, 0, 2) and g3_lambda(3, 1) == (3, 0, 2)
    assert g3_table(2).casimir == 36
    with pytest.raises(UsageError):
        g3_lambda(0, -1)


def test_g3_dominance_over_range():
    D = build_datum(Family.g3())
    for k in range(4):
        for l in range(61):
            lam = g3_table(k).weight_at(l)
            assert is_dominant(D, lam), (k, l, lam)
            assert locate(lam) == (k, l)


@pytest.mark.parametrize("k", range(4))
def test_g3_even_dim_degree_six(k):
    start = 3 * k + 1
    seq = [g0_dim(g3_table(k).weight_at(l)) for l in range(start, start + 40)]
    assert sequence_degree(seq) == 6


def test_g3_typical():
    D = build_datum(Family.g3())
    assert atypicality(D, SuperWeight(Family.g3(), 3, (3, 3))).degree == 0


def test_f4_loading():
    t = f4_table_from_file(FIXTURE)
    assert t.external and "extrapolated" in t.flags
    assert t.l_range == (0, 299)
    assert t.weight_at(5) == SuperWeight(Family.f4(), 7, (0, 0, 5))
    with pytest.raises(UnsupportedCase):
        t.weight_at(300)
    lam = t.weight_at(17)
    assert atypicality(build_datum(Family.f4()), lam, table=t).block == (0, 17)
    with pytest.raises(UnsupportedCase):
        atypicality(build_datum(Family.f4()), lam)


def test_f4_errors(tmp_path):
    with pytest.raises(ParseError):
        f4_table_load([])
    with pytest.raises(ParseError):
        f4_table_load([(0, (2, 0, 0, 0)), (0, (3, 0, 0, 1))])
    with pytest.raises(ParseError):
        f4_table_load([(0, (2, 0, 0, 0)), (2, (3, 0, 0, 1))])
    with pytest.raises(ParseError):
        parse_f4_text("0 1 2 3\n")
    with pytest.raises(ParseError):
        parse_f4_text("0 1 2 x 3\n")
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    with pytest.raises(ParseError):
        f4_table_from_file(empty)
    with pytest.raises(UsageError):
        f4_table_from_file(tmp_path / "missing.txt")


def test_f4_offset_rows_start_at_zero():
    t = f4_table_load([(5, (2, 0, 0, 0)), (6, (3, 0, 0, 1))])
    assert t.l_range == (0, 1)
    assert t.weight_at(0).coords == (2, 0, 0, 0)


def test_osp32_locate():
    for l in range(40):
        assert locate(osp32_table().weight_at(l)) == (0, l)
    assert locate(SuperWeight(Family.osp32(), 2, (5,))) is None
    assert locate(SuperWeight(Family.osp32(), Fraction(1, 2), (1,))) is None
