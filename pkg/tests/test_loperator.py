from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from superres.diagrams import core, diagram_of, principal_weight
from superres.errors import DomainError, UsageError
from superres.loperator import l_inv, l_op, l_power, l_step, orbit
from superres.rootdata import Family, SuperWeight, atypicality, build_datum


def datum(n):
    return build_datum(Family.osp2(n))


def W(n, eps, *tail):
    return SuperWeight(Family.osp2(n), eps, tail)


@pytest.mark.parametrize("n", range(1, 5))
def test_closed_forms(n):
    z = (0,) * (n - 1)
    D = datum(n)
    for d in range(0, 30):
        assert l_op(D, W(n, -d, d, *z)) == W(n, -d - 1, d + 1, *z)
        if d:
            assert l_op(D, W(n, 2 * n + d, d, *z)) == W(n, 2 * n + d - 1, d - 1, *z)
    assert l_op(D, W(n, 2 * n, *(0,) * n)) == W(n, 0, *(0,) * n)


def test_spec_examples():
    D = datum(2)
    assert str(l_op(D, W(2, 0, 0, 0))) == "-1|1,0"
    assert l_inv(D, W(2, 0, 0, 0)) == W(2, 4, 0, 0)
    assert l_inv(D, W(2, -4, 4, 0)) == W(2, -3, 3, 0)


def test_lstep_fields():
    lam, step = l_step(datum(2), W(2, 0, 0, 0))
    assert step.k >= 1
    assert step.gamma == (Fraction(1), Fraction(-1), Fraction(0))
    assert sorted(i for i, _ in step.omega) == [0, 1]


def test_typical_is_domain_error():
    with pytest.raises(DomainError):
        l_op(datum(1), W(1, Fraction(1, 2), 0))
    with pytest.raises(UsageError):
        l_op(datum(2), W(2, 0, 0, 1))


def test_wrong_family():
    with pytest.raises(UsageError):
        l_op(build_datum(Family.osp32()), SuperWeight(Family.osp32(), 0, (0,)))


def _atypicals(n, bound):
    fam = Family.osp2(n)
    for tail in combinations_with_replacement(range(bound, -1, -1), n):
        for i, c in enumerate(tail):
            fi = -(c + n - i)
            for eps in {fi + n, -fi + n}:
                if abs(eps) <= bound + n + 2:
                    yield SuperWeight(fam, eps, tail)


@pytest.mark.parametrize("n,bound", [(1, 30), (2, 12), (3, 7)])
def test_injective_and_round_trip(n, bound):
    D = datum(n)
    seen = {}
    for lam in _atypicals(n, bound):
        mu = l_op(D, lam)
        assert seen.setdefault(mu, lam) == lam
        assert l_inv(D, mu) == lam
        assert l_op(D, l_inv(D, lam)) == lam
        assert atypicality(D, mu).degree == 1
        assert core(diagram_of(D, mu)) == core(diagram_of(D, lam))


def test_inverse_matches_brute_force_preimage():
    # oracle: the unique preimage found by search, independent of the reflection formula
    n = 2
    D = datum(n)
    pool = list(_atypicals(n, 14))
    image = {}
    for lam in pool:
        image.setdefault(l_op(D, lam), []).append(lam)
    for mu, pre in image.items():
        if max(abs(mu.eps), *mu.coeffs) <= 8:
            assert pre == [l_inv(D, mu)]


@pytest.mark.parametrize("n", range(1, 5))
def test_power_matches_orbit(n):
    D = datum(n)
    zero = principal_weight(n, 0)
    for l in (-200, -37, -1, 0, 1, 5, 200):
        assert l_power(D, zero, l) == principal_weight(n, l)


def test_orbit_window():
    D = datum(1)
    pairs = orbit(D, principal_weight(1, 0), -3, 3)
    assert [l for l, _ in pairs] == list(range(-3, 4))
    assert all(w == principal_weight(1, l) for l, w in pairs)
    assert orbit(D, principal_weight(1, 0), 2, 4)[0] == (2, principal_weight(1, 2))
    assert orbit(D, principal_weight(1, 0), -4, -2)[-1] == (-2, principal_weight(1, -2))
    with pytest.raises(UsageError):
        orbit(D, principal_weight(1, 0), 1, 0)


def atypical(n):
    tails = st.lists(st.integers(0, 30), min_size=n, max_size=n).map(
        lambda xs: tuple(sorted(xs, reverse=True)))

    def attach(tail, i, sign):
        return SuperWeight(Family.osp2(n), sign * -(tail[i] + n - i) + n, tail)

    return tails.flatmap(lambda t: st.builds(attach, st.just(t), st.integers(0, n - 1),
                                             st.sampled_from((1, -1))))


@given(st.integers(1, 4).flatmap(atypical))
def test_round_trip_property(lam):
    D = build_datum(lam.family)
    mu = l_op(D, lam)
    assert l_inv(D, mu) == lam
    assert l_op(D, l_inv(D, lam)) == lam
    assert core(diagram_of(D, mu)) == core(diagram_of(D, lam))
    # omega leaves strictly decreasing positive delta-entries in mu + rho
    shifted = [c + (lam.family.n - i) for i, c in enumerate(mu.coeffs)]
    assert all(a > b > 0 for a, b in zip(shifted, shifted[1:])) and shifted[-1] > 0
