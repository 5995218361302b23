from fractions import Fraction as F
import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from gtboundary.errors import DimensionError, PoleError, UnsupportedAnnulusError
from gtboundary.exact import (
    RationalFn,
    as_fraction,
    falling_power,
    gamma_ratio,
    geometric_tail_ratio,
    laurent_window,
    pochhammer,
    rational_det,
    rfn_eval,
    vandermonde,
)


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return F(1)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(-1) ** inv
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


small = st.integers(-3, 3)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor_expansion(m):
    assert rational_det(m) == cofactor_det(m)


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_bareiss_rational_entries(m):
    assert rational_det(m) == cofactor_det(m)


def test_det_examples():
    assert rational_det([[1, 2], [3, 4]]) == -2
    assert rational_det([[F(1, 2), 0], [0, F(2, 3)]]) == F(1, 3)
    assert rational_det([[0, 1], [1, 0]]) == -1
    assert rational_det([]) == 1
    with pytest.raises(DimensionError):
        rational_det([[1, 2, 3], [4, 5, 6]])


def test_as_fraction_rejects_floats():
    assert as_fraction("3/4") == F(3, 4)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_factorial_powers():
    assert falling_power(5, 2) == 20
    assert falling_power(F(1, 2), 0) == 1
    assert pochhammer(3, 3) == 60
    assert pochhammer(-2, 3) == 0
    assert gamma_ratio(F(1, 2), 3, 1) == F(3, 2) * F(5, 2)
    assert gamma_ratio(2, 1, 3) == F(1, 12)
    with pytest.raises(PoleError):
        gamma_ratio(-1, 0, 2)


def test_gamma_ratio_matches_math_gamma():
    for t in (F(1, 3), F(7, 2), F(5, 4)):
        for a, b in ((0, 3), (4, 1), (2, 2)):
            assert math.isclose(float(gamma_ratio(t, a, b)), math.gamma(t + a) / math.gamma(t + b), rel_tol=1e-12)


def test_vandermonde():
    assert vandermonde([1, 2, 4]) == (1 - 2) * (1 - 4) * (2 - 4)


def test_rational_fn_normalize_and_eval():
    f = RationalFn(2, [1, 1, 3], [1, 5]).normalize()
    assert f.zeros == (1, 3) and f.poles == (5,)
    assert rfn_eval(f, 0) == 2 * (-1) * (-3) / F(-5)
    with pytest.raises(PoleError):
        rfn_eval(f, 5)
    # a removable point evaluates after cancellation
    assert RationalFn(1, [2], [2])(2) == 1


def test_value_at_infinity():
    assert RationalFn(3, [1], [2]).value_at_infinity() == 3
    assert RationalFn(3, [], [2]).value_at_infinity() == 0
    with pytest.raises(PoleError):
        RationalFn(1, [1, 2], [3]).value_at_infinity()


def test_residues_simple_poles():
    f = RationalFn(1, [-1], [0])  # (t+1)/t
    assert f.residues() == {0: 1}
    with pytest.raises(DimensionError):
        RationalFn(1, [], [0, 0]).residues()


def test_partial_fractions_reconstruct():
    f = RationalFn(F(3, 2), [1, 2, -4], [0, 0, 3])
    poly, parts = f.partial_fractions()
    for x in (F(1, 3), F(-7, 2), F(11, 5)):
        val = sum(c * x**i for i, c in enumerate(poly))
        for p, cs in parts.items():
            for r, c in enumerate(cs, start=1):
                val += c / (x - p) ** r
        assert val == f(x)


def test_mobius_substitution():
    f = RationalFn(1, [-1], [0])
    g = f.substitute_mobius(-F(1, 2), F(5, 2), 1, -1)  # t = -1/2 + 2/(u-1)
    for u in (F(2), F(-3), F(1, 7)):
        assert g(u) == f((-u / 2 + F(5, 2)) / (u - 1))


@pytest.mark.parametrize("k", [-3, -1, 0, 2, 4])
def test_laurent_monomial_is_delta(k):
    f = RationalFn(1, [0] * k if k > 0 else [], [0] * (-k) if k < 0 else [])
    win = laurent_window(f, -5, 5)
    assert all(v == (1 if n == k else 0) for n, v in win.items())


def test_laurent_geometric():
    # 1/(2 - u) = sum u^n / 2^(n+1)
    win = laurent_window(RationalFn(-1, [], [2]), -2, 3)
    assert list(win.coeffs) == [0, 0, F(1, 2), F(1, 4), F(1, 8), F(1, 16)]
    assert win[1] == F(1, 4) and len(win) == 6
    with pytest.raises(IndexError):
        win[9]


def test_laurent_inner_pole_feeds_negative_powers():
    # 1/(u - 1/2) = sum_{s>=0} 2^-s u^(-s-1)
    win = laurent_window(RationalFn(1, [], [F(1, 2)]), -3, 1)
    assert list(win.coeffs) == [F(1, 4), F(1, 2), 1, 0, 0]


def test_laurent_double_pole():
    # 1/(3-u)^2 = sum (n+1) u^n / 3^(n+2)
    win = laurent_window(RationalFn(1, [], [3, 3]), 0, 3)
    assert list(win.coeffs) == [F(n + 1, 3 ** (n + 2)) for n in range(4)]


def test_laurent_rejects_unit_circle_pole():
    with pytest.raises(UnsupportedAnnulusError):
        laurent_window(RationalFn(1, [], [-1]), 0, 2)


def test_tail_ratio():
    assert geometric_tail_ratio(RationalFn(1, [], [5, F(1, 3)])) == (F(1, 5), F(1, 3))
