from fractions import Fraction as F
import cmath
import math
import random

import numpy as np
import pytest

from gtboundary.boundary import (
    approx_deviation,
    approx_sweep,
    box_sampler,
    contour_reldim,
    kernel_grid_error,
    lambda_inf,
    level_one_distribution,
    logconcave_check,
    phi_eval,
    phi_fn_of_nu,
    phi_n_exact,
    phi_n_numeric,
    phi_np,
    phi_rational_fn,
    phi_sig,
    phi_window,
    profile_sampler,
    r_kernel,
    random_sampler,
    shift_S,
    sweep_maxima,
)
from gtboundary.errors import DimensionError, PoleError, ToleranceNotMet
from gtboundary.exact import RationalFn, geometric_tail_ratio
from gtboundary.gt import omega_of, signatures, weight_multiplicity
from gtboundary.omega import OmegaPoint
from gtboundary.reldim import markov_NK, reldim
from gtboundary.schur import hstar
from gtboundary.verify import random_omega, random_rational, random_signature


def test_omega_validation_and_json():
    om = OmegaPoint(alpha_plus=["1/2", 0], beta_minus=[F(1, 3)], gamma_plus=1)
    assert om.alpha_plus == (F(1, 2),)
    assert om.delta_plus == F(3, 2) and om.delta_minus == F(1, 3)
    assert OmegaPoint.from_json(om.to_json()) == om
    with pytest.raises(ValueError):
        OmegaPoint(beta_plus=[F(2, 3)], beta_minus=[F(1, 2)])
    with pytest.raises(ValueError):
        OmegaPoint(alpha_plus=[F(1, 3), F(1, 2)])
    with pytest.raises(ValueError):
        OmegaPoint.from_json({"alpha": []})


def test_phi_eval_examples():
    assert phi_eval(OmegaPoint(), F(3, 7)) == 1
    om = OmegaPoint(alpha_plus=[F(1, 2)])
    assert phi_eval(om, -1) == F(1, 2)
    assert phi_eval(om, F(1, 3)) == 2 / (3 - F(1, 3))
    assert phi_eval(OmegaPoint(beta_minus=[1]), 2) == F(1, 2)
    with pytest.raises(PoleError):
        phi_eval(om, 0)
    with pytest.raises(PoleError):
        phi_eval(om, 3)


def test_phi_eval_complex_and_exponential():
    om = OmegaPoint(gamma_plus=1)
    assert cmath.isclose(phi_eval(om, 1j), cmath.exp(1j - 1))
    om2 = OmegaPoint(alpha_plus=[F(1, 2)], beta_minus=[F(1, 3)])
    u = 0.3 + 0.8j
    assert cmath.isclose(phi_eval(om2, u), complex(phi_np(om2, np.array([u]))[0]))


def test_phi_rational_fn_matches_product():
    rng = random.Random(1)
    for _ in range(50):
        om = random_omega(rng)
        f = phi_rational_fn(om)
        for _ in range(5):
            u = random_rational(rng, -5, 5)
            try:
                expected = phi_eval(om, u)
            except PoleError:
                continue
            assert f(u) == expected


def test_modulus_bounded_on_circle():
    rng = random.Random(2)
    u = np.exp(2j * np.pi * np.arange(64) / 64)
    for _ in range(100):
        om = random_omega(rng)
        assert np.max(np.abs(phi_np(om, u))) <= 1 + 1e-12


def test_shift_examples():
    s = shift_S(OmegaPoint(beta_minus=[1]))
    assert s == OmegaPoint()
    s = shift_S(OmegaPoint(beta_minus=[F(1, 2)]))
    assert s.beta_plus == (F(1, 2),) and s.beta_minus == ()
    assert shift_S(OmegaPoint()).beta_plus == (1,)
    for u in (F(2), F(-1, 3)):
        assert phi_eval(s, u) == (u + 1) / 2


def test_shift_relation_random():
    rng = random.Random(3)
    for _ in range(100):
        om = random_omega(rng)
        s = shift_S(om)
        for _ in range(10):
            u = random_rational(rng, -5, 5)
            try:
                rhs = u * phi_eval(om, u)
            except PoleError:
                continue
            assert phi_eval(s, u) == rhs


def test_phi_fn_of_nu_examples():
    assert phi_fn_of_nu((0, 0, 0)) == RationalFn(1)
    f1 = phi_fn_of_nu((1,))
    f2 = phi_fn_of_nu((1, 0))
    for u in (F(2), F(-1, 2), F(7, 3)):
        assert f1(u) == (u + 1) / (3 - u)
        assert f2(u) == (u + 3) / (5 - u)


def test_bridge_matches_embedding():
    rng = random.Random(4)
    for _ in range(60):
        nu = random_signature(rng, rng.randint(1, 5), -3, 3)
        f = phi_fn_of_nu(nu)
        assert f == phi_rational_fn(omega_of(nu))
        for p in f.poles:
            assert abs(p) != 1
        for _ in range(5):
            u = random_rational(rng, -5, 5)
            t = F(-1, 2) + len(nu) / (u - 1)
            if t.denominator != 1:
                assert f(u) == hstar(nu, t)


def test_phi_window_examples():
    assert list(phi_n_exact((0, 0), -2, 2).coeffs) == [0, 0, 1, 0, 0]
    win = phi_n_exact((1, 0), -1, 2)
    assert list(win.coeffs) == [0, F(3, 5), F(8, 25), F(8, 125)]


def test_window_sums_approach_one():
    f = phi_fn_of_nu((2, 1, -1))
    r_plus, r_minus = geometric_tail_ratio(f)
    r = max(r_plus, r_minus)
    total = sum(phi_n_exact((2, 1, -1), -40, 40).coeffs)
    assert abs(1 - total) < 100 * float(r) ** 40


def test_phi_numeric_examples():
    assert abs(phi_n_numeric(OmegaPoint(), 0, 1e-12) - 1) < 1e-12
    exact = phi_n_exact((1, 0), -3, 3)
    for n, v in exact.items():
        assert abs(phi_n_numeric(omega_of((1, 0)), n, 1e-12) - float(v)) < 1e-10
    om = OmegaPoint(gamma_plus=1)
    for n in (0, 1, 2):
        assert abs(phi_n_numeric(om, n, 1e-12) - math.exp(-1) / math.factorial(n)) < 1e-12
    assert abs(phi_n_numeric(om, -1, 1e-12)) < 1e-12


def test_phi_numeric_cap():
    with pytest.raises(ToleranceNotMet) as info:
        phi_n_numeric(OmegaPoint(gamma_plus=40), 0, 1e-14, max_nodes=32)
    assert info.value.estimate is not None


def test_phi_sig_and_lambda_inf_examples():
    assert phi_sig((1, 0), (0,)) == F(3, 5)
    assert phi_sig((1, 0), (1, 0)) == F(24, 125)
    assert lambda_inf((1, 0), (1, 0)) == F(48, 125)
    assert lambda_inf((1, 0), (0,)) == F(3, 5)
    assert lambda_inf(OmegaPoint(), (0,)) == 1
    assert lambda_inf(omega_of((1, 0)), (1, 0)) == F(48, 125)


def test_phi_sig_numeric_for_exponential_omega():
    om = OmegaPoint(gamma_plus=1)
    # phi_(1,0) = det[[phi_1, phi_2], [phi_-1, phi_0]] = e^-2
    assert abs(phi_sig(om, (1, 0)) - math.exp(-2)) < 1e-10


def test_phi_sig_bounded():
    for nu in ((2, 1, 0), (3, 0, 0)):
        for kappa in ((-4,), (0, -5), (2, -6)):
            assert 0 <= phi_sig(nu, kappa) <= 1


def test_boundary_kernel_rows_sum_below_one():
    for nu0 in ((1, 0), (2, 1, -1)):
        total = sum(lambda_inf(nu0, k) for k in signatures(2, -25, 25))
        assert total <= 1 and 1 - total < 1e-6


def test_product_of_coefficients_expands_in_phi_nu():
    # phi_{n1} phi_{n2} = sum_nu c(nu; n1, n2) phi_nu, nu in GT_2
    nu0 = (1, 0)
    for n1, n2 in ((0, 0), (1, 0), (2, 1), (0, -1)):
        win = phi_n_exact(nu0, -5, 5)
        lhs = win[n1] * win[n2]
        s = n1 + n2
        rhs = F(0)
        for top in range(max(n1, n2), max(n1, n2) + 30):
            nu = (top, s - top)
            c = weight_multiplicity(nu, (n1, n2))
            if c:
                rhs += c * phi_sig(nu0, nu)
        assert abs(float(lhs - rhs)) < 1e-8


def test_intertwining():
    # sum_nu Lambda^inf_N(omega, nu) Lambda^N_K(nu, kappa) = Lambda^inf_K(omega, kappa)
    nu0 = (1, 0)
    N = 2
    for kappa in ((0,), (1,), (-1,)):
        total = F(0)
        for nu in signatures(N, -16, 16):
            if nu[1] <= kappa[0] <= nu[0]:
                total += lambda_inf(nu0, nu) * markov_NK(nu, kappa)
        assert abs(float(total - lambda_inf(nu0, kappa))) < 1e-8


def test_r_kernel_examples():
    assert r_kernel(0, 1, 1, 4, 1) == pytest.approx(0.75)
    assert abs(r_kernel(1, 1, 1, 100, 1j) - 1 / 1j) < 0.1


def test_r_kernel_symmetry():
    rng = random.Random(5)
    for K in (1, 2, 3):
        for j in range(1, K + 1):
            for k in range(-3, 4):
                N = rng.randint(K + 1, 40)
                u = np.exp(2j * np.pi * np.array([rng.random() for _ in range(6)]))
                assert np.allclose(r_kernel(k, j, K, N, u), r_kernel(-k, K + 1 - j, K, N, 1 / u))


def test_r_kernel_errors():
    with pytest.raises(DimensionError):
        r_kernel(0, 1, 2, 2, 1j)
    with pytest.raises(PoleError):
        # k = 0, j = K = 1, N = 2: pole of 1/(1 + (u-1)/4) at u = -3
        r_kernel(0, 1, 1, 2, -3)


def test_kernel_convergence_rate():
    for K in (1, 2):
        for j in range(1, K + 1):
            for k in range(-2, 3):
                errs = [kernel_grid_error(k, j, K, N) for N in (20, 40, 80, 160)]
                assert all(errs[i] / errs[i + 1] >= 1.6 for i in range(3))


@pytest.mark.parametrize("nu, kappa, nodes", [((1, 0), (0,), 256), ((1, 0), (1,), 256)])
def test_contour_examples(nu, kappa, nodes):
    assert abs(contour_reldim(nu, kappa, nodes) - 0.5) < 1e-8


def test_contour_large_N():
    for nu in signatures(6, -1, 1):
        for kappa in list(signatures(1, -1, 1)) + list(signatures(2, -1, 1)):
            assert abs(contour_reldim(nu, kappa, 256) - float(reldim(kappa, nu))) < 1e-8


def test_contour_fails_below_threshold():
    # at N = 3 the kernels' poles cross the unit circle and the representation breaks
    assert abs(contour_reldim((1, 0, 0), (1, 0), 128) - 1 / 3) > 0.1


def test_approx_deviation_examples():
    assert approx_deviation((1, 0), (0,)) == F(1, 10)
    assert approx_deviation((0, 0), (0,)) == 0
    # nu = (c, c) has a single child, so Lambda^2_1 = [kappa == c]
    for c in (-2, 1, 3):
        win = phi_n_exact((c, c), c - 1, c + 1)
        assert approx_deviation((c, c), (c,)) == 1 - win[c] > 0
        assert approx_deviation((c, c), (c + 1,)) == win[c + 1]


def test_sweep_examples():
    rows = approx_sweep((0,), [2, 3, 4], box_sampler(1))
    maxima = sweep_maxima(rows)
    assert set(maxima) == {2, 3, 4} and all(m > 0 for m in maxima.values())
    row = next(r for r in rows if r.nu == (1, 0))
    assert (row.lambda_NK, row.lambda_inf, row.deviation) == (F(1, 2), F(3, 5), F(1, 10))
    for N, m in maxima.items():
        assert m == max(r.deviation for r in rows if r.N == N)
    with pytest.raises(DimensionError):
        approx_sweep((0,), [1, 2], box_sampler(1))


def test_profile_sweep_decays():
    rows = approx_sweep((0,), range(2, 21), profile_sampler([1]))
    assert rows[0].nu == (2, 0) and rows[-1].nu == (20,) + (0,) * 19
    assert rows[-1].deviation < rows[0].deviation


def test_zero_signature_row():
    for N in (3, 5):
        assert approx_deviation((0,) * N, (0, 0)) == 0
        assert approx_deviation((0,) * N, (1, 0)) == 0


def test_random_sampler_deterministic():
    s1, s2 = random_sampler(5, 2, seed=3), random_sampler(5, 2, seed=3)
    assert s1(4) == s2(4)
    assert all(len(nu) == 4 for nu in s1(4))


def test_parallel_sweep_matches_serial():
    serial = approx_sweep((1, 0), [3, 4], box_sampler(1))
    parallel = approx_sweep((1, 0), [3, 4], box_sampler(1), workers=2)
    assert serial == parallel


def test_logconcave_examples():
    assert level_one_distribution((1, 0)) == {0: F(1, 2), 1: F(1, 2)}
    assert level_one_distribution((2, 0)) == {0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}
    for nu in ((1, 0), (2, 0), (3, 1, 0)):
        assert logconcave_check(nu)
    with pytest.raises(DimensionError):
        logconcave_check((1,))


def test_phi_window_dispatch():
    exact = phi_window((1, 0), -1, 2)
    assert exact.exact and exact.coeffs == (0, F(3, 5), F(8, 25), F(8, 125))
    assert phi_window(omega_of((1, 0)), -1, 2).coeffs == exact.coeffs
    approx = phi_window(OmegaPoint(gamma_plus=F(1)), 0, 1, tol=1e-10)
    assert not approx.exact and all(abs(v - math.exp(-1)) < 1e-10 for v in approx.coeffs)
