"""Schur-type functions: shifted and dual Schur, the S_{kappa|N} family, H*.

Everything here is evaluated pointwise at rational arguments. Multivariate
functions are given as bialternants; determinants go through
:func:`~gtboundary.exact.rational_det`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionError, DomainError
from .exact import (
    RationalFn,
    as_fraction,
    falling_power,
    gamma_ratio,
    pochhammer,
    rational_det,
    rfn_eval,
    vandermonde,
)
from .gt import as_signature, dim_weyl, partitions_inside


def as_partition(mu: Sequence[int]) -> tuple:
    mu = as_signature(mu)
    if any(x < 0 for x in mu):
        raise DomainError(f"partition parts must be nonnegative: {mu}")
    return tuple(x for x in mu if x > 0)


def _distinct(t: Sequence) -> list:
    t = [as_fraction(x) for x in t]
    if len(set(t)) != len(t):
        raise DomainError(f"variables must be pairwise distinct: {t}")
    return t


def _sign(K: int) -> int:
    return -1 if (K * (K - 1) // 2) % 2 else 1


def h_ones(m: int, n: int) -> int:
    """Complete homogeneous h_m at n ones: C(m + n - 1, n - 1), zero for m < 0."""
    if n < 1:
        raise DomainError("h_m(1^n) needs n >= 1")
    if m < 0:
        return 0
    return math.comb(m + n - 1, n - 1)


def skew_count(kappa: Sequence[int], nu: Sequence[int]) -> int:
    """Dim_{K,N}(kappa, nu) as a Jacobi-Trudi determinant of h's at N - K ones.

    Both signatures are shifted by nu_N to become partitions; the count is the
    skew Schur function s_{nu/kappa}(1^{N-K}).
    """
    kappa = as_signature(kappa)
    nu = as_signature(nu)
    K, N = len(kappa), len(nu)
    if not 1 <= K < N:
        raise DimensionError(f"need 1 <= K < N, got K={K}, N={N}")
    shift = nu[-1]
    if kappa[-1] < shift:
        return 0
    nu_bar = [x - shift for x in nu]
    kappa_bar = [x - shift for x in kappa] + [0] * (N - K)
    if any(nu_bar[i] < kappa_bar[i] for i in range(N)):
        return 0
    n = N - K
    det = rational_det(
        [[h_ones(nu_bar[i] - kappa_bar[j] - i + j, n) for j in range(N)] for i in range(N)]
    )
    assert det.denominator == 1
    return det.numerator


def shifted_schur(mu: Sequence[int], x: Sequence) -> Fraction:
    """S*_mu(x_1..x_N) = det[(x_i + N - i)^{falling mu_j + N - j}] / prod_{i<j}(x_i - x_j - i + j)."""
    mu = as_partition(mu)
    x = [as_fraction(v) for v in x]
    N = len(x)
    if len(mu) > N:
        return Fraction(0)
    mu = mu + (0,) * (N - len(mu))
    den = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            den *= x[i] - x[j] - i + j
    if den == 0:
        raise DomainError("shifted Schur denominator vanishes")
    num = rational_det([[falling_power(x[i] + N - 1 - i, mu[j] + N - 1 - j) for j in range(N)] for i in range(N)])
    return num / den


def _dual_schur_numerator(mu: tuple, t: Sequence[Fraction]) -> Fraction:
    K = len(t)
    # 1-based column j: Gamma(t_i + j - mu_j) / Gamma(t_i + 1)
    return _sign(K) * rational_det(
        [[gamma_ratio(ti, j + 1 - mu[j], 1) for j in range(K)] for ti in t]
    )


def dual_schur(mu: Sequence[int], t: Sequence) -> Fraction:
    """sigma_mu(t_1..t_K), the dual Schur function, as a Gamma-ratio bialternant."""
    mu = as_partition(mu)
    t = _distinct(t)
    K = len(t)
    if len(mu) > K:
        return Fraction(0)
    mu = mu + (0,) * (K - len(mu))
    return _dual_schur_numerator(mu, t) / vandermonde(t)


def hstar_fn(nu: Sequence[int]) -> RationalFn:
    """H*(t; nu) = prod_j (t + j) / (t + j - nu_j), normalized."""
    nu = as_signature(nu)
    N = len(nu)
    return RationalFn(1, [-j for j in range(1, N + 1)], [nu[j - 1] - j for j in range(1, N + 1)]).normalize()


def hstar(nu: Sequence[int], t) -> Fraction:
    """H*(t_1, ..., t_K; nu) for a scalar t or a tuple of t's."""
    f = hstar_fn(nu)
    if isinstance(t, (list, tuple)):
        out = Fraction(1)
        for ti in t:
            out *= rfn_eval(f, ti)
        return out
    return rfn_eval(f, t)


def _sf_entry(kappa_j: int, j: int, N: int, K: int) -> RationalFn:
    # Gamma(t+1+N) Gamma(t+j-kappa_j) / (Gamma(t+1) Gamma(t+j-kappa_j+N-K+1)), j 1-based
    c = j - kappa_j
    zeros = [-m for m in range(1, N + 1)]
    poles = [-(c + m) for m in range(0, N - K + 1)]
    return RationalFn(1, zeros, poles).normalize()


def sf_constant(K: int, N: int) -> Fraction:
    """(-1)^{K(K-1)/2} prod_{i=1}^K (N-K)! / (N-K+i-1)!."""
    out = Fraction(_sign(K))
    for i in range(1, K + 1):
        out *= Fraction(math.factorial(N - K), math.factorial(N - K + i - 1))
    return out


def sf_numerator(kappa: Sequence[int], N: int, t: Sequence) -> Fraction:
    """V(t) * S_{kappa|N}(t): the numerator of the bialternant, defined for coincident t too."""
    kappa = as_signature(kappa)
    K = len(kappa)
    if len(t) != K:
        raise DimensionError(f"need {K} variables, got {len(t)}")
    if N < K:
        raise DomainError("need N >= K")
    entries = [_sf_entry(kappa[j], j + 1, N, K) for j in range(K)]
    t = [as_fraction(x) for x in t]
    return sf_constant(K, N) * rational_det([[rfn_eval(entries[j], ti) for j in range(K)] for ti in t])


def sf_eval(kappa: Sequence[int], N: int, t: Sequence) -> Fraction:
    """The Schur-like function S_{kappa|N}(t_1, ..., t_K)."""
    t = _distinct(t)
    return sf_numerator(kappa, N, t) / vandermonde(t)


def cauchy_sum(nu: Sequence[int], t: Sequence) -> Fraction:
    """sum over mu inside nu of S*_mu(nu) sigma_mu(t); equals H*(t; nu).

    The sum is finite because S*_mu(nu) vanishes unless mu is contained in nu.
    """
    nu = as_signature(nu)
    if any(x < 0 for x in nu):
        raise DomainError("Cauchy-type sum needs a signature with nonnegative parts")
    t = _distinct(t)
    total = Fraction(0)
    for mu in partitions_inside(nu, max_len=min(len(nu), len(t))):
        s = shifted_schur(mu, nu)
        if s:
            total += s * dual_schur(mu, t)
    return total


def n_mu(N: int, mu: Sequence[int]) -> Fraction:
    """(N)_mu = prod_i (N - i + 1)_{mu_i}."""
    mu = as_partition(mu)
    out = Fraction(1)
    for i, m in enumerate(mu, start=1):
        out *= pochhammer(N - i + 1, m)
    return out


def shift_difference(numerator: Callable[[Sequence[Fraction]], Fraction], N: int, t: Sequence) -> Fraction:
    """Apply (1/(N-1)^{falling K}) V^{-1} prod_i (t_i + N - (t_i + 1) tau_i) V at t.

    ``numerator`` must return V(t) * F(t) for the function F being acted on;
    tau_i shifts t_i by one.
    """
    t = _distinct(t)
    K = len(t)
    total = Fraction(0)
    for shifted in itertools.product((False, True), repeat=K):
        coeff = Fraction(1)
        point = []
        for ti, s in zip(t, shifted):
            if s:
                coeff *= -(ti + 1)
                point.append(ti + 1)
            else:
                coeff *= ti + N
                point.append(ti)
        if coeff:
            total += coeff * numerator(point)
    return total / (vandermonde(t) * falling_power(N - 1, K))


def apply_shift_diff(kappa: Sequence[int], N: int, t: Sequence) -> Fraction:
    """D_{N,N-1} S_{kappa|N-1} evaluated at t; equals S_{kappa|N}(t)."""
    kappa = as_signature(kappa)
    if N - 1 < len(kappa):
        raise DomainError("need N - 1 >= K")
    return shift_difference(lambda p: sf_numerator(kappa, N - 1, p), N, t)


def dual_schur_numerator(mu: Sequence[int], t: Sequence) -> Fraction:
    """V(t) * sigma_mu(t)."""
    mu = as_partition(mu)
    t = [as_fraction(x) for x in t]
    if len(mu) > len(t):
        return Fraction(0)
    return _dual_schur_numerator(mu + (0,) * (len(t) - len(mu)), t)


def krattenthaler_sides(K: int, N: int, t: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of det[(t_i+1)..(t_i+j-1)(t_i+N-K+j+1)..(t_i+N)] = V(t) (-1)^{K(K-1)/2} prod (N-K+i-1)!/(N-K)!."""
    t = [as_fraction(x) for x in t]
    if len(t) != K:
        raise DimensionError(f"need {K} variables")

    def entry(ti, j):
        out = Fraction(1)
        for m in range(1, j):
            out *= ti + m
        for m in range(N - K + j + 1, N + 1):
            out *= ti + m
        return out

    lhs = rational_det([[entry(ti, j) for j in range(1, K + 1)] for ti in t])
    rhs = vandermonde(t) * _sign(K)
    for i in range(1, K + 1):
        rhs *= Fraction(math.factorial(N - K + i - 1), math.factorial(N - K))
    return lhs, rhs


def krattenthaler_lemma(X: Sequence, A: Sequence, B: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of Krattenthaler's determinant lemma.

    ``A`` and ``B`` hold A_2..A_n and B_2..B_n. Entry (i, j) is
    (X_i+A_n)...(X_i+A_{j+1}) (X_i+B_j)...(X_i+B_2); the right side is
    prod_{i<j}(X_i - X_j) prod_{2<=i<=j<=n}(B_i - A_j).
    """
    X = [as_fraction(x) for x in X]
    n = len(X)
    if len(A) != n - 1 or len(B) != n - 1:
        raise DimensionError("A and B need n - 1 entries each")
    Am = {k: as_fraction(a) for k, a in zip(range(2, n + 1), A)}
    Bm = {k: as_fraction(b) for k, b in zip(range(2, n + 1), B)}

    def entry(x, j):
        out = Fraction(1)
        for k in range(j + 1, n + 1):
            out *= x + Am[k]
        for k in range(2, j + 1):
            out *= x + Bm[k]
        return out

    lhs = rational_det([[entry(x, j) for j in range(1, n + 1)] for x in X])
    rhs = vandermonde(X)
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            rhs *= Bm[i] - Am[j]
    return lhs, rhs


def sf_over_dim_at_level_K(kappa: Sequence[int], t: Sequence) -> tuple[Fraction, Fraction]:
    """(S_{kappa|K}(t) / Dim_K kappa, H*(t; kappa)); the two agree."""
    kappa = as_signature(kappa)
    return sf_eval(kappa, len(kappa), t) / dim_weyl(kappa), hstar(kappa, tuple(t))
