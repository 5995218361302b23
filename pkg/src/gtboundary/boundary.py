"""The boundary Omega: Phi(u; omega), Laurent coefficients, kernels and sweeps."""

from __future__ import annotations

import cmath
import functools
import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DimensionError, DomainError, PoleError, ToleranceNotMet
from .exact import LaurentWindow, RationalFn, as_fraction, laurent_window, rational_det
from .gt import as_signature, dim_weyl, signatures
from .omega import OmegaPoint
from .reldim import markov_NK
from .schur import hstar_fn

HALF = Fraction(1, 2)


# ---------------------------------------------------------------- Phi(u; omega)

def _is_exact(u) -> bool:
    return isinstance(u, (int, Fraction)) and not isinstance(u, bool)


def phi_eval(omega: OmegaPoint, u):
    """Phi(u; omega). Exact for rational u when gamma+ = gamma- = 0, complex otherwise."""
    if u == 0:
        raise PoleError("Phi is not defined at u = 0")
    if _is_exact(u) and omega.is_rational:
        u = Fraction(u)
        inv = 1 / u
        val = Fraction(1)
        for signs, x in ((omega.beta_plus, u), (omega.beta_minus, inv)):
            for b in signs:
                val *= 1 + b * (x - 1)
        for a in omega.alpha_plus:
            den = 1 - a * (u - 1)
            if den == 0:
                raise PoleError(f"u = {u} is a pole of Phi")
            val /= den
        for a in omega.alpha_minus:
            den = 1 - a * (inv - 1)
            if den == 0:
                raise PoleError(f"u = {u} is a pole of Phi")
            val /= den
        return val
    u = complex(u)
    inv = 1 / u
    val = cmath.exp(float(omega.gamma_plus) * (u - 1) + float(omega.gamma_minus) * (inv - 1))
    for b in omega.beta_plus:
        val *= 1 + float(b) * (u - 1)
    for b in omega.beta_minus:
        val *= 1 + float(b) * (inv - 1)
    for a, x in itertools.chain(((a, u) for a in omega.alpha_plus), ((a, inv) for a in omega.alpha_minus)):
        den = 1 - float(a) * (x - 1)
        if den == 0:
            raise PoleError(f"u = {u} is a pole of Phi")
        val /= den
    return val


def phi_np(omega: OmegaPoint, u: np.ndarray) -> np.ndarray:
    """Vectorized complex Phi on an array of nonzero points."""
    u = np.asarray(u, dtype=complex)
    inv = 1 / u
    val = np.exp(float(omega.gamma_plus) * (u - 1) + float(omega.gamma_minus) * (inv - 1))
    for b in omega.beta_plus:
        val = val * (1 + float(b) * (u - 1))
    for b in omega.beta_minus:
        val = val * (1 + float(b) * (inv - 1))
    for a in omega.alpha_plus:
        val = val / (1 - float(a) * (u - 1))
    for a in omega.alpha_minus:
        val = val / (1 - float(a) * (inv - 1))
    return val


def phi_rational_fn(omega: OmegaPoint) -> RationalFn:
    """Phi(u; omega) as an exact rational function of u (needs gamma+ = gamma- = 0)."""
    if not omega.is_rational:
        raise DomainError("Phi has an exponential factor; no rational form")
    scalar = Fraction(1)
    zeros, poles = [], []
    for b in omega.beta_plus:
        # b u + (1 - b)
        scalar *= b
        zeros.append((b - 1) / b)
    for a in omega.alpha_plus:
        # 1 / ((1 + a) - a u)
        scalar /= -a
        poles.append((1 + a) / a)
    for b in omega.beta_minus:
        # ((1 - b) u + b) / u
        poles.append(Fraction(0))
        if b == 1:
            continue
        scalar *= 1 - b
        zeros.append(-b / (1 - b))
    for a in omega.alpha_minus:
        # u / ((1 + a) u - a)
        zeros.append(Fraction(0))
        scalar /= 1 + a
        poles.append(a / (1 + a))
    return RationalFn(scalar, zeros, poles).normalize()


def shift_S(omega: OmegaPoint) -> OmegaPoint:
    """The shift with Phi(u; S omega) = u Phi(u; omega)."""
    b1 = omega.beta_minus[0] if omega.beta_minus else Fraction(0)
    return OmegaPoint(
        alpha_plus=omega.alpha_plus,
        beta_plus=(1 - b1,) + omega.beta_plus,
        alpha_minus=omega.alpha_minus,
        beta_minus=omega.beta_minus[1:],
        gamma_plus=omega.gamma_plus,
        gamma_minus=omega.gamma_minus,
    )


@functools.lru_cache(maxsize=4096)
def _phi_fn_of_nu_cached(nu: tuple) -> RationalFn:
    N = len(nu)
    # t = -1/2 + N/(u - 1) = (-u/2 + N + 1/2) / (u - 1)
    return hstar_fn(nu).substitute_mobius(-HALF, N + HALF, 1, -1)


def phi_fn_of_nu(nu: Sequence[int]) -> RationalFn:
    """Phi(u; omega(nu)) obtained from H*(t; nu) by a linear-fractional change of variable."""
    nu = as_signature(nu)
    if not nu:
        raise DomainError("need N >= 1")
    return _phi_fn_of_nu_cached(nu)


# ------------------------------------------------------------ Laurent coefficients

def phi_n_exact(nu: Sequence[int], n_min: int, n_max: int) -> LaurentWindow:
    return laurent_window(phi_fn_of_nu(nu), n_min, n_max)


def phi_window(source, n_min: int, n_max: int, tol: float = 1e-12) -> LaurentWindow:
    """Laurent window for a signature or an OmegaPoint; exact whenever Phi is rational."""
    if isinstance(source, OmegaPoint):
        if source.is_rational:
            return laurent_window(phi_rational_fn(source), n_min, n_max)
        vals = phi_n_numeric_many(source, range(n_min, n_max + 1), tol)
        return LaurentWindow(n_min, n_max, tuple(vals), exact=False, tol=tol)
    return phi_n_exact(source, n_min, n_max)


def _quadrature(f: Callable[[np.ndarray], np.ndarray], ns: Sequence[int], M: int) -> np.ndarray:
    u = np.exp(2j * np.pi * np.arange(M) / M)
    vals = f(u)
    powers = u[None, :] ** (-np.asarray(ns)[:, None])
    return (vals[None, :] * powers).mean(axis=1)


def phi_n_numeric_many(
    omega: OmegaPoint, ns: Iterable[int], tol: float = 1e-12, start: int = 16, max_nodes: int = 1 << 18
) -> list[float]:
    """Trapezoidal estimates of phi_n on |u| = 1 with node doubling.

    Stops once successive estimates differ by less than ``tol`` for every n;
    raises :class:`ToleranceNotMet` with the best estimate at ``max_nodes``.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    ns = list(ns)
    f = functools.partial(phi_np, omega)
    M = start
    prev = _quadrature(f, ns, M)
    while True:
        M *= 2
        cur = _quadrature(f, ns, M)
        if np.max(np.abs(cur - prev)) < tol:
            return [float(x) for x in cur.real]
        if M >= max_nodes:
            raise ToleranceNotMet(f"no convergence to {tol} with {M} nodes", [float(x) for x in cur.real])
        prev = cur


def phi_n_numeric(omega: OmegaPoint, n: int, tol: float = 1e-12, max_nodes: int = 1 << 18) -> float:
    return phi_n_numeric_many(omega, [n], tol, max_nodes=max_nodes)[0]


def _index_range(kappa: tuple) -> tuple[int, int]:
    K = len(kappa)
    return kappa[-1] - K + 1, kappa[0] + K - 1


def phi_sig(source, kappa: Sequence[int], tol: float = 1e-12):
    """phi_kappa(omega) = det[phi_{kappa_i - i + j}(omega)] for omega or omega(nu)."""
    kappa = as_signature(kappa)
    if not kappa:
        raise DimensionError("need K >= 1")
    K = len(kappa)
    lo, hi = _index_range(kappa)
    win = phi_window(source, lo, hi, tol)
    matrix = [[win[kappa[i] - i + j] for j in range(K)] for i in range(K)]
    if win.exact:
        return rational_det(matrix)
    return float(np.linalg.det(np.array(matrix, dtype=float)))


def lambda_inf(source, kappa: Sequence[int], tol: float = 1e-12):
    """Lambda^infty_K(omega, kappa) = Dim_K kappa * phi_kappa(omega)."""
    kappa = as_signature(kappa)
    val = dim_weyl(kappa) * phi_sig(source, kappa, tol)
    if isinstance(val, Fraction):
        assert val >= 0, f"negative boundary kernel value {val}"
    else:
        assert val >= -1e3 * tol, f"negative boundary kernel value {val}"
    return val


# ----------------------------------------------------------------------- kernels

def _linear(p: Fraction, q: Fraction) -> RationalFn:
    """p u + q as a RationalFn."""
    if p == 0:
        if q == 0:
            raise PoleError("identically vanishing factor")
        return RationalFn(q)
    return RationalFn(p, [-q / p])


@functools.lru_cache(maxsize=4096)
def r_kernel_fn(k: int, j: int, K: int, N: int) -> RationalFn:
    """R_k^{(j)}(u; N) as an exact, cancelled rational function of u."""
    if not N > K >= 1:
        raise DimensionError("need N > K >= 1")
    if not 1 <= j <= K:
        raise DimensionError("need 1 <= j <= K")
    N_ = Fraction(N)

    def one_plus(c):  # 1 + c (u - 1) / N
        c = c / N_
        return _linear(c, 1 - c)

    def u_plus(c):  # u + c (u - 1) / N
        c = c / N_
        return _linear(1 + c, -c)

    f = RationalFn(Fraction(N - K, N), [Fraction(0)])
    h = HALF
    if k >= 1:
        for m in range(1, k):
            f = f * one_plus(j - k - h + m)
        for m in range(1, k + 2):
            f = f / u_plus(j - k - K - 3 * h + m)
    elif k <= -1:
        a = -k
        for m in range(1, a):
            f = f * u_plus(j - K - h + m)
        for m in range(1, a + 2):
            f = f / one_plus(j - 3 * h + m)
    else:
        f = f / (u_plus(j - K - h) * one_plus(j - h))
    return f.normalize()


def rfn_np(f: RationalFn, u) -> np.ndarray:
    """Vectorized complex evaluation of a RationalFn."""
    u = np.asarray(u, dtype=complex)
    num = np.full(u.shape, float(f.scalar), dtype=complex)
    den = np.ones(u.shape, dtype=complex)
    for z in f.zeros:
        num = num * (u - float(z))
    for p in f.poles:
        den = den * (u - float(p))
    if np.any(den == 0):
        raise PoleError("evaluation at a pole")
    return num / den


def r_kernel(k: int, j: int, K: int, N: int, u):
    """R_k^{(j)}(u; N) at a complex point or an array of points."""
    f = r_kernel_fn(k, j, K, N)
    out = rfn_np(f, u)
    return complex(out) if np.ndim(out) == 0 else out


def circle_nodes(M: int, offset: float = 0.5) -> np.ndarray:
    """M equispaced unit-circle nodes, rotated by ``offset`` of a step."""
    return np.exp(2j * np.pi * (np.arange(M) + offset) / M)


def kernel_grid_error(k: int, j: int, K: int, N: int, M: int = 128) -> float:
    """max over M unit-circle nodes of |R_k^{(j)}(u; N) - u^{-k}|."""
    u = circle_nodes(M, 0.0)
    return float(np.max(np.abs(r_kernel(k, j, K, N, u) - u ** (-k))))


def contour_reldim(nu: Sequence[int], kappa: Sequence[int], nodes: int = 256) -> float:
    """Torus trapezoidal estimate of Dim_{K,N}(kappa, nu) / Dim_N nu from Phi and the R-kernels.

    Uses the tensor grid of ``nodes`` points per circle, offset by half a step.
    """
    nu = as_signature(nu)
    kappa = as_signature(kappa)
    K, N = len(kappa), len(nu)
    if K not in (1, 2):
        raise DimensionError("contour quadrature is implemented for K <= 2")
    if not K < N:
        raise DimensionError("need K < N")
    if nodes < 16:
        raise ValueError("need at least 16 nodes")
    u = circle_nodes(nodes)
    phi = rfn_np(phi_fn_of_nu(nu), u)
    # entry (i, j) lives on circle j; 0-based i, j keep kappa_i - i + j unchanged
    R = [[phi * rfn_np(r_kernel_fn(kappa[i] - i + j, j + 1, K, N), u) for j in range(K)] for i in range(K)]
    if K == 1:
        return float(R[0][0].mean().real)
    grid = np.outer(R[0][0], R[1][1]) - np.outer(R[1][0], R[0][1])
    return float(grid.mean().real)


# ------------------------------------------------------------- approximation

def approx_deviation(nu: Sequence[int], kappa: Sequence[int]) -> Fraction:
    """|Lambda^N_K(nu, kappa) - Lambda^infty_K(omega(nu), kappa)|, exactly."""
    return abs(markov_NK(nu, kappa) - lambda_inf(as_signature(nu), kappa))


@dataclass(frozen=True)
class SweepRow:
    N: int
    nu: tuple
    kappa: tuple
    lambda_NK: Fraction
    lambda_inf: Fraction
    deviation: Fraction

    def __post_init__(self):
        assert self.deviation == abs(self.lambda_NK - self.lambda_inf)


def sweep_row(kappa: tuple, nu: tuple) -> SweepRow:
    lam = markov_NK(nu, kappa)
    inf = lambda_inf(nu, kappa)
    return SweepRow(len(nu), nu, kappa, lam, inf, abs(lam - inf))


def _row_job(args):
    return sweep_row(*args)


def box_sampler(box: int) -> Callable[[int], list]:
    """All signatures with parts in [-box, box]."""
    return lambda N: list(signatures(N, -box, box))


def profile_sampler(head: Sequence, tail: Sequence = ()) -> Callable[[int], list]:
    """nu_i = floor(N x_i) for the head profile, nu_{N+1-i} = floor(N y_i) for the tail, zeros between."""
    head = [as_fraction(x) for x in head]
    tail = [as_fraction(y) for y in tail]

    def sample(N):
        if len(head) + len(tail) > N:
            raise DimensionError("profile longer than N")
        top = [math.floor(N * x) for x in head]
        bottom = [math.floor(N * y) for y in reversed(tail)]
        return [as_signature(top + [0] * (N - len(top) - len(bottom)) + bottom)]

    return sample


def random_sampler(count: int, box: int, seed: int = 0) -> Callable[[int], list]:
    """``count`` signatures with parts uniform in [-box, box], seeded per N."""
    def sample(N):
        rng = random.Random(f"{seed}:{N}")
        out = []
        for _ in range(count):
            out.append(tuple(sorted((rng.randint(-box, box) for _ in range(N)), reverse=True)))
        return out

    return sample


def approx_sweep(
    kappa: Sequence[int], N_list: Iterable[int], sampler: Callable[[int], list], workers: int = 1
) -> list[SweepRow]:
    """Rows of exact deviations for every sampled nu at every N, in sampler order."""
    kappa = as_signature(kappa)
    K = len(kappa)
    jobs = []
    for N in N_list:
        if N <= K:
            raise DimensionError(f"every N must exceed K={K}, got {N}")
        jobs.extend((kappa, as_signature(nu)) for nu in sampler(N))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_row_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [sweep_row(*job) for job in jobs]


def sweep_maxima(rows: Iterable[SweepRow]) -> dict:
    """Per-N maximum deviation."""
    out = {}
    for row in rows:
        if row.N not in out or row.deviation > out[row.N]:
            out[row.N] = row.deviation
    return dict(sorted(out.items()))


# ------------------------------------------------------------- log-concavity

def level_one_distribution(nu: Sequence[int]) -> dict:
    """k -> Lambda^N_1(nu, (k,)) over {nu_N, ..., nu_1}."""
    nu = as_signature(nu)
    return {k: markov_NK(nu, (k,)) for k in range(nu[-1], nu[0] + 1)}


def logconcave_check(nu: Sequence[int]) -> bool:
    """Log-concavity on same-parity pairs and gap-free support {nu_N, ..., nu_1}."""
    nu = as_signature(nu)
    if len(nu) < 2:
        raise DimensionError("need N >= 2")
    M = level_one_distribution(nu)
    if any(v <= 0 for v in M.values()):
        return False
    ks = sorted(M)
    for k, l in itertools.combinations(ks, 2):
        if (k - l) % 2 == 0 and M[k] * M[l] > M[(k + l) // 2] ** 2:
            return False
    return True
