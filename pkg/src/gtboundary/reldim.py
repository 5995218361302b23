"""Relative dimensions Dim_{K,N}(kappa, nu) / Dim_N nu.

Routes:

* ``dp``       -- path count over Weyl dimension (the oracle);
* ``skew``     -- Jacobi-Trudi determinant of h's at ones;
* ``basis``    -- K x K determinant of expansion coefficients of H* on the
                  fractions f_{L,k}, each coefficient from the residues of H*;
* ``residue``  -- the same K x K determinant written directly in terms of the
                  residues of H* at its poles;
* ``shifted``  -- the residue determinant re-indexed over actual pole
                  locations, guarded by an explicit vanishing check.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainError, PreconditionError
from .exact import RationalFn, as_fraction, pochhammer, rational_det
from .gt import as_signature, count_paths, dim_weyl
from .schur import hstar, hstar_fn, sf_eval, skew_count

METHODS = ("dp", "skew", "basis", "residue", "shifted")


@dataclass(frozen=True)
class BasisInterval:
    """Lattice interval L = {a, ..., b}."""

    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            raise DomainError(f"empty interval [{self.a}, {self.b}]")

    @property
    def n(self) -> int:
        return self.b - self.a + 1

    def __contains__(self, x) -> bool:
        return self.a <= x <= self.b

    def fraction(self, k: int) -> RationalFn:
        """f_{L,k}(t) = prod_{x in L} (t - x) / (t - x - k)."""
        pts = range(self.a, self.b + 1)
        return RationalFn(1, list(pts), [x + k for x in pts]).normalize()


@dataclass(frozen=True)
class PoleData:
    location: int
    residue: Fraction


def _integer_simple_poles(g: RationalFn) -> list[PoleData]:
    out = []
    for p, r in g.residues().items():
        if p.denominator != 1:
            raise DomainError(f"pole at non-integer location {p}")
        out.append(PoleData(int(p), r))
    return out


@functools.lru_cache(maxsize=4096)
def _hstar_poles_cached(nu: tuple) -> tuple:
    return tuple(_integer_simple_poles(hstar_fn(nu)))


def hstar_poles(nu: Sequence[int]) -> list[PoleData]:
    """Poles of the normalized H*(t; nu) with their residues; all simple, all integer."""
    nu = as_signature(nu)
    if len(nu) < 1:
        raise DomainError("need N >= 1")
    return list(_hstar_poles_cached(nu))


def basis_coeff(g: RationalFn, L: BasisInterval, k: int, poles: Sequence[PoleData] | None = None) -> Fraction:
    """(g : f_{L,k}), the coefficient of f_{L,k} in the expansion of g."""
    n = L.n
    if n < 2:
        raise DomainError("coefficient extraction needs an interval with at least two points")
    if poles is None:
        poles = _integer_simple_poles(g)
    for p in poles:
        if p.location in L:
            raise DomainError(f"pole {p.location} lies inside [{L.a}, {L.b}]")
    if k >= 1:
        total = Fraction(0)
        for p in poles:
            m = p.location - L.b
            if m >= k:
                total += pochhammer(m - k + 1, n - 2) / pochhammer(m, n) * p.residue
        return (n - 1) * total
    if k <= -1:
        total = Fraction(0)
        for p in poles:
            m = L.a - p.location
            if m >= -k:
                total += pochhammer(m + k + 1, n - 2) / pochhammer(m, n) * p.residue
        return -(n - 1) * total
    total = g.value_at_infinity()
    for p in poles:
        if p.location > L.b:
            total -= p.residue / (p.location - L.b + n - 1)
        else:
            total += p.residue / (L.a - p.location + n - 1)
    return total


def basis_coeffs(g: RationalFn, L: BasisInterval, k_range: tuple[int, int] | None = None) -> dict:
    """Nonzero coefficients (g : f_{L,k}) for k in ``k_range`` (inclusive).

    Without a range the full, finite support is returned.
    """
    poles = _integer_simple_poles(g)
    if k_range is None:
        right = [p.location - L.b for p in poles if p.location > L.b]
        left = [L.a - p.location for p in poles if p.location < L.a]
        k_range = (-max(left, default=0), max(right, default=0))
    out = {}
    for k in range(k_range[0], k_range[1] + 1):
        c = basis_coeff(g, L, k, poles)
        if c:
            out[k] = c
    return out


def reconstruct(coeffs: dict, L: BasisInterval, t) -> Fraction:
    """sum_k c_k f_{L,k}(t)."""
    t = as_fraction(t)
    return sum((c * L.fraction(k)(t) for k, c in coeffs.items()), Fraction(0))


def _check_levels(kappa, nu) -> tuple[tuple, tuple, int, int]:
    kappa = as_signature(kappa)
    nu = as_signature(nu)
    K, N = len(kappa), len(nu)
    if not 1 <= K < N:
        raise DimensionError(f"need 1 <= K < N, got K={K}, N={N}")
    return kappa, nu, K, N


def reldim_dp(kappa: Sequence[int], nu: Sequence[int]) -> Fraction:
    kappa, nu, _, _ = _check_levels(kappa, nu)
    return Fraction(count_paths(kappa, nu), dim_weyl(nu))


def reldim_skew(kappa: Sequence[int], nu: Sequence[int]) -> Fraction:
    kappa, nu, _, _ = _check_levels(kappa, nu)
    return Fraction(skew_count(kappa, nu), dim_weyl(nu))


def reldim_basis(kappa: Sequence[int], nu: Sequence[int]) -> Fraction:
    """det[(H*(.; nu) : f_{L(N,j), kappa_i - i + j})] with L(N,j) = {-N+K-j, ..., -j}."""
    kappa, nu, K, N = _check_levels(kappa, nu)
    g = hstar_fn(nu)
    poles = hstar_poles(nu)
    intervals = [BasisInterval(-N + K - j, -j) for j in range(1, K + 1)]
    matrix = [
        [basis_coeff(g, intervals[j - 1], kappa[i - 1] - i + j, poles) for j in range(1, K + 1)]
        for i in range(1, K + 1)
    ]
    return rational_det(matrix)


def residue_entry(k: int, j: int, K: int, N: int, poles: Sequence[PoleData]) -> Fraction:
    """Entry A_N(i, j) of the residue matrix for k = kappa_i - i + j."""
    d = N - K
    if k >= 1:
        total = Fraction(0)
        for p in poles:
            m = p.location + j  # pole at t = -j + m
            if m >= k:
                total += pochhammer(m - k + 1, d - 1) / pochhammer(m, d + 1) * p.residue
        return d * total
    if k <= -1:
        total = Fraction(0)
        for p in poles:
            m = -N + K - j - p.location  # pole at t = -N + K - j - m
            if m >= -k:
                total += pochhammer(m + k + 1, d - 1) / pochhammer(m, d + 1) * p.residue
        return -d * total
    total = Fraction(1)
    for p in poles:
        right = p.location + j
        left = -N + K - j - p.location
        if right >= 1:
            total -= p.residue / (right + d)
        elif left >= 1:
            total += p.residue / (left + d)
    return total


def reldim_residue(kappa: Sequence[int], nu: Sequence[int]) -> Fraction:
    kappa, nu, K, N = _check_levels(kappa, nu)
    poles = hstar_poles(nu)
    return rational_det(
        [[residue_entry(kappa[i - 1] - i + j, j, K, N, poles) for j in range(1, K + 1)] for i in range(1, K + 1)]
    )


def _shifted_guard(k: int, i: int, j: int, K: int, N: int, poles: Sequence[PoleData]) -> None:
    # every dropped-then-restored term 1 <= m < |k| must vanish: either its
    # residue is zero or (m - |k| + 1)_{N-K-1} has a zero factor
    d = N - K
    a = abs(k)
    for p in poles:
        m = p.location + j if k >= 1 else -N + K - j - p.location
        if 1 <= m < a and pochhammer(m - a + 1, d - 1) != 0:
            raise PreconditionError(
                f"shifted residue form not valid for entry (i={i}, j={j}): term m={m} "
                f"(pole at t={p.location}) does not vanish; N={N} is too small for this kappa"
            )


def shifted_entry(k: int, j: int, K: int, N: int, poles: Sequence[PoleData], i: int = 0) -> Fraction:
    """Entry of the re-indexed residue matrix; checks the vanishing guard first."""
    if k != 0:
        _shifted_guard(k, i, j, K, N, poles)
    d = N - K
    if k >= 1:
        total = Fraction(0)
        for p in poles:
            l = p.location
            if l >= 0:
                total += pochhammer(l + j - k + 1, k - 1) / pochhammer(l + j - k + d, k + 1) * p.residue
        return d * total
    if k <= -1:
        a = -k
        total = Fraction(0)
        for p in poles:
            l = p.location
            if l <= -N - 1:
                total += pochhammer(l + j + d + 1, a - 1) / pochhammer(l + j, a + 1) * p.residue
        return -d * total
    total = Fraction(1)
    for p in poles:
        l = p.location
        if l >= 0:
            total -= p.residue / (l + j + d)
        elif l <= -N - 1:
            # re-indexing m = -N + K - j - l of the unshifted sum gives a plus sign here
            total += p.residue / (-l - j)
    return total


def reldim_residue_shifted(kappa: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Residue determinant with sums over the pole locations of H* directly.

    Raises :class:`PreconditionError` when N is too small for the
    re-indexing to be exact.
    """
    kappa, nu, K, N = _check_levels(kappa, nu)
    poles = hstar_poles(nu)
    rows = []
    for i in range(1, K + 1):
        row = []
        for j in range(1, K + 1):
            row.append(shifted_entry(kappa[i - 1] - i + j, j, K, N, poles, i))
        rows.append(row)
    return rational_det(rows)


_ROUTES = {
    "dp": reldim_dp,
    "skew": reldim_skew,
    "basis": reldim_basis,
    "residue": reldim_residue,
    "shifted": reldim_residue_shifted,
}


def reldim(kappa: Sequence[int], nu: Sequence[int], method: str = "residue") -> Fraction:
    """Relative dimension by the named route (see module docstring)."""
    try:
        route = _ROUTES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return route(kappa, nu)


def markov_NK(nu: Sequence[int], kappa: Sequence[int], method: str = "residue") -> Fraction:
    """Lambda^N_K(nu, kappa) = Dim_K kappa * Dim_{K,N}(kappa, nu) / Dim_N nu."""
    return dim_weyl(kappa) * reldim(kappa, nu, method)


def support(nu: Sequence[int], K: int) -> list[tuple]:
    """All kappa in GT_K joined to nu by at least one path."""
    nu = as_signature(nu)
    N = len(nu)
    if not 1 <= K <= N:
        raise DimensionError("need 1 <= K <= N")
    d = N - K
    ranges = [range(nu[i + d], nu[i] + 1) for i in range(K)]
    out = []
    for kappa in itertools.product(*ranges):
        if all(kappa[i] >= kappa[i + 1] for i in range(K - 1)) and count_paths(kappa, nu) > 0:
            out.append(kappa)
    return out


def genfun_check(nu: Sequence[int], K: int, t: Sequence, method: str = "residue") -> tuple[Fraction, Fraction]:
    """(H*(t_1..t_K; nu), sum_kappa reldim(kappa, nu) S_{kappa|N}(t)); the two agree."""
    nu = as_signature(nu)
    N = len(nu)
    if not 1 <= K < N:
        raise DimensionError("need 1 <= K < N")
    t = tuple(as_fraction(x) for x in t)
    if len(t) != K:
        raise DimensionError(f"need {K} variables")
    lhs = hstar(nu, t)
    rhs = sum((reldim(kappa, nu, method) * sf_eval(kappa, N, t) for kappa in support(nu, K)), Fraction(0))
    return lhs, rhs


def link_row(nu: Sequence[int], K: int, method: str = "residue") -> dict:
    """kappa -> Lambda^N_K(nu, kappa) over the finite support."""
    return {kappa: markov_NK(nu, kappa, method) for kappa in support(nu, K)}


def chain_row(nu: Sequence[int], K: int, method: str = "residue") -> dict:
    """The row of Lambda^N_{N-1} ... Lambda^{K+1}_K at nu, by exact matrix products."""
    nu = as_signature(nu)
    if not 1 <= K < len(nu):
        raise DimensionError("need 1 <= K < N")
    dist = {nu: Fraction(1)}
    for _ in range(len(nu) - K):
        nxt: dict = {}
        for lam, w in dist.items():
            for mu, p in link_row(lam, len(lam) - 1, method).items():
                nxt[mu] = nxt.get(mu, Fraction(0)) + w * p
        dist = nxt
    return {k: v for k, v in sorted(dist.items(), reverse=True) if v}
