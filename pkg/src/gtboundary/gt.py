"""Signatures, interlacing and path counts in the Gelfand-Tsetlin graph.

A signature of length N is a weakly decreasing tuple of integers. The
dynamic-programming counter :func:`count_paths` is the ground-truth oracle
that every closed formula in the package is checked against.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DimensionError, DomainError
from .exact import rational_det, vandermonde
from .omega import OmegaPoint

Signature = tuple


def as_signature(parts: Sequence[int]) -> tuple:
    """Validate and return ``parts`` as a tuple signature."""
    out = []
    for p in parts:
        if isinstance(p, bool) or int(p) != p:
            raise DomainError(f"signature entries must be integers, got {p!r}")
        out.append(int(p))
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise DomainError(f"signature {tuple(out)} is not weakly decreasing")
    return tuple(out)


def reflect(nu: Sequence[int]) -> tuple:
    """(nu_1, ..., nu_N) -> (-nu_N, ..., -nu_1)."""
    return tuple(-x for x in reversed(nu))


def signatures(N: int, lo: int, hi: int) -> Iterator[tuple]:
    """All signatures of length N with parts in [lo, hi], lexicographically decreasing."""
    for combo in itertools.combinations_with_replacement(range(hi, lo - 1, -1), N):
        yield combo


def partitions_inside(bound: Sequence[int], max_len: int | None = None) -> Iterator[tuple]:
    """Partitions mu (trailing zeros stripped) with mu_i <= bound_i."""
    bound = list(bound)
    if max_len is not None:
        bound = bound[:max_len]

    def rec(i, cap):
        yield ()
        if i == len(bound):
            return
        for v in range(1, min(cap, bound[i]) + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    yield from rec(0, max(bound, default=0))


def interlaces(lam: Sequence[int], nu: Sequence[int]) -> bool:
    """True iff nu_{i+1} <= lam_i <= nu_i for every i (lam has one part fewer)."""
    if len(lam) + 1 != len(nu):
        raise DimensionError(f"interlacing needs len(lam) + 1 == len(nu), got {len(lam)} and {len(nu)}")
    return all(nu[i + 1] <= lam[i] <= nu[i] for i in range(len(lam)))


def _children(nu: tuple) -> Iterator[tuple]:
    ranges = [range(nu[i + 1], nu[i] + 1) for i in range(len(nu) - 1)]
    return itertools.product(*ranges)


def dim_weyl(nu: Sequence[int]) -> int:
    """Weyl's product prod_{i<j} (nu_i - nu_j + j - i) / (j - i)."""
    nu = as_signature(nu)
    N = len(nu)
    if N < 1:
        raise DomainError("dimension needs N >= 1")
    val = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            val *= Fraction(nu[i] - nu[j] + j - i, j - i)
    assert val.denominator == 1 and val > 0, val
    return val.numerator


def _reachable(lam: tuple, kappa: tuple) -> bool:
    # a chain kappa < ... < lam exists iff lam_{i+d} <= kappa_i <= lam_i, d = len(lam) - len(kappa)
    d = len(lam) - len(kappa)
    return all(lam[i + d] <= kappa[i] <= lam[i] for i in range(len(kappa)))


def count_paths(kappa: Sequence[int], nu: Sequence[int]) -> int:
    """Number of Gelfand-Tsetlin schemes with bottom row kappa and top row nu.

    Layer-by-layer dynamic programming from nu down to level K; rows that
    can no longer reach kappa are pruned. K == N gives the Kronecker delta.
    """
    kappa = as_signature(kappa)
    nu = as_signature(nu)
    K, N = len(kappa), len(nu)
    if not 1 <= K <= N:
        raise DimensionError(f"need 1 <= K <= N, got K={K}, N={N}")
    if not _reachable(nu, kappa):
        return 0
    layer = {nu: 1}
    for _ in range(N - K):
        nxt = defaultdict(int)
        for row, cnt in layer.items():
            for child in _children(row):
                if _reachable(child, kappa):
                    nxt[child] += cnt
        layer = nxt
    return layer.get(kappa, 0)


def dim_paths(nu: Sequence[int]) -> int:
    """Dim_N nu as the number of paths from level 1, counted by DP."""
    nu = as_signature(nu)
    if len(nu) < 1:
        raise DomainError("dimension needs N >= 1")
    # one pass from the top collects every level-1 endpoint at once
    layer = {nu: 1}
    for _ in range(len(nu) - 1):
        nxt = defaultdict(int)
        for row, cnt in layer.items():
            for child in _children(row):
                nxt[child] += cnt
        layer = nxt
    return sum(layer.values())


@dataclass(frozen=True)
class FrobeniusCoords:
    """Modified Frobenius coordinates (a_i, b_i) = (p_i + 1/2, q_i + 1/2)."""

    pairs: tuple = ()

    @property
    def a(self) -> tuple:
        return tuple(p[0] for p in self.pairs)

    @property
    def b(self) -> tuple:
        return tuple(p[1] for p in self.pairs)

    def size(self) -> Fraction:
        return sum((a + b for a, b in self.pairs), Fraction(0))


def conjugate(lam: Sequence[int]) -> tuple:
    """Transposed Young diagram."""
    lam = [x for x in lam if x > 0]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    lam = as_signature(lam)
    if any(x < 0 for x in lam):
        raise DomainError(f"Young diagram must have nonnegative parts: {lam}")
    lam = tuple(x for x in lam if x > 0)
    lam_t = conjugate(lam)
    d = sum(1 for i, x in enumerate(lam) if x >= i + 1)
    half = Fraction(1, 2)
    return FrobeniusCoords(tuple((lam[i] - (i + 1) + half, lam_t[i] - (i + 1) + half) for i in range(d)))


def split_signature(nu: Sequence[int]) -> tuple[tuple, tuple]:
    """nu -> (nu+, nu-): positive parts, and minus the negative parts read from the end."""
    nu = as_signature(nu)
    plus = tuple(x for x in nu if x > 0)
    minus = tuple(-x for x in reversed(nu) if x < 0)
    return plus, minus


def omega_of(nu: Sequence[int]) -> OmegaPoint:
    """Embedding GT_N -> Omega through scaled modified Frobenius coordinates."""
    nu = as_signature(nu)
    N = len(nu)
    if N < 1:
        raise DomainError("embedding needs N >= 1")
    plus, minus = split_signature(nu)
    fp, fm = frobenius(plus), frobenius(minus)
    return OmegaPoint(
        alpha_plus=[a / N for a in fp.a],
        beta_plus=[b / N for b in fp.b],
        alpha_minus=[a / N for a in fm.a],
        beta_minus=[b / N for b in fm.b],
    )


def weight_multiplicity(nu: Sequence[int], weights: Sequence[int]) -> int:
    """Number of triangular schemes with top row nu whose row sums grow by ``weights``.

    Row j of the scheme has sum n_1 + ... + n_j; this is the coefficient of
    u_1^{n_1} ... u_N^{n_N} in the rational Schur function S_nu.
    """
    nu = as_signature(nu)
    weights = tuple(int(w) for w in weights)
    N = len(nu)
    if len(weights) != N:
        raise DimensionError("need one weight per row")
    if sum(weights) != sum(nu):
        return 0
    partial = list(itertools.accumulate(weights))
    layer = {nu: 1}
    for level in range(N - 1, 0, -1):
        target = partial[level - 1]
        nxt = defaultdict(int)
        for row, cnt in layer.items():
            for child in _children(row):
                if sum(child) == target:
                    nxt[child] += cnt
        layer = nxt
    return sum(layer.values())


def schur_eval(nu: Sequence[int], points: Sequence) -> Fraction:
    """Rational Schur function as the bialternant det[u_i^{nu_j + N - j}] / V(u)."""
    nu = as_signature(nu)
    pts = [Fraction(p) for p in points]
    N = len(nu)
    if len(pts) != N:
        raise DimensionError(f"need {N} points, got {len(pts)}")
    if len(set(pts)) != N:
        raise DomainError("evaluation points must be distinct")
    if any(p == 0 for p in pts):
        raise DomainError("evaluation points must be nonzero")
    num = rational_det([[u ** (nu[j] + N - 1 - j) for j in range(N)] for u in pts])
    return num / vandermonde(pts)
