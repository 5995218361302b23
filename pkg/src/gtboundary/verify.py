"""Named self-check suites over built-in parameter boxes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .boundary import kernel_grid_error, logconcave_check, phi_eval, phi_fn_of_nu, r_kernel, shift_S
from .gt import count_paths, signatures
from .omega import OmegaPoint
from .reldim import genfun_check, reldim
from .schur import cauchy_sum, hstar, krattenthaler_lemma, krattenthaler_sides, skew_count


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, case) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 20:
            self.failures.append(case)

    def summary(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total}"


def random_rational(rng: random.Random, lo: int = -40, hi: int = 40) -> Fraction:
    """A non-integer rational p/q, so it avoids every integer pole."""
    while True:
        q = rng.choice((2, 3, 5, 7, 11, 13))
        x = Fraction(rng.randint(lo * q, hi * q), q)
        if x.denominator != 1:
            return x


def random_distinct(rng: random.Random, K: int) -> tuple:
    while True:
        t = tuple(random_rational(rng) for _ in range(K))
        if len(set(t)) == K:
            return t


def random_signature(rng: random.Random, N: int, lo: int, hi: int) -> tuple:
    return tuple(sorted((rng.randint(lo, hi) for _ in range(N)), reverse=True))


def random_omega(rng: random.Random, size: int = 3) -> OmegaPoint:
    def coords():
        return sorted((Fraction(rng.randint(0, 12), rng.randint(1, 12)) for _ in range(rng.randint(0, size))), reverse=True)

    bp, bm = coords(), coords()
    bp = [min(b, Fraction(1)) for b in bp]
    cap = 1 - (bp[0] if bp else 0)
    bm = [min(b, cap) for b in bm]
    return OmegaPoint(coords(), bp, coords(), bm)


def box_nus(N_max: int, lo: int, hi: int, N_min: int = 1) -> Iterator[tuple]:
    for N in range(N_min, N_max + 1):
        yield from signatures(N, lo, hi)


def suite_cauchy(seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("cauchy")
    for nu in box_nus(4, 0, 3):
        for K in (1, 2):
            t = random_distinct(rng, K)
            res.record(cauchy_sum(nu, t) == hstar(nu, t), (nu, t))
    return res


def suite_genfun(seed: int = 0, tuples: int = 5, N_max: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("genfun")
    for nu in box_nus(N_max, -2, 2, N_min=2):
        for K in (1, 2):
            if K >= len(nu):
                continue
            for _ in range(tuples):
                t = random_distinct(rng, K)
                lhs, rhs = genfun_check(nu, K, t)
                res.record(lhs == rhs, (nu, K, t))
    return res


def suite_bridge(seed: int = 0, count: int = 100, points: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("bridge")
    for _ in range(count):
        N = rng.randint(1, 6)
        nu = random_signature(rng, N, -4, 4)
        f = phi_fn_of_nu(nu)
        for _ in range(points):
            # keep u away from 1 and from the poles of either side
            while True:
                u = random_rational(rng, -6, 6)
                t = Fraction(-1, 2) + N / (u - 1)
                if t.denominator != 1:
                    break
            res.record(f(u) == hstar(nu, t), (nu, u))
    return res


def suite_shift(seed: int = 0, count: int = 100, points: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("shift")
    for _ in range(count):
        omega = random_omega(rng)
        s = shift_S(omega)
        for _ in range(points):
            u = random_rational(rng, -6, 6)
            try:
                expected = u * phi_eval(omega, u)
            except ZeroDivisionError:
                continue
            res.record(phi_eval(s, u) == expected, (omega, u))
    return res


def suite_jacobi_trudi(seed: int = 0) -> SuiteResult:
    res = SuiteResult("jacobi-trudi")
    for nu in box_nus(6, -2, 2, N_min=2):
        N = len(nu)
        for K in range(1, N):
            for kappa in signatures(K, -2, 2):
                res.record(skew_count(kappa, nu) == count_paths(kappa, nu), ("skew", kappa, nu))
                if N <= 4:
                    res.record(reldim(kappa, nu, "basis") == reldim(kappa, nu, "dp"), ("basis", kappa, nu))
    return res


def suite_krattenthaler(seed: int = 0, draws: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("krattenthaler")
    for K in (1, 2, 3):
        for N in range(K, 7):
            for _ in range(draws):
                lhs, rhs = krattenthaler_sides(K, N, random_distinct(rng, K))
                res.record(lhs == rhs, ("special", K, N))
    for n in (1, 2, 3, 4):
        for _ in range(draws):
            X = [random_rational(rng) for _ in range(n)]
            A = [random_rational(rng) for _ in range(n - 1)]
            B = [random_rational(rng) for _ in range(n - 1)]
            lhs, rhs = krattenthaler_lemma(X, A, B)
            res.record(lhs == rhs, ("lemma", n))
    return res


def suite_logconcave(seed: int = 0) -> SuiteResult:
    res = SuiteResult("logconcave")
    for nu in box_nus(5, -3, 3, N_min=2):
        res.record(logconcave_check(nu), nu)
    return res


def suite_kernels(seed: int = 0) -> SuiteResult:
    import numpy as np

    rng = random.Random(seed)
    res = SuiteResult("kernels")
    Ns = (20, 40, 80, 160)
    for K in (1, 2):
        for j in range(1, K + 1):
            for k in range(-2, 3):
                errs = [kernel_grid_error(k, j, K, N, 128) for N in Ns]
                res.record(all(errs[i] >= 1.6 * errs[i + 1] for i in range(len(Ns) - 1)), ("decay", k, j, K))
                u = np.exp(2j * np.pi * np.array([rng.random() for _ in range(8)]))
                N = rng.randint(K + 1, 30)
                lhs = r_kernel(k, j, K, N, u)
                rhs = r_kernel(-k, K + 1 - j, K, N, 1 / u)
                res.record(bool(np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)), ("symmetry", k, j, K, N))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "cauchy": suite_cauchy,
    "genfun": suite_genfun,
    "bridge": suite_bridge,
    "shift": suite_shift,
    "jacobi-trudi": suite_jacobi_trudi,
    "krattenthaler": suite_krattenthaler,
    "logconcave": suite_logconcave,
    "kernels": suite_kernels,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(seed=seed)
