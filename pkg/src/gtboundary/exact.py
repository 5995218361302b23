"""Exact rational arithmetic: determinants, factorial powers, rational functions.

Scalars are :class:`fractions.Fraction` throughout. A :class:`RationalFn` is a
rational function of one variable stored in factored form, which is all the
boundary and relative-dimension code ever needs: every zero and pole it meets
sits at a rational location.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, PoleError, UnsupportedAnnulusError

Rational = Fraction


def as_fraction(x) -> Fraction:
    """Coerce ``x`` to a Fraction, accepting ints, Fractions and ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing to convert float {x!r} to an exact rational")
    return Fraction(x)


def rational_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix with rational entries.

    Each row is scaled to integers first, then fraction-free (Bareiss)
    elimination with row pivoting runs on Python integers.
    """
    rows = [[as_fraction(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionError(f"determinant needs a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")
    if n == 0:
        return Fraction(1)

    scale = 1
    M = []
    for row in rows:
        den = math.lcm(*(x.denominator for x in row))
        scale *= den
        M.append([x.numerator * (den // x.denominator) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return Fraction(sign * M[n - 1][n - 1], scale)


def gamma_ratio(t, a: int, b: int) -> Fraction:
    """Gamma(t + a) / Gamma(t + b) for integer offsets, as a finite product."""
    t = as_fraction(t)
    if a >= b:
        out = Fraction(1)
        for m in range(b, a):
            out *= t + m
        return out
    den = Fraction(1)
    for m in range(a, b):
        den *= t + m
    if den == 0:
        raise PoleError(f"Gamma(t+{a})/Gamma(t+{b}) has a pole at t={t}")
    return 1 / den


def falling_power(x, m: int) -> Fraction:
    """x (x-1) ... (x-m+1); equals 1 for m = 0."""
    if m < 0:
        raise ValueError("falling power needs m >= 0")
    x = as_fraction(x)
    out = Fraction(1)
    for i in range(m):
        out *= x - i
    return out


def pochhammer(x, m: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+m-1); equals 1 for m = 0."""
    if m < 0:
        raise ValueError("Pochhammer symbol needs m >= 0")
    x = as_fraction(x)
    out = Fraction(1)
    for i in range(m):
        out *= x + i
    return out


def vandermonde(xs: Sequence) -> Fraction:
    """prod_{i<j} (x_i - x_j)."""
    out = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out *= as_fraction(xs[i]) - as_fraction(xs[j])
    return out


# -- dense polynomials (coefficient lists, lowest degree first) ---------------

def _poly_mul(p: list, q: list, order: int | None = None) -> list:
    size = len(p) + len(q) - 1
    if order is not None:
        size = min(size, order)
    out = [Fraction(0)] * max(size, 0)
    for i, a in enumerate(p):
        if a == 0 or i >= size:
            continue
        for j, b in enumerate(q):
            if i + j >= size:
                break
            out[i + j] += a * b
    return out


def _poly_from_roots(roots: Iterable[Fraction], scalar: Fraction = Fraction(1)) -> list:
    out = [scalar]
    for r in roots:
        out = _poly_mul(out, [-r, Fraction(1)])
    return out


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [], num
    quot = [Fraction(0)] * (len(num) - dn)
    for k in range(len(num) - 1 - dn, -1, -1):
        c = num[k + dn] / lead
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return quot, num[:dn]


@dataclass(frozen=True)
class RationalFn:
    """scalar * prod(x - z for z in zeros) / prod(x - p for p in poles).

    Zeros and poles are multisets of rational locations. Construction sorts
    them but does not cancel; call :meth:`normalize` for the reduced form.
    """

    scalar: Fraction = Fraction(1)
    zeros: tuple = ()
    poles: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "scalar", as_fraction(self.scalar))
        object.__setattr__(self, "zeros", tuple(sorted(as_fraction(z) for z in self.zeros)))
        object.__setattr__(self, "poles", tuple(sorted(as_fraction(p) for p in self.poles)))

    @classmethod
    def constant(cls, c) -> "RationalFn":
        return cls(as_fraction(c))

    def normalize(self) -> "RationalFn":
        if self.scalar == 0:
            return RationalFn(Fraction(0))
        zeros = Counter(self.zeros)
        poles = Counter(self.poles)
        common = zeros & poles
        zeros.subtract(common)
        poles.subtract(common)
        return RationalFn(self.scalar, zeros.elements(), poles.elements())

    def __call__(self, x) -> Fraction:
        return rfn_eval(self, x)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return RationalFn(self.scalar * other.scalar, self.zeros + other.zeros, self.poles + other.poles).normalize()

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return RationalFn(self.scalar / other.scalar, self.zeros + other.poles, self.poles + other.zeros).normalize()

    def value_at_infinity(self) -> Fraction:
        """Limit as x -> infinity; raises PoleError if the function grows."""
        f = self.normalize()
        if len(f.zeros) > len(f.poles):
            raise PoleError("rational function has a pole at infinity")
        if len(f.zeros) < len(f.poles):
            return Fraction(0)
        return f.scalar

    def pole_multiplicities(self) -> dict:
        return dict(Counter(self.normalize().poles))

    def residues(self) -> dict:
        """Residues at the poles of the normalized function; all poles must be simple."""
        f = self.normalize()
        out = {}
        for p, mult in sorted(Counter(f.poles).items()):
            if mult != 1:
                raise DimensionError(f"pole at {p} has multiplicity {mult}; residues need simple poles")
            val = f.scalar
            for z in f.zeros:
                val *= p - z
            for q in f.poles:
                if q != p:
                    val /= p - q
            out[p] = val
        return out

    def substitute_mobius(self, a, b, c, d) -> "RationalFn":
        """Return the function of u obtained by substituting x = (a u + b) / (c u + d)."""
        a, b, c, d = map(as_fraction, (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("degenerate linear-fractional substitution")
        f = self.normalize()
        scalar = f.scalar
        zeros, poles = [], []
        for roots, bucket, up in ((f.zeros, zeros, True), (f.poles, poles, False)):
            for r in roots:
                lin, const = a - r * c, b - r * d
                factor = lin if lin != 0 else const
                scalar = scalar * factor if up else scalar / factor
                if lin != 0:
                    bucket.append(-const / lin)
        excess = len(f.zeros) - len(f.poles)
        # remaining factor (c u + d) ** (-excess)
        if c != 0:
            scalar /= c ** excess
            root = -d / c
            if excess > 0:
                poles.extend([root] * excess)
            else:
                zeros.extend([root] * (-excess))
        else:
            scalar /= d ** excess
        return RationalFn(scalar, zeros, poles).normalize()

    def partial_fractions(self) -> tuple[list, dict]:
        """Polynomial part and principal parts.

        Returns ``(poly, parts)`` where ``poly`` lists polynomial coefficients
        from degree 0 upwards and ``parts[p][r-1]`` is the coefficient of
        ``(x - p) ** -r``.
        """
        f = self.normalize()
        num = _poly_from_roots(f.zeros, f.scalar)
        den = _poly_from_roots(f.poles)
        poly, _ = _poly_divmod(num, den)
        mults = Counter(f.poles)
        parts = {}
        for p, m in mults.items():
            # Taylor coefficients of (x - p)^m f(x) at p, up to order m - 1
            series = [f.scalar]
            for z in f.zeros:
                series = _poly_mul(series, [p - z, Fraction(1)], m)
            for q, mq in mults.items():
                if q == p:
                    continue
                dq = p - q
                inv = [(-1) ** k / dq ** (k + 1) for k in range(m)]
                for _ in range(mq):
                    series = _poly_mul(series, inv, m)
            series = series + [Fraction(0)] * (m - len(series))
            parts[p] = [series[m - r] for r in range(1, m + 1)]
        return poly, parts


def rfn_eval(f: RationalFn, x) -> Fraction:
    """Exact value of ``f`` at a rational point that is not a pole of normalized ``f``."""
    x = as_fraction(x)
    f = f.normalize()
    den = Fraction(1)
    for p in f.poles:
        den *= x - p
    if den == 0:
        raise PoleError(f"{x} is a pole")
    num = f.scalar
    for z in f.zeros:
        num *= x - z
    return num / den


@dataclass(frozen=True)
class LaurentWindow:
    """Laurent coefficients phi_n for n_min <= n <= n_max.

    ``exact`` windows carry Fractions; numeric ones carry floats accurate to ``tol``.
    """

    n_min: int
    n_max: int
    coeffs: tuple
    exact: bool = True
    tol: float | None = None

    def __post_init__(self):
        if len(self.coeffs) != self.n_max - self.n_min + 1:
            raise DimensionError("window length does not match its index range")

    def __getitem__(self, n: int):
        if not self.n_min <= n <= self.n_max:
            raise IndexError(f"index {n} outside window [{self.n_min}, {self.n_max}]")
        return self.coeffs[n - self.n_min]

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self) -> Iterator[tuple[int, object]]:
        return zip(range(self.n_min, self.n_max + 1), self.coeffs)


def laurent_window(f: RationalFn, n_min: int, n_max: int) -> LaurentWindow:
    """Exact Laurent coefficients of ``f`` in the annulus containing the unit circle.

    Poles inside the unit disk feed the negative powers, poles outside feed
    the nonnegative powers; each principal part expands as a binomial series.
    """
    if n_max < n_min:
        raise ValueError("empty window")
    poly, parts = f.partial_fractions()
    for p in parts:
        if abs(p) == 1:
            raise UnsupportedAnnulusError(f"pole at {p} lies on the unit circle")
    coeffs = []
    for n in range(n_min, n_max + 1):
        c = poly[n] if 0 <= n < len(poly) else Fraction(0)
        for p, cs in parts.items():
            for r, c_r in enumerate(cs, start=1):
                if c_r == 0:
                    continue
                if abs(p) > 1:
                    # (u-p)^-r = (-p)^-r (1 - u/p)^-r
                    if n >= 0:
                        c += c_r * math.comb(n + r - 1, r - 1) / ((-p) ** r * p ** n)
                else:
                    # (u-p)^-r = u^-r (1 - p/u)^-r
                    s = -n - r
                    if s >= 0:
                        c += c_r * math.comb(s + r - 1, r - 1) * p ** s
        coeffs.append(c)
    return LaurentWindow(n_min, n_max, tuple(coeffs))


def geometric_tail_ratio(f: RationalFn) -> tuple[Fraction, Fraction]:
    """Decay ratios of the Laurent coefficients of ``f`` off the unit circle.

    Returns ``(r_plus, r_minus)``: coefficients at large positive n shrink
    like r_plus**n (the reciprocal of the smallest pole modulus outside the
    disk), at large negative n like r_minus**|n| (the largest modulus inside).
    """
    poles = set(f.normalize().poles)
    outside = [abs(p) for p in poles if abs(p) > 1]
    inside = [abs(p) for p in poles if abs(p) < 1]
    r_plus = 1 / min(outside) if outside else Fraction(0)
    r_minus = max(inside) if inside else Fraction(0)
    return r_plus, r_minus
