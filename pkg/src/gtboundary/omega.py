"""Finitely supported points of the boundary space Omega."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import as_fraction


def _coords(values) -> tuple:
    out = tuple(as_fraction(v) for v in values)
    out = tuple(v for v in out if v != 0)
    if any(v < 0 for v in out):
        raise DomainError(f"coordinates must be nonnegative: {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise DomainError(f"coordinates must be weakly decreasing: {out}")
    return out


@dataclass(frozen=True)
class OmegaPoint:
    """omega = (alpha+, beta+; alpha-, beta-; gamma+, gamma-).

    Only finitely many nonzero alpha/beta coordinates are representable;
    zero coordinates are dropped on construction. delta is derived.
    """

    alpha_plus: tuple = ()
    beta_plus: tuple = ()
    alpha_minus: tuple = ()
    beta_minus: tuple = ()
    gamma_plus: Fraction = Fraction(0)
    gamma_minus: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha_plus", "beta_plus", "alpha_minus", "beta_minus"):
            object.__setattr__(self, name, _coords(getattr(self, name)))
        for name in ("gamma_plus", "gamma_minus"):
            g = as_fraction(getattr(self, name))
            if g < 0:
                raise DomainError(f"{name} must be nonnegative")
            object.__setattr__(self, name, g)
        b_plus = self.beta_plus[0] if self.beta_plus else 0
        b_minus = self.beta_minus[0] if self.beta_minus else 0
        if b_plus + b_minus > 1:
            raise DomainError("beta_1^+ + beta_1^- must not exceed 1")

    @property
    def delta_plus(self) -> Fraction:
        return self.gamma_plus + sum(self.alpha_plus, Fraction(0)) + sum(self.beta_plus, Fraction(0))

    @property
    def delta_minus(self) -> Fraction:
        return self.gamma_minus + sum(self.alpha_minus, Fraction(0)) + sum(self.beta_minus, Fraction(0))

    @property
    def is_rational(self) -> bool:
        """True when Phi(u; omega) is a rational function of u (no exponential factor)."""
        return self.gamma_plus == 0 and self.gamma_minus == 0

    def reflect(self) -> "OmegaPoint":
        """Swap plus and minus coordinates (Phi(u) becomes Phi(1/u))."""
        return OmegaPoint(
            self.alpha_minus, self.beta_minus, self.alpha_plus, self.beta_plus,
            self.gamma_minus, self.gamma_plus,
        )

    def to_json(self) -> dict:
        def enc(xs):
            return [str(x) for x in xs]

        return {
            "alpha_plus": enc(self.alpha_plus),
            "beta_plus": enc(self.beta_plus),
            "alpha_minus": enc(self.alpha_minus),
            "beta_minus": enc(self.beta_minus),
            "gamma_plus": str(self.gamma_plus),
            "gamma_minus": str(self.gamma_minus),
        }

    @classmethod
    def from_json(cls, data: dict) -> "OmegaPoint":
        known = {"alpha_plus", "beta_plus", "alpha_minus", "beta_minus", "gamma_plus", "gamma_minus"}
        extra = set(data) - known
        if extra:
            raise DomainError(f"unknown omega keys: {sorted(extra)}")

        def num(x):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise DomainError(f"omega coordinates must be integers or 'p/q' strings, got {x!r}")
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"bad rational {x!r}") from exc

        lists = {}
        for key in ("alpha_plus", "beta_plus", "alpha_minus", "beta_minus"):
            raw = data.get(key, [])
            if not isinstance(raw, list):
                raise DomainError(f"{key} must be a list")
            lists[key] = [num(x) for x in raw]
        return cls(
            gamma_plus=num(data.get("gamma_plus", "0")),
            gamma_minus=num(data.get("gamma_minus", "0")),
            **lists,
        )
