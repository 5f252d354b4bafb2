"""Euler's generalized factorials Gamma_E, Delta and Theta.

For integer n the three families are finite products of an arithmetic
progression with first term a and step b::

    Gamma_E(n) = a (a + b) (a + 2b) ... (a + (n-1) b)
    Delta(n)   = a (a + 2b) (a + 4b) ... (a + (2n-2) b)
    Theta(n)   = (a + b) (a + 3b) ... (a + (2n-1) b)

Each is Gamma_E for shifted parameters: Delta uses (a, 2b) and Theta uses
(a + b, 2b).  The real-argument continuation is therefore always

    Gamma_E(x) = b**x Gamma(x + a/b) / Gamma(a/b)

evaluated at the right parameters.  Every value is returned as a LogValue.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ArgumentError, DomainError
from .special_core import LogValue, log_gamma

__all__ = [
    "Parameters",
    "FamilyKind",
    "product_oracle",
    "gamma_E",
    "delta",
    "theta",
    "continuation",
    "effective_parameters",
    "as_integer",
    "INTEGER_TOLERANCE",
]

INTEGER_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Parameters:
    """First term ``a`` and step ``b`` of the progression; both finite and > 0."""

    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            value = getattr(self, name)
            if isinstance(value, bool):
                raise DomainError(f"{name} must be a real number")
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {value!r}") from None
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be finite and positive, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def ratio(self) -> float:
        """a / b, the shift of the Gamma argument."""
        return self.a / self.b


class FamilyKind(enum.Enum):
    GAMMA_E = "gammaE"
    DELTA = "delta"
    THETA = "theta"

    @classmethod
    def parse(cls, name: str | FamilyKind) -> FamilyKind:
        if isinstance(name, cls):
            return name
        for kind in cls:
            if kind.value.lower() == str(name).lower():
                return kind
        raise ArgumentError(f"unknown family {name!r}; expected one of "
                            + ", ".join(k.value for k in cls))


def effective_parameters(kind: FamilyKind, params: Parameters) -> Parameters:
    """Parameters (a', b') for which ``kind`` at (a, b) equals Gamma_E at (a', b')."""
    kind = FamilyKind.parse(kind)
    if kind is FamilyKind.GAMMA_E:
        return params
    if kind is FamilyKind.DELTA:
        return Parameters(params.a, 2.0 * params.b)
    return Parameters(params.a + params.b, 2.0 * params.b)


def as_integer(x: float, tol: float = INTEGER_TOLERANCE) -> int | None:
    """Return round(x) if x is within ``tol`` of an integer, else None."""
    n = round(x)
    if abs(x - n) <= tol:
        return int(n)
    return None


def product_oracle(kind: FamilyKind, params: Parameters, n: int) -> LogValue:
    """Exact finite product for integer n >= 1, summed in log space."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise ArgumentError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise ArgumentError(f"n must be >= 1, got {n}")
    kind = FamilyKind.parse(kind)
    a, b = params.a, params.b
    if kind is FamilyKind.GAMMA_E:
        factors = (a + j * b for j in range(n))
    elif kind is FamilyKind.DELTA:
        factors = (a + 2 * j * b for j in range(n))
    else:
        factors = (a + (2 * j + 1) * b for j in range(n))
    return LogValue(1, math.fsum(math.log(f) for f in factors))


def _continue(a: float, b: float, x: float, label: str) -> LogValue:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    shift = a / b
    if x + shift <= 0.0:
        raise DomainError(f"{label} needs x + {shift!r} > 0, got x = {x!r}")
    if x == 0.0:
        return LogValue.one()
    return LogValue(1, x * math.log(b) + log_gamma(x + shift) - log_gamma(shift))


def gamma_E(params: Parameters, x: float) -> LogValue:
    """b**x Gamma(x + a/b) / Gamma(a/b) in log space."""
    return _continue(params.a, params.b, x, "gamma_E")


def delta(params: Parameters, x: float) -> LogValue:
    """Gamma_E with the step doubled: (2b)**x Gamma(x + a/(2b)) / Gamma(a/(2b))."""
    return _continue(params.a, 2.0 * params.b, x, "delta")


def theta(params: Parameters, x: float) -> LogValue:
    """Gamma_E at (a + b, 2b): (2b)**x Gamma(x + (a+b)/(2b)) / Gamma((a+b)/(2b))."""
    return _continue(params.a + params.b, 2.0 * params.b, x, "theta")


_CONTINUATIONS = {
    FamilyKind.GAMMA_E: gamma_E,
    FamilyKind.DELTA: delta,
    FamilyKind.THETA: theta,
}


def continuation(kind: FamilyKind, params: Parameters, x: float) -> LogValue:
    return _CONTINUATIONS[FamilyKind.parse(kind)](params, x)
