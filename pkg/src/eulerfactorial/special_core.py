"""Real-argument Gamma and log-Gamma, Bernoulli numbers and the Stirling series.

Everything here works in IEEE double precision.  Values too large for a double
are carried as :class:`LogValue` (sign plus log of the magnitude).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ArgumentError, DomainError, PoleError

__all__ = [
    "LogValue",
    "BernoulliTable",
    "log_gamma",
    "gamma",
    "gamma_log_value",
    "bernoulli_numbers",
    "stirling_log_gamma",
    "stirling_correction",
    "stirling_term",
    "LOG_SQRT_2PI",
    "MAX_BERNOULLI_INDEX",
]

LOG_SQRT_2PI = 0.91893853320467274178
MAX_BERNOULLI_INDEX = 60

# Lanczos approximation, g = 7, n = 9 (Godfrey's double-precision set).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Above this the Stirling series with _STIRLING_TERMS terms is exact to rounding.
_STIRLING_CUTOFF = 10.0
_STIRLING_TERMS = 8


@dataclass(frozen=True)
class LogValue:
    """A real number stored as ``sign * exp(log_abs)``.

    ``sign`` is 0 exactly when the value is zero, in which case ``log_abs`` is
    ``-inf``.
    """

    sign: int
    log_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ArgumentError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0 and self.log_abs != -math.inf:
            raise ArgumentError("zero LogValue must have log_abs = -inf")
        if self.sign != 0 and not math.isfinite(self.log_abs):
            raise ArgumentError("non-zero LogValue needs a finite log_abs")

    @classmethod
    def from_float(cls, value: float) -> LogValue:
        if not math.isfinite(value):
            raise DomainError(f"cannot represent {value!r} as a LogValue")
        if value == 0.0:
            return cls.zero()
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @classmethod
    def zero(cls) -> LogValue:
        return cls(0, -math.inf)

    @classmethod
    def one(cls) -> LogValue:
        return cls(1, 0.0)

    def __mul__(self, other: LogValue) -> LogValue:
        if not isinstance(other, LogValue):
            return NotImplemented
        sign = self.sign * other.sign
        if sign == 0:
            return LogValue.zero()
        return LogValue(sign, self.log_abs + other.log_abs)

    def __truediv__(self, other: LogValue) -> LogValue:
        if not isinstance(other, LogValue):
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogValue")
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.sign * other.sign, self.log_abs - other.log_abs)

    def __pow__(self, exponent: float) -> LogValue:
        if self.sign < 0:
            raise DomainError("real power of a negative LogValue")
        if self.sign == 0:
            if exponent <= 0:
                raise DomainError("non-positive power of zero")
            return LogValue.zero()
        return LogValue(1, self.log_abs * exponent)

    def to_float(self) -> float:
        """Linear-scale value; raises OverflowError if it exceeds double range."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __float__(self) -> float:
        return self.to_float()


def _check_real(x: float, name: str = "x") -> float:
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {x!r}") from None
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _lanczos_log_gamma(x: float) -> float:
    # valid for x >= 0.5
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return LOG_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(series)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for finite x > 0."""
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    if x >= _STIRLING_CUTOFF:
        return stirling_log_gamma(x, _STIRLING_TERMS)
    if x < 0.5:
        # lgamma(x) = lgamma(x + 1) - log(x), keeps the small-x pole exact
        return _lanczos_log_gamma(x + 1.0) - math.log(x)
    return _lanczos_log_gamma(x)


def _sin_pi(x: float) -> float:
    # sin(pi*x) with argument reduction so large |x| keeps its accuracy
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _check_pole(x: float) -> None:
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at x = {x!r}")


def gamma_log_value(x: float) -> LogValue:
    """Gamma(x) as a LogValue; handles negative non-integer x via reflection."""
    x = _check_real(x)
    _check_pole(x)
    if x > 0.0:
        return LogValue(1, log_gamma(x))
    s = _sin_pi(x)
    # Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), with 1 - x > 1
    return LogValue(1 if s > 0 else -1,
                    math.log(math.pi) - math.log(abs(s)) - log_gamma(1.0 - x))


def gamma(x: float) -> float:
    """Gamma(x) for real x off the poles.

    Raises OverflowError when the result does not fit in a double.
    """
    x = _check_real(x)
    _check_pole(x)
    if x >= 0.5:
        return math.exp(log_gamma(x))
    return math.pi / (_sin_pi(x) * gamma(1.0 - x))


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_max_index (B_1 = -1/2), rounded once from exact rationals."""

    max_index: int
    values: tuple[float, ...]
    exact: tuple[Fraction, ...]

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _exact_bernoulli(max_index: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, max_index + 1):
        # sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -sum_{j<m} C(m+1, j) B_j / (m+1)
        acc = sum((math.comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli_numbers(max_index: int) -> BernoulliTable:
    if isinstance(max_index, bool) or not isinstance(max_index, int):
        raise ArgumentError(f"max_index must be an int, got {max_index!r}")
    if max_index < 2 or max_index % 2 or max_index > MAX_BERNOULLI_INDEX:
        raise ArgumentError(
            f"max_index must be even and in [2, {MAX_BERNOULLI_INDEX}], got {max_index}")
    exact = _exact_bernoulli(max_index)
    return BernoulliTable(max_index, tuple(float(v) for v in exact), exact)


@lru_cache(maxsize=None)
def _stirling_coefficients(terms: int) -> tuple[float, ...]:
    # B_{2j} / (2j (2j - 1)), from exact rationals
    table = _exact_bernoulli(max(2, 2 * terms))
    return tuple(float(table[2 * j] / (2 * j * (2 * j - 1))) for j in range(1, terms + 1))


def _check_terms(terms: int) -> int:
    if isinstance(terms, bool) or not isinstance(terms, int) or terms < 0:
        raise ArgumentError(f"terms must be a non-negative int, got {terms!r}")
    if 2 * terms > MAX_BERNOULLI_INDEX:
        raise ArgumentError(
            f"terms must be <= {MAX_BERNOULLI_INDEX // 2}, got {terms}")
    return terms


def stirling_correction(x: float, terms: int) -> float:
    """Sum of the first ``terms`` Bernoulli corrections B_2j / (2j(2j-1) x^(2j-1)).

    Asymptotic, not convergent: for fixed x the terms eventually grow.
    """
    x = _check_real(x)
    _check_terms(terms)
    if x <= 0.0:
        raise DomainError(f"Stirling correction needs x > 0, got {x!r}")
    if terms == 0:
        return 0.0
    coeffs = _stirling_coefficients(terms)
    inv2 = 1.0 / (x * x)
    # Horner in 1/x^2, smallest term first
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * inv2 + c
    return acc / x


def stirling_term(x: float, j: int) -> float:
    """The j-th Stirling correction B_2j / (2j(2j-1) x^(2j-1)), j >= 1."""
    x = _check_real(x)
    if isinstance(j, bool) or not isinstance(j, int) or j < 1:
        raise ArgumentError(f"j must be a positive int, got {j!r}")
    _check_terms(j)
    return _stirling_coefficients(j)[-1] / x ** (2 * j - 1)


def stirling_log_gamma(x: float, terms: int) -> float:
    """Stirling series (x - 1/2) ln x - x + ln sqrt(2 pi) + corrections, for x >= 1.

    The truncation error is bounded by the first omitted correction term.
    """
    x = _check_real(x)
    _check_terms(terms)
    if x < 1.0:
        raise DomainError(f"stirling_log_gamma needs x >= 1, got {x!r}")
    return (x - 0.5) * math.log(x) - x + LOG_SQRT_2PI + stirling_correction(x, terms)
