"""Residual checks for the duplication and multiplication formulas.

All comparisons are made between logarithms and reported as
``|1 - exp(log_rhs - log_lhs)|`` so large arguments never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import fmean
from typing import Callable, Sequence

from .asymptotics import log_constant_A, log_constant_B, log_constant_k, log_rel_residual
from .errors import ArgumentError, DomainError, PoleError
from .euler_family import Parameters
from .special_core import LOG_SQRT_2PI, log_gamma

__all__ = [
    "VerificationReport",
    "duplication_residual",
    "multiplication_residual",
    "derivation_chain_check",
    "verify_grid",
    "DUPLICATION_TOLERANCE",
    "MULTIPLICATION_TOLERANCE",
    "CHAIN_TOLERANCE",
]

DUPLICATION_TOLERANCE = 1e-11
CHAIN_TOLERANCE = 1e-11
MULTIPLICATION_TOLERANCE = 1e-10

_LOG_2PI = 2.0 * LOG_SQRT_2PI
_POLE_WINDOW = 1e-9
_POLE_NUDGE = 1e-6


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    grid: tuple[float, ...]
    residuals: tuple[float, ...]
    max_residual: float
    mean_residual: float
    tolerance: float
    passed: bool
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_residuals(cls, name: str, grid: Sequence[float], residuals: Sequence[float],
                       tolerance: float, labels: Sequence[str] | None = None) -> VerificationReport:
        if len(grid) != len(residuals):
            raise ArgumentError("grid and residuals differ in length")
        if not residuals:
            raise ArgumentError("a report needs at least one residual")
        worst = max(residuals)
        return cls(
            identity_name=name,
            grid=tuple(grid),
            residuals=tuple(residuals),
            max_residual=worst,
            mean_residual=fmean(residuals),
            tolerance=tolerance,
            passed=worst <= tolerance,
            labels=tuple(labels) if labels is not None else None,
        )


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if x <= 0.0:
        if x == math.floor(x):
            raise PoleError(f"Gamma has a pole at x = {x!r}")
        raise DomainError(f"x must be > 0, got {x!r}")
    return x


def _multiplication(n: int, x: float) -> float:
    # Gamma(x) = sqrt(n / (2 pi)^(n-1)) n^(x-1) prod_{j<n} Gamma((x+j)/n)
    log_lhs = log_gamma(x)
    log_n = math.log(n)
    log_rhs = math.fsum(
        [0.5 * (log_n - (n - 1) * _LOG_2PI), (x - 1.0) * log_n]
        + [log_gamma((x + j) / n) for j in range(n)]
    )
    return log_rel_residual(log_lhs, log_rhs)


def duplication_residual(x: float) -> float:
    """Relative residual of Gamma(x) = 2^(x-1)/sqrt(pi) Gamma(x/2) Gamma((x+1)/2)."""
    # n = 2 of the multiplication formula: sqrt(2/(2 pi)) = 1/sqrt(pi)
    return _multiplication(2, _check_x(x))


def multiplication_residual(n: int, x: float) -> float:
    if isinstance(n, bool) or not isinstance(n, int) or not 2 <= n <= 12:
        raise DomainError(f"n must be an integer in [2, 12], got {n!r}")
    return _multiplication(n, _check_x(x))


def derivation_chain_check(params: Parameters, tolerance: float = CHAIN_TOLERANCE) -> VerificationReport:
    """Replay the constant-relation argument that ends in the duplication formula.

    Three residuals, all at x = a/b:
      * A = B^2 / (e k) with the closed forms of A, B and k;
      * 1/Gamma(x) = sqrt(2 pi) 2^(1/2 - x) / (Gamma(x/2) Gamma(1/2 + x/2)),
        what remains of that relation once the common factors cancel;
      * the duplication formula itself.
    """
    x = params.ratio
    log_a = log_constant_A(params)
    ab_residual = log_rel_residual(log_a, 2.0 * log_constant_B(params) - 1.0 - log_constant_k(params))

    half = 0.5 * x
    cancelled = log_rel_residual(
        -log_gamma(x),
        LOG_SQRT_2PI + (0.5 - x) * math.log(2.0) - log_gamma(half) - log_gamma(0.5 + half),
    )
    return VerificationReport.from_residuals(
        "chain",
        grid=(x, x, x),
        residuals=(ab_residual, cancelled, duplication_residual(x)),
        tolerance=tolerance,
        labels=("A=B^2/(e*k)", "cancelled", "duplication"),
    )


def _nudge_off_poles(x: float, poles_of: Callable[[float], Sequence[float]]) -> float:
    for arg in poles_of(x):
        if arg <= _POLE_WINDOW and abs(arg - round(arg)) <= _POLE_WINDOW:
            return x + _POLE_NUDGE
    return x


def verify_grid(identity: str, x_min: float, x_max: float, steps: int,
                tolerance: float | None = None, n: int | None = None) -> VerificationReport:
    """Evaluate a residual on ``steps`` evenly spaced points of [x_min, x_max].

    ``identity`` is ``"duplication"`` or ``"multiplication"``; the latter
    needs ``n``.  Default tolerances are 1e-11 and 1e-10 respectively.
    """
    x_min, x_max = float(x_min), float(x_max)
    if not (math.isfinite(x_min) and math.isfinite(x_max)):
        raise ArgumentError("grid bounds must be finite")
    if not 0.0 < x_min < x_max:
        raise ArgumentError(f"need 0 < x_min < x_max, got [{x_min!r}, {x_max!r}]")
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        raise ArgumentError(f"steps must be an integer >= 2, got {steps!r}")

    if identity == "duplication":
        if n not in (None, 2):
            raise ArgumentError("duplication takes no n (it is the n = 2 case)")
        residual = duplication_residual
        gamma_args = lambda x: (x, x / 2.0, (x + 1.0) / 2.0)
        name = "duplication"
        default_tol = DUPLICATION_TOLERANCE
    elif identity == "multiplication":
        if n is None:
            raise ArgumentError("multiplication needs n")
        if isinstance(n, bool) or not isinstance(n, int) or not 2 <= n <= 12:
            raise ArgumentError(f"n must be an integer in [2, 12], got {n!r}")
        residual = lambda x: multiplication_residual(n, x)
        gamma_args = lambda x: (x,) + tuple((x + j) / n for j in range(n))
        name = f"multiplication(n={n})"
        default_tol = MULTIPLICATION_TOLERANCE
    else:
        raise ArgumentError(f"unknown identity {identity!r}")

    tol = default_tol if tolerance is None else float(tolerance)
    if not tol >= 0.0:
        raise ArgumentError(f"tolerance must be >= 0, got {tolerance!r}")

    span = x_max - x_min
    grid = [x_min + span * i / (steps - 1) for i in range(steps)]
    grid[-1] = x_max
    grid = [_nudge_off_poles(x, gamma_args) for x in grid]
    return VerificationReport.from_residuals(name, grid, [residual(x) for x in grid], tol)
