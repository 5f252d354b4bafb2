"""Leading-order growth laws of the product families and their constants.

    Gamma_E(x) ~ A e^-x (a - b + b x)^(a/b + x - 1/2)
    Delta(x)   ~ B e^-x (a - 2b + 2b x)^(a/(2b) + x - 1/2)
    Theta(x)   ~ C e^-x (a - b + 2b x)^(a/(2b) + x)

with

    A = sqrt(2 pi) / Gamma(a/b) * e^(1 - a/b) * b^(1/2 - a/b)
    B = A evaluated at (a, 2b)
    k = Delta(1/2)
    C = B / (k sqrt(e))

The constants satisfy A = B C / sqrt(e), B = C k sqrt(e) and A = B^2 / (e k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArgumentError, ConsistencyError, DomainError
from .euler_family import (
    FamilyKind,
    Parameters,
    delta,
    effective_parameters,
    product_oracle,
)
from .special_core import (
    LOG_SQRT_2PI,
    LogValue,
    log_gamma,
    stirling_correction,
    stirling_term,
)

__all__ = [
    "AsymptoticConstants",
    "ConstantEstimate",
    "constant_A",
    "log_constant_A",
    "log_constant_B",
    "log_constant_C",
    "log_constant_k",
    "constant_B",
    "constant_C",
    "constant_k",
    "assemble_constants",
    "relation_residuals",
    "leading_asymptote",
    "estimate_constant",
    "em_corrected_log",
    "first_omitted_term",
]

CONSISTENCY_TOLERANCE = 1e-11


def log_rel_residual(log_lhs: float, log_rhs: float) -> float:
    """|1 - rhs/lhs| for two positive numbers given by their logs."""
    return abs(math.expm1(log_rhs - log_lhs))


# Log-space closed forms; constant_* exponentiate these.

def _log_A(a: float, b: float) -> float:
    r = a / b
    return LOG_SQRT_2PI - log_gamma(r) + (1.0 - r) + (0.5 - r) * math.log(b)


def log_constant_A(p: Parameters) -> float:
    return _log_A(p.a, p.b)


def log_constant_B(p: Parameters) -> float:
    return _log_A(p.a, 2.0 * p.b)


def log_constant_k(p: Parameters) -> float:
    return delta(p, 0.5).log_abs


def log_constant_C(p: Parameters) -> float:
    return log_constant_B(p) - log_constant_k(p) - 0.5


def _log_C_closed_form(p: Parameters) -> float:
    # sqrt(2 pi) (2b)^(-a/(2b)) e^(1/2 - a/(2b)) / Gamma(1/2 + a/(2b))
    h = p.a / (2.0 * p.b)
    return LOG_SQRT_2PI - h * math.log(2.0 * p.b) + (0.5 - h) - log_gamma(0.5 + h)


def constant_A(params: Parameters) -> float:
    return math.exp(_log_A(params.a, params.b))


def constant_B(params: Parameters) -> float:
    """A with the step doubled, i.e. the Delta constant."""
    return math.exp(log_constant_B(params))


def constant_k(params: Parameters) -> float:
    """k = Delta(1/2)."""
    return math.exp(log_constant_k(params))


def constant_C(params: Parameters) -> float:
    """C = B / (k sqrt(e)), checked against its own closed form."""
    log_c = log_constant_C(params)
    residual = log_rel_residual(_log_C_closed_form(params), log_c)
    if residual > CONSISTENCY_TOLERANCE:
        raise ConsistencyError(
            f"C from B/(k sqrt e) disagrees with closed form by {residual:.3e} at {params}")
    return math.exp(log_c)


@dataclass(frozen=True)
class AsymptoticConstants:
    A: float
    B: float
    C: float
    k: float


@dataclass(frozen=True)
class ConstantEstimate:
    n_used: int
    estimate: float
    closed_form: float
    relative_error: float


def relation_residuals(params: Parameters) -> dict[str, float]:
    """Relative residuals of the three constant relations, computed in log space.

    Keys: ``A=BC/sqrt(e)``, ``B=Ck*sqrt(e)``, ``A=B^2/(e*k)``.
    """
    log_a = log_constant_A(params)
    log_b = log_constant_B(params)
    log_k = log_constant_k(params)
    log_c = log_constant_C(params)
    return {
        "A=BC/sqrt(e)": log_rel_residual(log_a, log_b + log_c - 0.5),
        "B=Ck*sqrt(e)": log_rel_residual(log_b, log_c + log_k + 0.5),
        "A=B^2/(e*k)": log_rel_residual(log_a, 2.0 * log_b - 1.0 - log_k),
    }


def assemble_constants(params: Parameters) -> AsymptoticConstants:
    """Bundle (A, B, C, k), raising ConsistencyError if any relation fails."""
    for name, residual in relation_residuals(params).items():
        if residual > CONSISTENCY_TOLERANCE:
            raise ConsistencyError(
                f"relation {name} violated by {residual:.3e} at {params}")
    return AsymptoticConstants(
        A=constant_A(params),
        B=constant_B(params),
        C=constant_C(params),
        k=constant_k(params),
    )


def _log_constant(kind: FamilyKind, params: Parameters) -> float:
    if kind is FamilyKind.GAMMA_E:
        return _log_A(params.a, params.b)
    if kind is FamilyKind.DELTA:
        return log_constant_B(params)
    return log_constant_C(params)


def _base_and_exponent(kind: FamilyKind, params: Parameters, x: float) -> tuple[float, float]:
    # Each family is Gamma_E at effective (a', b'), so all three laws share
    # the shape (a' - b' + b' x)^(a'/b' + x - 1/2).
    eff = effective_parameters(kind, params)
    base = eff.a - eff.b + eff.b * x
    if not base > 0.0:
        raise DomainError(f"{kind.value} asymptote needs a positive base, got {base!r} at x = {x!r}")
    return base, eff.a / eff.b + x - 0.5


def _log_growth(kind: FamilyKind, params: Parameters, x: float) -> float:
    # log of e^-x base^exponent, without the constant
    base, exponent = _base_and_exponent(kind, params, x)
    return -x + exponent * math.log(base)


def leading_asymptote(kind: FamilyKind, params: Parameters, x: float) -> LogValue:
    kind = FamilyKind.parse(kind)
    x = float(x)
    return LogValue(1, _log_constant(kind, params) + _log_growth(kind, params, x))


def estimate_constant(kind: FamilyKind, params: Parameters, n: int) -> ConstantEstimate:
    """Recover A, B or C as the ratio of the exact product to its growth law at n."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise ArgumentError(f"n must be an integer, got {n!r}")
    if n < 10:
        raise ArgumentError(f"n must be >= 10, got {n}")
    kind = FamilyKind.parse(kind)
    log_estimate = product_oracle(kind, params, n).log_abs - _log_growth(kind, params, n)
    log_closed = _log_constant(kind, params)
    return ConstantEstimate(
        n_used=n,
        estimate=math.exp(log_estimate),
        closed_form=math.exp(log_closed),
        relative_error=log_rel_residual(log_closed, log_estimate),
    )


def _correction_argument(kind: FamilyKind, params: Parameters, x: float) -> float:
    # w = x + a'/b' - 1, so that Gamma(x + a'/b') = Gamma(w + 1)
    eff = effective_parameters(kind, params)
    return x + eff.a / eff.b - 1.0


def em_corrected_log(kind: FamilyKind, params: Parameters, x: float, terms: int) -> LogValue:
    """Leading asymptote refined by ``terms`` Bernoulli corrections.

    Uses ln Gamma(w + 1) = (w + 1/2) ln w - w + ln sqrt(2 pi) + corrections(w)
    with w = base / b'; with terms = 0 this is exactly the leading asymptote.
    """
    kind = FamilyKind.parse(kind)
    x = float(x)
    leading = leading_asymptote(kind, params, x)
    w = _correction_argument(kind, params, x)
    return LogValue(1, leading.log_abs + stirling_correction(w, terms))


def first_omitted_term(kind: FamilyKind, params: Parameters, x: float, terms: int) -> float:
    """Magnitude of the first correction not included by em_corrected_log."""
    kind = FamilyKind.parse(kind)
    w = _correction_argument(kind, params, float(x))
    return abs(stirling_term(w, terms + 1))
