"""Euler's generalized factorials and the Gamma duplication/multiplication formulas."""

from .asymptotics import (
    AsymptoticConstants,
    ConstantEstimate,
    assemble_constants,
    constant_A,
    constant_B,
    constant_C,
    constant_k,
    em_corrected_log,
    estimate_constant,
    leading_asymptote,
)
from .errors import ArgumentError, ConsistencyError, DomainError, PoleError
from .euler_family import FamilyKind, Parameters, delta, gamma_E, product_oracle, theta
from .identities import (
    VerificationReport,
    derivation_chain_check,
    duplication_residual,
    multiplication_residual,
    verify_grid,
)
from .special_core import (
    BernoulliTable,
    LogValue,
    bernoulli_numbers,
    gamma,
    log_gamma,
    stirling_log_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "AsymptoticConstants",
    "BernoulliTable",
    "ConsistencyError",
    "ConstantEstimate",
    "DomainError",
    "FamilyKind",
    "LogValue",
    "Parameters",
    "PoleError",
    "VerificationReport",
    "assemble_constants",
    "bernoulli_numbers",
    "constant_A",
    "constant_B",
    "constant_C",
    "constant_k",
    "delta",
    "derivation_chain_check",
    "duplication_residual",
    "em_corrected_log",
    "estimate_constant",
    "gamma",
    "gamma_E",
    "leading_asymptote",
    "log_gamma",
    "multiplication_residual",
    "product_oracle",
    "stirling_log_gamma",
    "theta",
    "verify_grid",
]
