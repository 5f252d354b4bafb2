"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of a function."""


class PoleError(DomainError):
    """Argument hits a pole of the Gamma function (0, -1, -2, ...)."""


class ArgumentError(ValueError):
    """Malformed argument: wrong type, parity, or range of a control parameter."""


class ConsistencyError(ArithmeticError):
    """An identity that must hold to rounding error was violated.

    Raised instead of returning a flagged value: these relations are theorems,
    so a violation means a bug in the numerical layer.
    """
