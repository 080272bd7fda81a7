"""Exception types shared across the package."""


class EllipseGemError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(EllipseGemError, ValueError):
    """Invalid configuration value or combination."""


class NumericError(EllipseGemError, ArithmeticError):
    """Numerically invalid input (non-finite entries, degenerate trace, not PSD)."""


class ConvergenceError(EllipseGemError, RuntimeError):
    """An iterative solver failed to reach its convergence certificate."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InfeasibleError(EllipseGemError, ValueError):
    """Problem instance cannot be solved (e.g. more clusters than observations)."""
