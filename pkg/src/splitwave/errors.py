"""Exception types shared across the package."""


class BlowUpError(RuntimeError):
    """A propagator step left its domain of validity (solution blows up)."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class StepUnderflowError(RuntimeError):
    """Adaptive step size shrank below the representable minimum (stiffness/blow-up)."""


class MaxStepsExceededError(RuntimeError):
    """Adaptive integrator hit its step budget before reaching t_end."""


class NoConvergenceError(RuntimeError):
    """Iterative solver failed to reach the requested tolerance."""

    def __init__(self, message: str, best_residual: float | None = None):
        super().__init__(message)
        self.best_residual = best_residual


class ConfigError(ValueError):
    """Invalid experiment configuration; message names the offending field."""
