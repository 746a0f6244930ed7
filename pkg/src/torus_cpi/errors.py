"""Exception types shared across the package."""


class CatalogError(ValueError):
    """Unknown catalog or multiplier name."""


class ToleranceError(RuntimeError):
    """A refinement loop hit its resolution cap before converging.

    Carries the best estimate so callers can downgrade to it deliberately.
    """

    def __init__(self, message, best_estimate, error_estimate):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class ConvergenceError(RuntimeError):
    """A limit construction failed to become Cauchy within its depth cap."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []
