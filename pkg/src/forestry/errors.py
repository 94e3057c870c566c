"""Shared exception types."""


class ParseError(ValueError):
    """Malformed graph input. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetError(RuntimeError):
    """An enumeration or recursion budget was exceeded."""


class StateBudgetError(BudgetError):
    """Frontier DP ran out of its state budget. Reports the peak boundary width."""

    def __init__(self, states: int, width: int, peak_width: int):
        self.states = states
        self.width = width
        self.peak_width = peak_width
        super().__init__(
            f"frontier state budget exceeded: {states} states at boundary width "
            f"{width} (peak width so far {peak_width})"
        )


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""
