"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list document.

    ``line_no`` is the 1-based line of the offending token, or None when
    the problem is not tied to a single line (e.g. truncated input).
    """

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DegenerateDegreeError(ValueError):
    """Pair independence ratio requested for a graph with max degree <= 1."""


class ContractViolationError(ValueError):
    """A structural precondition was broken (not a tree, bad root, bad ordering)."""


class EnumerationCapError(RuntimeError):
    """Requested exhaustive computation exceeds the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class ConditioningError(ArithmeticError):
    """A denominator is too close to zero for the quotient to be trusted."""

    def __init__(self, magnitude: float, threshold: float):
        super().__init__(
            f"denominator magnitude {magnitude:.3e} below threshold {threshold:.3e}"
        )
        self.magnitude = magnitude
        self.threshold = threshold


class DomainError(ValueError):
    """Numeric argument outside the domain where a formula is defined."""
