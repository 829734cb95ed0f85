"""Exception types raised across the discriminator library."""


class DiscriminatorError(Exception):
    """Base class for every error raised on purpose by this package."""


class UniverseMismatchError(DiscriminatorError, ValueError):
    """Raised when objects over different vertex universes are combined."""


class CanonicalFormError(DiscriminatorError, ValueError):
    """Raised when a JSON instance stores an edge that is not sorted non-decreasing."""


class ConfigurationError(DiscriminatorError, ValueError):
    """Raised when a `HYPERDISC_*` environment variable cannot be parsed."""


class BudgetExceededError(DiscriminatorError, ValueError):
    """
    Raised when an exact kernel would range over more tuples than allowed.

    Attributes:
        required (int): Number of tuples the exact computation needs.
        budget (int): The enumeration budget in force.
        hint (str): The sampled alternative the caller should use instead.
    """

    def __init__(self, required: int, budget: int, hint: str):
        self.required = required
        self.budget = budget
        self.hint = hint
        super().__init__(
            f"exact enumeration needs {required} tuples, budget is {budget}; use {hint}"
        )


class ConstructionError(DiscriminatorError, RuntimeError):
    """
    Raised when a randomized or game-based construction cannot be certified.

    Attributes:
        diagnostics (dict): What the construction achieved before giving up.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = dict(diagnostics or {})
        super().__init__(message)


class ConvergenceError(DiscriminatorError, RuntimeError):
    """Raised when an iterative numeric kernel hits its iteration cap."""
