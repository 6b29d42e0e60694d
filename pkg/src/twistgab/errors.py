"""Exception types shared across the package."""


class TwistgabError(Exception):
    """Base class for all package-specific errors."""


class FieldConstructionError(TwistgabError, ValueError):
    """Raised when a tower cannot be built (non-prime p, reducible modulus, ...)."""


class SpecInvariantError(TwistgabError, ValueError):
    """Raised when a code specification violates one of its invariants."""


class BudgetExceededError(TwistgabError):
    """Raised when an exhaustive enumeration would exceed the configured budget."""


class ConsistencyError(TwistgabError):
    """Raised when two independent computation routes disagree.

    This is the loudest signal the library can emit: it means either a bug
    or a counterexample to a verified claim, and is never swallowed.
    """
