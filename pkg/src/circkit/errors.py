"""Exception types shared across the package."""


class DisconnectedGraphError(ValueError):
    """Raised when a quantity is undefined on a disconnected graph
    (infinite resistance, no hitting time, and so on)."""


class UnsupportedCaseError(ValueError):
    """Raised for cases the closed forms deliberately do not cover,
    e.g. a deleted class r with gcd(r, N) > 1."""
