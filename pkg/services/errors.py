from typing import Any, Optional


class FormedFlagsError(Exception):
    """Base class for every error raised by the services"""


class DomainError(FormedFlagsError, ValueError):
    """A precondition on the inputs does not hold"""


class NotPolynomialError(FormedFlagsError):
    def __init__(self, denominator: Any, message: Optional[str] = None):
        self.denominator = denominator
        super().__init__(message or f"Quotient is not a polynomial, reduced denominator {denominator}")


class ResourceBoundError(FormedFlagsError):
    def __init__(self, bound: str, requested: int, limit: int):
        self.bound = bound
        self.requested = requested
        self.limit = limit
        super().__init__(f"{bound} exceeded: requested {requested}, limit {limit}")


class ConsistencyError(FormedFlagsError):
    """Two computations that must agree do not"""
