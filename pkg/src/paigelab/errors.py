"""Exception types shared across the package."""


class PaigelabError(Exception):
    pass


class NotPrime(PaigelabError, ValueError):
    pass


class DegreeTooLarge(PaigelabError, ValueError):
    pass


class FieldMismatch(PaigelabError, TypeError):
    pass


class DivisionByZero(PaigelabError, ZeroDivisionError):
    pass


class ZeroElement(PaigelabError, ValueError):
    pass


class NotUnimodular(PaigelabError, ValueError):
    pass


class OrderBoundExceeded(PaigelabError, RuntimeError):
    pass


class UnsupportedQ(PaigelabError, ValueError):
    pass


class UnsupportedP(PaigelabError, ValueError):
    pass


class CapExceeded(PaigelabError, RuntimeError):
    """Closure grew past its cap; ``count`` holds the partial size."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class BudgetExceeded(PaigelabError, RuntimeError):
    pass


class GroupMismatch(PaigelabError, TypeError):
    pass


class UnmatchedSubgroup(PaigelabError, RuntimeError):
    pass
