"""Exceptions shared across the package."""


class StabpolyError(Exception):
    """Base class for package errors."""


class DomainError(StabpolyError):
    """Invalid input or violated precondition (bad vertex set, wrong graph class, ...)."""


class BudgetError(StabpolyError):
    """A configured computation budget (vertex count, ray cap, time) was exceeded."""
