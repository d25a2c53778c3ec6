"""Exceptions shared across the package."""


class ParameterError(ValueError):
    """A parameter is outside the domain an operation is defined on."""


class AmbientMismatchError(ParameterError):
    """Monomials from different variable sets were mixed in one operation."""


class UnknownVariableError(ParameterError):
    """A variable name is not part of the ambient variable set."""


class ResourceCapError(RuntimeError):
    """A computation exceeded a size cap or time budget.

    Deliberately distinct from a mathematical answer: a capped search must
    never be reported as "infeasible" or as a value.
    """
