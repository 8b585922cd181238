"""Exception types shared across the package.

Undefined construction results are values (see ``geometry.partial``), not
exceptions.  The exceptions here signal misuse or internal defects.
"""


class EuclidError(Exception):
    """Base class for all package errors."""


class ContractError(EuclidError, ValueError):
    """An operation was called outside its documented precondition."""


class HypothesisViolated(ContractError):
    """The hypotheses of a postulate or theorem instance do not hold."""


class PreconditionViolated(ContractError):
    """A bounded quotient was requested with a bound that does not hold."""


class PrecisionExhausted(EuclidError, ArithmeticError):
    """Sign determination failed; indicates an internal defect, never a wrong answer."""


class ScalarSyntaxError(EuclidError, ValueError):
    """A scalar expression string could not be parsed."""
