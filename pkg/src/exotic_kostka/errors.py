"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    """Division of a rational function by zero."""


class DimensionMismatch(ValueError):
    """Matrix shapes do not conform."""


class SizeMismatch(ValueError):
    """Partitions or bipartitions of different total size were compared."""


class NotPolynomial(ArithmeticError):
    """A rational function expected to be polynomial has a nontrivial denominator."""


class SingularEvaluation(ZeroDivisionError):
    """Evaluation point is a root of a denominator (e.g. of a torus order)."""


class InvalidField(ValueError):
    """q is not an admissible finite-field size for the requested operation."""


class RankTooLarge(ValueError):
    """Requested rank exceeds the implementation bound."""


class InconsistentSystem(ArithmeticError):
    """An overdetermined matrix equation failed at an incomparable pair.

    Signals a mis-transcribed partial order or a wrong input matrix.
    """


class ZeroDiagonal(ArithmeticError):
    """A diagonal entry of the solved matrix vanished."""


class IdentityFailure(AssertionError):
    """A polynomial identity that should hold exactly does not."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EvennessViolation(ArithmeticError):
    """t^(-a) * Ktilde has an odd-power or negative-power term."""


class DimensionInconsistency(ArithmeticError):
    """Orbit dimension bookkeeping failed."""


class DecompositionFailure(ArithmeticError):
    """A direct-sum decomposition rank check failed."""


class NonpositiveWeight(ArithmeticError):
    """A contracting one-parameter action has a weight <= 0."""


class UnlabeledOrbit(RuntimeError):
    """An enumerated orbit contains no normal-form representative."""


class BudgetExceeded(RuntimeError):
    """A brute-force state space exceeds the configured cap."""
