"""Exception types raised across the package."""


class SemigroupError(ValueError):
    """Base class for violated hypotheses on a weight system or query."""


class NonPositiveGenerator(SemigroupError):
    pass


class RatioOrderViolated(SemigroupError):
    pass


class AllRatiosEqual(SemigroupError):
    pass


class GeneratorsNotCoprime(SemigroupError):
    pass


class GeneratorsNotDistinct(SemigroupError):
    pass


class EmptyMultiset(SemigroupError):
    pass


class NotInSemigroup(SemigroupError):
    pass


class WidthOverflow(ArithmeticError):
    """Intermediate products would not fit in a signed 128-bit integer."""
