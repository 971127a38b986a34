"""Exception types shared across the package."""


class SimplexError(ValueError):
    """A sequence of values failed probability-distribution validation."""


class LengthError(SimplexError):
    """Fewer than two outcomes, or an invalid requested length."""


class RangeError(SimplexError):
    """A probability value lies outside [0, 1]."""


class SumError(SimplexError):
    """Values do not sum to one within the simplex tolerance."""


class LengthMismatchError(SimplexError):
    """Two distributions that must share a length do not."""


class DomainError(ValueError):
    """A parameter lies outside its mathematical domain."""


class DegenerateStatsError(DomainError):
    """Summary statistics imply a non-positive negator denominator.

    Unreachable for stats computed from a valid distribution; raised only
    for hand-built stats objects.
    """


class NegatorSyntaxError(ValueError):
    """A negator description string could not be parsed."""
