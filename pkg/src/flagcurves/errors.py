"""Exception types shared across the package."""


class FlagCurvesError(Exception):
    pass


class ParseError(FlagCurvesError, ValueError):
    """Malformed textual or JSON input."""


class NotNilpotent(FlagCurvesError, ValueError):
    pass


class NotInvertible(FlagCurvesError, ValueError):
    """Matrix is not unipotent, block-diagonal, or a product of those."""


class XNotInNilradical(FlagCurvesError, ValueError):
    pass


class XZero(FlagCurvesError, ValueError):
    """The generator is zero, so the curve is constant."""

    def __init__(self, msg="X = 0 generates a constant curve; curves are assumed non-constant"):
        super().__init__(msg)


class SeriesDomainError(FlagCurvesError, ValueError):
    pass


class BudgetExhausted(FlagCurvesError):
    """Raised by Buchberger when the reduction-step budget runs out.

    ``partial`` holds the generators accumulated so far.
    """

    def __init__(self, partial, steps):
        super().__init__(f"reduction budget exhausted after {steps} steps")
        self.partial = partial
        self.steps = steps
