"""Exception types shared across the package."""


class SpecValidationError(ValueError):
    """Class parameters violate their constraints.

    Carries the full list of violations so callers can report every problem
    at once instead of stopping at the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InputFormatError(ValueError):
    """Malformed serialized input (series or parameter payload)."""


class PoleError(ArithmeticError):
    """Evaluation hit a vanishing denominator; the message names the point."""


class MarginPoleError(PoleError):
    """The margin denominator A - B*p(z) vanished (distinct from an operator-ratio pole)."""


class NotAMemberError(ValueError):
    """An operation that requires class membership was given a non-member."""


class SchwarzFunctionError(ValueError):
    """A polynomial does not qualify as a Schwarz function (w(0)=0, |w|<=1 on the disk)."""


class UnconvergedError(RuntimeError):
    """An adaptive numeric routine hit its resolution cap before converging."""
