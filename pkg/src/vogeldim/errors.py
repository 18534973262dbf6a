"""Exception hierarchy shared by all modules."""


class VogelDimError(Exception):
    """Base class for every error raised by this package."""


class InvalidDiagram(VogelDimError, ValueError):
    pass


class VariableMismatch(VogelDimError, ValueError):
    pass


class ZeroPrefactor(VogelDimError, ValueError):
    pass


class Divergent(VogelDimError, ArithmeticError):
    """A product has more vanishing denominator factors than numerator ones."""


class PoleAtPoint(Divergent):
    """A rational factor form has a vanishing denominator factor."""


class Indeterminate(VogelDimError, ArithmeticError):
    """Vanishing factors do not pair up and no degeneration direction resolves them."""


class RankTooSmall(VogelDimError, ValueError):
    pass


class FitUnstable(VogelDimError, RuntimeError):
    pass


class AreaMismatch(VogelDimError, ValueError):
    pass


class Infeasible(VogelDimError):
    """Reconstruction input multisets cannot be matched (e.g. unequal sizes)."""

    def __init__(self, message, multisets=None):
        super().__init__(message)
        self.multisets = multisets or {}


class ProblemTooLarge(VogelDimError, ValueError):
    pass
