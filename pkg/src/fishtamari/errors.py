"""Exception types raised across the package."""


class FishTamariError(ValueError):
    pass


class MalformedPath(FishTamariError):
    pass


class NotADyckPath(MalformedPath):
    pass


class EmptyPath(FishTamariError):
    pass


class SizeMismatch(FishTamariError):
    pass


class NotAnInterval(FishTamariError):
    pass


class EmptyInterval(FishTamariError):
    pass


class IndexOutOfRange(FishTamariError, IndexError):
    pass


class InvalidFish(FishTamariError):
    pass


class EmptyFish(FishTamariError):
    pass


class BudgetExceeded(FishTamariError):
    pass


class NonExactDivision(ArithmeticError):
    """A divided difference left a remainder; always an implementation bug."""


class NonIntegralCoefficient(ArithmeticError):
    pass
