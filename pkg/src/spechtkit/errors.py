"""Exception types raised across the package."""


class SpechtError(ValueError):
    """Base class for invalid input to a spechtkit operation."""


class InvalidShapeError(SpechtError):
    pass


class InvalidTableauError(SpechtError):
    pass


class CharacteristicTwoError(SpechtError):
    """Raised when a theorem-backed routine is asked to work in characteristic 2."""

    def __init__(self, what: str = ""):
        msg = "theorem hypothesis requires characteristic != 2"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class ResidueConditionError(SpechtError):
    pass


class NotInSpanError(SpechtError):
    """The vector does not lie in the span of the given basis."""


class DomainMismatchError(SpechtError):
    pass


class DegreeTooLargeError(SpechtError):
    pass


def require_odd_characteristic(p: int, what: str = "") -> None:
    if p == 2:
        raise CharacteristicTwoError(what)


class TheoremCheckError(RuntimeError):
    """An identity that should hold by theory failed on a computed instance."""
