"""Exception types raised by grasscode."""


class GrasscodeError(Exception):
    """Base class for all library errors."""


class NotPrimePower(GrasscodeError, ValueError):
    pass


class FieldTooLarge(GrasscodeError, ValueError):
    pass


class ZeroSpace(GrasscodeError, ValueError):
    pass


class DimensionMismatch(GrasscodeError, ValueError):
    pass


class ParameterOutOfRange(GrasscodeError, ValueError):
    pass


class NotIncident(GrasscodeError, ValueError):
    pass


class InvalidProfile(GrasscodeError, ValueError):
    pass


class DegenerateInput(GrasscodeError, ValueError):
    pass


class ZeroFunctional(GrasscodeError, ValueError):
    pass


class NotAClique(GrasscodeError, ValueError):
    pass


class SearchSpaceTooLarge(GrasscodeError, RuntimeError):
    """A combinatorial search exceeded its configured guard."""
