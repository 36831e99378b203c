"""Exception hierarchy shared by all modules."""


class TorusError(ValueError):
    """Base class for every error raised by this package."""


class NotUnimodular(TorusError):
    pass


class SpectrumNotUnitModulus(TorusError):
    pass


class NotPeriodic(TorusError):
    pass


class OrientationReversing(TorusError):
    pass


class DegenerateFixedSet(TorusError):
    """A power of the map fixes a curve (or the whole torus) instead of finitely many points."""


class NotInvariant(TorusError):
    pass


class WrongOrder(TorusError):
    pass


class NotSpecialLinear(TorusError):
    pass


class NotCoprime(TorusError):
    pass


class GenusNotZero(TorusError):
    pass


class InvalidCharacteristic(TorusError):
    pass
