"""Exception hierarchy.  Every error raised by the library derives from PlanariumError."""


class PlanariumError(Exception):
    pass


class NonPrime(PlanariumError):
    pass


class EvenCharacteristic(PlanariumError):
    pass


class ReducibleModulus(PlanariumError):
    pass


class DivisionByZero(PlanariumError, ZeroDivisionError):
    pass


class FieldMismatch(PlanariumError):
    pass


class NonzeroConstantTerm(PlanariumError):
    pass


class InexactDivision(PlanariumError):
    pass


class KindOutOfRange(PlanariumError):
    pass


class ZeroParameter(PlanariumError):
    pass


class CharacteristicMismatch(PlanariumError):
    pass


class CeilingExceeded(PlanariumError):
    pass


class NotDOShape(PlanariumError):
    pass


class NotLinearized(PlanariumError):
    pass


class UnknownPreset(PlanariumError):
    pass


class FieldTooLarge(PlanariumError):
    pass


class BadFieldSpec(PlanariumError):
    pass


class ParameterMissing(PlanariumError):
    pass
