from typing import Optional


class AccyclicError(Exception):
    pass


class NotPrime(AccyclicError, ValueError):
    pass


class ReducibleModulus(AccyclicError, ValueError):
    pass


class DegreeMismatch(AccyclicError, ValueError):
    pass


class FieldTooLarge(AccyclicError, ValueError):
    pass


class FieldMismatch(AccyclicError, ValueError):
    pass


class DivisionByZero(AccyclicError, ZeroDivisionError):
    pass


class NotMonic(AccyclicError, ValueError):
    pass


class ZeroPolynomial(AccyclicError, ValueError):
    pass


class DimensionMismatch(AccyclicError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class Singular(AccyclicError, ValueError):
    pass


class SingularGenerator(Singular):
    pass


class MinpolyNotDividing(AccyclicError, RuntimeError):
    pass


class NotCoprime(AccyclicError, ValueError):
    pass


class TowerMismatch(AccyclicError, ValueError):
    pass


class OutOfDomain(AccyclicError, ValueError):
    pass


class UnknownDescriptor(AccyclicError, ValueError):
    pass


class CapExceeded(AccyclicError, RuntimeError):
    def __init__(self, cap: int, what: str = 'closure'):
        super().__init__(f'{what} exceeded cap of {cap} elements')
        self.cap = cap


class RegistryError(AccyclicError, RuntimeError):
    pass


class FormatError(AccyclicError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
        self.line = line


class BadHeader(FormatError):
    pass


class EntryOutOfRange(FormatError):
    pass


class CountMismatch(FormatError):
    pass


class UnsupportedMode(FormatError):
    pass


class AmbiguousEncoding(FormatError):
    pass


class FetchFailed(AccyclicError, RuntimeError):
    pass
