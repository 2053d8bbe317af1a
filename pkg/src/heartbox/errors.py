"""Exception hierarchy.

Every domain failure derives from :class:`HeartboxError`; the CLI maps these
to exit code 1 and input problems (:class:`MalformedInput`) to exit code 2.
"""
from __future__ import annotations


class HeartboxError(Exception):
    """Base class for domain errors."""


class MalformedInput(HeartboxError):
    """A file or argument could not be parsed into a valid object."""


class FieldMismatch(HeartboxError):
    pass


class AlgebraMismatch(HeartboxError):
    pass


class NotAssociative(HeartboxError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
        self.triple = (i, j, k)


class UnitLawFails(HeartboxError):
    def __init__(self, i: int):
        super().__init__(f"unit does not act as identity on e{i}")
        self.index = i


class CharTooSmall(HeartboxError):
    pass


class SplitFailure(HeartboxError):
    pass


class NoCover(HeartboxError):
    pass


class DepthExceeded(HeartboxError):
    def __init__(self, degree: int, message: str = ""):
        super().__init__(message or f"approximation did not terminate; stopped at degree {degree}")
        self.degree = degree


class CatalogRequired(HeartboxError):
    pass


class NoNonzeroTau(HeartboxError):
    pass


class NotCommutative(HeartboxError):
    pass


class NotFrobenius(HeartboxError):
    pass


class BadPrime(HeartboxError):
    pass


class CharTwo(HeartboxError):
    pass
