"""
Exceptions implemented in arithmat.
"""

from __future__ import annotations


class ArithmatError(Exception):
    """
    Base arithmat exception from which all subclasses
    must inherit.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class InvalidGroupError(ArithmatError):
    """
    A group presentation is not in invariant-factor form, or
    an element does not belong to the group it claims to.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class InvalidGroundSetError(ArithmatError):
    """
    Ground set labels are the wrong length or repeat themselves.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class InvalidIndexError(ArithmatError):
    """
    Referring to a ground element that does not exist.
    """

    def __init__(self, index: int, size: int) -> None:
        self.message = f"element index {index} is out of range for a ground set of size {size}"
        super().__init__(self.message)


class SubsetError(ArithmatError):
    """
    An operation needed A ⊆ B and didn't get it.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class CapExceededError(ArithmatError):
    """
    The ground set is too large for an exhaustive computation
    under the currently configured cap.
    """

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        self.message = f"{what} needs ground size <= {cap}, got {size} (raise the cap to override)"
        super().__init__(self.message)


class NotABasisError(ArithmatError):
    """
    A subset was passed where a basis of the matroid was required.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class NotAMoleculeError(ArithmatError):
    """
    The molecular matching was asked for on a matroid that still
    has proper elements.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class NonIntegralMatchingError(ArithmatError):
    """
    A matching count did not come out as an exact integer, which
    only happens for multiplicity tables that break the axioms.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class InvalidOrderError(ArithmatError):
    """
    An element order is not a permutation of the ground set.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class RankDeficiencyError(ArithmatError):
    """
    The list does not span the free part of its ambient group.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class SpecializationError(ArithmatError):
    """
    A polynomial specialization could not be carried out
    with the arguments given.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class InputError(ArithmatError):
    """
    A matroid description could not be turned into a matroid.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class MalformedInputError(InputError):
    """
    The input isn't JSON at all.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class SchemaError(InputError):
    """
    The input is JSON but doesn't describe a matroid: a field is missing
    or has the wrong type, or an explicit table is missing keys.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)
