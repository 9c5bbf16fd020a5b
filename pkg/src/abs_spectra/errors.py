"""Exception types shared across the package."""

from __future__ import annotations


class AbsSpectraError(Exception):
    """Base class for every error raised by this package."""


class OutOfRange(AbsSpectraError, ValueError):
    pass


class SelfLoop(AbsSpectraError, ValueError):
    pass


class DuplicateEdge(AbsSpectraError, ValueError):
    pass


class MalformedGraph6(AbsSpectraError, ValueError):
    pass


class NoConvergence(AbsSpectraError, RuntimeError):
    pass


class NoRootInBracket(AbsSpectraError, ValueError):
    pass


class DegreeMismatch(AbsSpectraError, ValueError):
    pass


class BadParams(AbsSpectraError, ValueError):
    pass


class BadOrder(BadParams):
    pass


class UnknownName(AbsSpectraError, KeyError):
    pass


class BadVertex(AbsSpectraError, ValueError):
    pass


class NotCyclic(AbsSpectraError, ValueError):
    pass


class NotBicyclic(NotCyclic):
    pass


class TooLarge(AbsSpectraError, ValueError):
    pass


class UnknownCheck(AbsSpectraError, KeyError):
    pass
