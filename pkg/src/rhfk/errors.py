from __future__ import annotations


class RhfkError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(RhfkError):
    """The diagram data is structurally invalid."""


class DuplicateSegment(DiagramError):
    pass


class NonClosedRegion(DiagramError):
    pass


class BasepointOnCurve(DiagramError):
    pass


class BadParameters(RhfkError, ValueError):
    pass


class NoSolution(RhfkError):
    pass


class InconsistentClass(RhfkError):
    pass


class NonIntegerIndex(RhfkError):
    pass


class NotNice(RhfkError):
    def __init__(self, msg: str, regions=()):
        super().__init__(msg)
        self.regions = list(regions)


class WindowTooSmall(RhfkError):
    pass


class UnstableWindow(RhfkError):
    pass


class UnknownPredicate(RhfkError, KeyError):
    pass


class NotChainMap(RhfkError):
    pass


class NoTau(RhfkError):
    pass


class NoConjugatePartner(RhfkError):
    pass


class DichotomyViolation(RhfkError, AssertionError):
    pass


class BadFraming(RhfkError, ValueError):
    pass
