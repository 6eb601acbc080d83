"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ParityOrientError(Exception):
    """Base class for all library errors."""


class InvalidGraph(ParityOrientError):
    pass


class MismatchedEdgeSet(ParityOrientError):
    pass


class CyclicOrientation(ParityOrientError):
    pass


class InvalidParameters(ParityOrientError):
    pass


class TransformNotApplicable(ParityOrientError):
    pass


class InvalidPlay(ParityOrientError):
    pass


class NotAcyclic(ParityOrientError):
    pass


class NotTOdd(ParityOrientError):
    pass


class TooLarge(ParityOrientError):
    pass


class NotAPartition(ParityOrientError):
    pass


class PreconditionViolated(ParityOrientError):
    pass


class BadSubOrientation(ParityOrientError):
    def __init__(self, index: int, report: object):
        super().__init__(f"sub-orientation {index} is invalid: {report}")
        self.index = index
        self.report = report


class NotATree(ParityOrientError):
    pass


class NotACycle(ParityOrientError):
    pass


class NotAPath(ParityOrientError):
    pass


class IsBadPathInstance(ParityOrientError):
    pass


class NotAGrid(ParityOrientError):
    pass


class UnsupportedFamily(ParityOrientError):
    pass


class UnsupportedInstance(ParityOrientError):
    pass


class NoClaim(ParityOrientError):
    pass
