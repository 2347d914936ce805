"""Exception hierarchy.

Domain errors derive from :class:`Girth7Error`; the CLI maps them to exit
code 1.  :class:`TheoremViolation` is deliberately *not* a domain error: it
means a witness that must exist could not be built, i.e. a bug.
"""

from __future__ import annotations


class Girth7Error(Exception):
    """Base class for recoverable, input-dependent failures."""


# graph core / formats
class LoopRejected(Girth7Error):
    pass


class VertexOutOfRange(Girth7Error):
    pass


class MalformedGraph6(Girth7Error):
    pass


class SchemaViolation(Girth7Error):
    pass


class DanglingArcReference(Girth7Error):
    pass


# cycles
class AcyclicGraph(Girth7Error):
    pass


class EdgeOutOfRange(Girth7Error):
    pass


class NonCubicVertex(Girth7Error):
    pass


class NonUniformOrbit(Girth7Error):
    pass


class NonHomogeneous(Girth7Error):
    pass


class GirthNot7(Girth7Error):
    def __init__(self, girth: int | None):
        self.girth = girth
        super().__init__(f"girth is {girth if girth is not None else 'infinite'}, expected 7")


class TooSmall(Girth7Error):
    pass


class BudgetExceeded(Girth7Error):
    pass


# families
class NTooSmall(Girth7Error):
    pass


class NotDivisibleBy3(Girth7Error):
    pass


class BadJump(Girth7Error):
    pass


class NotInverseClosed(Girth7Error):
    pass


class ContainsIdentity(Girth7Error):
    pass


class ITooSmall(Girth7Error):
    pass


# schemes
class InvalidScheme(Girth7Error):
    pass


class DegenerateDegree(Girth7Error):
    pass


class WrongSignature(Girth7Error):
    pass


class CoverageFailure(Girth7Error):
    pass


# maps
class InvalidMap(Girth7Error):
    pass


class NotTwoPerEdge(Girth7Error):
    pass


class SearchFailed(Girth7Error):
    pass


# classify
class Unsorted(Girth7Error):
    pass


class NotCubic(Girth7Error):
    pass


class NotConnected(Girth7Error):
    pass


class NotVertexTransitive(Girth7Error):
    pass


class NotGirthRegular(Girth7Error):
    def __init__(self, u: int, v: int, sig_u: tuple, sig_v: tuple):
        self.vertices = (u, v)
        self.signatures = (sig_u, sig_v)
        super().__init__(f"vertex {u} has signature {sig_u} but vertex {v} has {sig_v}")


class UnknownSuite(Girth7Error):
    pass


class TheoremViolation(RuntimeError):
    """A witness the classification guarantees could not be constructed."""
