"""Exception types shared across the package."""

from __future__ import annotations


class OuterstringError(Exception):
    """Base class for all errors raised by this package."""


class FamilyValidationError(OuterstringError):
    """A raw curve collection violates the grounded-family invariants.

    Carries the full list of violations found; the subclass raised is
    determined by the first violation.
    """

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class DuplicateBasepoint(FamilyValidationError):
    pass


class BaselineViolation(FamilyValidationError):
    pass


class DegenerateIntersection(FamilyValidationError):
    """General-position failure between two curves (overlap, touch, triple
    point, or an intersection landing on a polyline vertex)."""


class DegenerateProbe(OuterstringError):
    """A probe curve violates general position against the queried family."""


class OrderViolation(OuterstringError):
    """A pair (u, v) was passed with v before u in basepoint order."""


class UncoveredCurve(OuterstringError):
    """A curve hit no piercer in a piercer-cover coloring."""


class SideOrderViolation(OuterstringError):
    """Neither P before S nor S before P in basepoint order."""


class UnhitCurve(OuterstringError):
    """A curve of P intersects no curve of S."""


class UnusedSupport(OuterstringError):
    """A curve of S is nobody's first hit."""


class NotAClique(OuterstringError):
    pass


class InconsistentSide(OuterstringError):
    """Both or neither of left/right held for a curve meeting the anchor
    curves; signals a kernel defect, not bad input."""


class NotCrossing(OuterstringError):
    """Signature requested for a curve that does not cross the system."""


class PreconditionFailure(OuterstringError):
    """A stated hypothesis of an extraction procedure fails on the input.

    ``step`` names the violated hypothesis, ``measured`` the offending value.
    """

    def __init__(self, step, measured=None, threshold=None, index=None):
        detail = step
        if measured is not None:
            detail += f" (measured {measured}, required > {threshold})"
        if index is not None:
            detail += f" at index {index}"
        super().__init__(detail)
        self.step = step
        self.measured = measured
        self.threshold = threshold
        self.index = index


class InternalContradiction(OuterstringError):
    """A postcondition that the construction guarantees failed at runtime.

    This is a defect signal: either the kernel or the procedure is wrong.
    """


class GenerationFailure(OuterstringError):
    """A generator could not reach general position within its retry budget."""
