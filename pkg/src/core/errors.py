"""
Error Hierarchy
Exceptions raised across the realgeom pipelines
"""

from typing import Optional, Sequence


class RealGeomError(Exception):
    """Base class of every error raised by realgeom"""


class PolynomialSyntaxError(RealGeomError, ValueError):
    """Input text does not follow the polynomial grammar"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnknownVariableError(PolynomialSyntaxError):
    """A variable other than x1, x2, x3 was used"""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable '{name}'", offset)
        self.name = name


class RegionSyntaxError(RealGeomError, ValueError):
    """A region formula such as "1=0,2<=0" could not be parsed"""


class DegreeError(RealGeomError, ValueError):
    """A degree precondition does not hold"""


class ZeroPolynomialError(RealGeomError, ValueError):
    """An operation received the zero polynomial where a nonzero one is required"""


class CommonFactorError(RealGeomError, ValueError):
    """Two polynomials share a factor of positive degree"""

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class NotGenericError(RealGeomError):
    """
    Generic position fails; callers shear the coordinates and retry

    Attributes:
        condition: one of "regularity", "coprimality", "single-critical-point"
    """

    def __init__(self, condition: str, detail: str = ""):
        message = f"not in generic position: {condition}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.condition = condition
        self.detail = detail

    def __reduce__(self):
        return self.__class__, (self.condition, self.detail)


class ShearBudgetExceeded(RealGeomError):
    """No shear of the deterministic schedule produced generic position"""

    def __init__(self, attempted: Sequence, last_error: Optional[NotGenericError] = None):
        reason = f": last failure was {last_error.condition}" if last_error else ""
        super().__init__(f"shear budget of {len(attempted)} exhausted{reason}")
        self.attempted = list(attempted)
        self.last_error = last_error


class RefusedInputError(RealGeomError):
    """
    Input outside the supported class, reported with a classification

    Classifications: "degree", "single plane", "shared plane", "shared surface",
    "indefinite", "empty".
    """

    def __init__(self, classification: str, detail: str = ""):
        message = f"input refused: {classification}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.classification = classification
        self.detail = detail

    def __reduce__(self):
        return self.__class__, (self.classification, self.detail)


class InvariantBreach(RealGeomError, RuntimeError):
    """An internal consistency check failed"""
