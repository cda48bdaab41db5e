"""Exception hierarchy."""


class DualHilbertError(Exception):
    """Base class for errors raised by this package."""


class NumericalError(DualHilbertError):
    """A rank decision or kernel computation could not be made consistently."""


class RankDecisionError(NumericalError):
    """Lead-term reduction annihilated a basis vector at the given tolerance."""


class InconsistentCornerError(NumericalError):
    """No kernel element has the requested lead monomial."""


class PointNotOnVarietyError(DualHilbertError):
    """The unit is in the ideal: the point is not on the variety within tolerance."""

    def __init__(self, message="point not on variety within tolerance"):
        super().__init__(message)


class DegreeCapExceeded(DualHilbertError):
    """An exact computation exceeded its configured degree cap."""


class ParseError(DualHilbertError):
    """Malformed system text, with a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.message = message
