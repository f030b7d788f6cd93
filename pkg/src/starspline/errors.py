"""Exception types shared across the package."""


class StarSplineError(Exception):
    """Base class for all starspline errors."""


class DegenerateCell(StarSplineError):
    """A cell of the star is degenerate (origin on a link-face plane,
    collinear triangle, or a non-planar/non-convex link polygon)."""


class NonManifoldLink(StarSplineError):
    """A link edge belongs to an invalid number of link faces."""


class Disconnected(StarSplineError):
    """The link edge graph or the cell adjacency graph is disconnected."""


class DegenerateFace(StarSplineError):
    """An interior two-face has proportional spanning vertices."""


class UnknownName(StarSplineError):
    """Unknown catalog name."""


class NotClosed(StarSplineError):
    """Operation requires a closed vertex star."""


class NotOpen(StarSplineError):
    """Operation requires an open vertex star."""


class TooFewEdges(StarSplineError):
    """A closed star needs at least 4 interior edges."""


class DegreeTooSmall(StarSplineError):
    """Requested degree lies below the certified threshold."""


class NotFull(StarSplineError):
    """Reduction vector does not reduce all multiplicities to zero."""


class NotPositive(StarSplineError):
    """Reduction vector contains zero entries."""


class ConfigNotRegular(StarSplineError):
    """Dual configuration is not regular (a point lies on != 2 lines,
    or lines do not biject with interior edges)."""


class BoundNotAboveOne(StarSplineError):
    """Waldschmidt lower bound must exceed 1."""


class CacheMismatch(StarSplineError):
    """A recomputed value disagrees with the result cache."""
