"""Exception types raised by the geometry, forms, and quadrature layers."""


class SphwhitneyError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroVector(SphwhitneyError):
    """A vector too close to zero to normalize."""


class NonPositiveOrientation(SphwhitneyError):
    """Vertex triple with non-positive (or numerically degenerate) determinant."""


class AntipodalVertices(SphwhitneyError):
    """Two construction points are antipodal or nearly so."""


class AntipodalPoint(SphwhitneyError):
    """Evaluation point is antipodal (or nearly so) to a triangle vertex."""


class OutsideTriangle(SphwhitneyError):
    """Evaluation point lies outside the closed geodesic triangle."""


class DegenerateSubTriangle(SphwhitneyError):
    """A sub-triangle determinant vanished where a division by it is required."""


class PoleProximity(SphwhitneyError):
    """Evaluation point is inside the guard band around a vertex antipode."""


class SubDeterminantZero(SphwhitneyError):
    """Point lies on a great circle through two vertices (0/0 locus)."""


class NonFiniteSample(SphwhitneyError):
    """An integrand sample evaluated to a non-finite value."""
