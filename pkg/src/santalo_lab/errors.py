"""Exception types raised across the package."""


class GeometryError(Exception):
    """Base class for all geometric failures."""


class TooFewVertices(GeometryError):
    pass


class NonConvex(GeometryError):
    pass


class OriginNotInterior(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


class PointNotInterior(GeometryError):
    pass


class NoConvergence(GeometryError):
    pass


class InvalidDimension(GeometryError):
    pass


class SandwichUnsatisfiable(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class DegenerateBody(GeometryError):
    pass


class NoContacts(GeometryError):
    pass


class AreaOutOfRange(GeometryError):
    pass


class BisectionFailure(GeometryError):
    pass


class DomainError(GeometryError):
    pass


class BehrendPatternMissing(GeometryError):
    pass


class ConvexityLost(GeometryError):
    pass


class NoImprovement(GeometryError):
    pass


class InsufficientData(GeometryError):
    pass


class NonPositiveDeficit(GeometryError):
    pass
