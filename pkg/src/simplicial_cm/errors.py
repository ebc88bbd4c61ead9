"""Exception hierarchy shared by every layer of the package."""


class SemigroupError(Exception):
    """Base class for all errors raised by simplicial_cm."""


# lattice layer
class NotInSpan(SemigroupError):
    pass


class DependentBasis(SemigroupError):
    pass


class RankDeficient(SemigroupError):
    pass


class NotSublattice(SemigroupError):
    pass


class NotSuperlattice(SemigroupError):
    pass


# semigroup construction
class NotSimplicial(SemigroupError):
    pass


class RankZero(SemigroupError):
    pass


class InternalInconsistency(SemigroupError):
    """Two independent computations of the same quantity disagreed."""


# verification / oracle
class BoundTooSmall(SemigroupError):
    pass


class BoxTooSmall(SemigroupError):
    pass


class PointOutsideSaturation(SemigroupError):
    pass


# cli input
class ParseError(SemigroupError):
    pass


class ValidationError(SemigroupError):
    pass
