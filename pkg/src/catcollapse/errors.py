"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class IncompatibleStateError(DomainError):
    """Two states do not share the same mode count or branch overlap."""


class SingularOverlapError(DomainError):
    """Branch overlap too close to 1: the branches are indistinguishable
    and every measurement construction loses all precision."""


class LinearDependenceError(DomainError):
    """A Gram matrix is singular, so the input states are linearly dependent."""


class CutoffError(DomainError):
    """A photon-number cutoff is too small for the requested state."""


class InvalidStateError(DomainError):
    """A matrix fails the density-matrix requirements beyond tolerance."""


class SizeLimitError(DomainError):
    """A dense computation was requested above the supported mode count."""


class NoCrossingError(RuntimeError):
    """A bracketing root search found no sign change."""
