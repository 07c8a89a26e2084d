"""Exception hierarchy.

Two branches matter to callers (and to the CLI exit codes): ValidationError
for rejected input, NumericalError for computations that failed to resolve.
"""


class AbflatError(Exception):
    """Base class for all library errors."""


class ValidationError(AbflatError):
    """Input violates a documented precondition or invariant."""


class NumericalError(AbflatError):
    """A numerical procedure failed to converge or resolve."""


class VertexAtOrigin(ValidationError):
    """A path vertex lies within eps_origin of the puncture."""


class SegmentThroughOrigin(ValidationError):
    """A straight segment passes within eps_origin of the puncture."""


class DegeneratePath(ValidationError):
    """Fewer than 2 distinct vertices, or a zero-length segment."""


class NotClosed(ValidationError):
    """A closed path was required but the endpoints differ."""


class NotGenerator(ValidationError):
    """The supplied loop does not wind exactly once around the puncture."""


class GradientInconsistent(ValidationError):
    """A scalar field's analytic gradient disagrees with finite differences."""


class NonPositiveAlpha(ValidationError):
    """The fine structure constant must be positive."""


class MalformedRatio(ValidationError):
    """A flux-ratio string could not be parsed."""


class WindingNotInteger(NumericalError):
    """An accumulated phase is not close to an integer multiple of 2*pi."""


class QuadratureNoConvergence(NumericalError):
    """Refinement limit reached without two agreeing quadrature passes."""


class SamplingUnresolved(NumericalError):
    """Circle sampling kept aliasing after the refinement limit."""
