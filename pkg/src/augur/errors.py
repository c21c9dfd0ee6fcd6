"""Exception hierarchy shared across the package."""

from __future__ import annotations


class AugurError(Exception):
    """Base class for all errors raised by this package."""


class DescriptorError(AugurError):
    """A descriptor could not be parsed or fails its invariants.

    Every instance carries a 1-based source position so callers can point
    at the offending text.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line:
            return f"line {self.line}, column {self.column}: {msg}"
        return msg


class DescriptorSyntaxError(DescriptorError):
    """Input text does not match the descriptor grammar."""


class UnknownLayerKindError(DescriptorError):
    """A layer declares a type outside the supported kinds."""


class DuplicateLayerNameError(DescriptorError):
    """Two layers share a name."""


class DanglingBottomError(DescriptorError):
    """A layer consumes a blob that no earlier layer (or the input) produces."""


class MissingRequiredParamError(DescriptorError):
    """A layer omits a parameter its kind requires."""


class InvalidDescriptorError(DescriptorError):
    """A structurally parsed descriptor violates a semantic invariant."""


class ShapeError(AugurError):
    """Base class for shape-inference failures."""


class KernelExceedsInputError(ShapeError):
    """Kernel larger than the padded input extent."""


class ShapeMismatchError(ShapeError):
    """Multi-input layer fed blobs with incompatible shapes."""


class FitError(AugurError):
    """Base class for timing-model fitting failures."""


class InsufficientSamplesError(FitError):
    """Too few benchmark samples to fit the requested model."""


class DegenerateDesignError(FitError):
    """The fit's basis matrix is rank deficient."""


class EmptyRegionError(FitError):
    """A piecewise region received no samples at all."""


class BenchError(AugurError):
    """Base class for benchmarking failures."""


class AllocationFailureError(BenchError):
    """A benchmark cell would exceed the configured memory cap."""


class ConcurrentBenchError(BenchError):
    """A second benchmark was started while one is already running."""
