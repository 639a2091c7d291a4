"""Exception types raised across the package."""


class InvalidArgumentError(ValueError):
    """Bad shape, dimension, index or out-of-range argument."""


class DegenerateInputError(ValueError):
    """Vectors that are linearly dependent within tolerance."""


class InvalidCoefficientsError(ValueError):
    """Interaction coefficients violating the unitarity constraints."""


class InvalidDistributionError(ValueError):
    """Probability vector with negative entries or wrong normalization."""


class InvalidPairError(ValueError):
    """Symmetric density-matrix pair outside the physical region."""


class InvalidPovmError(ValueError):
    """POVM elements not positive or not summing to the identity."""


class DegenerateFrameError(ValueError):
    """Frame vectors whose completeness projection is ill defined."""
