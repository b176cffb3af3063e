"""Exception types shared across the package."""


class SpinCatError(Exception):
    """Base class for every error this package raises on purpose."""


class NonHermitianInput(SpinCatError):
    """A generator expected to be Hermitian failed the residual gate."""


class IrrepMismatch(SpinCatError):
    """Two objects carry different spin labels (different 2j)."""


class PoleLabel(SpinCatError):
    """The operation needs a finite stereographic label but got the pole."""


class ZeroSpin(SpinCatError):
    """j = 0 has no nonlinear dynamics; the evolution period is undefined."""


class HalfIntegerUnsupported(SpinCatError):
    """The requested identity is only guaranteed for integer j."""


class InvalidN(SpinCatError):
    """Total photon number must be a positive integer."""


class StateFileError(SpinCatError):
    """A state file is missing, malformed, or fails its norm check."""
