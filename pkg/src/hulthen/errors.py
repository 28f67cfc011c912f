"""Exception and warning types shared across the package."""


class HulthenError(Exception):
    """Base class for all package errors."""


class NotBoundError(HulthenError):
    """Requested state has eps_tilde <= 0 and dissolves into the continuum."""


class NoClassicalRegionError(HulthenError):
    """No real turning points: E lies below the well minimum."""


class CentrifugalFreeError(HulthenError):
    """b = 0 (l = 0, D = 3): the generic two-turning-point machinery does not apply."""


class QuadratureFailure(HulthenError):
    """Adaptive quadrature failed to converge to the requested tolerance."""


class NoRootError(HulthenError):
    """Quantization condition has no root in the bracket (state unbound)."""


class OutOfRangeError(HulthenError):
    """Quantum-number / dimension mapping left the valid domain."""


class InvalidCError(HulthenError):
    """Hypergeometric lower parameter C is a nonpositive integer."""


class ParameterPoleError(HulthenError):
    """A Gamma factor was requested at a nonpositive integer."""


class GridTooCoarseError(HulthenError):
    """Node count did not stabilize under grid refinement."""


class NodeProximityError(HulthenError):
    """Log-derivative requested too close to a wavefunction node."""


class ConvergenceFailure(HulthenError):
    """Tridiagonal eigenvalue extraction did not converge."""


class NoBoundStateError(HulthenError):
    """The assembled Hamiltonian has no eigenvalue below threshold."""


class ValidityWarning(UserWarning):
    """Parameters are outside the stated validity regime (nu < 1, L^2 < 0)."""
