"""Linear surface waves generated by flow over a submerged vortex.

Special functions (`specfun`), integration engines (`quad`), Hilbert
transforms (`hilbert`), evaluators of the surface velocity u(x)
(`solution`), residual verification (`verify`) and a command-line front
end (`cli`).
"""

from .errors import AccuracyError, DomainError, RangeError
from .solution import (
    FroudeContext,
    Method,
    asymptotic_amplitude,
    surface_profile,
    u_asymptotic,
    u_closed_form,
    u_origin,
    u_quadrature,
    u_vp_oracle,
)

__version__ = "0.1.0"
