"""Hilbert transform on the real line.

Sign convention used throughout the package:

    Hg(x) = (1/pi) PV int g(y) / (y - x) dy

so that H[1/(1+x^2)] = -x/(1+x^2), H cos = -sin and H sin = cos.
"""

from dataclasses import dataclass
import enum
import math

import numpy as np

from . import quad
from .errors import DomainError
from .specfun import aux_fg

_PI = math.pi


class CatalogFunction(str, enum.Enum):
    """Functions with a closed-form Hilbert transform.

    ``F_PAPER`` is the forcing 1/(pi(x^2+1)); ``HF_PAPER`` is its transform
    (whose own transform is minus the forcing); ``HF_PRIME_PAPER`` is the
    derivative of the forcing, transforming to (Hf)'.
    """

    LORENTZIAN = "lorentzian"
    F_PAPER = "f_paper"
    HF_PAPER = "hf_paper"
    HF_PRIME_PAPER = "hf_prime_paper"
    COSINE = "cosine"
    SINE = "sine"


def _lorentz(x):
    return 1.0 / (x * x + 1.0)


def _lorentz_h(x):
    return -x / (x * x + 1.0)


def forcing(x):
    """The right-hand side f(x) = 1/(pi(x^2+1))."""
    return 1.0 / (_PI * (x * x + 1.0))


def forcing_h(x):
    """Hf(x) = -x/(pi(x^2+1))."""
    return -x / (_PI * (x * x + 1.0))


def forcing_prime(x):
    return -2.0 * x / (_PI * (x * x + 1.0) ** 2)


def forcing_h_prime(x):
    """(Hf)'(x) = Hf'(x) = (x^2-1)/(pi(x^2+1)^2)."""
    return (x * x - 1.0) / (_PI * (x * x + 1.0) ** 2)


_CATALOG = {
    CatalogFunction.LORENTZIAN: (_lorentz, _lorentz_h),
    CatalogFunction.F_PAPER: (forcing, forcing_h),
    CatalogFunction.HF_PAPER: (forcing_h, lambda x: -forcing(x)),
    CatalogFunction.HF_PRIME_PAPER: (forcing_prime, forcing_h_prime),
    CatalogFunction.COSINE: (np.cos, lambda x: -np.sin(x)),
    CatalogFunction.SINE: (np.sin, np.cos),
}


def catalog_function(tag, x):
    """Evaluate the catalog function itself (works on arrays)."""
    return _CATALOG[CatalogFunction(tag)][0](x)


def catalog_transform(tag, x):
    """Exact Hilbert transform of the catalog function ``tag`` at ``x``."""
    return _CATALOG[CatalogFunction(tag)][1](x)


@dataclass(frozen=True)
class TailModel:
    """Oscillatory model ``amplitude*cos(omega*t + phase)`` for large ``|t|``.

    ``side`` selects which tail(s) follow the model: ``"right"`` (t >= start),
    ``"left"`` (t <= -start) or ``"both"``; the other tail is taken as zero.
    """

    amplitude: float
    omega: float
    phase: float
    start: float
    side: str = "right"

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError("TailModel.omega must be positive")
        if not self.start > 0:
            raise DomainError("TailModel.start must be positive")
        if self.side not in ("right", "left", "both"):
            raise DomainError(f"TailModel.side must be right, left or both, not {self.side!r}")


def tail_contribution(tail, x, trunc):
    """(1/pi) times the model integral over ``|t| > trunc``.

    With d = trunc - x the right tail is
    int_0^inf cos(omega s + theta)/(s + d) ds
        = cos(theta) g(omega d) - sin(theta) f(omega d),  theta = omega trunc + phase,
    and the left tail reduces the same way after reflecting t -> -t.
    """
    if tail.start > trunc:
        raise DomainError("tail model must start at or before the truncation point")
    w = tail.omega
    total = 0.0
    if tail.side in ("right", "both"):
        theta = w * trunc + tail.phase
        f, g = aux_fg(w * (trunc - x))
        total += math.cos(theta) * g.real - math.sin(theta) * f.real
    if tail.side in ("left", "both"):
        theta = w * trunc - tail.phase
        f, g = aux_fg(w * (trunc + x))
        total -= math.cos(theta) * g.real - math.sin(theta) * f.real
    return tail.amplitude * total / _PI


HILBERT_SPEC = quad.QuadratureSpec(abs_tol=1e-10, max_subdivisions=20000)


def hilbert_numeric(g, x, trunc=400.0, tail=None, spec=HILBERT_SPEC, points=None):
    """Principal-value Hilbert transform of ``g`` at ``x``.

    The singular integral over ``[-trunc, trunc]`` is regularised by
    subtracting ``g(x)``::

        pi Hg(x) ~ int (g(y) - g(x))/(y - x) dy + g(x) log((trunc - x)/(trunc + x))

    and the neglected tails are either dropped or, when ``tail`` is given,
    added in closed form via the auxiliary functions.

    Parameters
    ----------
    g : callable
        Vectorised, continuously differentiable near ``x``.
    x : float
    trunc : float
        Half-width of the numerical window; must exceed ``|x| + 1``.
    tail : TailModel, optional
    spec : QuadratureSpec
    points : sequence of float, optional
        Extra breakpoints for the adaptive integrator.
    """
    x = float(x)
    trunc = float(trunc)
    if not trunc > abs(x) + 1.0:
        raise DomainError(f"hilbert_numeric: trunc={trunc} must exceed |x| + 1 = {abs(x) + 1}")
    gx = float(np.asarray(g(np.array([x])), dtype=float)[0])

    def integrand(y):
        return (g(y) - gx) / (y - x)

    brk = [x] if points is None else [x, *points]
    body = quad.integrate_finite(integrand, -trunc, trunc, spec.with_tol(spec.abs_tol * _PI),
                                 points=brk)
    value = (body.value + gx * math.log((trunc - x) / (trunc + x))) / _PI
    if tail is not None:
        value += tail_contribution(tail, x, trunc)
    return value


def convolution_identity_residual(x, spec=quad.DEFAULT_SPEC, trunc=1e4):
    """|int p(x-y) Hq(y) dy - int Hp(x-y) q(y) dy| for p = q = Lorentzian.

    Both integrals are done numerically over ``[-trunc, trunc]`` with the
    exact transforms from the catalog.
    """
    x = float(x)

    def left(y):
        return _lorentz(x - y) * _lorentz_h(y)

    def right(y):
        return _lorentz_h(x - y) * _lorentz(y)

    pts = sorted({0.0, x})
    a = quad.integrate_finite(left, -trunc, trunc, spec, points=pts).value
    b = quad.integrate_finite(right, -trunc, trunc, spec, points=pts).value
    return abs(a - b)
