"""Surface-velocity perturbation u(x) for linear waves over a vortex.

u solves  u + F^2 H u' = f,  f(x) = 1/(pi(x^2+1)),  with u -> 0 as x -> -inf.
Three evaluators are provided:

``quadrature``
    direct oscillatory quadrature of

        u(x) = 1/(pi F^2) int_0^inf [sin(s/F^2)/((x-s)^2+1)
                                      + cos(s/F^2)(x-s)/((x-s)^2+1)] ds

``closed_form``
    the same integral reduced by partial fractions to the auxiliary
    functions f, g of the trigonometric integrals at complex argument,

        u = [Im f(zeta) - Re g(zeta)] / (pi F^2),  zeta = -(x+i)/F^2

``vp_oracle``
    the variation-of-parameters integral against the ODE right-hand side,

        u(x) = 1/F^2 int_{-inf}^x sin((x-t)/F^2) [f(t) - F^2 Hf'(t)] dt

plus the downstream asymptote (2/F^2) exp(-1/F^2) sin(x/F^2).
"""

from dataclasses import dataclass, field
import enum
import math
from typing import NamedTuple

import numpy as np

from . import quad
from .errors import AccuracyError, DomainError, RangeError
from .hilbert import forcing, forcing_h_prime
from .specfun import aux_fg, ei_scaled

#: Smallest Froude number accepted by the closed-form evaluator.
CLOSED_FORM_MIN_FROUDE = 0.2

#: Absolute accuracy target for ``u_quadrature`` and ``u_vp_oracle``.
U_TOL = 1e-12

U_SPEC = quad.QuadratureSpec(abs_tol=U_TOL, max_subdivisions=20000, max_periods=4000)

_IMAG_TOL = 1e-10
_SPLIT_PAST_PEAK = 10.0


@dataclass(frozen=True)
class FroudeContext:
    """Froude number with its wavenumber k = 1/F^2 and decay exp(-k)."""

    froude: float
    wavenumber: float = field(init=False)
    decay: float = field(init=False)

    def __post_init__(self):
        F = float(self.froude)
        if not (math.isfinite(F) and F > 0):
            raise DomainError(f"Froude number must be positive and finite, got {self.froude!r}")
        object.__setattr__(self, "froude", F)
        object.__setattr__(self, "wavenumber", 1.0 / (F * F))
        object.__setattr__(self, "decay", math.exp(-1.0 / (F * F)))


def _ctx(ctx):
    return ctx if isinstance(ctx, FroudeContext) else FroudeContext(ctx)


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    VP_ORACLE = "vp_oracle"
    ASYMPTOTIC = "asymptotic"


class Evaluation(NamedTuple):
    x: float
    u: float
    method: Method


def u_closed_form(x, ctx):
    """u(x) from the trigonometric-integral representation.

    Partial fractions turn both algebraic factors into 1/(s + a) with
    a = -x -+ i, and int_0^inf trig(ks)/(s + a) ds is f(ak) or g(ak).
    Only the bounded auxiliary functions are formed, so the exp(-1/F^2)
    prefactor of the textbook form never meets an exp(+1/F^2) factor.

    Raises
    ------
    RangeError
        For ``F < 0.2``; use `u_quadrature` there.
    AccuracyError
        If the assembled value has an imaginary residue above 1e-10.
    """
    ctx = _ctx(ctx)
    if ctx.froude < CLOSED_FORM_MIN_FROUDE:
        raise RangeError(
            f"closed form supports F >= {CLOSED_FORM_MIN_FROUDE}, got F = {ctx.froude}")
    x = float(x)
    k = ctx.wavenumber
    fp, gp = aux_fg(complex(-x, -1.0) * k)
    fm, gm = aux_fg(complex(-x, 1.0) * k)
    total = (fp - fm) / 2j - 0.5 * (gp + gm)
    if abs(total.imag) > _IMAG_TOL:
        raise AccuracyError(f"closed form has imaginary residue {total.imag:.3e} at x={x}",
                            estimate=total.real / (math.pi * ctx.froude ** 2))
    return total.real / (math.pi * ctx.froude ** 2)


def closed_form_residue(x, ctx):
    """Imaginary part left over in the closed-form assembly (should be ~0)."""
    ctx = _ctx(ctx)
    k = ctx.wavenumber
    fp, gp = aux_fg(complex(-float(x), -1.0) * k)
    fm, gm = aux_fg(complex(-float(x), 1.0) * k)
    return ((fp - fm) / 2j - 0.5 * (gp + gm)).imag / (math.pi * ctx.froude ** 2)


def _half_line(fn_sin_env, fn_cos_env, x, k, spec):
    """int_0^inf [sin(ks) A(s) + cos(ks) B(s)] ds with A, B peaked near s = x."""
    split = max(0.0, x) + _SPLIT_PAST_PEAK

    def near(s):
        out = np.sin(k * s) * fn_sin_env(s)
        if fn_cos_env is not None:
            out += np.cos(k * s) * fn_cos_env(s)
        return out

    pts = [x] if 0.0 < x < split else None
    total = quad.integrate_finite(near, 0.0, split, spec, points=pts).value
    total += quad.integrate_oscillatory_tail(fn_sin_env, k, 0.0, "sin", split, spec).value
    if fn_cos_env is not None:
        total += quad.integrate_oscillatory_tail(fn_cos_env, k, 0.0, "cos", split, spec).value
    return total


def u_quadrature(x, ctx, spec=None):
    """u(x) by direct quadrature of the half-line Fourier integrals.

    ``[0, max(0, x) + 10]`` is integrated adaptively (the envelopes peak at
    s = x); the monotone remainder goes to the oscillatory-tail engine.
    Valid for every F > 0.
    """
    ctx = _ctx(ctx)
    x = float(x)
    F2 = ctx.froude ** 2
    if spec is None:
        spec = U_SPEC.with_tol(U_TOL * math.pi * F2 / 3.0)

    def a_env(s):
        d = x - s
        return 1.0 / (d * d + 1.0)

    def b_env(s):
        d = x - s
        return d / (d * d + 1.0)

    return _half_line(a_env, b_env, x, ctx.wavenumber, spec) / (math.pi * F2)


def ode_rhs(t, ctx):
    """Right-hand side f - F^2 Hf' of the second-order equation."""
    ctx = _ctx(ctx)
    return forcing(t) - ctx.froude ** 2 * forcing_h_prime(t)


def u_vp_oracle(x, ctx, spec=None):
    """u(x) from variation of parameters on F^4 u'' + u = f - F^2 Hf'.

    Uses the exact catalog expressions for f and Hf' and no integration by
    parts, so it checks the quadrature route independently.
    """
    ctx = _ctx(ctx)
    x = float(x)
    F2 = ctx.froude ** 2
    if spec is None:
        spec = U_SPEC.with_tol(U_TOL * F2 / 2.0)

    def env(s):
        return ode_rhs(x - s, ctx)

    return _half_line(env, None, x, ctx.wavenumber, spec) / F2


def asymptotic_amplitude(ctx):
    """Downstream wave amplitude 2 exp(-1/F^2) / F^2.

    From u ~ (2/(pi F^2)) sin(x/F^2) int cos(t/F^2)/(t^2+1) dt and
    int cos(kt)/(t^2+1) dt = pi exp(-k) over the whole line.
    """
    ctx = _ctx(ctx)
    return 2.0 * ctx.decay * ctx.wavenumber


def u_asymptotic(x, ctx):
    """Downstream asymptote (2/F^2) exp(-1/F^2) sin(x/F^2)."""
    ctx = _ctx(ctx)
    return asymptotic_amplitude(ctx) * np.sin(ctx.wavenumber * x)


def u_origin(ctx):
    """Exact (u(0), u'(0)) = (exp(-k) Ei(k)/(pi F^2), exp(-k)/F^4), k = 1/F^2.

    Raises `RangeError` once Ei(1/F^2) would overflow (1/F^2 > 700).
    """
    ctx = _ctx(ctx)
    k = ctx.wavenumber
    if k > 700.0:
        raise RangeError(f"u_origin: Ei(1/F^2) overflows for F = {ctx.froude}")
    F2 = ctx.froude ** 2
    return ei_scaled(k) / (math.pi * F2), ctx.decay / (F2 * F2)


_EVALUATORS = {
    Method.CLOSED_FORM: u_closed_form,
    Method.QUADRATURE: u_quadrature,
    Method.VP_ORACLE: u_vp_oracle,
    Method.ASYMPTOTIC: lambda x, ctx: float(u_asymptotic(x, ctx)),
}


def default_method(ctx):
    ctx = _ctx(ctx)
    if ctx.froude >= CLOSED_FORM_MIN_FROUDE:
        return Method.CLOSED_FORM
    return Method.QUADRATURE


def evaluate(x, ctx, method=None):
    ctx = _ctx(ctx)
    method = default_method(ctx) if method is None else Method(method)
    return Evaluation(float(x), float(_EVALUATORS[method](x, ctx)), method)


def u_value(x, ctx, method=None):
    return evaluate(x, ctx, method).u


def derivative_step(ctx):
    """Finite-difference step 1e-3 min(F^2, 1).

    The step must resolve both the wavelength 2 pi F^2 and the unit width
    of the forcing, whichever is shorter.
    """
    return 1e-3 * min(_ctx(ctx).froude ** 2, 1.0)


def u_prime(x, ctx, method=Method.QUADRATURE, h=None):
    """Central-difference u'(x)."""
    ctx = _ctx(ctx)
    h = derivative_step(ctx) if h is None else h
    fn = _EVALUATORS[Method(method)]
    return (fn(x + h, ctx) - fn(x - h, ctx)) / (2.0 * h)


def u_second(x, ctx, method=Method.QUADRATURE, h=None):
    """Central-difference u''(x)."""
    ctx = _ctx(ctx)
    h = derivative_step(ctx) if h is None else h
    fn = _EVALUATORS[Method(method)]
    return (fn(x + h, ctx) - 2.0 * fn(x, ctx) + fn(x - h, ctx)) / (h * h)


@dataclass
class ProfileSeries:
    """Sampled surface: u(x) and first-order elevation s = -eps F^2 u."""

    froude: float
    epsilon: float
    method: Method
    x: np.ndarray
    u: np.ndarray
    s: np.ndarray

    def rows(self):
        return zip(self.x.tolist(), self.u.tolist(), self.s.tolist())


def surface_profile(xs, ctx, epsilon=1.0, method=None):
    """Evaluate u on ``xs`` and the surface S(x) = -epsilon F^2 u(x).

    ``xs`` must be finite and strictly increasing.  O(epsilon^2) terms of
    the elevation are not modelled.
    """
    ctx = _ctx(ctx)
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 1 or not np.all(np.isfinite(xs)):
        raise DomainError("xs must be a finite 1-D sequence")
    if xs.size > 1 and not np.all(np.diff(xs) > 0):
        raise DomainError("xs must be strictly increasing")
    method = default_method(ctx) if method is None else Method(method)
    fn = _EVALUATORS[method]
    u = np.array([fn(x, ctx) for x in xs], dtype=float)
    s = -float(epsilon) * ctx.froude ** 2 * u
    return ProfileSeries(ctx.froude, float(epsilon), method, xs, u, s)
