"""Sine, cosine and exponential integrals in double precision.

Conventions follow Abramowitz & Stegun, chapter 5:

    Si(z) = int_0^z sin(t)/t dt
    Ci(z) = gamma + log(z) + int_0^z (cos(t) - 1)/t dt      (|arg z| < pi)
    si(z) = Si(z) - pi/2
    Ei(x) = -PV int_{-x}^inf exp(-t)/t dt                    (x > 0)

The auxiliary functions

    f(z) = Ci(z) sin(z) - si(z) cos(z) = int_0^inf sin(t)/(t + z) dt
    g(z) = -si(z) sin(z) - Ci(z) cos(z) = int_0^inf cos(t)/(t + z) dt

stay O(1/|z|) in the whole cut plane while Si and Ci themselves grow like
exp(|Im z|).  They are obtained from the scaled exponential integral
exp(w) E1(w) at w = +-iz, so no exponentially large intermediate is ever
formed.  Si and Ci at large |z| are rebuilt from f and g.
"""

import cmath
import math
from typing import NamedTuple

from .errors import DomainError, RangeError

EULER_GAMMA = 0.57721566490153286061

#: |z| at or below which Si and Ci use their Maclaurin series.
SERIES_RADIUS = 4.0

#: Above this |w| the scaled E1 uses its asymptotic expansion.
_E1_ASYMPTOTIC_RADIUS = 40.0
_E1_SERIES_RADIUS = 2.0
_MAX_IM = 700.0
_HALF_PI = 0.5 * math.pi
_EPS = 1e-17


class AuxPair(NamedTuple):
    f_val: complex
    g_val: complex


def _as_complex(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _csum(terms):
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def _on_negative_axis(z):
    return z.imag == 0.0 and z.real <= 0.0


# ---------------------------------------------------------------------------
# scaled exponential integral exp(w) E1(w), principal branch
# ---------------------------------------------------------------------------

def _e1_series(w):
    # E1(w) = -gamma - log(w) - sum_{n>=1} (-w)^n / (n n!)
    terms = [complex(-EULER_GAMMA), -_log_upper(w)]
    term = complex(1.0)
    for n in range(1, 500):
        term *= -w / n
        t = -term / n
        terms.append(t)
        if abs(t) < _EPS * max(1.0, abs(terms[1])):
            break
    return _csum(terms)


def _log_upper(w):
    # principal log with the negative real axis taken from above
    if w.imag == 0.0 and w.real < 0.0:
        return complex(math.log(-w.real), math.pi)
    return cmath.log(w)


def _expe1_cf(w):
    # exp(w) E1(w) = 1/(w+1- 1/(w+3- 4/(w+5- ...))), modified Lentz
    tiny = 1e-300
    b = w + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 5000):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    return h


def _expe1_asymptotic(w):
    # exp(w) E1(w) ~ (1/w) sum (-1)^n n!/w^n, truncated at the smallest term
    terms = [complex(1.0)]
    term = complex(1.0)
    prev = 1.0
    for n in range(1, 200):
        term *= -n / w
        mag = abs(term)
        if mag > prev:
            break
        terms.append(term)
        if mag < _EPS:
            break
        prev = mag
    return _csum(terms) / w


def expe1(w):
    """Scaled exponential integral ``exp(w) * E1(w)`` for complex ``w``.

    Principal branch, cut along the negative real axis; a point exactly on
    the cut takes the value from the upper side.
    """
    w = _as_complex(w)
    if w == 0:
        raise DomainError("E1 is singular at 0")
    r = abs(w)
    if r >= _E1_ASYMPTOTIC_RADIUS:
        val = _expe1_asymptotic(w)
        if _on_negative_axis(w):
            # exponentially small branch term, kept for consistency
            val -= 1j * math.pi * math.exp(w.real)
        return val
    if r <= _E1_SERIES_RADIUS or (w.real < 0.0 and abs(w.imag) < -0.5 * w.real):
        return cmath.exp(w) * _e1_series(w)
    return _expe1_cf(w)


# ---------------------------------------------------------------------------
# auxiliary functions
# ---------------------------------------------------------------------------

def _aux(z):
    iz = 1j * z
    # log branch of E1(+-iz) must match the cut of Ci along arg z = pi
    p = expe1(iz)
    if z.real < 0.0 and z.imag > 0.0:
        p -= 2j * math.pi * cmath.exp(iz)
    miz = -iz
    if miz.imag == 0.0 and miz.real < 0.0:
        # z on the negative imaginary axis: take E1(-iz) from below
        q = expe1(miz) + 2j * math.pi * cmath.exp(miz)
    else:
        q = expe1(miz)
        if z.real < 0.0 and z.imag < 0.0:
            q += 2j * math.pi * cmath.exp(miz)
    # p = g - i f,  q = g + i f
    return AuxPair((q - p) / 2j, (p + q) / 2)


def aux_fg(z):
    """Auxiliary functions f(z), g(z) of the sine and cosine integrals.

    Valid for ``|arg z| < pi``, ``z != 0``.  For real ``a > 0`` and ``y > 0``
    they are the Fourier integrals

        int_0^inf sin(x y)/(a + x) dx = f(a y)
        int_0^inf cos(x y)/(a + x) dx = g(a y)

    Raises
    ------
    DomainError
        If ``z`` is zero or lies on the negative real axis.
    """
    z = _as_complex(z)
    if _on_negative_axis(z):
        raise DomainError(f"aux_fg: {z!r} is on the branch cut")
    if abs(z.imag) > _MAX_IM and abs(z) < _E1_ASYMPTOTIC_RADIUS:
        raise RangeError(f"aux_fg: {z!r} out of range")
    return _aux(z)


# ---------------------------------------------------------------------------
# Si, si, Ci
# ---------------------------------------------------------------------------

def _si_series(z):
    # sum (-1)^k z^(2k+1) / ((2k+1)(2k+1)!)
    z2 = z * z
    term = z
    terms = [z]
    for k in range(1, 200):
        term *= -z2 / ((2 * k) * (2 * k + 1))
        t = term / (2 * k + 1)
        terms.append(t)
        if abs(t) < _EPS * abs(terms[0]) * 1e-1 or t == 0:
            break
    return _csum(terms)


def _si_aux(z):
    # valid for Re z >= 0, z != 0
    f, g = _aux(z)
    return _HALF_PI - (f * cmath.cos(z) + g * cmath.sin(z))


def _ci_series(z):
    z2 = z * z
    term = complex(1.0)
    terms = [complex(EULER_GAMMA), cmath.log(z)]
    for k in range(1, 200):
        term *= -z2 / ((2 * k - 1) * (2 * k))
        t = term / (2 * k)
        terms.append(t)
        if abs(t) < _EPS * max(1.0, abs(terms[1])):
            break
    return _csum(terms)


def _ci_aux(z):
    f, g = _aux(z)
    return f * cmath.sin(z) - g * cmath.cos(z)


def _check_range(z, name):
    if abs(z.imag) > _MAX_IM:
        raise RangeError(f"{name}: |Im z| = {abs(z.imag):g} overflows double range")


def si_cap(z):
    """Sine integral Si(z), an entire odd function.

    Raises `RangeError` for ``|Im z| > 700`` where the value itself overflows.
    """
    z = _as_complex(z)
    _check_range(z, "Si")
    if abs(z) <= SERIES_RADIUS:
        return _si_series(z)
    if z.real < 0.0:
        return -_si_aux(-z)
    return _si_aux(z)


def si_small(z):
    """Shifted sine integral si(z) = Si(z) - pi/2."""
    z = _as_complex(z)
    _check_range(z, "si")
    if abs(z) <= SERIES_RADIUS:
        return _si_series(z) - _HALF_PI
    if z.real < 0.0:
        return -_si_aux(-z) - _HALF_PI
    f, g = _aux(z)
    return -(f * cmath.cos(z) + g * cmath.sin(z))


def ci_cap(z):
    """Cosine integral Ci(z) on the principal branch.

    Raises
    ------
    DomainError
        For ``z = 0`` or ``z`` on the negative real axis.
    RangeError
        For ``|Im z| > 700``.
    """
    z = _as_complex(z)
    if _on_negative_axis(z):
        raise DomainError(f"Ci: {z!r} is on the branch cut")
    _check_range(z, "Ci")
    if abs(z) <= SERIES_RADIUS:
        return _ci_series(z)
    return _ci_aux(z)


# ---------------------------------------------------------------------------
# Ei for positive real argument
# ---------------------------------------------------------------------------

_EI_SERIES_MAX = 40.0
_EI_MAX = 709.0


def _ei_series(x):
    # gamma + ln x + sum x^k/(k k!); all terms positive
    terms = [EULER_GAMMA, math.log(x)]
    term = 1.0
    total = 0.0
    for k in range(1, 1000):
        term *= x / k
        t = term / k
        terms.append(t)
        total += t
        if k > x and t < _EPS * total:
            break
    return math.fsum(terms)


def _ei_asymptotic_scaled(x):
    # exp(-x) Ei(x) ~ (1/x) sum n!/x^n
    terms = [1.0]
    term = 1.0
    for n in range(1, 200):
        nxt = term * n / x
        if nxt > term:
            break
        term = nxt
        terms.append(term)
        if term < _EPS:
            break
    return math.fsum(terms) / x


def _check_ei_domain(x):
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"Ei: requires x > 0, got {x!r}")
    if not math.isfinite(x):
        raise DomainError("Ei: non-finite argument")
    return x


def ei_scaled(x):
    """``exp(-x) * Ei(x)`` for ``x > 0``; finite for every positive ``x``."""
    x = _check_ei_domain(x)
    if x <= _EI_SERIES_MAX:
        return math.exp(-x) * _ei_series(x)
    return _ei_asymptotic_scaled(x)


def ei(x):
    """Exponential integral Ei(x) for real ``x > 0``.

    Raises `DomainError` for ``x <= 0`` and `RangeError` once ``exp(x)``
    overflows (``x > 709``).
    """
    x = _check_ei_domain(x)
    if x > _EI_MAX:
        raise RangeError(f"Ei({x:g}) overflows")
    if x <= _EI_SERIES_MAX:
        return _ei_series(x)
    return math.exp(x) * _ei_asymptotic_scaled(x)
