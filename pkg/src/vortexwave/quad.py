"""Adaptive Gauss-Kronrod quadrature and a semi-infinite oscillatory engine.

Integrands are called with a 1-D ``numpy`` array of abscissae and must
return an array of the same shape.  Every panel of a refinement sweep is
evaluated in a single call, so vectorised integrands run at numpy speed.
"""

from dataclasses import dataclass
import math
from typing import NamedTuple

import numpy as np

from .errors import AccuracyError, DomainError

# 7-point Gauss / 15-point Kronrod pair on [-1, 1]
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_KRONROD = np.concatenate([_WK[:-1], _WK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[1:7:2] = _WG[:3]
_GAUSS[7] = _WG[3]
_GAUSS[9:15:2] = _WG[2::-1]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and work limits for the integration engines."""

    abs_tol: float = 1e-11
    max_subdivisions: int = 2000
    max_periods: int = 400
    acceleration_depth: int = 10

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError("abs_tol must be positive")
        if self.max_subdivisions < 10:
            raise DomainError("max_subdivisions must be at least 10")
        if self.max_periods < 8:
            raise DomainError("max_periods must be at least 8")
        if self.acceleration_depth < 4:
            raise DomainError("acceleration_depth must be at least 4")

    def with_tol(self, abs_tol):
        return QuadratureSpec(abs_tol, self.max_subdivisions, self.max_periods,
                              self.acceleration_depth)


DEFAULT_SPEC = QuadratureSpec()


class IntegralResult(NamedTuple):
    value: float
    error_estimate: float
    evaluations: int


_EPMACH = np.finfo(float).eps


def _gk15(fn, lo, hi):
    """Kronrod estimate and QUADPACK-style error for each panel."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    y = np.asarray(fn(x.ravel()), dtype=float).reshape(x.shape)
    k = y @ _KRONROD
    g = y @ _GAUSS
    mean = 0.5 * k
    resabs = np.abs(y) @ _KRONROD
    resasc = np.abs(y - mean[:, None]) @ _KRONROD
    err = np.abs(k - g)
    scaled = np.where(resasc > 0,
                      resasc * np.minimum(1.0, (200.0 * err / np.where(resasc > 0, resasc, 1.0)) ** 1.5),
                      err)
    floor = 50.0 * _EPMACH * resabs
    ah = np.abs(half)
    return half * k, ah * np.maximum(scaled, floor), ah * floor


def _adaptive_panels(fn, edges, tol, max_subdivisions):
    """Integrate over consecutive panels given by ``edges``.

    Returns per-panel values and error estimates (one entry per initial
    panel), the number of integrand calls and a convergence flag.  Leaf
    panels carrying more than an even share of ``tol`` are bisected until
    the summed error estimate drops below ``tol``.  Panels whose estimate
    sits at the rounding floor are never split.
    """
    edges = np.asarray(edges, dtype=float)
    lo, hi = edges[:-1].copy(), edges[1:].copy()
    owner = np.arange(lo.size)
    val, err, floor = _gk15(fn, lo, hi)
    evaluations = 15 * lo.size
    splits = 0
    converged = True
    while err.sum() > tol:
        split = (err > tol / err.size) & (err > 2.0 * floor)
        n_split = np.count_nonzero(split)
        if n_split == 0:
            break
        if splits + n_split > max_subdivisions:
            converged = False
            break
        splits += n_split
        plo, phi, pown = lo[split], hi[split], owner[split]
        mid = 0.5 * (plo + phi)
        clo, chi = np.concatenate([plo, mid]), np.concatenate([mid, phi])
        cval, cerr, cfloor = _gk15(fn, clo, chi)
        evaluations += 15 * clo.size
        keep = ~split
        lo = np.concatenate([lo[keep], clo])
        hi = np.concatenate([hi[keep], chi])
        owner = np.concatenate([owner[keep], pown, pown])
        val = np.concatenate([val[keep], cval])
        err = np.concatenate([err[keep], cerr])
        floor = np.concatenate([floor[keep], cfloor])
    n0 = len(edges) - 1
    # sum leaves in left-to-right order so results do not depend on history
    order = np.argsort(lo, kind="stable")
    values = np.bincount(owner[order], weights=val[order], minlength=n0)
    errors = np.bincount(owner[order], weights=err[order], minlength=n0)
    return values, errors, evaluations, converged


def integrate_finite(fn, a, b, spec=DEFAULT_SPEC, points=None):
    """Integrate ``fn`` over ``[a, b]`` with adaptive bisection.

    Parameters
    ----------
    fn : callable
        Vectorised integrand.
    a, b : float
        Finite limits, ``a < b``.
    spec : QuadratureSpec
    points : sequence of float, optional
        Interior breakpoints used as the initial partition.

    Raises
    ------
    AccuracyError
        If the tolerance is not met within ``spec.max_subdivisions``
        bisections; the exception carries the best estimate.
    """
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"integrate_finite: need finite a < b, got [{a}, {b}]")
    inner = [] if points is None else sorted({float(p) for p in points if a < p < b})
    edges = [a, *inner, b]
    values, errors, n, ok = _adaptive_panels(fn, edges, spec.abs_tol,
                                             spec.max_subdivisions)
    value = math.fsum(values)
    err = float(errors.sum())
    if not ok:
        raise AccuracyError(
            f"integrate_finite: tolerance {spec.abs_tol:g} not reached on [{a}, {b}]",
            estimate=value, error_estimate=err)
    return IntegralResult(value, err, n)


def _iterated_average(partial_sums, depth):
    s = np.asarray(partial_sums, dtype=float)
    for _ in range(depth):
        if s.size < 2:
            break
        s = 0.5 * (s[1:] + s[:-1])
    return s


def integrate_oscillatory_tail(envelope, omega, phase, kind, a, spec=DEFAULT_SPEC):
    """Integrate ``envelope(s) * trig(omega*s + phase)`` over ``[a, inf)``.

    ``kind`` is ``"sin"`` or ``"cos"``.  The half-line is cut at consecutive
    zeros of the trigonometric factor; the half-period contributions then
    form an alternating series whose partial sums are smoothed by repeated
    pairwise averaging (``spec.acceleration_depth`` passes).

    The envelope should be eventually monotone with algebraic decay.
    """
    if kind not in ("sin", "cos"):
        raise DomainError(f"kind must be 'sin' or 'cos', got {kind!r}")
    if not omega > 0:
        raise DomainError("omega must be positive")
    trig = np.sin if kind == "sin" else np.cos

    def integrand(s):
        return envelope(s) * trig(omega * s + phase)

    shift = 0.0 if kind == "sin" else 0.5 * math.pi
    half = math.pi / omega
    # first zero of the trig factor strictly beyond a
    n_first = math.floor((omega * a + phase - shift) / math.pi) + 1
    first_zero = (n_first * math.pi + shift - phase) / omega

    depth = spec.acceleration_depth
    batch = max(2 * depth, 16)
    seg_tol = spec.abs_tol / 16.0
    evaluations = 0
    seg_err = 0.0

    head = 0.0
    if first_zero > a:
        r = integrate_finite(integrand, a, first_zero, spec.with_tol(seg_tol))
        head, seg_err, evaluations = r.value, r.error_estimate, r.evaluations

    partial = [head]
    running = [head]
    start = first_zero
    estimates = []
    while True:
        edges = start + half * np.arange(batch + 1)
        vals, errs, n, ok = _adaptive_panels(
            integrand, edges, seg_tol * batch, spec.max_subdivisions)
        evaluations += n
        seg_err += float(errs.sum())
        for v in vals:
            running.append(v)
            partial.append(math.fsum(running))
        start = float(edges[-1])
        periods = len(partial) - 1
        if len(partial) >= depth + 2:
            acc = _iterated_average(partial[-(depth + 2):], depth)
            estimates.append(acc[-1])
            change = abs(acc[-1] - acc[-2])
            if change <= 0.5 * spec.abs_tol and ok:
                return IntegralResult(float(acc[-1]), float(change) + seg_err, evaluations)
        if periods >= spec.max_periods or not ok:
            best = estimates[-1] if estimates else partial[-1]
            raise AccuracyError(
                f"integrate_oscillatory_tail: no convergence after {periods} half-periods",
                estimate=float(best), error_estimate=float(change) if estimates else None)
