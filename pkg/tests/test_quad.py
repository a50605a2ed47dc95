import math

import numpy as np
import pytest

from vortexwave.errors import AccuracyError, DomainError
from vortexwave.quad import (
    DEFAULT_SPEC,
    QuadratureSpec,
    integrate_finite,
    integrate_oscillatory_tail,
)
from vortexwave.specfun import aux_fg


def test_polynomial_exact():
    r = integrate_finite(lambda t: t, 0, 1)
    assert r.value == pytest.approx(0.5, abs=1e-15)
    assert r.error_estimate >= 0 and r.evaluations > 0


def test_lorentzian_long_interval():
    r = integrate_finite(lambda t: 1 / (np.pi * (t * t + 1)), -1000, 1000)
    assert r.value == pytest.approx(2 / math.pi * math.atan(1000), abs=1e-11)


def test_sinc():
    r = integrate_finite(lambda t: np.sinc(t / np.pi), 0, 1)
    assert r.value == pytest.approx(0.946083070367183, abs=1e-14)


def test_deterministic():
    fn = lambda t: np.exp(-t) * np.cos(30 * t)
    assert integrate_finite(fn, 0, 5) == integrate_finite(fn, 0, 5)


@pytest.mark.parametrize("c", [-1, 2, 10])
def test_linearity(c):
    fn = lambda t: np.sqrt(t + 1) * np.sin(3 * t)
    base = integrate_finite(fn, 0, 4).value
    scaled = integrate_finite(lambda t: c * fn(t), 0, 4).value
    assert scaled == pytest.approx(c * base, rel=1e-12)


def test_additivity():
    fn = lambda t: np.exp(np.sin(t)) / (1 + t * t)
    ab, bc, ac = (integrate_finite(fn, *lims) for lims in [(-3, 0.7), (0.7, 9), (-3, 9)])
    assert abs(ab.value + bc.value - ac.value) <= ab.error_estimate + bc.error_estimate + ac.error_estimate + 1e-15


def test_breakpoints_do_not_change_result():
    fn = lambda t: np.abs(t - 0.3)
    plain = integrate_finite(fn, 0, 1, QuadratureSpec(max_subdivisions=5000)).value
    split = integrate_finite(fn, 0, 1, points=[0.3, 0.3]).value
    assert split == pytest.approx(0.29, abs=1e-14)
    assert plain == pytest.approx(0.29, abs=1e-10)


def test_accuracy_failure_carries_estimate():
    spec = QuadratureSpec(abs_tol=1e-14, max_subdivisions=10)
    with pytest.raises(AccuracyError) as info:
        integrate_finite(lambda t: np.sin(1 / t), 1e-4, 1, spec)
    assert info.value.estimate is not None


def test_bad_limits():
    with pytest.raises(DomainError):
        integrate_finite(lambda t: t, 1, 0)


@pytest.mark.parametrize("kwargs", [dict(abs_tol=0), dict(max_subdivisions=5),
                                    dict(max_periods=4), dict(acceleration_depth=2)])
def test_spec_validation(kwargs):
    with pytest.raises(DomainError):
        QuadratureSpec(**kwargs)


def test_default_spec():
    assert DEFAULT_SPEC == QuadratureSpec(1e-11, 2000, 400, 10)


# -- oscillatory tails ------------------------------------------------------

def test_tail_cos_over_one_plus_s():
    r = integrate_oscillatory_tail(lambda s: 1 / (1 + s), 1.0, 0.0, "cos", 0.0)
    assert r.value == pytest.approx(aux_fg(1).g_val.real, abs=1e-11)
    assert r.value == pytest.approx(0.343377961556427, abs=1e-11)


def test_tail_fourier_cosine_of_lorentzian():
    r = integrate_oscillatory_tail(lambda s: 1 / (s * s + 1), 1.0, 0.0, "cos", 0.0)
    assert r.value == pytest.approx(math.pi / 2 * math.exp(-1), abs=1e-11)


def test_tail_dirichlet():
    r = integrate_oscillatory_tail(lambda s: 1 / s, 1.0, 0.0, "sin", 0.0)
    assert r.value == pytest.approx(math.pi / 2, abs=1e-11)


def test_tail_with_phase_and_offset():
    # int_2^inf cos(3s + 0.4)/s^2 ds by shifting to a pure cosine integral
    r = integrate_oscillatory_tail(lambda s: 1 / s ** 2, 3.0, 0.4, "cos", 2.0)
    head = integrate_finite(lambda s: np.cos(3 * s + 0.4) / s ** 2, 2.0, 200.0,
                            QuadratureSpec(abs_tol=1e-13, max_subdivisions=5000)).value
    rest = integrate_oscillatory_tail(lambda s: 1 / s ** 2, 3.0, 0.4, "cos", 200.0).value
    assert r.value == pytest.approx(head + rest, abs=1e-11)


@pytest.mark.parametrize("a", [0.5, 1.0, 3.0])
@pytest.mark.parametrize("y", [0.5, 1.0, 2.0])
def test_fourier_identities(a, y):
    env = lambda x: 1 / (a + x)
    f, g = aux_fg(a * y)
    c = integrate_oscillatory_tail(env, y, 0.0, "cos", 0.0).value
    s = integrate_oscillatory_tail(env, y, 0.0, "sin", 0.0).value
    assert c == pytest.approx(g.real, abs=1e-8)
    assert s == pytest.approx(f.real, abs=1e-8)


def test_tail_non_convergence():
    # non-decaying envelope: the partial sums never settle
    spec = QuadratureSpec(max_periods=40)
    with pytest.raises(AccuracyError):
        integrate_oscillatory_tail(lambda s: 1 + 0 * s + np.sin(0.05 * s), 1.0, 0.0, "sin", 0.0, spec)


def test_tail_bad_kind():
    with pytest.raises(DomainError):
        integrate_oscillatory_tail(lambda s: 1 / s, 1.0, 0.0, "tan", 1.0)
