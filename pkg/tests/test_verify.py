import math

import pytest

from vortexwave import verify
from vortexwave.errors import DomainError, RangeError
from vortexwave.hilbert import HILBERT_SPEC
from vortexwave.solution import FroudeContext, u_quadrature, u_second


@pytest.mark.parametrize("F", [1.0, 2.0])
def test_ide_residual(F):
    assert verify.ide_residual(FroudeContext(F)) <= 1e-3


def test_ide_empty():
    assert verify.ide_residual(FroudeContext(1.0), xs=[]) == 0.0


def test_ide_preconditions():
    with pytest.raises(DomainError):
        verify.ide_residual(FroudeContext(1.0), trunc=100.0)
    with pytest.raises(DomainError):
        verify.ide_residual(FroudeContext(1.0), xs=[150.0])


def test_ide_tighter_tolerance_spot_check():
    spec = HILBERT_SPEC.with_tol(1e-9)
    assert verify.ide_residual(FroudeContext(1.0), xs=[0.0], spec=spec) <= 1e-5


@pytest.mark.parametrize("F", [1.0, 0.6])
def test_ode_residual(F):
    assert verify.ode_residual(FroudeContext(F)) <= 1e-5


def test_ode_residual_at_origin():
    ctx = FroudeContext(1.3)
    F2 = ctx.froude ** 2
    direct = abs(F2 * F2 * u_second(0.0, ctx) + u_quadrature(0.0, ctx) - 1 / math.pi - F2 / math.pi)
    r = verify.ode_residual(ctx, xs=[0.0])
    assert r == pytest.approx(direct, abs=1e-15)
    assert r <= 1e-5


@pytest.mark.parametrize("F", [1.0, 2.0])
def test_full_report_passes(F):
    rep = verify.full_report(FroudeContext(F))
    assert rep.passed, rep.to_text()
    assert rep.boundary_value <= 0.01
    assert all(q <= 0.8 for q in rep.asymptotic_ratios)


def test_full_report_range():
    with pytest.raises(RangeError):
        verify.full_report(FroudeContext(0.1))


def test_report_text_deterministic():
    a = verify.full_report(FroudeContext(1.0)).to_text()
    b = verify.full_report(FroudeContext(1.0)).to_text()
    assert a == b
    keys = [line.split("=", 1)[0] for line in a.splitlines()]
    assert keys[0] == "froude" and keys[-1] == "passed"
    assert "tol_ode" in keys and "ide_residual_max" in keys
