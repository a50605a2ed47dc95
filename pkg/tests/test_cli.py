import io
import math

import numpy as np
import pytest

from vortexwave import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_eval_origin():
    code, text = run("eval", "--froude", "1", "--x", "0")
    assert code == 0
    assert float(text) == pytest.approx(0.221918, abs=1e-6)


def test_eval_asymptotic():
    code, text = run("eval", "--froude", "1", "--x", "0", "--method", "asymptotic")
    assert code == 0 and float(text) == 0.0


@pytest.mark.parametrize("argv", [("eval", "--froude", "-1", "--x", "0"),
                                  ("eval", "--froude", "1"),
                                  ("eval", "--froude", "1", "--x", "nan"),
                                  ("frobnicate",)])
def test_eval_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_profile_f1(tmp_path):
    path = tmp_path / "p.csv"
    code, _ = run("profile", "--froude", "1", "--xmin", "-10", "--xmax", "10", "--n", "2001",
                  "--out-csv", str(path))
    assert code == 0
    meta, x, u, s = cli.read_csv(path)
    assert meta == {"froude": "1.0", "epsilon": "1.0", "method": "closed_form"}
    assert len(x) == 2001
    i = int(np.argmin(np.abs(x)))
    assert x[i] == 0.0
    assert u[i] == pytest.approx(0.221918, abs=1e-6)
    assert s[i] == pytest.approx(-0.221918, abs=1e-6)


def test_profile_bad_range(tmp_path):
    path = tmp_path / "p.csv"
    code, _ = run("profile", "--froude", "1", "--xmin", "5", "--xmax", "-5", "--out-csv", str(path))
    assert code == 2
    assert not path.exists()


def test_profile_f10_peak(tmp_path):
    # the true downstream |S| peak is F^2 * 2 exp(-1/F^2)/F^2 = 2 exp(-0.01)
    path = tmp_path / "p.csv"
    code, _ = run("profile", "--froude", "10", "--xmin", "-100", "--xmax", "4000", "--n", "4101",
                  "--out-csv", str(path))
    assert code == 0
    _, x, _, s = cli.read_csv(path)
    last = s[x >= x[-1] - 2 * math.pi * 100]
    assert np.max(np.abs(last)) == pytest.approx(2 * math.exp(-0.01), rel=0.05)


def test_profile_deterministic_and_svg(tmp_path):
    a, b, svg = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "a.svg"
    assert run("profile", "--froude", "1", "--n", "301", "--out-csv", str(a), "--out-svg", str(svg))[0] == 0
    assert run("profile", "--froude", "1", "--n", "301", "--out-csv", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = svg.read_text()
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert text.count("<polyline") == 1
    points = text.split('points="')[1].split('"')[0].split()
    assert len(points) == 301


def test_csv_round_trip(tmp_path):
    from vortexwave.solution import FroudeContext, surface_profile
    prof = surface_profile(np.linspace(-3, 3, 7), FroudeContext(0.8), epsilon=0.5)
    path = tmp_path / "r.csv"
    path.write_text(cli.format_csv(prof))
    meta, x, u, s = cli.read_csv(path)
    np.testing.assert_array_equal(x, prof.x)
    np.testing.assert_array_equal(u, prof.u)
    np.testing.assert_array_equal(s, prof.s)
    assert meta["epsilon"] == "0.5"


def test_default_window():
    assert cli.default_window(1.0) == (-10.0, 10.0)
    assert cli.default_window(0.1) == (-10.0, 10.0)
    assert cli.default_window(10.0) == (-100.0, 4000.0)


@pytest.mark.parametrize("F", ["1", "2"])
def test_verify_ok(F):
    code, text = run("verify", "--froude", F)
    assert code == 0
    assert "passed=true" in text


def test_verify_out_of_range():
    assert run("verify", "--froude", "0.05")[0] == 2
