"""Command-line front end.

Subcommands::

    eval      print u(x) for one Froude number
    profile   write the surface profile as CSV (and optionally SVG)
    verify    run the residual checks and print a key=value report
    selftest  run the acceptance checks

Exit codes: 0 success, 1 numerical or tolerance failure, 2 usage or
domain error.
"""

import argparse
import math
import os
import sys
import tempfile

import numpy as np

from . import solution, verify
from .errors import AccuracyError, DomainError, RangeError
from .solution import FroudeContext, Method

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2

SVG_WIDTH, SVG_HEIGHT = 800, 400
_MARGIN = 60


class UsageError(Exception):
    pass


def default_window(froude):
    """x-range showing the vortex and several downstream wavelengths."""
    wavelength = 2.0 * math.pi * froude ** 2
    if wavelength <= 10.0:
        return -10.0, 10.0
    return -100.0, 40.0 * froude ** 2


def _context(froude):
    if not (math.isfinite(froude) and froude > 0):
        raise UsageError(f"--froude must be positive, got {froude}")
    return FroudeContext(froude)


# ---------------------------------------------------------------------------
# file writers
# ---------------------------------------------------------------------------

def format_csv(profile):
    lines = [
        f"# froude={profile.froude!r}",
        f"# epsilon={profile.epsilon!r}",
        f"# method={profile.method.value}",
        "x,u,s",
    ]
    lines += [f"{x!r},{u!r},{s!r}" for x, u, s in profile.rows()]
    return "\n".join(lines) + "\n"


def read_csv(path):
    """Parse a profile CSV back into (metadata dict, x, u, s arrays)."""
    meta = {}
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, val = line[1:].strip().partition("=")
                meta[key] = val
            elif line == "x,u,s":
                continue
            else:
                rows.append([float(v) for v in line.split(",")])
    arr = np.array(rows, dtype=float).reshape(-1, 3)
    return meta, arr[:, 0], arr[:, 1], arr[:, 2]


def _fmt(v):
    return f"{v:.2f}"


def format_svg(profile):
    """Single-polyline plot of S against x in a fixed 800x400 frame."""
    x, y = profile.x, profile.s
    x0, x1 = float(x[0]), float(x[-1])
    y0, y1 = float(np.min(y)), float(np.max(y))
    if y1 - y0 < 1e-300:
        y0, y1 = y0 - 1.0, y1 + 1.0
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad
    w, h = SVG_WIDTH - 2 * _MARGIN, SVG_HEIGHT - 2 * _MARGIN
    px = _MARGIN + (x - x0) / (x1 - x0) * w
    py = _MARGIN + (y1 - y) / (y1 - y0) * h
    points = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
    left, right = _MARGIN, SVG_WIDTH - _MARGIN
    top, bottom = _MARGIN, SVG_HEIGHT - _MARGIN
    title = f"Surface profile, F = {profile.froude:g}, epsilon = {profile.epsilon:g}"
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
        f'<text x="{left}" y="{bottom + 20}" font-size="12">{x0:g}</text>',
        f'<text x="{right}" y="{bottom + 20}" font-size="12" text-anchor="end">{x1:g}</text>',
        f'<text x="{left - 5}" y="{top + 4}" font-size="12" text-anchor="end">{y1:.4g}</text>',
        f'<text x="{left - 5}" y="{bottom}" font-size="12" text-anchor="end">{y0:.4g}</text>',
        f'<text x="{SVG_WIDTH / 2:g}" y="{SVG_HEIGHT - 15}" font-size="14" '
        f'text-anchor="middle">x</text>',
        f'<text x="15" y="{SVG_HEIGHT / 2:g}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 15 {SVG_HEIGHT / 2:g})">S(x)</text>',
        f'<text x="{SVG_WIDTH / 2:g}" y="30" font-size="14" text-anchor="middle">{title}</text>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>',
        "</svg>",
    ]) + "\n"


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args, out):
    ctx = _context(args.froude)
    if not math.isfinite(args.x):
        raise UsageError("--x must be finite")
    u = solution.evaluate(args.x, ctx, args.method).u
    print(f"{u:.15g}", file=out)
    return EXIT_OK


def cmd_profile(args, out):
    ctx = _context(args.froude)
    xmin, xmax = default_window(ctx.froude)
    xmin = xmin if args.xmin is None else args.xmin
    xmax = xmax if args.xmax is None else args.xmax
    if not (math.isfinite(xmin) and math.isfinite(xmax)) or not xmin < xmax:
        raise UsageError(f"need xmin < xmax, got {xmin}, {xmax}")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    xs = np.linspace(xmin, xmax, args.n)
    prof = solution.surface_profile(xs, ctx, args.epsilon, args.method)
    written = []
    try:
        _write_atomic(args.out_csv, format_csv(prof))
        written.append(args.out_csv)
        if args.out_svg:
            _write_atomic(args.out_svg, format_svg(prof))
            written.append(args.out_svg)
    except BaseException:
        for path in written:
            if os.path.exists(path):
                os.unlink(path)
        raise
    print(f"wrote {len(xs)} samples to {args.out_csv}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    ctx = _context(args.froude)
    report = verify.full_report(ctx)
    out.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_NUMERIC


def cmd_selftest(args, out):
    from . import acceptance
    results = acceptance.run_all(out=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


def build_parser():
    parser = argparse.ArgumentParser(prog="vortexwave",
                                     description="Linear surface waves over a vortex.")
    sub = parser.add_subparsers(dest="command", required=True)
    methods = [m.value for m in Method]

    p = sub.add_parser("eval", help="evaluate u(x)")
    p.add_argument("--froude", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--method", choices=methods, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("profile", help="write a surface-profile CSV/SVG")
    p.add_argument("--froude", type=float, required=True)
    p.add_argument("--xmin", type=float, default=None)
    p.add_argument("--xmax", type=float, default=None)
    p.add_argument("--n", type=int, default=2001)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--method", choices=methods, default=None)
    p.add_argument("--out-csv", dest="out_csv", default="profile.csv")
    p.add_argument("--out-svg", dest="out_svg", default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="residual checks with pass/fail exit code")
    p.add_argument("--froude", type=float, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AccuracyError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
