"""Surface profiles S(x) = -eps F^2 u(x) for F = 0.1, 1 and 10.

Writes one CSV and one SVG per Froude number into the current
directory, using the same default windows as the command line tool.
At F = 0.1 the downstream wave is of order exp(-100) and only the
symmetric dip above the vortex remains.  At F = 10 the wavelength is
about 628 so the window reaches x = 4000.
"""

from vortexwave import cli

for F in ("0.1", "1", "10"):
    argv = ["profile", "--froude", F, "--out-csv", f"profile_F{F}.csv", "--out-svg", f"profile_F{F}.svg"]
    if F == "10":
        argv += ["--n", "4101"]
    cli.main(argv)
