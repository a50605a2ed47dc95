"""Three independent ways to compute u(x), and the far-field sine wave."""

from vortexwave.solution import FroudeContext, u_asymptotic, u_closed_form, u_quadrature, u_vp_oracle

ctx = FroudeContext(1.0)
print(f"{'x':>6} {'closed form':>18} {'quadrature':>18} {'vp oracle':>18}")
for x in (-20.0, -2.0, 0.0, 1.0, 5.0, 30.0):
    print(f"{x:6.1f} {u_closed_form(x, ctx):18.13f} {u_quadrature(x, ctx):18.13f} "
          f"{u_vp_oracle(x, ctx):18.13f}")

# Downstream the solution settles onto (2/F^2) exp(-1/F^2) sin(x/F^2).
for F in (0.7, 1.0, 2.0):
    c = FroudeContext(F)
    x = 300.0 + 0.5 * 3.141592653589793 * F * F
    print(f"F={F}: u({x:.2f}) = {u_closed_form(x, c):+.6f}, asymptote {float(u_asymptotic(x, c)):+.6f}")
