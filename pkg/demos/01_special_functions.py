"""Trigonometric integrals and their auxiliary functions.

The wave integrals reduce to f(z) and g(z), which stay bounded where
Si and Ci grow like exp(|Im z|).  This script prints a few values and
shows the identity Ci = f sin - g cos on the real axis.
"""

import math

from vortexwave.specfun import aux_fg, ci_cap, ei, si_cap

print("Si(1) =", si_cap(1).real)
print("Ci(1) =", ci_cap(1).real)
print("Ei(1) =", ei(1.0))

for x in (0.5, 2.0, 10.0, 50.0):
    f, g = aux_fg(x)
    rebuilt = f.real * math.sin(x) - g.real * math.cos(x)
    print(f"x={x:5.1f}  f={f.real:.12f}  g={g.real:.12f}  Ci-rebuilt={ci_cap(x).real - rebuilt:+.1e}")

# far off the real axis Si itself overflows, but f and g are still fine
print("f(3 - 900i) =", aux_fg(3 - 900j).f_val)
