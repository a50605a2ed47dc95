"""Residual checks: does u actually solve the equations it should?"""

from vortexwave.verify import full_report
from vortexwave.solution import FroudeContext

for F in (1.0, 2.0):
    print(full_report(FroudeContext(F)).to_text())
