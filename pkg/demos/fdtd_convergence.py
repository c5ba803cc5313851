"""Cross-check the sheet model with a time-domain simulation.

A one-dimensional FDTD run scatters a pulse off the graphene sheet and
measures complex reflection and transmission over the band. The same
quantities follow in closed form from the sheet conductivity, so the gap
between the two is pure discretization error, and it should fall by about
4x every time the grid is refined 2x (a second-order scheme).

Run: python3 demos/fdtd_convergence.py
"""

import math

import numpy as np

from thzpatch import (GrapheneSheet, Grid1D, analytic_sheet_coefficients,
                      refinement_study, run_sheet_scattering)

BAND = (220e9, 325e9)
SHEET = GrapheneSheet(1.2, 1.2e-12)

print("refinement study, E_F = 1.2 eV, tau = 1.2 ps, 220-325 GHz")
print(f"  {'cells/lambda':>12}  {'max |err|':>10}  {'ratio':>6}  "
      f"{'order':>6}")
study = refinement_study(SHEET, BAND, resolutions=(100, 200, 400))
previous = None
for resolution, err in study:
    if previous is None:
        print(f"  {resolution:12d}  {err:10.3e}")
    else:
        ratio = previous / err
        print(f"  {resolution:12d}  {err:10.3e}  {ratio:6.2f}  "
              f"{math.log2(ratio):6.3f}")
    previous = err

run = run_sheet_scattering(SHEET, Grid1D.for_resolution(200), BAND)
exact = analytic_sheet_coefficients(SHEET, run.frequencies)
balance = np.abs(run.reflection) ** 2 + np.abs(run.transmission) ** 2 \
    + run.absorption

print()
print("sanity at 200 cells/lambda:")
i = int(np.argmin(np.abs(run.frequencies - 280e9)))
print(f"  at 280 GHz   |r|^2 = {abs(run.reflection[i]) ** 2:.4f}  "
      f"|t|^2 = {abs(run.transmission[i]) ** 2:.5f}  "
      f"abs = {run.absorption[i]:.4f}")
print(f"  analytic     |r|^2 = {abs(exact.reflection[i]) ** 2:.4f}  "
      f"|t|^2 = {abs(exact.transmission[i]) ** 2:.5f}  "
      f"abs = {exact.absorption[i]:.4f}")
print(f"  worst energy defect |r^2 + t^2 + abs - 1| = "
      f"{np.max(np.abs(balance - 1)):.2e}")
