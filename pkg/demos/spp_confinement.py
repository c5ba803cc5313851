"""Surface waves on the sheet: how tightly they hug it, and how far they go.

A biased graphene sheet binds a TM surface wave with an in-plane
wavenumber above the light line. The confinement ratio Re(q)/k0 tells how
much shorter the surface wavelength is than free space; the propagation
length tells how far the wave survives. Gate bias (Fermi level) relaxes
the confinement; putting the sheet on a substrate tightens it.

Run: python3 demos/spp_confinement.py
"""

import math

from thzpatch import (DielectricHalfspaces, GrapheneSheet, kubo_sigma,
                      spp_wavenumber_asymmetric, spp_wavenumber_symmetric)

F0 = 280e9
W0 = 2 * math.pi * F0

print(f"symmetric (air both sides), f = {F0 / 1e9:.0f} GHz, tau = 1.2 ps")
print(f"  {'E_F (eV)':>8}  {'Re q/k0':>8}  {'lam_spp (um)':>12}  "
      f"{'L_prop (um)':>11}")
for fermi in (0.1, 0.3, 0.6, 0.9, 1.2):
    sol = spp_wavenumber_symmetric(
        kubo_sigma(GrapheneSheet(fermi, 1.2e-12), W0), 1.0, W0)
    print(f"  {fermi:8.1f}  {sol.confinement_ratio:8.4f}  "
          f"{sol.spp_wavelength * 1e6:12.1f}  "
          f"{sol.propagation_length * 1e6:11.0f}")

print()
print("air above / eps_r = 3.5 below, E_F = 1.2 eV, tau = 1.2 ps")
halfspaces = DielectricHalfspaces(eps_above=1.0, eps_below=3.5)
print(f"  {'f (GHz)':>8}  {'Re q/k0':>8}  {'lam_spp (um)':>12}  "
      f"{'L_prop (um)':>11}")
for f in (220e9, 280e9, 325e9):
    w = 2 * math.pi * f
    sol = spp_wavenumber_asymmetric(
        kubo_sigma(GrapheneSheet(1.2, 1.2e-12), w), halfspaces, w)
    print(f"  {f / 1e9:8.0f}  {sol.confinement_ratio:8.4f}  "
          f"{sol.spp_wavelength * 1e6:12.1f}  "
          f"{sol.propagation_length * 1e6:11.0f}")

print()
print("the substrate pins the mode just above its own light line")
print(f"(sqrt(3.5) = {math.sqrt(3.5):.4f}), so the wave is only weakly bound")
print("at these frequencies; strong confinement needs low bias or higher f.")
