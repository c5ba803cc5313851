"""Design the reference 280 GHz patch and show how graphene detunes it.

The metal design comes straight from the transmission-line synthesis; the
graphene rows show the same geometry loaded by sheets of increasing Fermi
level. The resonance only depends on the Fermi level (through the kinetic
inductance), not on the relaxation time.

Run: python3 demos/design_table.py
"""

from thzpatch import (ConductorSpec, GrapheneSheet, SubstrateSpec,
                      design_patch, f_res_metal, graphene_resonance,
                      sheet_impedance)

substrate = SubstrateSpec(rel_permittivity=3.5, loss_tangent=0.0027,
                          thickness=50e-6)
geom = design_patch(280e9, substrate)

print("patch synthesis at 280 GHz on eps_r=3.5, tan d=0.0027, h=50 um")
print(f"  width                {geom.width * 1e6:9.3f} um")
print(f"  length               {geom.length * 1e6:9.3f} um")
print(f"  effective eps        {geom.eps_eff:9.5f}")
print(f"  fringing extension   {geom.fringing_extension * 1e6:9.3f} um")
print(f"  substrate            {geom.substrate_width * 1e6:.0f} x "
      f"{geom.substrate_length * 1e6:.0f} um")
print(f"  metal resonance      {f_res_metal(geom) / 1e9:9.3f} GHz")
print()

print("the same patch with a graphene conductor (tau = 1.2 ps):")
print(f"  {'E_F (eV)':>8}  {'R_s (ohm)':>10}  {'L_k (pH)':>9}  "
      f"{'f_res (GHz)':>11}  {'shift':>6}")
f_metal = f_res_metal(geom)
for fermi in (0.3, 0.6, 0.9, 1.2):
    sheet = GrapheneSheet(fermi, 1.2e-12)
    z = sheet_impedance(sheet)
    f_g = graphene_resonance(geom, ConductorSpec.graphene(sheet))
    print(f"  {fermi:8.1f}  {z.sheet_resistance:10.2f}  "
          f"{z.kinetic_inductance * 1e12:9.3f}  {f_g / 1e9:11.2f}  "
          f"{100 * (1 - f_g / f_metal):5.1f}%")
