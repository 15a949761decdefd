"""
Six n = 1 phase-space panels with growing h, written as 16-bit PGM.

Run: python demos/04_figure_panels.py [outdir]
"""
import os
import sys

from qcompass import make_params, phasespace

outdir = sys.argv[1] if len(sys.argv) > 1 else "panels"
os.makedirs(outdir, exist_ok=True)

for h in phasespace.FIGURE1_H:
    prm = make_params(h=h)
    grid = phasespace.render_grid(1, prm, phasespace.figure1_grid_spec(h, nodes=151), workers=4)
    path = phasespace.export_grid(grid, "pgm", os.path.join(outdir, f"panel_h{h:g}.pgm"))[0]
    neg = phasespace.negativity_fraction(grid, 0.01)
    print(f"h={h:<7g} q={prm.q:.3g}  W in [{grid.values.min():+.4f}, {grid.values.max():+.4f}]"
          f"  negative fraction {neg:.3f}  -> {path}")

# At h = 5 the largest |W| sits at the origin (interference), not on the lobes.
prm = make_params(h=5.0)
spec = phasespace.figure1_grid_spec(5.0, nodes=161)
full = phasespace.locate_peaks(phasespace.render_grid(1, prm, spec), 4)
lobes = phasespace.locate_peaks(phasespace.render_grid(1, prm, spec, part="diagonal"), 4)
print("largest |W| maxima:", [(round(pk.p, 2), round(pk.x, 2)) for pk in full])
print("lobe maxima:       ", [(round(pk.p, 2), round(pk.x, 2), round(pk.radius, 2)) for pk in lobes])

# fringes get denser as the lobes move apart
for h in (1.3, 3.3):
    _, prof = phasespace.axis_profile(1, make_params(h=h))
    print(f"h={h}: sign changes along p=0: {phasespace.sign_alternations(prof)}")
