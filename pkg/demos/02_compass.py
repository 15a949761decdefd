"""
Building the compass superposition and checking its normalization.

Run: python demos/02_compass.py
"""
import numpy as np

from qcompass import compass, make_params, oscillator
from qcompass.compass import CompassSpec
from qcompass.quadrature import QuadratureSpec, overlap

for h in (0.5, 1.3, 2.1, 5.0):
    prm = make_params(h=h)
    row = []
    for n in range(4):
        a, b, rel = CompassSpec(n, prm).cross_check()
        row.append(f"{a:.6f}")
    print(f"h={h:<4} N_q for n=0..3: {' '.join(row)}")
# N_q is 1/2 at n=0 and climbs toward 1 once the four pieces stop overlapping.

# n = 0: every component is the same Gaussian, so the compass state is too
prm = make_params(h=2.1)
x = np.linspace(-5, 5, 11)
ground = oscillator.norm_const_cn(0, prm) * np.exp(-prm.lam * x**2)
print("n=0 deviation from Gaussian:", np.max(np.abs(compass.compass_amplitude(CompassSpec(0, prm), x) - ground)))

# states with different n stay orthogonal
prm = make_params(h=1.3)
quad = QuadratureSpec.for_position(prm, 3)
states = [compass.compass_state(CompassSpec(n, prm)) for n in range(4)]
gram = np.array([[overlap(a, b, quad) for b in states] for a in states])
print("Gram matrix (abs):")
print(np.array2string(np.abs(gram), precision=3, suppress_small=True))

# two-component cats
for pair in ("NS", "EW"):
    print(f"cat {pair}, n=1, norm const = {compass.cat_norm(pair, 1, prm):.6f}")
