"""
Closed-form Wigner function versus brute-force quadrature.

Run: python demos/03_wigner.py
"""
import numpy as np

from qcompass import make_params, wigner
from qcompass.directions import ALL_PAIRS

prm = make_params(h=1.3)
p, x = 0.8, -0.5

# sixteen cross terms; the NE-style ones are complex, the total is real
print(f"{'pair':<5}{'closed':>28}{'oracle':>28}")
for pr in ALL_PAIRS:
    c = wigner.component_closed(pr, 1, p, x, prm)
    o = wigner.component_oracle(pr, 1, p, x, prm)
    print(f"{pr.name:<5}{c:>28.10f}{o:>28.10f}")

w = wigner.total(1, p, x, prm)
print("total closed =", w, " oracle =", wigner.total_oracle(1, p, x, prm))

# the Wigner function integrates to one and is negative in places
g = np.linspace(-8, 8, 161)
W = wigner.total(1, g[:, None], g[None, :], prm)
print("integral  =", W.sum() * (g[1] - g[0]) ** 2)
print("min / max =", W.min(), W.max())

# ground state: W(0, 0) = 1/pi for any h
print("n=0 origin:", wigner.total(0, 0.0, 0.0, make_params(h=3.0)), 1 / np.pi)
