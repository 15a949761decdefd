"""
Raising and lowering operators for each compass direction.

Run: python demos/05_ladders.py
"""
import numpy as np

from qcompass import compass, make_params, qkernel
from qcompass.oscillator import ladder_apply

prm = make_params(h=1.3)
xs = np.linspace(-3, 3, 20)

for d in "NSEW":
    for n in range(4):
        psi = compass.component_state(d, n, prm)
        down = ladder_apply(d, "lowering", psi, prm)
        number = ladder_apply(d, "raising", down, prm)(xs)
        f = psi(xs)
        # b+ b- acts as the basic number [n]_q
        resid = np.max(np.abs(number - qkernel.basic_number(n, prm.q) * f)) / np.max(np.abs(f))
        print(f"{d} n={n}: [n]_q = {qkernel.basic_number(n, prm.q):.6f}  residual {resid:.1e}")

# the lowering operator kills the ground state
psi0 = compass.component_state("E", 0, prm)
print("|b- psi_0| max:", np.max(np.abs(ladder_apply("E", "-", psi0, prm)(xs))))
