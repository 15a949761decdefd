"""
Stationary states of the finite-difference oscillator.

Run: python demos/01_states.py
"""
import numpy as np

from qcompass import make_params, oscillator
from qcompass.quadrature import QuadratureSpec, overlap

# unit mass, frequency and hbar; h is the lattice step
prm = make_params(h=1.3)
print(f"lambda = {prm.lam}, q = {prm.q:.4f}")

# the x-representation state is complex, the p-model state is real on the axis
x = np.linspace(-3, 3, 7)
print("psi_x(1, x)       =", np.round(oscillator.psi_x(1, x, prm), 4))
print("psi_p_model(1, x) =", np.round(oscillator.psi_p_model(1, x, prm), 4))

# both families are normalized; check with the trapezoid window
quad = QuadratureSpec.for_position(prm, 3)
for n in range(4):
    sx, sp = oscillator.x_state(n, prm), oscillator.p_state(n, prm)
    print(f"n={n}  <x|x> = {overlap(sx, sx, quad).real:.12f}  <p|p> = {overlap(sp, sp, quad).real:.12f}")

# shrinking h brings both back to the ordinary oscillator.
# Tiny h is avoided on purpose: the finite sum cancels as q -> 1.
xs = np.linspace(-5, 5, 201)
for h in (0.2, 0.1, 0.05):
    p = make_params(h=h)
    ho = oscillator.ho_eigenstate(2, xs, p.lam)
    dx = np.max(np.abs((-1j) ** 2 * oscillator.psi_x(2, xs, p) - ho))
    dp = np.max(np.abs(oscillator.psi_p_model(2, xs, p) - ho))
    print(f"h={h:<5} sup|(-i)^2 psi_x - HO| = {dx:.2e}   sup|psi_p - HO| = {dp:.2e}")
