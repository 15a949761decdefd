"""
Property checks run by ``qcompass verify``.

Each check returns a :class:`PropertyResult` carrying the measured residual
and the tolerance it was held to. Oracles here are written independently of
the code paths they check.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import compass, oscillator, phasespace, qkernel, wigner
from .directions import ALL_PAIRS, DIRECTIONS
from .quadrature import QuadratureSpec, integrate, overlap


@dataclass
class PropertyResult:
    name: str
    passed: bool
    residual: float
    tolerance: float
    details: list = field(default_factory=list)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"PROPERTY {self.name}: {status} residual={self.residual:.17g} tolerance={self.tolerance:.17g}"


def _result(name, residual, tol, details=(), passed=None):
    ok = residual < tol if passed is None else passed
    return PropertyResult(name, bool(ok), float(residual), float(tol), list(details))


# ------------------------------------------------------------------ oracles

def _binomial_by_expansion(n, k, q):
    # coefficient of t^k q^{k(k-1)/2} in prod_{j<n} (1 + q^j t)
    poly = np.array([1.0])
    for j in range(n):
        poly = np.convolve(poly, [1.0, q**j])
    return poly[k] / q ** (k * (k - 1) / 2)


def _hermite_recurrence(n, x):
    h0, h1 = np.ones_like(x), 2 * x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, 2 * x * h1 - 2 * k * h0
    return h1


def _phi32_loop(n, a1, a2, b1, b2, q, z):
    s = 0j
    for k in range(n + 1):
        num = den = 1 + 0j
        for j in range(k):
            num *= (1 - q ** (j - n)) * (1 - a1 * q**j) * (1 - a2 * q**j)
            den *= (1 - b1 * q**j) * (1 - b2 * q**j) * (1 - q ** (j + 1))
        s += num / den * z**k
    return s


# ------------------------------------------------------------------ checks

def check_kernel():
    out = []
    ring = 0.8 * np.exp(2j * np.pi * np.arange(8) / 8) + 0.1
    worst = 0.0
    for q in (0.1, 0.43, 0.9):
        for n in range(9):
            lit = qkernel.rogers_szego(n, ring, q)
            ref = sum(_binomial_by_expansion(n, k, q) * (-1) ** k * q ** (-k / 2) * ring**k for k in range(n + 1))
            worst = max(worst, np.max(np.abs(lit - ref) / np.maximum(np.abs(ref), 1e-300)))
    out.append(_result("kernel_rogers_szego_vs_q_binomial", worst, 1e-10))

    worst = 0.0
    for a in (0.3, -1.2 + 0.5j, 2.0):
        for q in (0.2, 0.7, 1.5):
            for n in range(8):
                lhs = qkernel.q_pochhammer(a, q, n + 1)
                rhs = qkernel.q_pochhammer(a, q, n) * (1 - a * q**n)
                worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    out.append(_result("kernel_q_pochhammer_recursion", worst, 1e-12))

    x = np.linspace(-5, 5, 41)
    worst = max(
        np.max(np.abs(qkernel.hermite(n, x) - _hermite_recurrence(n, x)) / np.maximum(np.abs(_hermite_recurrence(n, x)), 1.0))
        for n in range(11)
    )
    out.append(_result("kernel_hermite_sum_vs_recurrence", worst, 1e-10))

    worst = 0.0
    for n in range(5):
        for z in (0.5, 0.3 + 0.4j):
            v = qkernel.phi32_terminating(n, 0.25, 0.7j, 0.5, 0.0, 0.5, z)
            ref = _phi32_loop(n, 0.25, 0.7j, 0.5, 0.0, 0.5, z)
            worst = max(worst, abs(v - ref) / abs(ref))
    out.append(_result("kernel_phi32_vs_loop", worst, 1e-12))
    return out


def check_params():
    worst = max(abs(round(oscillator.make_params(h=h).q, 2) - q) for h, q in ((1.3, 0.43), (2.1, 0.11)))
    return [_result("params_q_two_decimals", worst, 1e-12)]


def check_state_norms():
    worst = 0.0
    for h in (0.5, 1.3, 2.1):
        prm = oscillator.make_params(h=h)
        for n in range(5):
            quad = QuadratureSpec.for_position(prm, n)
            for st in (oscillator.x_state(n, prm), oscillator.p_state(n, prm)):
                worst = max(worst, abs(overlap(st, st, quad).real - 1))
    return [_result("stationary_state_unit_norm", worst, 1e-8)]


def check_ho_limit():
    details, ok, worst = [], True, 0.0
    for n in (1, 2, 3):
        ovl = []
        for h in (0.2, 0.1, 0.05):
            prm = oscillator.make_params(h=h)
            psi = compass.compass_state(compass.CompassSpec(n, prm))
            ovl.append(abs(overlap(oscillator.ho_state(n, prm.lam), psi, QuadratureSpec.for_position(prm, n))))
        ok &= ovl[0] < ovl[1] < ovl[2] and ovl[2] > 0.99
        worst = max(worst, 1 - ovl[2])
        details.append(f"n={n} overlaps " + " ".join(f"{v:.17g}" for v in ovl))
    return [_result("ho_limit_overlap", worst, 0.01, details, passed=ok)]


def check_collapse():
    x = np.linspace(-5, 5, 201)
    worst = 0.0
    for h in (0.5, 1.3, 2.1, 5.0):
        prm = oscillator.make_params(h=h)
        ground = oscillator.norm_const_cn(0, prm) * np.exp(-prm.lam * x**2)
        worst = max(worst, np.max(np.abs(compass.compass_amplitude(compass.CompassSpec(0, prm), x) - ground)))
    nq = max(abs(compass.normalization_analytic(0, prm) - 0.5), abs(compass.normalization_numeric(0, prm) - 0.5))
    return [_result("n0_collapse_to_ground_gaussian", worst, 1e-12),
            _result("n0_normalization_half", nq, 1e-10)]


def check_normalization():
    worst, details = 0.0, []
    for h in (0.5, 1.3, 2.1):
        prm = oscillator.make_params(h=h)
        for n in range(4):
            a = compass.normalization_analytic(n, prm)
            b = compass.normalization_numeric(n, prm)
            rel = abs(a - b) / b
            worst = max(worst, rel)
            line = f"N_q n={n} h={h:.17g} analytic={a:.17g} numeric={b:.17g}"
            details.append(line)
    return [_result("normalization_analytic_vs_numeric", worst, 1e-6, details)]


def check_orthonormality():
    prm = oscillator.make_params(h=1.3)
    quad = QuadratureSpec.for_position(prm, 3)
    states = [compass.compass_state(compass.CompassSpec(n, prm)) for n in range(4)]
    gram = np.array([[overlap(a, b, quad) for b in states] for a in states])
    off = np.max(np.abs(gram - np.diag(np.diag(gram))))
    diag = np.max(np.abs(np.diag(gram) - 1))
    return [_result("orthonormality_offdiagonal", off, 1e-7), _result("orthonormality_diagonal", diag, 1e-8)]


def check_ladder():
    xs = np.linspace(-3, 3, 20)
    eig = comm = 0.0
    for h in (0.5, 1.3):
        prm = oscillator.make_params(h=h)
        for d in DIRECTIONS:
            for n in range(4):
                psi = compass.component_state(d, n, prm)
                lower = oscillator.ladder_apply(d, "lowering", psi, prm)
                raise_lower = oscillator.ladder_apply(d, "raising", lower, prm)
                lower_raise = oscillator.ladder_apply(d, "lowering", oscillator.ladder_apply(d, "raising", psi, prm), prm)
                f = psi(xs)
                scale = np.max(np.abs(f))
                bb = raise_lower(xs)
                eig = max(eig, np.max(np.abs(bb - qkernel.basic_number(n, prm.q) * f)) / scale)
                comm = max(comm, np.max(np.abs(lower_raise(xs) - prm.q * bb - f)) / scale)
    return [_result("ladder_number_eigenvalue", eig, 1e-8), _result("ladder_q_commutator", comm, 1e-8)]


def check_wigner(prefactor_scale=1.0):
    out = []
    g = np.linspace(-4, 4, 11)
    P, X = np.meshgrid(g, g, indexing="ij")
    worst = 0.0
    for h in (0.5, 1.3, 2.1):
        prm = oscillator.make_params(h=h)
        for n in (0, 1, 2):
            closed = prefactor_scale * wigner.total(n, P, X, prm)
            worst = max(worst, np.max(np.abs(closed - wigner.total_oracle(n, P, X, prm))))
    out.append(_result("wigner_oracle_equivalence", worst, 1e-6))

    rng = np.random.default_rng(12345)
    worst = 0.0
    prm = oscillator.make_params(h=1.3)
    for pair in ALL_PAIRS:
        p, x = rng.uniform(-3, 3, 5), rng.uniform(-3, 3, 5)
        c = wigner.component_closed(pair, 1, p, x, prm)
        o = wigner.component_oracle(pair, 1, p, x, prm)
        worst = max(worst, np.max(np.abs(c - o)))
    out.append(_result("wigner_component_oracles", worst, 1e-6))

    real = norm = marg = 0.0
    grid = np.linspace(-8, 8, 161)
    Pg, Xg = np.meshgrid(grid, grid, indexing="ij")
    pw = np.linspace(-12, 12, 481)
    for h in (0.5, 1.3, 2.1):
        prm = oscillator.make_params(h=h)
        for n in (0, 1, 2):
            parts = list(wigner.phased_components(n, Pg, Xg, prm).values())
            s = sum(parts)
            real = max(real, np.max(np.abs(s.imag)) / np.max(np.abs(s.real)))
            norm = max(norm, abs(np.sum(s.real) * (grid[1] - grid[0]) ** 2 - 1))
            xm = np.array([-1.7, 0.0, 0.6, 2.3])
            Wm = wigner.total(n, pw[:, None], xm[None, :], prm)
            dens = np.abs(compass.compass_amplitude(compass.CompassSpec(n, prm), xm)) ** 2
            marg = max(marg, np.max(np.abs(np.sum(Wm, axis=0) * (pw[1] - pw[0]) - dens)))
    out.append(_result("wigner_realness", real, 1e-9))
    out.append(_result("wigner_normalization", norm, 1e-3))
    out.append(_result("wigner_marginal", marg, 1e-5))
    origin = abs(wigner.total(0, 0.0, 0.0, oscillator.make_params(h=1.3)) - 1 / math.pi)
    out.append(_result("wigner_origin_n0", origin, 1e-10))
    return out


def check_figure(nodes=161):
    out = []
    prm = oscillator.make_params(h=5.0)
    spec = phasespace.GridSpec.square(8.0, nodes)
    grid = phasespace.render_grid(1, prm, spec)
    peaks = phasespace.locate_peaks(grid, 4)
    dev = max(abs(pk.radius - 5.0) / 5.0 for pk in peaks)
    out.append(_result("peak_distance_h5", dev, 0.10,
                       [f"peak p={pk.p:.17g} x={pk.x:.17g} W={pk.value:.17g}" for pk in peaks]))
    lobes = phasespace.locate_peaks(phasespace.render_grid(1, prm, spec, part="diagonal"), 4)
    dev = max(abs(pk.radius - 5.0) / 5.0 for pk in lobes)
    out.append(_result("lobe_distance_h5", dev, 0.10,
                       [f"lobe p={pk.p:.17g} x={pk.x:.17g} W={pk.value:.17g}" for pk in lobes]))

    neg = phasespace.negativity_fraction(
        phasespace.render_grid(1, oscillator.make_params(h=2.1), phasespace.GridSpec.square(4.0, nodes)), 0.01)
    ctrl = phasespace.negativity_fraction(
        phasespace.render_grid(0, oscillator.make_params(h=2.1), phasespace.GridSpec.square(4.0, nodes)), 1e-6)
    out.append(_result("negativity_h2.1", neg, 0.0, passed=neg > 0))
    out.append(_result("negativity_n0_control", ctrl, 0.0, passed=ctrl == 0))
    return out


def run_verification(prefactor_scale=1.0):
    """Run every property and return the list of results."""
    results = []
    results += check_kernel()
    results += check_params()
    results += check_state_norms()
    results += check_collapse()
    results += check_normalization()
    results += check_orthonormality()
    results += check_ho_limit()
    results += check_ladder()
    results += check_wigner(prefactor_scale)
    results += check_figure()
    return results
