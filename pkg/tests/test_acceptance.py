"""
Acceptance suite. Each criterion records one PASS/FAIL line, printed in the
"acceptance criteria" section of the pytest terminal summary.
"""
import math
import time

import numpy as np
import pytest

from qcompass import compass, oscillator, phasespace, qkernel, wigner
from qcompass.compass import CompassSpec
from qcompass.directions import ALL_PAIRS, DIRECTIONS
from qcompass.oscillator import make_params
from qcompass.quadrature import QuadratureSpec, overlap
from oracles import hermite_recurrence, phi32_loop, rogers_szego_by_binomial

pytestmark = pytest.mark.acceptance


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_1_parameter_map(criterion):
    with Clock() as clk:
        q13, q21 = make_params(h=1.3).q, make_params(h=2.1).q
    ok = round(q13, 2) == 0.43 and round(q21, 2) == 0.11 and clk.elapsed < 1
    criterion("criterion 1 parameter map", ok, f"q(1.3)={q13:.6f} q(2.1)={q21:.6f} t={clk.elapsed:.3f}s")
    assert ok


def test_criterion_2_ground_collapse(criterion):
    x = np.linspace(-5, 5, 401)
    with Clock() as clk:
        dev = nq_err = 0.0
        for h in (0.5, 1.3, 2.1, 5.0):
            prm = make_params(h=h)
            ground = oscillator.norm_const_cn(0, prm) * np.exp(-prm.lam * x**2)
            dev = max(dev, np.max(np.abs(compass.compass_amplitude(CompassSpec(0, prm), x) - ground)))
            nq_err = max(nq_err, abs(compass.normalization_analytic(0, prm) - 0.5),
                         abs(compass.normalization_numeric(0, prm) - 0.5))
    ok = dev < 1e-12 and nq_err < 1e-10 and clk.elapsed < 5
    criterion("criterion 2 n=0 collapse", ok, f"max_dev={dev:.3g} N_q_err={nq_err:.3g} t={clk.elapsed:.2f}s")
    assert ok


def test_criterion_3_oscillator_limit(criterion):
    with Clock() as clk:
        ok, report = True, []
        for n in (1, 2, 3):
            ovl = []
            for h in (0.2, 0.1, 0.05):
                prm = make_params(h=h)
                psi = compass.compass_state(CompassSpec(n, prm))
                ho = oscillator.ho_state(n, prm.lam)
                ovl.append(abs(overlap(ho, psi, QuadratureSpec.for_position(prm, n))))
            ok &= ovl[0] < ovl[1] < ovl[2] and ovl[2] > 0.99
            report.append(f"n={n}:" + ",".join(f"{v:.12f}" for v in ovl))
    ok &= clk.elapsed < 30
    criterion("criterion 3 oscillator limit", ok, " ".join(report) + f" t={clk.elapsed:.2f}s")
    assert ok


def test_criterion_4_orthonormality(criterion):
    with Clock() as clk:
        prm = make_params(h=1.3)
        quad = QuadratureSpec.for_position(prm, 3)
        states = [compass.compass_state(CompassSpec(n, prm)) for n in range(4)]
        gram = np.array([[overlap(a, b, quad) for b in states] for a in states])
        off = np.max(np.abs(gram - np.diag(np.diag(gram))))
        diag = np.max(np.abs(np.diag(gram) - 1))
        mismatch = max(CompassSpec(n, prm).cross_check(rtol=1e-6)[2] for n in range(4))
    ok = off < 1e-7 and diag < 1e-8 and mismatch <= 1e-6 and clk.elapsed < 30
    criterion("criterion 4 orthonormality", ok,
              f"offdiag={off:.3g} diag={diag:.3g} N_q_rel={mismatch:.3g} t={clk.elapsed:.2f}s")
    assert ok


def test_criterion_5_oracle_equivalence(criterion):
    g = np.linspace(-4, 4, 11)
    P, X = np.meshgrid(g, g, indexing="ij")
    rng = np.random.default_rng(2024)
    with Clock() as clk:
        total_dev = comp_dev = 0.0
        for h in (0.5, 1.3, 2.1):
            prm = make_params(h=h)
            for n in (0, 1, 2):
                total_dev = max(total_dev, np.max(np.abs(wigner.total(n, P, X, prm) - wigner.total_oracle(n, P, X, prm))))
                for pr in ALL_PAIRS:
                    p, x = rng.uniform(-4, 4, 5), rng.uniform(-4, 4, 5)
                    diff = wigner.component_closed(pr, n, p, x, prm) - wigner.component_oracle(pr, n, p, x, prm)
                    comp_dev = max(comp_dev, np.max(np.abs(diff)))
    ok = total_dev < 1e-6 and comp_dev < 1e-6 and clk.elapsed < 300
    criterion("criterion 5 Wigner oracle equivalence", ok,
              f"total_dev={total_dev:.3g} component_dev={comp_dev:.3g} t={clk.elapsed:.1f}s")
    assert ok


def test_criterion_6_wigner_structure(criterion):
    g = np.linspace(-8, 8, 161)
    pw = np.linspace(-12, 12, 481)
    xm = np.linspace(-3, 3, 13)
    with Clock() as clk:
        real = norm = marg = 0.0
        # smallest step follows the convergence protocol; the literal sum behind |Psi|^2 cancels badly near q = 1
        for h in (0.05, 0.5, 1.3, 2.1):
            prm = make_params(h=h)
            for n in (0, 1, 2):
                s = sum(wigner.phased_components(n, g[:, None], g[None, :], prm).values())
                real = max(real, np.max(np.abs(s.imag)) / np.max(np.abs(s.real)))
                norm = max(norm, abs(np.sum(s.real) * (g[1] - g[0]) ** 2 - 1))
                Wm = wigner.total(n, pw[:, None], xm[None, :], prm)
                dens = np.abs(compass.compass_amplitude(CompassSpec(n, prm), xm)) ** 2
                marg = max(marg, np.max(np.abs(np.sum(Wm, axis=0) * (pw[1] - pw[0]) - dens)))
        origin = abs(wigner.total(0, 0.0, 0.0, make_params(h=1.3)) - 1 / math.pi)
    ok = real < 1e-9 and norm < 1e-3 and marg < 1e-5 and origin < 1e-10 and clk.elapsed < 120
    criterion("criterion 6 Wigner structure", ok,
              f"imag_rel={real:.3g} norm_err={norm:.3g} marginal={marg:.3g} origin={origin:.3g} t={clk.elapsed:.1f}s")
    assert ok


def test_criterion_7_ladder_algebra(criterion):
    xs = np.linspace(-3, 3, 20)
    with Clock() as clk:
        eig = comm = 0.0
        for h in (0.5, 1.3):
            prm = make_params(h=h)
            for d in DIRECTIONS:
                for n in range(4):
                    psi = compass.component_state(d, n, prm)
                    rl = oscillator.ladder_apply(d, "raising", oscillator.ladder_apply(d, "lowering", psi, prm), prm)(xs)
                    lr = oscillator.ladder_apply(d, "lowering", oscillator.ladder_apply(d, "raising", psi, prm), prm)(xs)
                    f = psi(xs)
                    scale = np.max(np.abs(f))
                    eig = max(eig, np.max(np.abs(rl - qkernel.basic_number(n, prm.q) * f)) / scale)
                    comm = max(comm, np.max(np.abs(lr - prm.q * rl - f)) / scale)
    ok = eig < 1e-8 and comm < 1e-8 and clk.elapsed < 60
    criterion("criterion 7 ladder algebra", ok, f"number={eig:.3g} commutator={comm:.3g} t={clk.elapsed:.2f}s")
    assert ok


@pytest.fixture(scope="module")
def figure_panels():
    start = time.perf_counter()
    panels = {}
    for h in phasespace.FIGURE1_H:
        panels[h] = phasespace.render_grid(1, make_params(h=h), phasespace.figure1_grid_spec(h), workers=4)
    return panels, time.perf_counter() - start


def test_criterion_8a_peaks_at_h5(criterion, figure_panels):
    panels, _ = figure_panels
    peaks = phasespace.locate_peaks(panels[5.0], 4)
    dists = [pk.radius for pk in peaks]
    ok = not peaks.short and all(abs(d - 5.0) <= 0.5 for d in dists)
    where = " ".join(f"({pk.p:.2f},{pk.x:.2f};W={pk.value:.4f})" for pk in peaks)
    criterion("criterion 8a four peaks at distance 5 (h=5)", ok, f"peaks {where}")
    assert ok


def test_criterion_8b_negativity(criterion, figure_panels):
    panels, _ = figure_panels
    fractions = {h: phasespace.negativity_fraction(g, 0.01) for h, g in panels.items() if h >= 1.3}
    control = phasespace.render_grid(0, make_params(h=1.3), phasespace.figure1_grid_spec(1.3), workers=4)
    ctrl = phasespace.negativity_fraction(control, 0.01)
    ok = all(v > 0 for v in fractions.values()) and ctrl == 0
    detail = " ".join(f"h={h:g}:{v:.4f}" for h, v in fractions.items()) + f" control_n0={ctrl:g}"
    criterion("criterion 8b negativity", ok, detail)
    assert ok


def test_criterion_8c_oscillator_panel(criterion, figure_panels):
    panels, render_time = figure_panels
    grid = panels[0.0001]
    prm = make_params(h=0.0001)
    P, X = np.meshgrid(grid.spec.p, grid.spec.x, indexing="ij")
    ho = oscillator.ho_state(1, prm.lam)
    start = time.perf_counter()
    ref = wigner.cross_wigner_oracle(ho, ho, P, X, prm, wigner.oracle_quadrature(prm, 1, X)).real
    elapsed = render_time + time.perf_counter() - start
    dev = np.max(np.abs(grid.values - ref))
    ok = dev < 1e-4 and elapsed < 600
    criterion("criterion 8c h=0.0001 panel vs oscillator", ok, f"max_abs={dev:.3g} t={elapsed:.1f}s")
    assert ok


def test_criterion_9_kernel_identities(criterion):
    ring = 1.3 * np.exp(2j * np.pi * np.arange(8) / 8)
    with Clock() as clk:
        rs = 0.0
        for q in (0.1, 0.43, 0.9):
            for n in range(9):
                for z in ring:
                    ref = rogers_szego_by_binomial(n, z, q)
                    rs = max(rs, abs(qkernel.rogers_szego(n, z, q) - ref) / abs(ref))
        poch = max(
            abs(qkernel.q_pochhammer(a, q, n + 1) - qkernel.q_pochhammer(a, q, n) * (1 - a * q**n))
            / max(1.0, abs(qkernel.q_pochhammer(a, q, n + 1)))
            for a in (-1.5, 0.3, 0.7 + 0.2j) for q in (0.1, 0.43, 0.9) for n in range(10)
        )
        herm = 0.0
        for n in range(11):
            x = np.linspace(-5, 5, 41)
            ref = hermite_recurrence(n, x)
            herm = max(herm, np.max(np.abs(qkernel.hermite(n, x) - ref) / np.maximum(np.abs(ref), 1.0)))
        phi = 0.0
        for q in (0.2, 0.43, 0.7):
            for n in range(6):
                a1, a2 = q**n * np.exp(0.4j), q**n * np.exp(-0.3)
                ref, size = phi32_loop(n, a1, a2, q, 0.0, q, q, with_size=True)
                phi = max(phi, abs(qkernel.phi32_terminating(n, a1, a2, q, 0.0, q, q) - ref) / max(size, 1.0))
    ok = rs < 1e-10 and poch < 1e-13 and herm < 1e-10 and phi < 1e-12 and clk.elapsed < 10
    criterion("criterion 9 kernel identities", ok,
              f"rogers_szego={rs:.3g} pochhammer={poch:.3g} hermite={herm:.3g} phi32={phi:.3g} t={clk.elapsed:.2f}s")
    assert ok
