"""
Wigner function of the compass state.

The closed form is a sum of sixteen cross terms, one per ordered pair of
directions. Eight are evaluated from explicit series; the other eight follow
from point reflection ``(p, x) -> (-p, -x)`` or complex conjugation. A
brute-force quadrature of the defining integral serves as the oracle.
"""
import math
from typing import NamedTuple

import numpy as np

from . import qkernel
from .compass import (
    CompassSpec,
    compass_state,
    component_state,
    i_power,
    normalization_analytic,
)
from .directions import ALL_PAIRS, DirectionPair
from .errors import RealnessError
from .quadrature import QuadratureSpec, check_tails

# Quarter-turn exponents of the phase multiplying each cross term in the
# 16-term sum, per unit n: e^{i n pi/2 * k}.
PAIR_QUARTER_TURNS = {
    "NN": 0, "NS": 2, "NE": -1, "NW": 1,
    "SN": -2, "SS": 0, "SE": -3, "SW": -1,
    "EN": 1, "ES": 3, "EE": 0, "EW": 2,
    "WN": -1, "WS": 1, "WE": -2, "WW": 0,
}

# derived pair -> (explicit pair, relation)
_REFLECTED = {"SS": "NN", "SN": "NS", "WW": "EE", "WE": "EW"}
_CONJUGATED = {"EN": "NE", "WN": "NW", "ES": "SE", "WS": "SW"}


class PhaseArgument(NamedTuple):
    a: complex
    a_conj: complex


def phase_argument(p, x, params):
    """``a = (h/hbar) p + 2i lam h x`` and its partner with the sign of the imaginary part flipped."""
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    re = params.h / params.hbar * p
    im = 2 * params.lam * params.h * x
    return PhaseArgument(re + 1j * im, re - 1j * im)


def _envelope_exponent(p, x, params):
    m, w = params.m, params.omega
    return 2 / (params.hbar * w) * (m * w**2 * x**2 / 2 + p**2 / (2 * m))


def gaussian_envelope(p, x, params):
    """Common Gaussian factor of every closed-form cross term."""
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.exp(-_envelope_exponent(p, x, params))
    return out[()] if out.ndim == 0 else out


def _explicit(name, n, p, x, params, nq):
    q = params.q
    a, ac = phase_argument(p, x, params)
    expo = -_envelope_exponent(np.asarray(p, float), np.asarray(x, float), params)
    pre = nq**2 / (4 * math.pi * params.hbar)

    if name in ("NN", "EE"):
        if name == "NN":
            a1, a2 = q**n * np.exp(-1j * a), q**n * np.exp(1j * ac)
        else:
            a1, a2 = q**n * np.exp(a), q**n * np.exp(ac)
        series = qkernel.phi32_terminating(n, a1, a2, q, 0.0, q, q)
        return pre * (-1) ** n * q ** (-(n * (n - 1) // 2)) * np.exp(expo) * series

    if name == "NS":
        series = qkernel.phi32_terminating(n, q * np.exp(-1j * a), np.exp(1j * ac), q, 0.0, q, q)
        # the exponential of n*a is merged with the envelope to avoid overflow
        return pre * np.exp(expo + 1j * n * a) * series
    if name == "EW":
        series = qkernel.phi32_terminating(n, q * np.exp(a), np.exp(ac), q, 0.0, q, q)
        return pre * np.exp(expo - n * a) * series

    # NE, NW, SE, SW: sum_k (q^-n;q)_k/(q;q)_k (q^{+-ik} e^{+-a};q)_n (q^n e^{+-i a*})^k
    s_ik, s_a, s_ac = {"NE": (1, 1, 1), "NW": (-1, -1, 1), "SE": (-1, 1, -1), "SW": (1, -1, -1)}[name]
    log_q = math.log(q)
    ratio = q**n * np.exp(s_ac * 1j * ac)
    total = np.zeros(np.broadcast(a, ac).shape, dtype=complex)
    for k in range(n + 1):
        weight = qkernel.q_pochhammer(q**-n, q, k) / qkernel.q_pochhammer(q, q, k)
        shift = np.exp(s_ik * 1j * k * log_q + s_a * a)
        total = total + weight * qkernel.q_pochhammer(shift, q, n) * ratio**k
    lead = q**n / qkernel.q_pochhammer(q, q, n).real
    return pre * lead * np.exp(expo) * total


def component_closed(pair, n, p, x, params, nq=None):
    """
    Closed-form cross term ``W^{XY}`` for ``pair = XY`` (X enters conjugated),
    including the prefactor ``N_q^2 / (4 pi hbar)``.
    """
    pair = DirectionPair.parse(pair)
    n = qkernel._check_order(n)
    if nq is None:
        nq = normalization_analytic(n, params)
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    name = pair.name
    if name in _REFLECTED:
        out = _explicit(_REFLECTED[name], n, -p, -x, params, nq)
    elif name in _CONJUGATED:
        out = np.conj(_explicit(_CONJUGATED[name], n, p, x, params, nq))
    else:
        out = _explicit(name, n, p, x, params, nq)
    out = np.asarray(out, dtype=complex)
    return out[()] if out.ndim == 0 else out


def pair_phase(pair, n):
    """Phase multiplying ``W^{XY}`` in the 16-term sum."""
    return i_power(PAIR_QUARTER_TURNS[DirectionPair.parse(pair).name] * n)


def phased_components(n, p, x, params, nq=None):
    """Dict ``pair name -> phase * W^{pair}`` for all sixteen pairs."""
    if nq is None:
        nq = normalization_analytic(n, params)
    return {pr.name: pair_phase(pr, n) * component_closed(pr, n, p, x, params, nq) for pr in ALL_PAIRS}


def _realize(parts, what, rtol=1e-9):
    summed = sum(parts)
    scale = max(np.max(np.abs(c)) for c in parts)
    residue = np.max(np.abs(np.imag(summed)))
    if residue > rtol * scale:
        raise RealnessError(f"{what}: imaginary residue {residue:.3g} vs scale {scale:.3g}")
    out = np.real(summed)
    return out[()] if np.ndim(out) == 0 else out


def total(n, p, x, params, nq=None):
    """
    Wigner function of the normalized compass state from the sixteen closed-form
    cross terms.

    Raises
    ------
    RealnessError
        If the imaginary residue of the sum exceeds 1e-9 of the largest term.
    """
    parts = list(phased_components(n, p, x, params, nq).values())
    return _realize(parts, "compass Wigner sum")


def diagonal_part(n, p, x, params, nq=None):
    """``W^NN + W^SS + W^EE + W^WW``, the four lobe terms."""
    if nq is None:
        nq = normalization_analytic(n, params)
    parts = [component_closed(k, n, p, x, params, nq) for k in ("NN", "SS", "EE", "WW")]
    return _realize(parts, "diagonal Wigner terms")


def oracle_quadrature(params, n, x):
    """Default x' window for the oracle at positions ``x``."""
    return QuadratureSpec.for_wigner(params, n, float(np.max(np.abs(x))) if np.size(x) else 0.0)


def cross_wigner_oracle(state_a, state_b, p, x, params, quad, chunk=2_000_000):
    """
    ``(1/(2 pi hbar)) int conj(A(x - s/2)) B(x + s/2) exp(-i p s / hbar) ds``
    by the trapezoid rule on ``quad``.

    Raises
    ------
    QuadratureWindowError
        If the integrand at the window edges exceeds 1e-14 of its peak.
    """
    p, x = np.broadcast_arrays(np.asarray(p, dtype=float), np.asarray(x, dtype=float))
    shape = p.shape
    pf, xf = p.ravel(), x.ravel()
    s = quad.nodes()
    w = quad.weights()
    out = np.empty(pf.size, dtype=complex)
    per = max(1, chunk // s.size)
    for i in range(0, pf.size, per):
        pc, xc = pf[i:i + per, None], xf[i:i + per, None]
        prod = np.conj(state_a(xc - s / 2)) * state_b(xc + s / 2)
        check_tails(prod, axis=-1, what="cross-Wigner integrand")
        out[i:i + per] = (prod * np.exp(-1j * pc * s / params.hbar)) @ w
    out = out.reshape(shape) / (2 * math.pi * params.hbar)
    return out[()] if out.ndim == 0 else out


def component_oracle(pair, n, p, x, params, quad=None, nq=None):
    """Quadrature counterpart of ``component_closed``: ``(N_q^2/4) W[psi^X, psi^Y]``."""
    pair = DirectionPair.parse(pair)
    if nq is None:
        nq = normalization_analytic(n, params)
    quad = quad or oracle_quadrature(params, n, x)
    a = component_state(pair.first, n, params)
    b = component_state(pair.second, n, params)
    return nq**2 / 4 * cross_wigner_oracle(a, b, p, x, params, quad)


def total_oracle(n, p, x, params, quad=None, normalization_mode="analytic"):
    """Wigner function of the compass state straight from the defining integral."""
    psi = compass_state(CompassSpec(n, params, normalization_mode))
    quad = quad or oracle_quadrature(params, n, x)
    out = cross_wigner_oracle(psi, psi, p, x, params, quad)
    return np.real(out)
