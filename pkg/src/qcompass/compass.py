"""
The four-component compass superposition of q-oscillator states, its
normalization, and two-component cat states.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import qkernel
from .directions import DIRECTIONS, Direction
from .errors import (
    DegenerateNormalizationError,
    InvalidArgumentError,
    NormalizationMismatchError,
    RealnessError,
)
from .oscillator import AnalyticState, OscillatorParams, _psi_p, _psi_x
from .quadrature import QuadratureSpec, check_tails, integrate

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)
# quarter turns per unit n: N -> e^{i n pi}, S -> e^{2 i n pi}, E -> e^{i n pi/2}, W -> e^{3 i n pi/2}
_QUARTER_TURNS = {Direction.N: 2, Direction.S: 4, Direction.E: 1, Direction.W: 3}

CAT_PAIRS = {"NS": (Direction.N, Direction.S), "EW": (Direction.E, Direction.W)}


def i_power(k):
    """Exact ``i**k`` for integer k."""
    return _I_POWERS[k % 4]


def phase_factor(direction, n):
    """Superposition phase of one component, from integer quarter turns."""
    n = qkernel._check_order(n)
    return i_power(_QUARTER_TURNS[Direction.parse(direction)] * n)


def component(direction, n, z, params):
    """
    One of the four superposed states:
    W = psi_x, E = psi_x(h -> -h), S = psi_p_model, N = psi_p_model(h -> -h).
    """
    direction = Direction.parse(direction)
    n = qkernel._check_order(n)
    if direction is Direction.W:
        out = _psi_x(n, z, params, params.h)
    elif direction is Direction.E:
        out = _psi_x(n, z, params, -params.h)
    elif direction is Direction.S:
        out = _psi_p(n, z, params, params.h)
    else:
        out = _psi_p(n, z, params, -params.h)
    return out[()] if np.ndim(out) == 0 else out


def component_state(direction, n, params):
    direction = Direction.parse(direction)
    return AnalyticState(lambda z: component(direction, n, z, params), f"psi^{direction.value}[{n}]")


def normalization_braces(n, params):
    """The complex expression whose real part is ``N_q^-2``."""
    n = qkernel._check_order(n)
    q = params.q
    log_q = math.log(q)
    total = 0j
    for k in range(n + 1):
        weight = qkernel.q_pochhammer(q**-n, q, k) / qkernel.q_pochhammer(q, q, k)
        q_ik = cmath.exp(1j * k * log_q)
        bracket = (
            (-1) ** n * qkernel.q_pochhammer(q**k, q, n)
            + i_power(n) * qkernel.q_pochhammer(q_ik, q, n)
            + i_power(-n) * qkernel.q_pochhammer(1 / q_ik, q, n)
        )
        total += weight * bracket * q ** (n * k)
    return 1 + q**n / qkernel.q_pochhammer(q, q, n) * total


def normalization_analytic(n, params):
    """
    Closed-form normalization constant N_q of the compass state.

    Raises
    ------
    RealnessError
        If the braced expression has a relative imaginary part above 1e-10.
    DegenerateNormalizationError
        If its real part is not strictly positive.
    """
    braces = complex(normalization_braces(n, params))
    if abs(braces.imag) > 1e-10 * abs(braces):
        raise RealnessError(f"N_q^-2 has imaginary residue {braces.imag:.3g} (n={n})")
    if not braces.real > 0:
        raise DegenerateNormalizationError(f"N_q^-2 = {braces.real!r} is not positive")
    return braces.real**-0.5


def _unnormalized(n, x, params, directions=DIRECTIONS):
    return sum(phase_factor(d, n) * component(d, n, x, params) for d in directions) / 2


def normalization_numeric(n, params, quad=None):
    """N_q such that the compass state has unit norm, by direct quadrature."""
    n = qkernel._check_order(n)
    quad = quad or QuadratureSpec.for_position(params, n)
    f = _unnormalized(n, quad.nodes(), params)
    check_tails(f, what="compass state")
    return float(integrate(np.abs(f) ** 2, quad)) ** -0.5


@dataclass(frozen=True)
class CompassSpec:
    n: int
    params: OscillatorParams
    normalization_mode: str = "analytic"

    def __post_init__(self):
        qkernel._check_order(self.n)
        if self.normalization_mode not in ("analytic", "numeric"):
            raise InvalidArgumentError(
                f"normalization_mode must be 'analytic' or 'numeric', got {self.normalization_mode!r}"
            )

    def nq(self, quad=None):
        if self.normalization_mode == "analytic":
            return normalization_analytic(self.n, self.params)
        return normalization_numeric(self.n, self.params, quad)

    def cross_check(self, quad=None, rtol=1e-6):
        """Return (analytic, numeric, relative difference); raise if above ``rtol``."""
        a = normalization_analytic(self.n, self.params)
        b = normalization_numeric(self.n, self.params, quad)
        rel = abs(a - b) / abs(b)
        if rel > rtol:
            raise NormalizationMismatchError(a, b, rel)
        return a, b, rel


def compass_amplitude(spec, z, quad=None):
    """Normalized compass state ``(N_q/2) sum_d phase_d psi^d(z)``."""
    return spec.nq(quad) * _unnormalized(spec.n, z, spec.params)


def compass_state(spec, quad=None):
    nq = spec.nq(quad)
    return AnalyticState(
        lambda z: nq * _unnormalized(spec.n, z, spec.params), f"Psi_compass[{spec.n}]"
    )


def _cat_pair(pair):
    key = "".join(d.value if isinstance(d, Direction) else str(d) for d in pair).upper()
    if key not in CAT_PAIRS:
        raise InvalidArgumentError(f"cat pair must be 'NS' or 'EW', got {pair!r}")
    return CAT_PAIRS[key]


def cat_norm(pair, n, params, quad=None):
    """Inverse square root of the norm of the equal-weight phased pair."""
    dirs = _cat_pair(pair)
    quad = quad or QuadratureSpec.for_position(params, n)
    f = _unnormalized(n, quad.nodes(), params, dirs)
    check_tails(f, what="cat state")
    return float(integrate(np.abs(f) ** 2, quad)) ** -0.5


def cat_amplitude(pair, n, z, params, quad=None):
    """Two-component cat state (NS or EW), normalized numerically."""
    dirs = _cat_pair(pair)
    return cat_norm(pair, n, params, quad) * _unnormalized(n, z, params, dirs)


def cat_state(pair, n, params, quad=None):
    dirs = _cat_pair(pair)
    c = cat_norm(pair, n, params, quad)
    return AnalyticState(lambda z: c * _unnormalized(n, z, params, dirs), f"cat_{pair}[{n}]")
