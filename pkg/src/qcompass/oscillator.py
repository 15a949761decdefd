"""
q-oscillator stationary states, the ordinary oscillator they tend to, and the
finite-difference ladder operators acting on analytic wavefunctions.
"""
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import qkernel
from .directions import Direction
from .errors import DegenerateParameterError, InvalidArgumentError

RAISING = "raising"
LOWERING = "lowering"


@dataclass(frozen=True)
class OscillatorParams:
    """
    Physical constants and deformation step.

    ``lam = m*omega/(2*hbar)`` and ``q = exp(-lam*h**2)`` are derived at
    construction and cannot be set independently.
    """

    m: float
    omega: float
    hbar: float
    h: float
    lam: float = field(init=False)
    q: float = field(init=False)

    def __post_init__(self):
        for name in ("m", "omega", "hbar", "h"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float, np.floating)) and math.isfinite(v) and v > 0):
                raise InvalidArgumentError(f"{name} must be a finite number > 0, got {v!r}")
            object.__setattr__(self, name, float(v))
        lam = self.m * self.omega / (2.0 * self.hbar)
        q = math.exp(-lam * self.h**2)
        if not 0.0 < q < 1.0:
            raise DegenerateParameterError(
                f"q = exp(-lambda*h^2) = {q!r} is not strictly inside (0, 1) in double precision"
            )
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "q", q)

    def as_dict(self):
        return {"m": self.m, "omega": self.omega, "hbar": self.hbar, "h": self.h,
                "lambda": self.lam, "q": self.q}


def make_params(m=1.0, omega=1.0, hbar=1.0, h=1.3):
    return OscillatorParams(m, omega, hbar, h)


class AnalyticState:
    """
    Lazily composed wavefunction that can be evaluated at complex positions.

    Combinators return new states; nothing is evaluated until the state is
    called on an array of positions.
    """

    __slots__ = ("_evaluator", "label")

    def __init__(self, evaluator: Callable, label: str = ""):
        self._evaluator = evaluator
        self.label = label

    def __call__(self, z):
        return self._evaluator(np.asarray(z, dtype=complex))

    def __repr__(self):
        return f"AnalyticState({self.label!r})"

    def shifted(self, offset):
        """``z -> f(z + offset)``; ``exp(-h d/dx)`` is ``shifted(-h)``."""
        f = self._evaluator
        return AnalyticState(lambda z: f(z + offset), f"{self.label}(z{offset:+})")

    def multiply(self, factor: Callable, label="g"):
        f = self._evaluator
        return AnalyticState(lambda z: factor(z) * f(z), f"{label}*{self.label}")

    def scale(self, c):
        f = self._evaluator
        return AnalyticState(lambda z: c * f(z), f"{c}*{self.label}")

    def __add__(self, other):
        f, g = self._evaluator, other._evaluator
        return AnalyticState(lambda z: f(z) + g(z), f"({self.label} + {other.label})")

    def __sub__(self, other):
        f, g = self._evaluator, other._evaluator
        return AnalyticState(lambda z: f(z) - g(z), f"({self.label} - {other.label})")

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__


def norm_const_cn(n, params):
    """Normalization constant ``(2 lam/pi)^(1/4) q^(n/2) (q;q)_n^(-1/2)``."""
    n = qkernel._check_order(n)
    qq = qkernel.q_pochhammer(params.q, params.q, n).real
    if not (qq > 0 and math.isfinite(qq)):
        raise DegenerateParameterError(f"(q;q)_{n} = {qq!r} for q = {params.q!r}")
    return (2 * params.lam / math.pi) ** 0.25 * params.q ** (n / 2) / math.sqrt(qq)


def _psi_x(n, z, params, step):
    lam, q = params.lam, params.q
    z = np.asarray(z, dtype=complex)
    mant, scale = qkernel.rogers_szego_scaled(n, np.exp(-2j * lam * step * z), q)
    return norm_const_cn(n, params) * mant * np.exp(scale - lam * z * z)


def _psi_p(n, z, params, step):
    lam, q = params.lam, params.q
    z = np.asarray(z, dtype=complex)
    arg = q ** (n - 1) * np.exp(-2 * lam * step * z)
    mant, scale = qkernel.rogers_szego_scaled(n, arg, 1.0 / q)
    return norm_const_cn(n, params) * mant * np.exp(scale - lam * z * z)


def psi_x(n, z, params):
    """
    Stationary state in the x-representation,
    ``c_n H_n(-exp(-2i lam h z) | q) exp(-lam z^2)``.

    ``(-i)^n psi_x`` tends to the ordinary oscillator state as ``h -> 0``.
    """
    out = _psi_x(n, z, params, params.h)
    return out[()] if out.ndim == 0 else out


def psi_p_model(n, z, params):
    """
    Alternative stationary state (p-representation model) written with base
    ``1/q``: ``c_n H_n(-q^(n-1) exp(-2 lam h z) | 1/q) exp(-lam z^2)``.

    Tends to the ordinary oscillator state with no extra phase as ``h -> 0``.
    """
    out = _psi_p(n, z, params, params.h)
    return out[()] if out.ndim == 0 else out


def ho_eigenstate(n, x, lam):
    """Ordinary harmonic-oscillator eigenfunction with ``lam = m omega / (2 hbar)``."""
    n = qkernel._check_order(n)
    if not lam > 0:
        raise InvalidArgumentError(f"lambda must be > 0, got {lam!r}")
    x = np.asarray(x)
    norm = (2**n * math.factorial(n) * math.sqrt(math.pi / (2 * lam))) ** -0.5
    out = norm * qkernel.hermite(n, np.sqrt(2 * lam) * x.real) * np.exp(-lam * x.real**2)
    return out[()] if np.ndim(out) == 0 else out


def ho_state(n, lam):
    """Ordinary oscillator eigenfunction as an AnalyticState (real axis only)."""
    norm = (2**n * math.factorial(n) * math.sqrt(math.pi / (2 * lam))) ** -0.5
    h_n = np.polynomial.hermite.Hermite.basis(n)

    def f(z):
        return norm * h_n(np.sqrt(2 * lam) * z) * np.exp(-lam * z * z)

    return AnalyticState(f, f"psi_HO[{n}]")


def x_state(n, params):
    return AnalyticState(lambda z: _psi_x(n, z, params, params.h), f"psi_x[{n}]")


def p_state(n, params):
    return AnalyticState(lambda z: _psi_p(n, z, params, params.h), f"psi_p[{n}]")


def _gauss(sign, lam):
    return lambda z: np.exp(sign * lam * z * z)


def ladder_apply(direction, sign, state, params):
    """
    Apply the raising or lowering finite-difference operator of one compass
    direction to ``state``.

    Shifts act as ``(exp(-h d/dx) f)(x) = f(x - h)`` and
    ``(exp(i h/2 d/dx) f)(x) = f(x + i h/2)``.

    The North operator is built as the ``h -> -h`` image of the South one,
    matching ``psi^N = psi^S|_{h -> -h}``. In that form the Gaussian
    conjugation is ``exp(-+lam x^2) ... exp(+-lam x^2)``, as for S, E and W.

    Parameters
    ----------
    direction : Direction or str
    sign : {"raising", "lowering"}
    state : AnalyticState
    params : OscillatorParams
    """
    direction = Direction.parse(direction)
    if sign in (RAISING, "+", 1):
        s = 1
    elif sign in (LOWERING, "-", -1):
        s = -1
    else:
        raise InvalidArgumentError(f"sign must be 'raising' or 'lowering', got {sign!r}")
    lam, q, h = params.lam, params.q, params.h
    if q >= 1.0:
        raise DegenerateParameterError("q = 1 makes 1/sqrt(1 - q) singular")
    pre = 1j / math.sqrt(1.0 - q)
    rq = math.sqrt(q)

    g = state.multiply(_gauss(s, lam), f"exp({s:+}lam x^2)")
    if direction in (Direction.S, Direction.N):
        t = 1.0 if direction is Direction.S else -1.0
        hop = g.shifted(s * t * h).multiply(
            lambda z: q**s * np.exp(-2 * t * lam * h * z), "q^s exp(-2 lam h x)"
        )
        half = g.shifted(s * t * h / 2).scale(rq)
        overall = -s * pre
    else:
        t = 1.0 if direction is Direction.E else -1.0
        hop = g.multiply(lambda z: np.exp(2j * s * t * lam * h * z), "exp(2i lam h x)")
        half = g.shifted(1j * t * h / 2).scale(rq)
        overall = -s * t * pre
    out = (hop - half).multiply(_gauss(-s, lam), f"exp({-s:+}lam x^2)").scale(overall)
    out.label = f"b_{direction.value}^{'+' if s > 0 else '-'} {state.label}"
    return out
