"""Uniform-node composite trapezoid rule used by every brute-force integral."""
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, QuadratureWindowError

#: Gaussian decay exponent kept beyond the outermost component centre
_MARGIN_EXPONENT = 40.0
#: integrand magnitude at the window edge allowed relative to its peak
TAIL_TOLERANCE = 1e-14


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration window ``[-half_width, half_width]`` sampled with spacing ``step``."""

    half_width: float
    step: float

    def __post_init__(self):
        if not (self.half_width > 0 and self.step > 0):
            raise InvalidArgumentError("half_width and step must be > 0")
        if self.half_width / self.step < 64:
            raise InvalidArgumentError(
                f"half_width/step = {self.half_width / self.step:.3g} < 64; window too coarse"
            )

    @classmethod
    def with_nodes(cls, half_width, per_half=512):
        return cls(float(half_width), float(half_width) / per_half)

    @classmethod
    def for_position(cls, params, n, reach=0.0):
        """Window for integrals over x of states with quantum number ``n``."""
        margin = math.sqrt(_MARGIN_EXPONENT / params.lam)
        return cls.with_nodes(reach + n * params.h + margin)

    @classmethod
    def for_wigner(cls, params, n, x_extent=0.0):
        """Window in the relative coordinate x' for phase-space points with |x| <= x_extent."""
        margin = math.sqrt(_MARGIN_EXPONENT / params.lam)
        return cls.with_nodes(2.0 * (abs(x_extent) + n * params.h + margin))

    def nodes(self):
        count = int(round(2 * self.half_width / self.step)) + 1
        return np.linspace(-self.half_width, self.half_width, count)

    def weights(self):
        x = self.nodes()
        w = np.full(x.shape, x[1] - x[0])
        w[0] = w[-1] = 0.5 * (x[1] - x[0])
        return w


def check_tails(values, axis=-1, tolerance=TAIL_TOLERANCE, what="integrand"):
    """Raise if |values| at either end of ``axis`` exceeds ``tolerance`` times its peak."""
    mag = np.abs(values)
    peak = mag.max(axis=axis)
    edge = np.maximum(np.take(mag, 0, axis=axis), np.take(mag, -1, axis=axis))
    bad = edge > tolerance * peak
    if np.any(bad & (peak > 0)):
        ratio = np.max(np.where(peak > 0, edge / np.where(peak > 0, peak, 1.0), 0.0))
        raise QuadratureWindowError(
            f"{what} has not decayed at the window edge (edge/peak = {ratio:.3g})"
        )


def integrate(values, quad, axis=-1):
    """Trapezoid sum of samples taken at ``quad.nodes()`` along ``axis``."""
    w = quad.weights()
    return np.tensordot(np.moveaxis(values, axis, -1), w, axes=([-1], [0]))


def overlap(state_a, state_b, quad):
    """``integral conj(a) b dx`` over the window."""
    x = quad.nodes()
    a, b = state_a(x), state_b(x)
    check_tails(np.abs(a) + np.abs(b), what="overlap integrand")
    return complex(integrate(np.conj(a) * b, quad))
