"""
Rectangular (p, x) grids of the compass Wigner function: rendering, peak and
negativity diagnostics, and CSV / 16-bit PGM export.
"""
import datetime
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy import ndimage

from . import wigner
from .errors import InvalidArgumentError, QCompassError
from .oscillator import OscillatorParams

FIGURE1_H = (0.0001, 1.3, 2.1, 2.5, 3.3, 5.0)


class RenderError(QCompassError):
    """A grid point failed to evaluate."""


@dataclass(frozen=True)
class GridSpec:
    p_min: float
    p_max: float
    x_min: float
    x_max: float
    n_p: int
    n_x: int

    def __post_init__(self):
        if not (self.p_max > self.p_min and self.x_max > self.x_min):
            raise InvalidArgumentError("grid bounds need max > min on both axes")
        if int(self.n_p) < 2 or int(self.n_x) < 2:
            raise InvalidArgumentError("grids need at least 2 nodes per axis")

    @classmethod
    def square(cls, half_width, nodes):
        return cls(-half_width, half_width, -half_width, half_width, nodes, nodes)

    @property
    def p(self):
        return np.linspace(self.p_min, self.p_max, self.n_p)

    @property
    def x(self):
        return np.linspace(self.x_min, self.x_max, self.n_x)

    @property
    def dp(self):
        return (self.p_max - self.p_min) / (self.n_p - 1)

    @property
    def dx(self):
        return (self.x_max - self.x_min) / (self.n_x - 1)


@dataclass
class PhaseSpaceGrid:
    """Wigner values with rows indexing p and columns indexing x."""

    spec: GridSpec
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.values.shape != (self.spec.n_p, self.spec.n_x):
            raise InvalidArgumentError(
                f"values shape {self.values.shape} does not match grid ({self.spec.n_p}, {self.spec.n_x})"
            )


def figure1_grid_spec(h, nodes=301):
    """301 x 301 over [-4, 4]^2 for h <= 2.1, [-8, 8]^2 beyond."""
    return GridSpec.square(4.0 if h <= 2.1 else 8.0, nodes)


def _evaluate_rows(fn, n, params, spec, rows):
    p = spec.p[rows]
    P, X = np.meshgrid(p, spec.x, indexing="ij")
    try:
        vals = fn(n, P, X, params)
    except QCompassError as exc:
        # locate the first failing node for the report
        for pi in p:
            for xi in spec.x:
                try:
                    fn(n, pi, xi, params)
                except QCompassError as inner:
                    raise RenderError(f"evaluation failed at p={pi!r}, x={xi!r}: {inner}") from inner
        raise RenderError(str(exc)) from exc
    if not np.all(np.isfinite(vals)):
        i, j = np.argwhere(~np.isfinite(vals))[0]
        raise RenderError(f"non-finite value at p={p[i]!r}, x={spec.x[j]!r}")
    return vals


def render_grid(n, params, spec, workers=1, part="total"):
    """
    Evaluate the Wigner function on every node of ``spec``.

    ``part="diagonal"`` renders only the four lobe terms. Rows are split into
    blocks when ``workers > 1``; each node is computed independently, so the
    result does not depend on the split.
    """
    fn = {"total": wigner.total, "diagonal": wigner.diagonal_part}[part]
    blocks = np.array_split(np.arange(spec.n_p), max(1, min(workers, spec.n_p)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: _evaluate_rows(fn, n, params, spec, r), blocks))
    else:
        parts = [_evaluate_rows(fn, n, params, spec, r) for r in blocks]
    meta = {
        "n": n,
        "params": params.as_dict(),
        "part": part,
        "generated": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    return PhaseSpaceGrid(spec, np.vstack(parts), meta)


class Peak(NamedTuple):
    p: float
    x: float
    value: float

    @property
    def radius(self):
        return float(np.hypot(self.p, self.x))


class PeakSearch(list):
    """List of peaks, flagged ``short`` when fewer than requested were found."""

    def __init__(self, peaks, requested):
        super().__init__(peaks)
        self.requested = requested
        self.short = len(peaks) < requested


def locate_peaks(grid, count, radius=3):
    """
    The ``count`` largest local maxima of ``|values|``, with greedy
    non-maximum suppression over ``radius`` nodes, sorted by ``|value|``.
    """
    if count < 1:
        raise InvalidArgumentError("count must be >= 1")
    mag = np.abs(grid.values)
    neigh = ndimage.maximum_filter(mag, size=3, mode="constant", cval=-np.inf)
    cand = np.argwhere(mag >= neigh)
    order = np.argsort(-mag[cand[:, 0], cand[:, 1]], kind="stable")
    kept = []
    for i, j in cand[order]:
        if all(max(abs(i - a), abs(j - b)) > radius for a, b in kept):
            kept.append((i, j))
            if len(kept) == count:
                break
    p, x = grid.spec.p, grid.spec.x
    return PeakSearch([Peak(float(p[i]), float(x[j]), float(grid.values[i, j])) for i, j in kept], count)


def negativity_fraction(grid, threshold):
    """Fraction of nodes below ``-threshold * max|values|``."""
    if threshold < 0:
        raise InvalidArgumentError("threshold must be >= 0")
    v = grid.values
    return float(np.mean(v < -threshold * np.max(np.abs(v))))


def sign_alternations(values, floor=1e-3):
    """Sign changes along a 1-d profile, ignoring entries below ``floor * max|values|``."""
    v = np.asarray(values)
    s = np.sign(v[np.abs(v) > floor * np.max(np.abs(v))])
    return int(np.count_nonzero(np.diff(s)))


def axis_profile(n, params, x_lim=8.0, nodes=301):
    """Wigner values along p = 0."""
    x = np.linspace(-x_lim, x_lim, nodes)
    return x, wigner.total(n, np.zeros_like(x), x, params)


# ---------------------------------------------------------------- export

def _header(grid):
    meta = grid.meta
    prm = meta.get("params", {})
    s = grid.spec
    return {
        "n": meta.get("n"),
        "m": prm.get("m"),
        "omega": prm.get("omega"),
        "hbar": prm.get("hbar"),
        "h": prm.get("h"),
        "q": prm.get("q"),
        "p_min": s.p_min,
        "p_max": s.p_max,
        "x_min": s.x_min,
        "x_max": s.x_max,
        "n_p": s.n_p,
        "n_x": s.n_x,
    }


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return f"{v:.17g}"
    return str(v)


def _spec_from_header(head):
    return GridSpec(float(head["p_min"]), float(head["p_max"]), float(head["x_min"]),
                    float(head["x_max"]), int(head["n_p"]), int(head["n_x"]))


def _meta_from_header(head):
    meta = {"n": int(head["n"]) if head.get("n") not in (None, "None") else None}
    keys = ("m", "omega", "hbar", "h", "q")
    if all(head.get(k) not in (None, "None") for k in keys):
        meta["params"] = {k: float(head[k]) for k in keys}
    return meta


def export_grid(grid, format, destination):
    """
    Write ``grid`` as CSV or binary 16-bit PGM (plus a ``.meta`` sidecar).

    Returns the list of paths written.
    """
    destination = os.fspath(destination)
    head = _header(grid)
    try:
        if format == "csv":
            with open(destination, "w", newline="\n") as fh:
                for k, v in head.items():
                    fh.write(f"# {k} = {_fmt(v)}\n")
                for row in grid.values:
                    fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
            return [destination]
        if format == "pgm":
            v = grid.values
            lo, hi = float(v.min()), float(v.max())
            constant = not hi > lo
            if constant:
                pix = np.zeros(v.shape, dtype=">u2")
            else:
                pix = np.round((v - lo) / (hi - lo) * 65535).astype(">u2")
            with open(destination, "wb") as fh:
                fh.write(f"P5\n{grid.spec.n_x} {grid.spec.n_p}\n65535\n".encode("ascii"))
                fh.write(pix.tobytes())
            sidecar = os.path.splitext(destination)[0] + ".meta"
            with open(sidecar, "w", newline="\n") as fh:
                fh.write(f"W_min = {lo:.17g}\n")
                fh.write(f"W_max = {hi:.17g}\n")
                fh.write(f"constant_grid = {str(constant).lower()}\n")
                for k, val in head.items():
                    fh.write(f"{k} = {_fmt(val)}\n")
            return [destination, sidecar]
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write grid to {destination}: {exc.strerror}") from exc
    raise InvalidArgumentError(f"format must be 'csv' or 'pgm', got {format!r}")


def read_csv_grid(path):
    head, rows = {}, []
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                k, _, v = line[1:].partition("=")
                head[k.strip()] = v.strip()
            elif line.strip():
                rows.append([float(t) for t in line.split(",")])
    return PhaseSpaceGrid(_spec_from_header(head), np.array(rows), _meta_from_header(head))


def read_meta(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            k, _, v = line.partition("=")
            if k.strip():
                out[k.strip()] = v.strip()
    return out


def read_pgm_grid(path):
    """Re-import a PGM export; values are recovered up to 16-bit quantization."""
    with open(path, "rb") as fh:
        data = fh.read()
    tokens, pos = [], 0
    while len(tokens) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        start = pos
        while not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos].decode("ascii"))
    pos += 1
    magic, width, height, maxval = tokens
    if magic != "P5" or int(maxval) != 65535:
        raise InvalidArgumentError(f"{path} is not a 16-bit binary PGM")
    pix = np.frombuffer(data[pos:], dtype=">u2").reshape(int(height), int(width))
    meta = read_meta(os.path.splitext(path)[0] + ".meta")
    lo, hi = float(meta["W_min"]), float(meta["W_max"])
    values = np.full(pix.shape, lo) if meta["constant_grid"] == "true" else lo + pix / 65535 * (hi - lo)
    return PhaseSpaceGrid(_spec_from_header(meta), values, _meta_from_header(meta))


def grid_params(grid):
    """OscillatorParams recorded in a grid's metadata."""
    prm = grid.meta["params"]
    return OscillatorParams(prm["m"], prm["omega"], prm["hbar"], prm["h"])
