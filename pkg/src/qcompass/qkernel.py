"""
q-special functions: q-shifted factorials, q-binomials, Rogers-Szego
polynomials, terminating 3phi2 series, basic numbers and Hermite polynomials.

Every function is a literal evaluator of its defining finite sum or product.
Complex arguments may be numpy arrays; they broadcast elementwise. Integer
orders (``n``, ``k``) are plain Python ints.
"""
import math

import numpy as np

from .errors import DegenerateParameterError, InvalidArgumentError

#: log-magnitude above which Rogers-Szego terms are summed in log-plus-phase form
LOG_THRESHOLD = 300.0


def _check_order(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise InvalidArgumentError(f"{name} must be a nonnegative integer, got {n!r}")
    return int(n)


def _check_finite(*values):
    for v in values:
        if not np.all(np.isfinite(v)):
            raise InvalidArgumentError(f"non-finite input: {v!r}")


def _as_complex(v):
    v = np.asarray(v, dtype=complex)
    return v[()] if v.ndim == 0 else v


def q_pochhammer(a, base, n):
    """
    q-shifted factorial ``(a; base)_n = prod_{k<n} (1 - a base^k)``.

    Parameters
    ----------
    a : complex or array_like
    base : complex
        Any finite value; bases with modulus > 1 are fine since the product
        is finite.
    n : int
        Number of factors. ``n = 0`` gives exactly 1.
    """
    n = _check_order(n)
    _check_finite(a, base)
    a = _as_complex(a)
    base = complex(base) if np.ndim(base) == 0 else np.asarray(base, dtype=complex)
    out = np.ones_like(a)
    power = np.ones_like(base) if np.ndim(base) else 1.0 + 0j
    for _ in range(n):
        out = out * (1 - a * power)
        power = power * base
    return _as_complex(out)


def q_binomial(n, k, q):
    """Gaussian binomial coefficient ``(q;q)_n / ((q;q)_k (q;q)_{n-k})``."""
    n = _check_order(n)
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 0 <= k <= n:
        raise InvalidArgumentError(f"k must satisfy 0 <= k <= n={n}, got {k!r}")
    if not 0.0 < q < 1.0:
        raise InvalidArgumentError(f"q must lie in (0, 1), got {q!r}")
    num = q_pochhammer(q, q, n)
    den = q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k)
    return float((num / den).real)


def _rs_coefficients(n, base):
    """Complex log of ``(base^-n;base)_k / (base;base)_k * base^(nk - k^2/2)``, k=0..n."""
    base = complex(base)
    log_base = np.log(base)
    logs = np.empty(n + 1, dtype=complex)
    for k in range(n + 1):
        den = q_pochhammer(base, base, k)
        if den == 0:
            raise DegenerateParameterError(f"(base;base)_{k} vanishes for base={base!r}")
        # factorwise logs keep huge bases (q^-1 at small q) away from overflow
        log_num = sum(np.log(1 - base ** (j - n)) for j in range(k))
        log_den = sum(np.log(1 - base ** (j + 1)) for j in range(k))
        logs[k] = log_num - log_den + (n * k - k * k / 2) * log_base
    return logs


def rogers_szego_scaled(n, arg, base, log_threshold=LOG_THRESHOLD):
    """
    Rogers-Szego sum split as ``mantissa * exp(log_scale)``.

    ``log_scale`` is 0 whenever every term's log-magnitude stays below
    ``log_threshold``; in that case ``mantissa`` is the plain complex sum.
    Otherwise terms are accumulated relative to the largest one. Callers
    that multiply by a decaying factor (a Gaussian) fold ``log_scale`` into
    that factor before exponentiating.
    """
    n = _check_order(n)
    _check_finite(arg, base)
    arg = _as_complex(arg)
    coef_logs = _rs_coefficients(n, base)

    with np.errstate(divide="ignore", invalid="ignore"):
        log_arg = np.log(arg)
        term_logs = [np.full(np.shape(arg), coef_logs[0])]
        for k in range(1, n + 1):
            term_logs.append(np.where(arg == 0, -np.inf, coef_logs[k] + k * log_arg))
    term_logs = np.array(term_logs)
    peak = np.max(term_logs.real, axis=0)

    if np.all(peak <= log_threshold):
        total = np.zeros(np.shape(arg), dtype=complex)
        power = np.ones(np.shape(arg), dtype=complex)
        for k in range(n + 1):
            coef = (
                q_pochhammer(complex(base) ** (-n), base, k)
                / q_pochhammer(base, base, k)
                * complex(base) ** (n * k - k * k / 2)
            )
            total = total + coef * power
            power = power * arg
        return _as_complex(total), _as_complex(np.zeros(np.shape(arg)))

    scale = np.where(peak > log_threshold, peak, 0.0)
    with np.errstate(under="ignore"):
        mantissa = np.exp(term_logs - scale).sum(axis=0)
    return _as_complex(mantissa), scale[()] if np.ndim(scale) == 0 else scale


def rogers_szego(n, arg, base, log_threshold=LOG_THRESHOLD):
    """
    Rogers-Szego polynomial written as a sum over powers of ``arg``:

        sum_k (base^-n; base)_k / (base; base)_k * base^(nk - k^2/2) * arg^k

    which is the polynomial evaluated at ``-arg``. The same literal sum is
    used for bases above one.

    Raises
    ------
    DegenerateParameterError
        If some ``(base; base)_k`` vanishes, or the value is not representable.
    """
    mantissa, scale = rogers_szego_scaled(n, arg, base, log_threshold)
    with np.errstate(over="ignore", invalid="ignore"):
        out = mantissa * np.exp(scale)
    if not np.all(np.isfinite(out)):
        raise DegenerateParameterError("Rogers-Szego value overflows double precision")
    return _as_complex(out)


def phi32_terminating(n, a1, a2, b1, b2, q, z):
    """
    Terminating basic hypergeometric series 3phi2 with first numerator
    parameter ``q^-n``:

        sum_{k=0}^n (q^-n, a1, a2; q)_k / (b1, b2, q; q)_k * z^k

    ``b2 = 0`` is allowed (then ``(b2; q)_k = 1``).
    """
    n = _check_order(n)
    _check_finite(a1, a2, b1, b2, q, z)
    a1, a2, b1, b2, z = (_as_complex(v) for v in (a1, a2, b1, b2, z))
    q = float(q)
    shape = np.broadcast(a1, a2, b1, b2, z).shape
    total = np.ones(shape, dtype=complex)
    term = np.ones(shape, dtype=complex)
    top = q ** (-n)
    for k in range(n):
        qk = q**k
        den = (1 - b1 * qk) * (1 - b2 * qk) * (1 - q ** (k + 1))
        if np.any(den == 0):
            raise DegenerateParameterError(f"vanishing lower parameter factor at k={k}")
        term = term * (1 - top * qk) * (1 - a1 * qk) * (1 - a2 * qk) / den * z
        total = total + term
    return _as_complex(total)


def basic_number(n, q):
    """Basic number ``[n]_q = (1 - q^n) / (1 - q)``."""
    n = _check_order(n)
    if not 0.0 < q < 1.0:
        raise InvalidArgumentError(f"q must lie in (0, 1), got {q!r}")
    return (1.0 - q**n) / (1.0 - q)


def hermite(n, x):
    """Physicists' Hermite polynomial from its explicit finite sum."""
    n = _check_order(n)
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for k in range(n // 2 + 1):
        c = (-1) ** k / (math.factorial(k) * math.factorial(n - 2 * k))
        out = out + c * (2 * x) ** (n - 2 * k)
    out = math.factorial(n) * out
    return out[()] if out.ndim == 0 else out
