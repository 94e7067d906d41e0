"""Special functions for the quantum eigenstates.

Everything here accepts numpy arrays for the continuous argument and
evaluates polynomials by their three-term recurrences. Factorial-type
normalization constants are kept in log space (see :class:`LogScaled`)
because ``(n + l)!`` overflows double precision well before ``n = 20``.

Spherical harmonics follow the Condon-Shortley phase convention; only
``|Y_lm|^2`` is exposed, so the phase never shows up in results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

MAX_DEGREE = 60
MAX_L = 40


# ln 2 split so that e * _LN2_HI is exact for any binary exponent e
_LN2_HI = 0.693147180369123816490
_LN2_LO = 1.90821492927058770002e-10


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@dataclass(frozen=True)
class LogScaled:
    """A real number stored as ``sign * exp(log_magnitude)``.

    ``log_residual`` carries the rounding error of ``log_magnitude`` so
    that decoding keeps full double precision even for magnitudes near the
    overflow threshold.
    """

    sign: int
    log_magnitude: float
    log_residual: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.log_magnitude != -math.inf:
            raise ValueError("zero must carry log_magnitude = -inf")

    @classmethod
    def from_float(cls, x: float) -> "LogScaled":
        if x == 0:
            return cls(0, -math.inf)
        mant, expo = math.frexp(abs(x))
        hi, lo = _two_sum(math.log(mant), expo * _LN2_HI)
        hi, lo2 = _two_sum(hi, lo + expo * _LN2_LO)
        return cls(1 if x > 0 else -1, hi, lo2)

    @classmethod
    def from_log(cls, log_magnitude: float, sign: int = 1, residual: float = 0.0) -> "LogScaled":
        if sign == 0 or log_magnitude == -math.inf:
            return cls(0, -math.inf)
        return cls(sign, float(log_magnitude), float(residual))

    def decode(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude) * (1.0 + self.log_residual)

    def _combine(self, other, sgn):
        if self.sign == 0 or other.sign == 0:
            return LogScaled(0, -math.inf)
        hi, lo = _two_sum(self.log_magnitude, sgn * other.log_magnitude)
        return LogScaled.from_log(hi, self.sign * other.sign,
                                  lo + self.log_residual + sgn * other.log_residual)

    def __mul__(self, other: "LogScaled") -> "LogScaled":
        if not isinstance(other, LogScaled):
            return NotImplemented
        return self._combine(other, 1.0)

    def __truediv__(self, other: "LogScaled") -> "LogScaled":
        if not isinstance(other, LogScaled):
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("division by LogScaled zero")
        return self._combine(other, -1.0)

    def sqrt(self) -> "LogScaled":
        if self.sign < 0:
            raise ValueError("square root of a negative LogScaled")
        return LogScaled.from_log(0.5 * self.log_magnitude, self.sign, 0.5 * self.log_residual)


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    if not x > 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_factorial(k: int) -> float:
    return log_gamma(k + 1.0)


def _check_degree(degree):
    if degree < 0 or int(degree) != degree:
        raise ValueError(f"degree must be a nonnegative integer, got {degree}")
    if degree > MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds supported maximum {MAX_DEGREE}")


def assoc_laguerre(degree: int, a: float, x):
    """Associated Laguerre polynomial ``L_degree^a(x)``.

    Uses ``k L_k = (2k - 1 + a - x) L_{k-1} - (k - 1 + a) L_{k-2}``.
    """
    _check_degree(degree)
    if not a > -1:
        raise ValueError(f"Laguerre superscript must exceed -1, got {a}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if degree == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + a - x
    for k in range(2, degree + 1):
        prev, cur = cur, ((2 * k - 1 + a - x) * cur - (k - 1 + a) * prev) / k
    return cur if cur.ndim else float(cur)


def gegenbauer(degree: int, a: float, t):
    """Gegenbauer polynomial ``C_degree^a(t)`` on ``[-1, 1]``.

    Uses ``k G_k = 2 (k + a - 1) t G_{k-1} - (k + 2a - 2) G_{k-2}``.
    """
    _check_degree(degree)
    if not a > 0:
        raise ValueError(f"Gegenbauer superscript must be positive, got {a}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1 + 1e-12):
        raise ValueError("Gegenbauer argument outside [-1, 1]")
    prev = np.ones_like(t)
    if degree == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * a * t
    for k in range(2, degree + 1):
        prev, cur = cur, (2 * (k + a - 1) * t * cur - (k + 2 * a - 2) * prev) / k
    return cur if cur.ndim else float(cur)


def sph_harmonic_norm(l: int, m: int) -> LogScaled:
    """``(2l + 1)/(4 pi) * (l - |m|)!/(l + |m|)!`` in log form."""
    am = abs(m)
    log_n = (math.log(2 * l + 1) - math.log(4 * math.pi)
             + log_factorial(l - am) - log_factorial(l + am))
    return LogScaled.from_log(log_n)


def sph_harmonic_modsq(l: int, m: int, theta):
    """``|Y_lm(theta, phi)|^2``, which does not depend on ``phi``.

    The associated Legendre function is built by the diagonal start
    ``P_m^m = (-1)^m (2m - 1)!! sin^m`` followed by the upward recurrence
    in degree. The whole chain is pre-multiplied by ``sqrt`` of the target
    normalization so intermediate values stay O(1) even at ``l = 40``.
    """
    if l < 0 or int(l) != l:
        raise ValueError(f"l must be a nonnegative integer, got {l}")
    if abs(m) > l:
        raise ValueError(f"|m| = {abs(m)} exceeds l = {l}")
    if l > MAX_L:
        raise ValueError(f"l = {l} exceeds supported maximum {MAX_L}")
    am = abs(m)
    theta = np.asarray(theta, dtype=float)
    x = np.cos(theta)
    s = np.abs(np.sin(theta))

    log_c = 0.5 * sph_harmonic_norm(l, am).log_magnitude
    # log (2m - 1)!! = log (2m)! - m log 2 - log m!
    log_dfact = log_factorial(2 * am) - am * math.log(2.0) - log_factorial(am)
    with np.errstate(divide="ignore"):
        log_s = np.log(s)
    if am == 0:
        p_mm = np.full_like(x, math.exp(log_c))
    else:
        p_mm = np.exp(log_c + log_dfact + am * log_s)
        if am % 2:
            p_mm = -p_mm
    if l == am:
        out = p_mm * p_mm
        return out if out.ndim else float(out)
    prev, cur = p_mm, x * (2 * am + 1) * p_mm
    for k in range(am + 2, l + 1):
        prev, cur = cur, ((2 * k - 1) * x * cur - (k + am - 1) * prev) / (k - am)
    out = cur * cur
    return out if out.ndim else float(out)
