"""Position- and momentum-space densities of three exactly solvable systems.

Hydrogen (atomic units), the 3-D isotropic harmonic oscillator with
potential ``lam^2 r^2 / 2`` and the infinite square well on ``[0, L]``.
The 3-D densities are ``R_nl(r)^2 |Y_lm(theta)|^2`` and are returned as
separable :class:`~gencomplexity.densities.RadialDensity` objects whose
profiles are shared between states with equal ``(n, l)`` or ``(l, m)``.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .densities import LineDensity, Profile, RadialDensity, _r_squared, _two_pi_sin
from .orders import OrderKind, OrderParam
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate
from .specfun import (
    LogScaled,
    assoc_laguerre,
    gegenbauer,
    log_factorial,
    log_gamma,
    sph_harmonic_modsq,
)


class Space(str, enum.Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class HydrogenState:
    n: int
    l: int
    m: int = 0
    space: Space = Space.POSITION

    def __post_init__(self):
        object.__setattr__(self, "space", Space(self.space))
        if self.n < 1:
            raise ValueError(f"hydrogen needs n >= 1, got n = {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"hydrogen needs 0 <= l <= n - 1, got l = {self.l}")
        if abs(self.m) > self.l:
            raise ValueError(f"|m| = {abs(self.m)} exceeds l = {self.l}")


@dataclass(frozen=True)
class OscillatorState:
    n: int
    l: int
    m: int = 0
    strength: float = 1.0
    space: Space = Space.POSITION

    def __post_init__(self):
        object.__setattr__(self, "space", Space(self.space))
        if self.n < 0 or self.l < 0:
            raise ValueError("oscillator needs n >= 0 and l >= 0")
        if abs(self.m) > self.l:
            raise ValueError(f"|m| = {abs(self.m)} exceeds l = {self.l}")
        if not self.strength > 0:
            raise ValueError("oscillator strength must be positive")

    @property
    def shell(self) -> int:
        return 2 * self.n + self.l


@dataclass(frozen=True)
class SquareWellState:
    k: int
    L: float = 1.0
    d: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"square well needs k >= 1, got {self.k}")
        if not self.L > 0:
            raise ValueError("box width must be positive")
        if self.d < 1:
            raise ValueError("box dimension must be >= 1")


# --- hydrogen ---------------------------------------------------------------

def _hydrogen_position_prefactor(n, l) -> LogScaled:
    return LogScaled.from_log(math.log(2.0 / n ** 2)
                              + 0.5 * (log_factorial(n - l - 1) - log_factorial(n + l)))


def _hydrogen_position_parts(n, l, r):
    """``(log envelope, polynomial)`` with ``R_nl = exp(envelope) * polynomial``."""
    r = np.asarray(r, dtype=float)
    x = 2.0 * r / n
    pre = _hydrogen_position_prefactor(n, l).log_magnitude
    with np.errstate(divide="ignore"):
        log_env = pre + (l * np.log(x) if l else 0.0) - r / n
    return log_env, assoc_laguerre(n - l - 1, 2 * l + 1, x)


def hydrogen_radial_position(n: int, l: int, r):
    """Radial function ``R_nl(r)`` of hydrogen in position space."""
    HydrogenState(n, l)
    log_env, poly = _hydrogen_position_parts(n, l, r)
    out = np.exp(log_env) * poly
    return out if out.ndim else float(out)


def _hydrogen_momentum_prefactor(n, l) -> LogScaled:
    return LogScaled.from_log(
        0.5 * (math.log(2.0 / math.pi) + log_factorial(n - l - 1) - log_factorial(n + l))
        + 2.0 * math.log(n) + (2 * l + 2) * math.log(2.0) + log_factorial(l)
        + l * math.log(n))


def _hydrogen_momentum_parts(n, l, p):
    p = np.asarray(p, dtype=float)
    q = (n * p) ** 2
    pre = _hydrogen_momentum_prefactor(n, l).log_magnitude
    with np.errstate(divide="ignore", over="ignore"):
        log_env = pre + (l * np.log(p) if l else 0.0) - (l + 2) * np.log1p(q)
        t = np.where(np.isfinite(q), (q - 1.0) / (q + 1.0), 1.0)
    return log_env, gegenbauer(n - l - 1, l + 1, np.clip(t, -1.0, 1.0))


def hydrogen_radial_momentum(n: int, l: int, p):
    """Radial function of hydrogen in momentum space (Gegenbauer form)."""
    HydrogenState(n, l)
    log_env, poly = _hydrogen_momentum_parts(n, l, p)
    out = np.exp(log_env) * poly
    return out if out.ndim else float(out)


def _log_square(parts):
    def log_u(x):
        log_env, poly = parts(x)
        with np.errstate(divide="ignore"):
            return 2.0 * (log_env + np.log(np.abs(poly)))
    return log_u


@functools.lru_cache(maxsize=None)
def _angular_profile(l: int, am: int) -> Profile:
    return Profile(lambda t: sph_harmonic_modsq(l, am, t), 0.0, math.pi,
                   measure=_two_pi_sin, scale=math.pi)


@functools.lru_cache(maxsize=None)
def _hydrogen_radial_profile(n: int, l: int, space: Space) -> Profile:
    if space is Space.POSITION:
        log_u = _log_square(lambda r: _hydrogen_position_parts(n, l, r))
        scale = 2.0 * n * n
        # the density maximum sits inside the outer turning point ~2n^2
        window = 2.0 * n * n + 4.0 * n
    else:
        log_u = _log_square(lambda p: _hydrogen_momentum_parts(n, l, p))
        scale = 2.0 / n
        window = 8.0 / n
    return Profile(lambda x: np.exp(log_u(x)), 0.0, math.inf, measure=_r_squared,
                   scale=scale, sup_window=window, log_func=log_u)


def hydrogen_density(state: HydrogenState, validate: bool = False,
                     spec: QuadratureSpec = DEFAULT_SPEC) -> RadialDensity:
    """``|psi_nlm|^2`` in the state's space."""
    radial = _hydrogen_radial_profile(state.n, state.l, state.space)
    f = RadialDensity(3, radial, _angular_profile(state.l, abs(state.m)))
    if validate:
        f.check_normalization(spec)
    return f


# --- isotropic harmonic oscillator -----------------------------------------

def _oscillator_parts(n, l, lam, r):
    r = np.asarray(r, dtype=float)
    log_pre = 0.5 * (math.log(2.0) + log_factorial(n) + (l + 1.5) * math.log(lam)
                     - log_gamma(n + l + 1.5))
    y = lam * r * r
    with np.errstate(divide="ignore"):
        log_env = log_pre + (l * np.log(r) if l else 0.0) - 0.5 * y
    return log_env, assoc_laguerre(n, l + 0.5, y)


def _oscillator_radial(n, l, lam, r):
    log_env, poly = _oscillator_parts(n, l, lam, r)
    out = np.exp(log_env) * poly
    return out if out.ndim else float(out)


def oscillator_radial_position(n: int, l: int, lam: float, r):
    """Radial function of the oscillator with strength ``lam`` in position space."""
    OscillatorState(n, l, 0, lam)
    return _oscillator_radial(n, l, lam, r)


def oscillator_radial_momentum(n: int, l: int, lam: float, p):
    """Momentum-space radial function; the position form with ``lam -> 1/lam``."""
    OscillatorState(n, l, 0, lam)
    return _oscillator_radial(n, l, 1.0 / lam, p)


@functools.lru_cache(maxsize=None)
def _oscillator_radial_profile(n: int, l: int, lam: float, space: Space) -> Profile:
    eff = lam if space is Space.POSITION else 1.0 / lam

    log_u = _log_square(lambda r: _oscillator_parts(n, l, eff, r))
    scale = math.sqrt((2 * (2 * n + l) + 3) / eff)
    return Profile(lambda x: np.exp(log_u(x)), 0.0, math.inf, measure=_r_squared,
                   scale=scale, sup_window=2.0 * scale, log_func=log_u)


def oscillator_density(state: OscillatorState, validate: bool = False,
                       spec: QuadratureSpec = DEFAULT_SPEC) -> RadialDensity:
    radial = _oscillator_radial_profile(state.n, state.l, float(state.strength), state.space)
    f = RadialDensity(3, radial, _angular_profile(state.l, abs(state.m)))
    if validate:
        f.check_normalization(spec)
    return f


def oscillator_shell(e: int):
    """All ``(n, l)`` with ``2n + l = e``, highest ``l`` first."""
    if e < 0:
        raise ValueError("shell index must be nonnegative")
    return [(n, e - 2 * n) for n in range(e // 2 + 1)]


# --- infinite square well ---------------------------------------------------

def square_well_density(state: SquareWellState) -> LineDensity:
    """``(2/L) sin^2(k pi x / L)`` on ``[0, L]``."""
    if state.d != 1:
        raise ValueError("only the one-dimensional well is evaluable; "
                         "use box_complexity for d > 1")
    k, L = state.k, float(state.L)

    def rho(x):
        return (2.0 / L) * np.sin(k * math.pi * x / L) ** 2

    nodes = [j * L / k for j in range(1, k)]
    return LineDensity(Profile(rho, 0.0, L, scale=L, breakpoints=nodes))


def wallis_integral(alpha: float) -> float:
    """``int_0^pi sin^(2 alpha) t dt = sqrt(pi) Gamma(alpha + 1/2) / Gamma(alpha + 1)``."""
    return math.exp(0.5 * math.log(math.pi) + log_gamma(alpha + 0.5) - log_gamma(alpha + 1.0))


def square_well_g(alpha, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Exponential of the well's Rényi entropy with ``L`` as length unit.

    ``2 * square_well_g(alpha)`` is the complexity with ``beta = inf`` for
    every eigenstate.
    """
    order = OrderParam.of(alpha)
    if order.kind is OrderKind.ZERO:
        return 1.0
    if order.kind is OrderKind.INFINITY:
        return 0.5
    if order.kind is OrderKind.SHANNON:
        # -int rho ln rho over one period, with rho = 2 sin^2(pi x)
        res = integrate(lambda x: _xlogx_sin(x), 0.0, 1.0, spec, initial_panels=4)
        return math.exp(-res.value)
    a = order.value
    res = integrate(lambda t: np.sin(t) ** (2.0 * a), 0.0, math.pi, spec, initial_panels=4)
    log_inner = a * math.log(2.0) - math.log(math.pi) + math.log(res.value)
    return math.exp(log_inner / (1.0 - a))


def _xlogx_sin(x):
    rho = 2.0 * np.sin(math.pi * x) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(rho > 0, rho * np.log(np.where(rho > 0, rho, 1.0)), 0.0)


def box_complexity(alpha, d: int, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Complexity with ``beta = inf`` for any eigenstate of a ``d``-dimensional cubic box."""
    if d < 1:
        raise ValueError("box dimension must be >= 1")
    return (2.0 * square_well_g(alpha, spec)) ** d


def clear_caches():
    """Drop memoized profiles (and with them all cached quadrature moments)."""
    _angular_profile.cache_clear()
    _hydrogen_radial_profile.cache_clear()
    _oscillator_radial_profile.cache_clear()
