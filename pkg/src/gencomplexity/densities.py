"""Probability densities, the analytic reference families and their transforms.

A density is a product of one-dimensional *profiles*. Line densities
(``D = 1``) have a single profile in ``x``. Radial densities have a radial
profile ``u(r)`` carrying the volume element, optionally multiplied by an
angular profile ``w(theta)`` (``D = 3`` only) carrying ``2 pi sin(theta)``.
Every integral the entropy engine needs then factors into 1-D quadratures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .orders import OrderKind, OrderParam
from .quadrature import (
    DEFAULT_SPEC,
    QuadratureSpec,
    integrate,
    integrate_semi_infinite,
    maximize,
)
from .specfun import log_gamma

SUP_GRID_POINTS = 2048


def unit_ball_volume(D: int) -> float:
    """Volume ``2 pi^(D/2) / (D Gamma(D/2))`` of the unit ball in ``D`` dimensions."""
    if D < 1 or int(D) != D:
        raise ValueError(f"dimension must be a positive integer, got {D}")
    return math.exp(math.log(2.0) + 0.5 * D * math.log(math.pi)
                    - math.log(D) - log_gamma(0.5 * D))


def _xlogx(y):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(y > 0, y * np.log(np.where(y > 0, y, 1.0)), 0.0)


def _exp_times(log_y):
    # y ln y from ln y, with the y = 0 limit
    with np.errstate(invalid="ignore"):
        return np.where(np.isfinite(log_y), np.exp(log_y) * log_y, 0.0)


def _power(y, alpha):
    with np.errstate(divide="ignore"):
        return np.where(y > 0, np.power(np.where(y > 0, y, 1.0), alpha), 0.0)


class Profile:
    """One nonnegative factor of a separable density.

    ``measure`` is the volume-element weight attached to this coordinate
    (``None`` means 1). Quadrature moments are memoized per instance, so
    densities that share a profile object share the work.
    """

    def __init__(self, func, lower: float, upper: float, *, measure=None,
                 scale: float = 1.0, breakpoints=(), sup_window: float | None = None,
                 log_func=None):
        if not lower < upper:
            raise ValueError(f"empty profile support [{lower}, {upper}]")
        if math.isinf(lower):
            raise ValueError("profiles must have a finite lower end")
        self.func = func
        self.lower = float(lower)
        self.upper = float(upper)
        self.measure = measure
        self.scale = float(scale)
        self.breakpoints = tuple(float(p) for p in breakpoints)
        self.sup_window = sup_window
        # optional log u(x); keeps u^alpha alive where u itself underflows
        self.log_func = log_func
        self._memo: dict = {}

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x >= self.lower) & (x <= self.upper)
        y = np.zeros_like(x)
        if inside.any():
            y[inside] = self.func(x[inside])
        return y

    def _weighted(self, g):
        if self.measure is None:
            return g
        return lambda x: g(x) * self.measure(x)

    def _integrate(self, g, spec):
        return self._integrate_raw(self._weighted(g), spec)

    def _integrate_raw(self, h, spec):
        if math.isinf(self.upper):
            res = integrate_semi_infinite(h, self.scale, spec, lower=self.lower,
                                          points=self.breakpoints)
        else:
            res = integrate(h, self.lower, self.upper, spec, points=self.breakpoints,
                            initial_panels=4)
        return res

    def moment(self, kind: str, alpha: float, spec: QuadratureSpec):
        """Memoized ``(value, error_estimate, converged)`` of a profile integral.

        ``kind`` is ``"power"`` for the integral of ``u^alpha`` and ``"xlogx"``
        for the integral of ``u ln u``, both against the profile's measure.
        """
        key = (kind, alpha, spec)
        if key not in self._memo:
            if kind == "power":
                if self.log_func is None:
                    res = self._integrate(lambda x: _power(self.func(x), alpha), spec)
                elif self.measure is _r_squared:
                    res = self._integrate_raw(
                        lambda x: np.exp(alpha * self.log_func(x) + _log_r_squared(x)), spec)
                else:
                    res = self._integrate(lambda x: np.exp(alpha * self.log_func(x)), spec)
            elif kind == "xlogx":
                if self.log_func is None:
                    res = self._integrate(lambda x: _xlogx(self.func(x)), spec)
                else:
                    res = self._integrate(lambda x: _exp_times(self.log_func(x)), spec)
            else:
                raise ValueError(kind)
            self._memo[key] = (res.value, res.error_estimate, res.converged)
        return self._memo[key]

    def sup(self, grid_points: int = SUP_GRID_POINTS):
        key = ("sup", grid_points)
        if key not in self._memo:
            hi = self.upper
            if math.isinf(hi):
                window = self.sup_window if self.sup_window is not None else 8.0 * self.scale
                hi = self.lower + window
            self._memo[key] = maximize(self, self.lower, hi, grid_points)
        return self._memo[key]

    def transformed(self, func, lower, upper, *, measure="same", scale, breakpoints,
                    sup_window, log_func=None):
        return Profile(func, lower, upper,
                       measure=self.measure if measure == "same" else measure,
                       scale=scale, breakpoints=breakpoints, sup_window=sup_window,
                       log_func=log_func)


class Density:
    """Abstract evaluable probability density in ``dimension`` dimensions."""

    dimension: int
    length_scale: float

    def evaluate(self, points):
        raise NotImplementedError

    def __call__(self, points):
        return self.evaluate(points)

    @property
    def factors(self) -> tuple:
        raise NotImplementedError

    def support_measure(self) -> float:
        raise NotImplementedError

    def bounding_ball(self):
        """``(center, radius)`` of a ball containing the support."""
        raise NotImplementedError

    # The integrals below are what the entropy engine consumes. For a product
    # density every one of them factors over the profiles.

    def power_integral(self, alpha: float, spec: QuadratureSpec = DEFAULT_SPEC):
        value, rel, ok = 1.0, 0.0, True
        for p in self.factors:
            v, e, c = p.moment("power", alpha, spec)
            value *= v
            rel += e / abs(v) if v else math.inf
            ok = ok and c
        return value, abs(value) * rel, ok

    def xlogx_integral(self, spec: QuadratureSpec = DEFAULT_SPEC):
        masses = [p.moment("power", 1.0, spec) for p in self.factors]
        logs = [p.moment("xlogx", 0.0, spec) for p in self.factors]
        total, err, ok = 0.0, 0.0, True
        for i, (v, e, c) in enumerate(logs):
            term, term_err = v, e
            for j, (mv, me, mc) in enumerate(masses):
                if j != i:
                    term_err = abs(term) * me + abs(mv) * term_err
                    term *= mv
                    ok = ok and mc
            total += term
            err += term_err
            ok = ok and c
        return total, err, ok

    def mass(self, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
        return self.power_integral(1.0, spec)[0]

    def sup_norm(self) -> float:
        out = 1.0
        for p in self.factors:
            out *= p.sup()[1]
        return out

    def check_normalization(self, spec: QuadratureSpec = DEFAULT_SPEC, tol: float = 1e-9):
        m = self.mass(spec)
        if abs(m - 1.0) > tol:
            raise ValueError(f"density integrates to {m!r}, not 1 (tol {tol})")
        return m


class LineDensity(Density):
    """One-dimensional density given by a profile in ``x``."""

    dimension = 1

    def __init__(self, profile: Profile):
        if profile.measure is not None:
            raise ValueError("line densities take an unweighted profile")
        self.profile = profile
        self.length_scale = profile.scale

    @property
    def factors(self):
        return (self.profile,)

    def evaluate(self, points):
        x = np.asarray(points, dtype=float)
        if x.ndim == 2:
            x = x[:, 0]
        return self.profile(x)

    def support_measure(self):
        return self.profile.upper - self.profile.lower

    def bounding_ball(self):
        lo, hi = self.profile.lower, self.profile.upper
        if math.isinf(hi):
            return np.array([lo]), math.inf
        return np.array([0.5 * (lo + hi)]), 0.5 * (hi - lo)


def radial_measure(D: int):
    """Surface-area weight ``D c_D r^(D-1)`` for isotropic ``D``-dim densities."""
    area = D * unit_ball_volume(D)
    if D == 1:
        return lambda r: np.full_like(r, area)
    return lambda r: area * r ** (D - 1)


def _r_squared(r):
    return r * r


def _log_r_squared(r):
    with np.errstate(divide="ignore"):
        return 2.0 * np.log(r)


def _two_pi_sin(theta):
    return 2.0 * math.pi * np.sin(theta)


class RadialDensity(Density):
    """``u(|x - center|) * w(theta)`` with ``theta`` the polar angle (``D = 3``).

    Without an angular profile the density is isotropic and the radial
    profile carries the full surface-area weight.
    """

    def __init__(self, dimension: int, radial: Profile, angular: Profile | None = None,
                 center=None):
        if angular is not None and dimension != 3:
            raise ValueError("angular profiles are only supported in three dimensions")
        self.dimension = dimension
        self.radial = radial
        self.angular = angular
        self.center = np.zeros(dimension) if center is None else np.asarray(center, float)
        if self.center.shape != (dimension,):
            raise ValueError(f"center must have {dimension} components")
        self.length_scale = radial.scale

    @property
    def factors(self):
        if self.angular is None:
            return (self.radial,)
        return (self.radial, self.angular)

    def evaluate(self, points):
        x = np.asarray(points, dtype=float)
        if self.dimension == 1 and x.ndim == 1:
            x = x[:, None]
        x = np.atleast_2d(x) - self.center
        r = np.linalg.norm(x, axis=1)
        out = self.radial(r)
        if self.angular is not None:
            with np.errstate(invalid="ignore", divide="ignore"):
                cos_t = np.where(r > 0, x[:, 2] / np.where(r > 0, r, 1.0), 1.0)
            out = out * self.angular.func(np.arccos(np.clip(cos_t, -1.0, 1.0)))
        return out

    def support_measure(self):
        return unit_ball_volume(self.dimension) * self.radial.upper ** self.dimension

    def bounding_ball(self):
        return self.center.copy(), self.radial.upper


class DisjointSum(Density):
    """Weighted sum of densities with pairwise disjoint supports."""

    def __init__(self, components, weights):
        if len(components) != len(weights) or not components:
            raise ValueError("need one weight per component")
        dims = {c.dimension for c in components}
        if len(dims) != 1:
            raise ValueError("components must share a dimension")
        balls = [c.bounding_ball() for c in components]
        for i in range(len(balls)):
            for j in range(i + 1, len(balls)):
                (ci, ri), (cj, rj) = balls[i], balls[j]
                if not np.linalg.norm(ci - cj) >= ri + rj:
                    raise ValueError(f"supports of components {i} and {j} overlap")
        self.components = tuple(components)
        self.weights = tuple(float(w) for w in weights)
        self.dimension = dims.pop()
        self.length_scale = min(c.length_scale for c in components)

    def evaluate(self, points):
        return sum(w * c.evaluate(points) for c, w in zip(self.components, self.weights))

    def support_measure(self):
        return sum(c.support_measure() for c in self.components)

    def bounding_ball(self):
        balls = [c.bounding_ball() for c in self.components]
        center = np.mean([b[0] for b in balls], axis=0)
        radius = max(np.linalg.norm(c - center) + r for c, r in balls)
        return center, radius

    def power_integral(self, alpha, spec=DEFAULT_SPEC):
        value, err, ok = 0.0, 0.0, True
        for c, w in zip(self.components, self.weights):
            v, e, k = c.power_integral(alpha, spec)
            value += w ** alpha * v
            err += w ** alpha * e
            ok = ok and k
        return value, err, ok

    def xlogx_integral(self, spec=DEFAULT_SPEC):
        value, err, ok = 0.0, 0.0, True
        for c, w in zip(self.components, self.weights):
            m, me, mk = c.power_integral(1.0, spec)
            v, e, k = c.xlogx_integral(spec)
            value += w * math.log(w) * m + w * v
            err += abs(w * math.log(w)) * me + w * e
            ok = ok and k and mk
        return value, err, ok

    def sup_norm(self):
        return max(w * c.sup_norm() for c, w in zip(self.components, self.weights))


def _piecewise_radial(levels, edges, D, scale=1.0):
    """Isotropic profile equal to ``levels[i]`` for ``edges[i] < r < edges[i + 1]``."""
    levels = np.asarray(levels, float)
    edges = np.asarray(edges, float)

    def u(r):
        idx = np.clip(np.searchsorted(edges, r, side="right") - 1, 0, len(levels) - 1)
        return levels[idx]

    return Profile(u, edges[0], edges[-1], measure=radial_measure(D), scale=scale,
                   breakpoints=edges[1:-1])


def make_rectangular(D: int) -> RadialDensity:
    """Uniform density ``1/c_D`` on the unit ``D``-ball."""
    c = unit_ball_volume(D)
    return RadialDensity(D, _piecewise_radial([1.0 / c], [0.0, 1.0], D))


def make_ring(delta: float, B: float, D: int) -> RadialDensity:
    """Two-level density: ``(1 - delta)/c_D`` inside the unit ball, the rest spread to radius ``B``."""
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if not B > 1:
        raise ValueError(f"B must exceed 1, got {B}")
    c = unit_ball_volume(D)
    levels = [(1.0 - delta) / c, delta / (c * (B ** D - 1.0))]
    return RadialDensity(D, _piecewise_radial(levels, [0.0, 1.0, B], D))


def ring_renyi_closed(alpha, delta: float, B: float, D: int) -> float:
    """Closed-form Rényi entropy of :func:`make_ring` for finite ``alpha != 1``."""
    order = OrderParam.of(alpha)
    if order.kind is not OrderKind.FINITE:
        raise ValueError("closed form covers finite orders != 1 only; "
                         "use the Shannon path for alpha = 1")
    if not 0 < delta < 1 or not B > 1:
        raise ValueError("need 0 < delta < 1 and B > 1")
    a = order.value
    inner = (1.0 - delta) ** a + delta ** a / (B ** D - 1.0) ** (a - 1.0)
    return math.log(inner) / (1.0 - a) + math.log(unit_ball_volume(D))


@dataclass(frozen=True)
class StepDensity:
    """Piecewise-constant density given only by ``(level, measure)`` pairs."""

    steps: tuple

    def __post_init__(self):
        steps = tuple((float(l), float(m)) for l, m in self.steps)
        if not steps:
            raise ValueError("need at least one step")
        if any(not (l > 0 and m > 0) for l, m in steps):
            raise ValueError("levels and measures must be positive")
        norm = math.fsum(l * m for l, m in steps)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"sum of level * measure is {norm!r}, not 1")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def normalized(cls, levels, measures) -> "StepDensity":
        levels = np.asarray(levels, float)
        measures = np.asarray(measures, float)
        z = math.fsum(levels * measures)
        return cls(tuple(zip((levels / z).tolist(), measures.tolist())))

    @property
    def levels(self):
        return np.array([s[0] for s in self.steps])

    @property
    def measures(self):
        return np.array([s[1] for s in self.steps])

    def realize(self) -> LineDensity:
        """Lay the steps side by side on ``[0, sum(measures)]`` as a 1-D density."""
        levels = self.levels
        edges = np.concatenate([[0.0], np.cumsum(self.measures)])

        def f(x):
            idx = np.clip(np.searchsorted(edges, x, side="right") - 1, 0, len(levels) - 1)
            return levels[idx]

        return LineDensity(Profile(f, 0.0, float(edges[-1]), scale=float(edges[-1]),
                                   breakpoints=edges[1:-1]))


def step_renyi(sd: StepDensity, alpha) -> float:
    """Rényi entropy of a step density from its levels and measures alone."""
    order = OrderParam.of(alpha)
    lam, mu = sd.levels, sd.measures
    if order.kind is OrderKind.ZERO:
        return math.log(math.fsum(mu))
    if order.kind is OrderKind.SHANNON:
        return -math.fsum(lam * np.log(lam) * mu)
    if order.kind is OrderKind.INFINITY:
        return -math.log(lam.max())
    a = order.value
    # factor out the largest level so lam**a cannot overflow
    top = lam.max()
    s = math.fsum((lam / top) ** a * mu)
    return (a * math.log(top) + math.log(s)) / (1.0 - a)


def scale_translate(f: Density, a: float, b=None) -> Density:
    """The density ``a^D f(a (r - b))``."""
    if not a > 0:
        raise ValueError(f"scale factor must be positive, got {a}")
    D = f.dimension
    b = np.zeros(D) if b is None else np.atleast_1d(np.asarray(b, float))
    if b.shape != (D,):
        raise ValueError(f"translation must have {D} components")
    aD = a ** D

    if isinstance(f, DisjointSum):
        return DisjointSum([scale_translate(c, a, b) for c in f.components], f.weights)

    if isinstance(f, LineDensity):
        p = f.profile
        shift = float(b[0])
        return LineDensity(p.transformed(
            lambda x, g=p.func: aD * g(a * (x - shift)),
            p.lower / a + shift, p.upper / a + shift, measure=None,
            scale=p.scale / a,
            breakpoints=[q / a + shift for q in p.breakpoints],
            sup_window=None if p.sup_window is None else p.sup_window / a))

    if isinstance(f, RadialDensity):
        p = f.radial
        log_func = None
        if p.log_func is not None:
            log_func = lambda r, g=p.log_func: math.log(aD) + g(a * r)  # noqa: E731
        radial = p.transformed(
            lambda r, g=p.func: aD * g(a * r),
            p.lower / a, p.upper / a, scale=p.scale / a,
            breakpoints=[q / a for q in p.breakpoints],
            sup_window=None if p.sup_window is None else p.sup_window / a,
            log_func=log_func)
        return RadialDensity(D, radial, f.angular, center=f.center / a + b)

    raise TypeError(f"cannot transform {type(f).__name__}")


def replicate(f: Density, n: int, centers) -> DisjointSum:
    """``n`` shrunken copies ``n^(D/2 - 1) f(sqrt(n) (r - b_m))`` placed at ``centers``.

    Each copy carries mass ``1/n``; the copies must not overlap.
    """
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    centers = [np.atleast_1d(np.asarray(c, float)) for c in centers]
    if len(centers) != n:
        raise ValueError(f"need {n} centers, got {len(centers)}")
    root = math.sqrt(n)
    # n^(D/2 - 1) f(sqrt(n)(r - b)) = (1/n) * [sqrt(n)^D f(sqrt(n)(r - b))]
    copies = [scale_translate(f, root, c) for c in centers]
    return DisjointSum(copies, [1.0 / n] * n)
