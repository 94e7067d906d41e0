"""Adaptive Gauss-Legendre quadrature and bracketed 1-D maximization.

Integrands are vectorized callables: they receive a 1-D numpy array of
abscissas and return an array of the same shape.
"""

from __future__ import annotations

import functools
import heapq
import math
from dataclasses import dataclass

import numpy as np

_TINY = np.finfo(float).tiny
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_DOUBLINGS = 400
_DIVERGENCE_STREAK = 3


class QuadratureError(ArithmeticError):
    """Base class for numerical integration failures."""


class IntegrandError(QuadratureError):
    """The integrand returned a non-finite sample."""

    def __init__(self, abscissa: float, sample: float):
        self.abscissa = abscissa
        self.sample = sample
        super().__init__(f"non-finite integrand value {sample!r} at x = {abscissa!r}")


class DivergenceError(QuadratureError):
    """A semi-infinite integral keeps growing as the cutoff is pushed out."""


@dataclass(frozen=True)
class QuadratureSpec:
    panel_order: int = 32
    rel_tol: float = 1e-10
    max_panels: int = 4096
    tail_rel_bound: float = 1e-14

    def __post_init__(self):
        if self.panel_order < 2:
            raise ValueError("panel_order must be >= 2")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_panels < 1:
            raise ValueError("max_panels must be >= 1")
        if not self.tail_rel_bound > 0:
            raise ValueError("tail_rel_bound must be positive")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    error_estimate: float
    panels_used: int
    converged: bool


@functools.lru_cache(maxsize=None)
def _rule(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes2, weights2 = np.polynomial.legendre.leggauss(2 * order)
    return np.concatenate([nodes, nodes2]), weights, weights2


def _sample(f, x):
    y = np.asarray(f(x), dtype=float)
    if y.shape != x.shape:
        y = np.broadcast_to(y, x.shape)
    bad = ~np.isfinite(y)
    if bad.any():
        i = int(np.argmax(bad))
        raise IntegrandError(float(x[i]), float(y[i]))
    return y


def _panel(f, a, b, order):
    nodes, w1, w2 = _rule(order)
    half = 0.5 * (b - a)
    y = _sample(f, 0.5 * (a + b) + half * nodes)
    coarse = half * np.dot(w1, y[:order])
    fine = half * np.dot(w2, y[order:])
    return fine, abs(fine - coarse)


def integrate(f, a: float, b: float, spec: QuadratureSpec = DEFAULT_SPEC,
              points=None, initial_panels: int = 1, abs_tol: float = 0.0) -> IntegrationResult:
    """Integrate ``f`` over ``[a, b]`` by adaptive bisection of Gauss panels.

    Each panel is integrated with ``panel_order`` and ``2 * panel_order``
    nodes; the finer value is kept and the difference is its error
    estimate. The panel with the largest estimate is bisected until the
    summed estimate drops below ``rel_tol * |value|`` or the panel budget
    runs out, in which case the result comes back with ``converged=False``.

    ``points`` are interior abscissas (discontinuities, kinks) that become
    panel edges from the start. ``abs_tol`` is an absolute floor on the
    error target, for pieces of a larger integral.
    """
    a = float(a)
    b = float(b)
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    edges = {a, b}
    if points is not None:
        edges.update(float(p) for p in points if a < p < b)
    edges = sorted(edges)
    if initial_panels > 1:
        fine = []
        for lo, hi in zip(edges[:-1], edges[1:]):
            fine.extend(np.linspace(lo, hi, initial_panels + 1)[:-1].tolist())
        edges = fine + [b]

    order = spec.panel_order
    heap = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err = _panel(f, lo, hi, order)
        heap.append((-err, lo, hi, val))
    heapq.heapify(heap)
    total = sum(item[3] for item in heap)
    err_sum = sum(-item[0] for item in heap)

    while err_sum > max(spec.rel_tol * abs(total), abs_tol, _TINY) and len(heap) < spec.max_panels:
        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (neg_err, lo, hi, val))
            break
        v1, e1 = _panel(f, lo, mid, order)
        v2, e2 = _panel(f, mid, hi, order)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total += v1 + v2 - val
        err_sum += e1 + e2 + neg_err

    total = math.fsum(item[3] for item in heap)
    err_sum = math.fsum(-item[0] for item in heap)
    converged = err_sum <= max(spec.rel_tol * abs(total), abs_tol, _TINY)
    return IntegrationResult(total, err_sum, len(heap), converged)


def integrate_semi_infinite(f, decay_scale: float, spec: QuadratureSpec = DEFAULT_SPEC,
                            lower: float = 0.0, points=None) -> IntegrationResult:
    """Integrate ``f`` over ``[lower, inf)`` by truncation plus a tail test.

    The core interval ``[lower, lower + 8 * decay_scale]`` is integrated
    first; then the cutoff is doubled until the tail beyond it, estimated
    from the last slab and the geometric ratio of the last two slabs, falls
    below ``tail_rel_bound`` of the running total. That remainder estimate
    is included in ``error_estimate``. Three slabs in a row that do not
    shrink raise :class:`DivergenceError`.
    """
    if not decay_scale > 0:
        raise ValueError("decay_scale must be positive")
    cut = lower + 8.0 * decay_scale
    core = integrate(f, lower, cut, spec, points=points, initial_panels=8)
    total = core.value
    err = core.error_estimate
    panels = core.panels_used
    converged = core.converged
    prev = None
    streak = 0
    remainder = math.inf
    for _ in range(_MAX_DOUBLINGS):
        nxt = lower + 2.0 * (cut - lower)
        slab = integrate(f, cut, nxt, spec, points=points,
                         abs_tol=spec.rel_tol * abs(total))
        total += slab.value
        err += slab.error_estimate
        panels += slab.panels_used
        converged = converged and slab.converged
        cut = nxt
        size = abs(slab.value)
        if size == 0.0:
            # integrand underflowed; the previous slab's geometric tail is what is missing
            if prev is not None and remainder > spec.tail_rel_bound * abs(total):
                converged = False
            if prev is None:
                remainder = 0.0
            break
        ratio = size / abs(prev) if prev else math.inf
        # geometric tail sum, never below the slab itself
        remainder = size * max(1.0, ratio / (1.0 - ratio)) if ratio < 1.0 else size
        if remainder <= spec.tail_rel_bound * abs(total):
            break
        if prev is not None and ratio >= 1.0:
            streak += 1
            if streak >= _DIVERGENCE_STREAK:
                raise DivergenceError(
                    f"integral over [{lower}, {cut:g}] still growing by a factor "
                    f"{ratio:.3g} per doubling of the cutoff")
        else:
            streak = 0
        prev = slab.value
        if panels >= spec.max_panels or not math.isfinite(cut):
            converged = False
            break
    else:
        converged = False
    return IntegrationResult(total, err + remainder, panels, converged)


def golden_section_max(f, a: float, b: float, tol: float = 1e-10, max_iter: int = 300):
    """Golden-section search for the maximum of a unimodal ``f`` on ``[a, b]``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = float(f(np.array([c]))[0])
    fd = float(f(np.array([d]))[0])
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = float(f(np.array([c]))[0])
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = float(f(np.array([d]))[0])
    return (c, fc) if fc >= fd else (d, fd)


def maximize(f, a: float, b: float, grid_points: int = 2048, tol: float = 1e-10):
    """Return ``(argmax, max_value)`` of ``f`` on ``[a, b]``.

    A uniform grid picks the best bracket, which golden-section search then
    refines. The result is never below the best grid sample.
    """
    if grid_points < 3:
        raise ValueError("grid_points must be >= 3")
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    grid = np.linspace(a, b, grid_points)
    y = _sample(f, grid)
    i = int(np.argmax(y))
    best_x, best_y = float(grid[i]), float(y[i])
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid_points - 1)]
    x, fx = golden_section_max(lambda t: _sample(f, t), float(lo), float(hi), tol)
    if fx > best_y:
        return x, fx
    return best_x, best_y
