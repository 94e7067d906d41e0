"""Rényi entropies of densities and the generalized complexity built from them."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .densities import Density, StepDensity, step_renyi
from .orders import INF, SHANNON, ZERO, OrderKind, OrderParam
from .quadrature import DEFAULT_SPEC, DivergenceError, QuadratureSpec

__all__ = [
    "ComplexityResult",
    "DivergenceError",
    "EntropyResult",
    "INF",
    "OrderParam",
    "SHANNON",
    "ZERO",
    "complexity",
    "renyi",
]

_EPS = 2.220446049250313e-16


class ConvergenceWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class EntropyResult:
    value: float
    error_estimate: float
    order: OrderParam


@dataclass(frozen=True)
class ComplexityResult:
    value: float
    r_alpha: EntropyResult
    r_beta: EntropyResult

    @property
    def error_estimate(self) -> float:
        if self.value == 0 or math.isinf(self.value):
            return 0.0
        return self.value * (self.r_alpha.error_estimate + self.r_beta.error_estimate)


def _warn_unconverged(what):
    warnings.warn(f"quadrature for {what} did not reach its tolerance",
                  ConvergenceWarning, stacklevel=3)


def renyi(f, order, spec: QuadratureSpec = DEFAULT_SPEC) -> EntropyResult:
    """Rényi entropy of ``f`` in nats.

    Finite orders integrate ``f^alpha``; the Shannon limit integrates
    ``-f ln f``; the infinity limit is ``-ln sup f``; the zero limit is the
    log of the support volume (``inf`` for unbounded support). Raises
    :class:`DivergenceError` when ``f^alpha`` is not integrable.
    """
    order = OrderParam.of(order)
    if isinstance(f, StepDensity):
        return EntropyResult(step_renyi(f, order), 0.0, order)
    if not isinstance(f, Density):
        raise TypeError(f"expected a Density, got {type(f).__name__}")

    if order.kind is OrderKind.ZERO:
        return EntropyResult(math.log(f.support_measure()), 0.0, order)

    if order.kind is OrderKind.INFINITY:
        sup = f.sup_norm()
        if not sup > 0:
            raise ValueError("density has zero supremum")
        return EntropyResult(-math.log(sup), 4 * _EPS, order)

    if order.kind is OrderKind.SHANNON:
        value, err, ok = f.xlogx_integral(spec)
        if not ok:
            _warn_unconverged("the Shannon entropy")
        return EntropyResult(-value, err, order)

    alpha = order.value
    value, err, ok = f.power_integral(alpha, spec)
    if not ok:
        _warn_unconverged(f"the order-{alpha} Rényi entropy")
    if not value > 0:
        raise ValueError(f"integral of f^{alpha} is {value!r}")
    return EntropyResult(math.log(value) / (1.0 - alpha),
                         err / (value * abs(1.0 - alpha)), order)


def complexity(f, alpha, beta, spec: QuadratureSpec = DEFAULT_SPEC) -> ComplexityResult:
    """``exp(R_alpha - R_beta)`` with all limit orders allowed.

    A zero-limit ``beta`` on an unbounded support gives exactly 0.
    """
    ra = renyi(f, alpha, spec)
    rb = renyi(f, beta, spec)
    if ra.order == rb.order:
        return ComplexityResult(1.0, ra, rb)
    diff = ra.value - rb.value
    if math.isnan(diff):
        raise ValueError("both orders give infinite entropy")
    return ComplexityResult(math.exp(diff), ra, rb)
