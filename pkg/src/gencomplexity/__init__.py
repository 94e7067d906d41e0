"""Generalized Rényi-difference statistical complexity of probability densities.

The measure is ``C(alpha, beta) = exp(R_alpha - R_beta)`` where ``R_alpha`` is the
Rényi entropy of order ``alpha``. The package evaluates it numerically for
analytic reference densities and for hydrogen, isotropic oscillator and
infinite square well eigenstates.
"""

from .complexity import (
    ComplexityResult,
    DivergenceError,
    EntropyResult,
    complexity,
    renyi,
)
from .densities import (
    Density,
    StepDensity,
    make_rectangular,
    make_ring,
    replicate,
    ring_renyi_closed,
    scale_translate,
    step_renyi,
    unit_ball_volume,
)
from .orders import INF, SHANNON, ZERO, OrderParam
from .quadrature import QuadratureSpec

__version__ = "0.1.0"

__all__ = [
    "ComplexityResult",
    "Density",
    "DivergenceError",
    "EntropyResult",
    "INF",
    "OrderParam",
    "QuadratureSpec",
    "SHANNON",
    "StepDensity",
    "ZERO",
    "complexity",
    "make_rectangular",
    "make_ring",
    "renyi",
    "replicate",
    "ring_renyi_closed",
    "scale_translate",
    "step_renyi",
    "unit_ball_volume",
]
