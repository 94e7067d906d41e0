"""Extended entropy order: zero limit, finite, Shannon limit, infinity limit."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Finite orders this close to 1 go through the Shannon path; the 1/(1 - alpha)
# form loses all significant digits there.
SHANNON_COERCE_WINDOW = 1e-6


class OrderKind(enum.Enum):
    ZERO = "zero"
    FINITE = "finite"
    SHANNON = "shannon"
    INFINITY = "inf"


@dataclass(frozen=True)
class OrderParam:
    kind: OrderKind
    value: float

    @classmethod
    def of(cls, alpha) -> "OrderParam":
        """Build an order from a number, a token (``"inf"``, ``"0"``, ``"1"``) or an OrderParam."""
        if isinstance(alpha, OrderParam):
            return alpha
        if isinstance(alpha, str):
            token = alpha.strip().lower()
            if token in ("inf", "infinity", "+inf"):
                return INF
            if token in ("shannon",):
                return SHANNON
            if token in ("zero",):
                return ZERO
            alpha = float(token)
        alpha = float(alpha)
        if math.isnan(alpha) or alpha < 0:
            raise ValueError(f"entropy order must be >= 0, got {alpha}")
        if alpha == 0:
            return ZERO
        if math.isinf(alpha):
            return INF
        if abs(alpha - 1.0) < SHANNON_COERCE_WINDOW:
            return SHANNON
        return cls(OrderKind.FINITE, alpha)

    @property
    def is_finite(self) -> bool:
        return self.kind is OrderKind.FINITE

    def __float__(self) -> float:
        return self.value

    def __lt__(self, other: "OrderParam") -> bool:
        return self.value < OrderParam.of(other).value

    def __str__(self) -> str:
        if self.kind is OrderKind.INFINITY:
            return "inf"
        return repr(self.value) if self.kind is OrderKind.FINITE else str(int(self.value))


ZERO = OrderParam(OrderKind.ZERO, 0.0)
SHANNON = OrderParam(OrderKind.SHANNON, 1.0)
INF = OrderParam(OrderKind.INFINITY, math.inf)
