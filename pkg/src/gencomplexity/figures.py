"""Rows behind the hydrogen and oscillator complexity-versus-|m| figures."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .complexity import complexity
from .orders import INF, OrderParam
from .quadrature import DEFAULT_SPEC
from .quantum import (
    HydrogenState,
    OscillatorState,
    hydrogen_density,
    oscillator_density,
    oscillator_shell,
)

FIGURE_IDS = ("fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b")
HYDROGEN_N = 15
HYDROGEN_LS = (5, 10, 14)
OSCILLATOR_SHELL = 15
CSV_HEADER = ("l", "abs_m", "complexity", "r_alpha", "sup_norm")


@dataclass(frozen=True)
class FigureRow:
    l: int
    abs_m: int
    value: float
    r_alpha: float
    sup_norm: float


@dataclass(frozen=True)
class FigureSpec:
    system: str
    space: str
    alpha: float


def figure_spec(figure_id: str) -> FigureSpec:
    if figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURE_IDS)}")
    alpha = 0.5 if figure_id.endswith("a") else 2.0
    if figure_id.startswith("fig1"):
        return FigureSpec("hydrogen", "position", alpha)
    if figure_id.startswith("fig2"):
        return FigureSpec("hydrogen", "momentum", alpha)
    return FigureSpec("oscillator", "position", alpha)


def figure_states(figure_id: str):
    """Density-building states of a figure, in ``(l, |m|)`` order."""
    fs = figure_spec(figure_id)
    if fs.system == "hydrogen":
        return [HydrogenState(HYDROGEN_N, l, m, fs.space)
                for l in HYDROGEN_LS for m in range(l + 1)]
    pairs = sorted(oscillator_shell(OSCILLATOR_SHELL), key=lambda nl: nl[1])
    return [OscillatorState(n, l, m, 1.0, fs.space) for n, l in pairs for m in range(l + 1)]


def _row(state, alpha, spec):
    if isinstance(state, HydrogenState):
        f = hydrogen_density(state)
    else:
        f = oscillator_density(state)
    res = complexity(f, alpha, INF, spec)
    return FigureRow(state.l, abs(state.m), res.value, res.r_alpha.value, f.sup_norm())


def figure_rows(figure_id: str, spec=DEFAULT_SPEC, workers: int = 1):
    """Complexity with ``beta = inf`` for every state of the figure, sorted by ``(l, |m|)``."""
    alpha = OrderParam.of(figure_spec(figure_id).alpha)
    states = figure_states(figure_id)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(lambda s: _row(s, alpha, spec), states))
    else:
        rows = [_row(s, alpha, spec) for s in states]
    return sorted(rows, key=lambda r: (r.l, r.abs_m))


def fmt(x: float) -> str:
    return format(x, ".17g")


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.l, r.abs_m, fmt(r.value), fmt(r.r_alpha), fmt(r.sup_norm)])
    return buf.getvalue()
