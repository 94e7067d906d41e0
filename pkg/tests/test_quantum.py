import math

import numpy as np
import pytest

from gencomplexity import complexity
from gencomplexity.quadrature import integrate, integrate_semi_infinite
from gencomplexity.quantum import (
    HydrogenState,
    OscillatorState,
    SquareWellState,
    box_complexity,
    hydrogen_density,
    hydrogen_radial_momentum,
    hydrogen_radial_position,
    oscillator_density,
    oscillator_radial_momentum,
    oscillator_radial_position,
    oscillator_shell,
    square_well_density,
    square_well_g,
    wallis_integral,
)


def spherical_jn(l, x):
    # upward recurrence is fine for the small l and moderate x used here
    x = np.asarray(x, float)
    j0 = np.sinc(x / np.pi)
    if l == 0:
        return j0
    with np.errstate(divide="ignore", invalid="ignore"):
        j1 = np.where(x > 1e-3, (np.sin(x) / x - np.cos(x)) / x, x / 3 - x ** 3 / 30)
    prev, cur = j0, j1
    for k in range(1, l):
        with np.errstate(divide="ignore", invalid="ignore"):
            prev, cur = cur, np.where(x > 1e-3, (2 * k + 1) / x * cur - prev,
                                      x ** (k + 1) / math.prod(range(1, 2 * k + 4, 2)))
    return cur


def hankel(radial, l, p, scale):
    """|sqrt(2/pi) int R(r) j_l(pr) r^2 dr|: the momentum radial function up to phase."""
    val = integrate_semi_infinite(lambda r: radial(r) * spherical_jn(l, p * r) * r * r, scale).value
    return abs(math.sqrt(2 / math.pi) * val)


# --- hydrogen -----------------------------------------------------------------

def test_hydrogen_position_examples():
    assert hydrogen_radial_position(1, 0, 0.0) == pytest.approx(2.0, rel=1e-15)
    assert hydrogen_radial_position(2, 1, 2.0) == pytest.approx(math.exp(-1) / math.sqrt(6), rel=1e-14)
    assert hydrogen_radial_position(2, 1, 2.0) == pytest.approx(0.1501862, abs=1e-7)


def test_hydrogen_position_textbook_forms():
    r = np.linspace(0, 30, 61)
    assert hydrogen_radial_position(2, 0, r) == pytest.approx(
        (1 - r / 2) * np.exp(-r / 2) / math.sqrt(2), abs=1e-15)
    assert hydrogen_radial_position(3, 0, r) == pytest.approx(
        2 / (3 * math.sqrt(3)) * (1 - 2 * r / 3 + 2 * r * r / 27) * np.exp(-r / 3), abs=1e-15)
    assert hydrogen_radial_position(3, 2, r) == pytest.approx(
        4 / (81 * math.sqrt(30)) * r * r * np.exp(-r / 3), abs=1e-15)


@pytest.mark.parametrize("n,l", [(15, 5), (15, 0), (15, 14), (20, 19), (7, 3)])
def test_hydrogen_radial_normalization(n, l):
    pos = integrate_semi_infinite(lambda r: hydrogen_radial_position(n, l, r) ** 2 * r * r, 2 * n * n)
    mom = integrate_semi_infinite(lambda p: hydrogen_radial_momentum(n, l, p) ** 2 * p * p, 2 / n)
    assert pos.value == pytest.approx(1.0, abs=1e-10)
    assert mom.value == pytest.approx(1.0, abs=1e-10)


def test_hydrogen_momentum_examples():
    assert hydrogen_radial_momentum(1, 0, 0.0) == pytest.approx(4 * math.sqrt(2 / math.pi), rel=1e-14)
    assert hydrogen_radial_momentum(1, 0, 0.0) == pytest.approx(3.1915382, abs=1e-7)
    f = hydrogen_density(HydrogenState(1, 0, 0, "momentum"))
    assert f.evaluate([[0, 0, 0]])[0] == pytest.approx(8 / math.pi ** 2, rel=1e-14)
    assert f.evaluate([[0, 0, 0]])[0] == pytest.approx(0.8105695, abs=1e-7)
    p = np.linspace(0, 5, 11)
    pts = np.stack([p, 0 * p, 0 * p], axis=1)
    assert f.evaluate(pts) == pytest.approx(8 / (math.pi ** 2 * (1 + p * p) ** 4), rel=1e-13)


@pytest.mark.parametrize("n,l", [(2, 0), (2, 1), (3, 1), (4, 2)])
def test_hydrogen_momentum_is_hankel_transform(n, l):
    for p in (0.05, 0.2, 0.5, 1.3):
        want = hankel(lambda r: hydrogen_radial_position(n, l, r), l, p, 2 * n * n)
        assert abs(hydrogen_radial_momentum(n, l, p)) == pytest.approx(want, rel=1e-8, abs=1e-10)


def test_hydrogen_density_examples():
    f = hydrogen_density(HydrogenState(1, 0, 0))
    assert f.evaluate([[0.0, 0.0, 0.0]])[0] == pytest.approx(1 / math.pi, rel=1e-14)
    assert f.sup_norm() == pytest.approx(1 / math.pi, rel=1e-14)
    assert f.length_scale == 2.0
    assert hydrogen_density(HydrogenState(15, 3, 1, "momentum")).length_scale == pytest.approx(2 / 15)


def test_hydrogen_state_validation():
    for bad in [(0, 0, 0), (2, 2, 0), (3, 1, 2)]:
        with pytest.raises(ValueError):
            HydrogenState(*bad)


@pytest.mark.parametrize("space", ["position", "momentum"])
def test_hydrogen_density_normalization(space):
    for n, l, m in [(1, 0, 0), (2, 1, 0), (2, 1, 1), (15, 5, 3), (15, 10, 10), (15, 14, 7)]:
        f = hydrogen_density(HydrogenState(n, l, m, space), validate=True)
        assert f.mass() == pytest.approx(1.0, abs=1e-9)


def test_full_evaluation_matches_separable_path():
    # slow route: tensor Gauss grid over (r, theta) using only Density.evaluate
    f = hydrogen_density(HydrogenState(3, 2, 1))
    xr, wr = np.polynomial.legendre.leggauss(300)
    xt, wt = np.polynomial.legendre.leggauss(120)
    R = 80.0
    r = 0.5 * R * (xr + 1)
    t = 0.5 * math.pi * (xt + 1)
    rr, tt = np.meshgrid(r, t, indexing="ij")
    pts = np.stack([rr * np.sin(tt), 0 * rr, rr * np.cos(tt)], axis=-1).reshape(-1, 3)
    vals = f.evaluate(pts).reshape(rr.shape)
    jac = 2 * math.pi * rr ** 2 * np.sin(tt) * np.outer(wr, wt) * (0.5 * R) * (0.5 * math.pi)
    for alpha in (1.0, 2.0, 3.0):
        slow = float(np.sum(vals ** alpha * jac))
        fast = f.power_integral(alpha)[0]
        assert slow == pytest.approx(fast, rel=1e-9)


# --- oscillator --------------------------------------------------------------

def test_oscillator_position_examples():
    assert oscillator_radial_position(0, 0, 1.0, 0.0) == pytest.approx(2 / math.pi ** 0.25, rel=1e-14)
    assert oscillator_radial_position(0, 0, 1.0, 0.0) == pytest.approx(1.5022511, abs=1e-7)
    assert oscillator_radial_position(2, 3, 1.0, 0.0) == 0.0
    norm = integrate_semi_infinite(lambda r: oscillator_radial_position(0, 15, 1.0, r) ** 2 * r * r, 6.0)
    assert norm.value == pytest.approx(1.0, abs=1e-10)


def test_oscillator_momentum_examples():
    p = np.linspace(0, 6, 25)
    for lam in (0.5, 1.0, 4.0):
        assert oscillator_radial_momentum(1, 2, lam, p) == pytest.approx(
            oscillator_radial_position(1, 2, 1 / lam, p), rel=1e-14, abs=0)
    assert oscillator_radial_momentum(0, 0, 1.0, 0.0) == pytest.approx(2 / math.pi ** 0.25, rel=1e-14)
    norm = integrate_semi_infinite(lambda q: oscillator_radial_momentum(1, 13, 1.0, q) ** 2 * q * q, 6.0)
    assert norm.value == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("n,l", [(0, 0), (1, 0), (1, 1), (2, 2)])
def test_oscillator_momentum_is_hankel_transform(n, l):
    lam = 1.7
    for p in (0.1, 0.8, 2.0):
        want = hankel(lambda r: oscillator_radial_position(n, l, lam, r), l, p, 3.0)
        assert abs(oscillator_radial_momentum(n, l, lam, p)) == pytest.approx(want, rel=1e-8, abs=1e-10)


def test_oscillator_density_examples():
    f = oscillator_density(OscillatorState(0, 0, 0, 1.0))
    assert f.evaluate([[0, 0, 0]])[0] == pytest.approx(math.pi ** -1.5, rel=1e-14)
    assert f.evaluate([[0, 0, 0]])[0] == pytest.approx(0.1795871, abs=1e-7)
    assert f.length_scale == pytest.approx(math.sqrt(3.0))
    for lam in (0.5, 1.0, 4.0):
        for space in ("position", "momentum"):
            g = oscillator_density(OscillatorState(0, 0, 0, lam, space))
            # Gaussian closed form alpha^(3 / (2 (alpha - 1))) at alpha = 2
            assert complexity(g, 2, "inf").value == pytest.approx(2 ** 1.5, rel=1e-10)
            assert complexity(g, 2, "inf").value == pytest.approx(2.8284271, abs=1e-7)


def test_oscillator_gaussian_closed_form_other_orders():
    g = oscillator_density(OscillatorState(0, 0, 0, 2.3))
    for alpha in (0.5, 3.0, 5.0):
        assert complexity(g, alpha, "inf").value == pytest.approx(
            alpha ** (3 / (2 * (alpha - 1))), rel=1e-10)


@pytest.mark.parametrize("space", ["position", "momentum"])
def test_oscillator_density_normalization(space):
    for n, l, m in [(0, 0, 0), (1, 13, 4), (0, 15, 15), (7, 1, 1), (4, 7, 2)]:
        for lam in (0.5, 4.0):
            f = oscillator_density(OscillatorState(n, l, m, lam, space), validate=True)
            assert f.mass() == pytest.approx(1.0, abs=1e-9)


def test_oscillator_shell():
    assert oscillator_shell(0) == [(0, 0)]
    assert oscillator_shell(15) == [(0, 15), (1, 13), (2, 11), (3, 9), (4, 7), (5, 5), (6, 3), (7, 1)]
    assert oscillator_shell(2) == [(0, 2), (1, 0)]
    # brute-force enumeration oracle
    for e in range(12):
        brute = sorted(((n, l) for n in range(e + 1) for l in range(e + 1) if 2 * n + l == e),
                       key=lambda nl: -nl[1])
        assert oscillator_shell(e) == brute


def test_oscillator_space_and_strength_invariance():
    for n, l, m in [(1, 2, 1), (2, 3, 3), (3, 9, 4)]:
        ref = oscillator_density(OscillatorState(n, l, m, 1.0, "position"))
        for alpha, beta in [(0.5, 2.0), (2.0, 0.5), (0.5, "inf"), (2.0, "inf")]:
            c = complexity(ref, alpha, beta).value
            mom = oscillator_density(OscillatorState(n, l, m, 1.0, "momentum"))
            assert complexity(mom, alpha, beta).value == pytest.approx(c, rel=1e-7)
            for lam in (0.5, 4.0):
                other = oscillator_density(OscillatorState(n, l, m, lam, "position"))
                assert complexity(other, alpha, beta).value == pytest.approx(c, rel=1e-8)


# --- square well -------------------------------------------------------------

def test_square_well_density_examples():
    f = square_well_density(SquareWellState(1))
    assert f.sup_norm() == pytest.approx(2.0, rel=1e-15)
    assert f.mass() == pytest.approx(1.0, abs=1e-14)
    assert square_well_density(SquareWellState(2)).evaluate([0.5])[0] == pytest.approx(0.0, abs=1e-30)
    g = square_well_density(SquareWellState(3, L=2.5))
    assert g.mass() == pytest.approx(1.0, abs=1e-14)
    assert g.sup_norm() == pytest.approx(2 / 2.5, rel=1e-15)


def test_wallis_closed_form():
    assert wallis_integral(2.0) == pytest.approx(3 * math.pi / 8, rel=1e-15)
    assert wallis_integral(0.0) == pytest.approx(math.pi, rel=1e-15)
    for alpha in (0.5, 1.5, 2.0, 3.0):
        q = integrate(lambda t: np.sin(t) ** (2 * alpha), 0.0, math.pi).value
        assert q == pytest.approx(wallis_integral(alpha), rel=1e-10)


def _g_closed(alpha):
    return (2 ** alpha / math.pi * wallis_integral(alpha)) ** (1 / (1 - alpha))


def test_square_well_g_examples():
    assert square_well_g(0) == 1.0
    assert square_well_g(2) == pytest.approx(2 / 3, rel=1e-12)
    assert 2 * square_well_g("inf") == 1.0
    for alpha in (0.25, 0.5, 1.5, 3.0, 8.0, 16.0):
        assert square_well_g(alpha) == pytest.approx(_g_closed(alpha), rel=1e-10)
    # Shannon limit: continuity from both sides
    s = square_well_g(1)
    assert _g_closed(1 - 1e-5) == pytest.approx(s, rel=1e-4)
    assert _g_closed(1 + 1e-5) == pytest.approx(s, rel=1e-4)


def test_square_well_complexity_monotone_to_one():
    vals = [2 * square_well_g(a) for a in (0, 0.5, 1, 2, 4, 8, 16, 64, 256)]
    assert vals[0] == 2.0
    assert all(v2 < v1 for v1, v2 in zip(vals, vals[1:]))
    assert 1.0 < vals[-1] < 1.1


def test_square_well_pipeline_matches_g_for_every_k():
    for alpha in (0.5, 1.0, 2.0, 3.0):
        ref = 2 * square_well_g(alpha)
        for k in range(1, 6):
            c = complexity(square_well_density(SquareWellState(k)), alpha, "inf").value
            assert c == pytest.approx(ref, abs=1e-9)


def test_box_complexity():
    assert box_complexity(2, 1) == pytest.approx(4 / 3, rel=1e-12)
    assert box_complexity(2, 3) == pytest.approx((4 / 3) ** 3, rel=1e-12)
    assert box_complexity(2, 3) == pytest.approx(2.3703704, abs=1e-7)
    for d in (1, 2, 5):
        assert box_complexity(0, d) == 2.0 ** d


def test_square_well_rejects_evaluable_multi_d():
    with pytest.raises(ValueError):
        square_well_density(SquareWellState(1, d=2))
    with pytest.raises(ValueError):
        SquareWellState(0)
