"""Acceptance suite: every criterion at its stated tolerance, one printed
pass/fail line per criterion (visible with pytest -s; each criterion is also
its own test). The grid data shared between criteria is computed once per
session and timed.
"""

import math
import time

import numpy as np
import pytest

from frechet_laplace.cli import main as cli_main
from frechet_laplace.distributions import (LevyIndex, RationalShape, Shape,
                                           frechet_moment, frechet_pdf,
                                           levy_moment, levy_pdf_half)
from frechet_laplace.errors import DivergentMoment
from frechet_laplace.ftransform import (TransformTarget,
                                        frechet_transform_frechet_half,
                                        frechet_transform_quadrature)
from frechet_laplace.laplace import (LaplaceQuery, Method, laplace_frechet,
                                     laplace_frechet_bessel,
                                     laplace_frechet_oracle,
                                     laplace_symmetry_check)
from frechet_laplace.meijer import build_laplace_closed_form, meijer_g_m0
from frechet_laplace.mellin import ContourConfig
from frechet_laplace.numerics import integrate_semi_infinite, log_gamma

PAIRS = [(l, k) for l in range(1, 5) for k in range(1, 5)]
P_GRID = np.geomspace(0.01, 20.0, 100)


def report(criterion, ok, detail):
    print(f"acceptance criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    return ok


@pytest.fixture(scope="session")
def laplace_grid():
    """Meijer-path and oracle values for every (l, k) pair over P_GRID."""
    start = time.monotonic()
    data = {}
    for (l, k) in PAIRS:
        shape = RationalShape(l, k)
        meijer = np.array([
            laplace_frechet(LaplaceQuery(shape, float(p), Method.MEIJER_G)).value
            for p in P_GRID])
        oracle = np.array([
            laplace_frechet_oracle(Shape(l / k), float(p)).value for p in P_GRID])
        data[(l, k)] = (meijer, oracle)
    elapsed = time.monotonic() - start
    return data, elapsed


def test_criterion_1_main_result_equivalence(laplace_grid):
    data, elapsed = laplace_grid
    worst = 0.0
    for (l, k), (meijer, oracle) in data.items():
        dev = np.abs(meijer - oracle) / np.maximum(1.0, np.abs(oracle))
        worst = max(worst, float(dev.max()))
    ok = worst <= 1e-8 and elapsed <= 120.0
    assert report(1, ok, f"worst dev {worst:.2e}, grid time {elapsed:.1f}s"), \
        f"worst deviation {worst:.3e}, elapsed {elapsed:.1f}s"


def test_criterion_2_bessel_special_case(laplace_grid):
    data, _ = laplace_grid
    meijer, _ = data[(1, 1)]
    bessel = np.array([laplace_frechet_bessel(float(p)) for p in P_GRID])
    worst = float(np.max(np.abs(meijer - bessel) / np.abs(bessel)))
    assert report(2, worst <= 1e-9, f"worst rel dev {worst:.2e}"), worst


def test_criterion_3_symmetry_law():
    worst = 0.0
    for (l, k) in PAIRS:
        for p in (0.5, 1.0, 2.0, 5.0):
            lhs, rhs = laplace_symmetry_check(RationalShape(l, k), p)
            worst = max(worst, abs(lhs - rhs) / abs(lhs))
    assert report(3, worst <= 1e-9, f"worst rel dev {worst:.2e}"), worst


@pytest.mark.parametrize("l,k", PAIRS, ids=lambda v: str(v))
def test_criterion_4_normalization_limit_meijer(l, k):
    value = laplace_frechet(LaplaceQuery(RationalShape(l, k), 1e-4)).value
    dev = abs(value - 1.0)
    ok = dev <= 5e-2
    report(f"4a (l={l}, k={k})", ok, f"|L(1e-4) - 1| = {dev:.3e}")
    assert ok, f"L(1e-4) = {value:.6f} for shape {l}/{k}: |dev| {dev:.3e} > 5e-2"


@pytest.mark.parametrize("l,k", PAIRS, ids=lambda v: str(v))
def test_criterion_4_normalization_limit_quadrature(l, k):
    value = laplace_frechet_oracle(Shape(l / k), 1e-6).value
    dev = abs(value - 1.0)
    ok = dev <= 1e-2
    report(f"4b (l={l}, k={k})", ok, f"|L(1e-6) - 1| = {dev:.3e}")
    assert ok, f"L(1e-6) = {value:.6f} for shape {l}/{k}: |dev| {dev:.3e} > 1e-2"


def test_criterion_5_moments():
    rng = np.random.default_rng(314159)
    worst = 0.0
    for _ in range(10):
        g = rng.uniform(0.5, 4.0)
        mu = rng.uniform(-2.0, g - 0.5)
        closed = frechet_moment(Shape(g), mu)
        quad = integrate_semi_infinite(
            lambda x: x ** mu * frechet_pdf(Shape(g), x) if x > 0 else 0.0, 0.0)
        worst = max(worst, abs(closed - quad.value) / abs(closed))
    for _ in range(5):
        mu = rng.uniform(-2.0, 0.25)
        closed = levy_moment(LevyIndex(0.5), mu)
        quad = integrate_semi_infinite(
            lambda x: x ** mu * levy_pdf_half(x) if x > 0 else 0.0, 0.0)
        worst = max(worst, abs(closed - quad.value) / abs(closed))
    divergence_ok = True
    try:
        frechet_moment(Shape(1.5), 1.5)
        divergence_ok = False
    except DivergentMoment:
        pass
    try:
        levy_moment(LevyIndex(0.5), 0.5)
        divergence_ok = False
    except DivergentMoment:
        pass
    ok = worst <= 1e-8 and divergence_ok
    assert report(5, ok,
                  f"worst rel dev {worst:.2e}, divergence raised: {divergence_ok}"), worst


def test_criterion_6_levy_transform():
    target = TransformTarget(f=levy_pdf_half)
    worst = 0.0
    for g in (0.5, 1.0, 2.0):
        for x in (0.3, 1.0, 3.0):
            quad = frechet_transform_quadrature(target, Shape(g), x).value
            closed = frechet_pdf(Shape(g / 2.0), x)
            worst = max(worst, abs(quad - closed))
    assert report(6, worst <= 1e-8, f"worst |dev| {worst:.2e}"), worst


def test_criterion_7_half_closed_form():
    target = TransformTarget(f=lambda t: frechet_pdf(Shape(0.5), t))
    worst = 0.0
    for g in (1.0 / 3.0, 1.0):
        for x in (0.5, 1.0, 2.0):
            closed = frechet_transform_frechet_half(Shape(g), x).value
            quad = frechet_transform_quadrature(target, Shape(g), x).value
            worst = max(worst, abs(closed - quad))
    assert report(7, worst <= 1e-6, f"worst |dev| {worst:.2e}"), worst


def test_criterion_8_levy_laplace_pin():
    worst = 0.0
    for p in (0.5, 1.0, 4.0):
        res = integrate_semi_infinite(
            lambda x: math.exp(-p * x) * levy_pdf_half(x) if x > 0 else 0.0, 0.0)
        worst = max(worst, abs(res.value - math.exp(-math.sqrt(p))))
    assert report(8, worst <= 1e-9, f"worst |dev| {worst:.2e}"), worst


def test_criterion_9_multiplication_identity():
    rng = np.random.default_rng(20240517)
    z = rng.uniform(0.1, 5.0, 100) + 1j * rng.uniform(-5.0, 5.0, 100)
    worst = 0.0
    for n in (2, 3, 4):
        lhs = log_gamma(n * z)
        rhs = ((1.0 - n) / 2.0 * math.log(2.0 * math.pi)
               + (n * z - 0.5) * math.log(n)
               + sum(log_gamma(z + j / n) for j in range(n)))
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / np.abs(lhs))))
    assert report(9, worst <= 1e-12, f"worst rel dev {worst:.2e}"), worst


def test_criterion_10_contour_shift_invariance():
    form = build_laplace_closed_form(RationalShape(2, 3))
    z = form.argument(1.0)
    values = [form.prefactor * meijer_g_m0(form.spec, z, ContourConfig(abscissa=c)).value
              for c in (0.3, 0.5, 1.0, 1.5)]
    worst = 0.0
    for a in values:
        for b in values:
            worst = max(worst, abs(a - b) / abs(a))
    assert report(10, worst <= 1e-9, f"worst pairwise rel dev {worst:.2e}"), worst


def test_criterion_11_figure_emission(tmp_path):
    for fig in ("fig1", "fig2", "fig3", "fig4"):
        code = cli_main(["figure", "--id", fig, "--out",
                         str(tmp_path / f"{fig}.csv"), "--points", "200"])
        assert code == 0, f"{fig} emission failed"
    rows = np.array([[float(v) for v in line.split(",")]
                     for line in (tmp_path / "fig4.csv").read_text()
                     .strip().split("\n")[1:]])
    sup_gamma_1 = float(np.max(np.abs(rows[:, 1] - rows[:, 2])))
    sup_gamma_third = float(np.max(np.abs(rows[:, 3] - rows[:, 4])))
    ok = sup_gamma_third < sup_gamma_1
    assert report(11, ok,
                  f"sup-norm gamma=1/3: {sup_gamma_third:.3f} < gamma=1: {sup_gamma_1:.3f}"), \
        (sup_gamma_third, sup_gamma_1)


def test_criterion_12_shape_properties(laplace_grid):
    data, _ = laplace_grid
    # Frechet pdf unimodality
    unimodal = True
    for g in (1.0 / 3.0, 0.5, 1.0, 2.0, 4.0):
        xs = np.geomspace(1e-3, 1e3, 2000)
        vals = np.array([frechet_pdf(Shape(g), float(x)) for x in xs])
        signs = np.sign(np.diff(vals))
        signs = signs[signs != 0]
        unimodal = unimodal and np.count_nonzero(np.diff(signs) != 0) == 1
    # every transform strictly decreasing on the log grid
    decreasing = all(np.all(np.diff(meijer) < 0.0) for meijer, _ in data.values())
    # and convex: second divided differences nonnegative
    convex = True
    dp = np.diff(P_GRID)
    for meijer, _ in data.values():
        slopes = np.diff(meijer) / dp
        convex = convex and np.all(np.diff(slopes) >= -1e-10)
    ok = unimodal and decreasing and convex
    assert report(12, ok,
                  f"unimodal: {unimodal}, decreasing: {decreasing}, convex: {convex}")
