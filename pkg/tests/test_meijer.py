import math

import numpy as np
import pytest

from frechet_laplace.distributions import RationalShape, Shape
from frechet_laplace.errors import ContourError, DomainError
from frechet_laplace.laplace import laplace_frechet_oracle
from frechet_laplace.meijer import (MeijerSpec, build_laplace_closed_form,
                                    meijer_g_m0, meijer_g_m0_derivative)
from frechet_laplace.mellin import ContourConfig

TWO_K1_OF_2 = 0.27973176363304486  # 2 K1(2), from the series oracle

ALL_SHAPES = [RationalShape(l, k) for l in range(1, 5) for k in range(1, 5)]


class TestMeijerGm0:
    def test_exponential_identity_grid(self):
        spec = MeijerSpec([0.0])
        for z in np.linspace(1e-2, 20.0, 50):
            res = meijer_g_m0(spec, float(z))
            assert abs(res.value - math.exp(-z)) <= 1e-10 * math.exp(-z)

    def test_bessel_case(self):
        res = meijer_g_m0(MeijerSpec([1.0, 0.0]), 1.0)
        assert abs(res.value - TWO_K1_OF_2) <= 1e-9 * TWO_K1_OF_2

    def test_half_shape_case_against_oracle(self):
        # sqrt(pi)^-1 G^{3,0}_{0,3}(1/4 | 0, 1/2, 1) is the shape-1/2 transform at p=1
        res = meijer_g_m0(MeijerSpec([0.0, 0.5, 1.0]), 0.25)
        value = res.value / math.sqrt(math.pi)
        oracle = laplace_frechet_oracle(Shape(0.5), 1.0)
        assert abs(value - oracle.value) <= 1e-8 * abs(oracle.value)

    def test_contour_shift_invariance(self):
        spec = MeijerSpec([0.5, 1.0, 0.0])
        values = [meijer_g_m0(spec, 0.25, ContourConfig(abscissa=c)).value
                  for c in (0.3, 0.5, 1.0, 1.5)]
        for a in values:
            for b in values:
                assert abs(a - b) <= 1e-9 * abs(a)

    def test_underflow_returns_converged_zero(self):
        # on the saddle contour the whole integrand underflows for huge z
        res = meijer_g_m0(MeijerSpec([0.0]), 5e4)
        assert res.value == 0.0
        assert res.converged

    def test_abscissa_validation(self):
        with pytest.raises(ContourError):
            meijer_g_m0(MeijerSpec([-0.5, 0.0, 0.0]), 1.0, ContourConfig(abscissa=0.4))

    def test_argument_domain(self):
        with pytest.raises(DomainError):
            meijer_g_m0(MeijerSpec([0.0]), 0.0)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            MeijerSpec([])
        with pytest.raises(DomainError):
            MeijerSpec([math.inf])


class TestBuildLaplaceClosedForm:
    def test_unit_shape(self):
        form = build_laplace_closed_form(RationalShape(1, 1))
        assert form.prefactor == pytest.approx(1.0, rel=1e-15)
        assert form.spec.b == (1.0, 0.0)
        assert form.argument(3.7) == pytest.approx(3.7, rel=1e-15)

    def test_one_third_shape(self):
        form = build_laplace_closed_form(RationalShape(1, 3))
        assert form.prefactor == pytest.approx(math.sqrt(3.0) / (2.0 * math.pi), rel=1e-15)
        assert form.spec.b == pytest.approx([1.0 / 3.0, 2.0 / 3.0, 1.0, 0.0])
        assert form.argument(2.0) == pytest.approx(2.0 / 27.0, rel=1e-15)

    def test_two_thirds_shape(self):
        form = build_laplace_closed_form(RationalShape(2, 3))
        assert form.prefactor == pytest.approx(
            math.sqrt(12.0) / (4.0 * math.pi ** 1.5), rel=1e-15)
        assert form.spec.b == pytest.approx([1.0 / 3.0, 2.0 / 3.0, 1.0, 0.0, 0.5])
        assert form.argument(2.0) == pytest.approx(4.0 / 108.0, rel=1e-15)

    def test_parameter_count(self):
        for shape in ALL_SHAPES:
            form = build_laplace_closed_form(shape)
            assert form.spec.m == shape.k + shape.l

    def test_argument_domain(self):
        form = build_laplace_closed_form(RationalShape(1, 2))
        with pytest.raises(DomainError):
            form.argument(0.0)


class TestDerivative:
    def test_exponential_derivative(self):
        res = meijer_g_m0_derivative(MeijerSpec([0.0]), 1.0)
        assert abs(res.value + math.exp(-1.0)) <= 1e-10 * math.exp(-1.0)

    def test_matches_finite_difference(self):
        spec = MeijerSpec([0.0, 0.5, 1.0])
        z, h = 0.25, 1e-5
        exact = meijer_g_m0_derivative(spec, z).value
        fd = (meijer_g_m0(spec, z + h).value - meijer_g_m0(spec, z - h).value) / (2 * h)
        assert abs(exact - fd) <= 1e-7 * abs(exact)

    def test_nonpositive_for_transform_specs(self):
        # Laplace transforms of densities are completely monotone
        seen = set()
        for shape in ALL_SHAPES:
            form = build_laplace_closed_form(shape)
            if form.spec.b in seen:
                continue
            seen.add(form.spec.b)
            for z in np.geomspace(1e-3, 10.0, 12):
                assert meijer_g_m0_derivative(form.spec, float(z)).value <= 1e-12


class TestClosedFormFamily:
    @pytest.mark.parametrize("shape", ALL_SHAPES, ids=lambda s: f"l{s.l}k{s.k}")
    def test_range_and_monotone(self, shape):
        form = build_laplace_closed_form(shape)
        grid = np.geomspace(0.05, 20.0, 40)
        vals = [form.prefactor * meijer_g_m0(form.spec, form.argument(float(p))).value
                for p in grid]
        assert all(0.0 < v <= 1.0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:]))
