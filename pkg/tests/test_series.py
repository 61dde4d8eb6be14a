import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_shp import (
    B1TooLarge,
    Convention,
    DegenerateDenominator,
    HarmonicSeries,
    PointOutsideDisk,
    SignConventionViolation,
    analytic_derivatives,
    convolve,
    evaluate,
    jacobian,
    make_series,
    neighborhood_distance,
    starlike_functional,
)
from conftest import direct_eval, random_disk_point, random_series

THP = Convention.NEGATIVE_THP


class TestMakeSeries:
    def test_empty_tails_is_identity(self):
        f = make_series()
        assert f.degree == 1
        assert evaluate(f, 0.3 + 0.4j) == 0.3 + 0.4j

    def test_single_thp_term(self):
        f = make_series([-0.25], [], THP)
        assert f.degree == 2
        assert f.a[0] == 1 and f.a[1] == -0.25

    def test_positive_magnitudes_are_negated(self):
        f = make_series([0.25], [0.1], THP)
        assert f.a[1] == -0.25 and f.b[0] == -0.1

    def test_b1_boundary_rejected(self):
        with pytest.raises(B1TooLarge):
            make_series([], [1.0])

    def test_complex_thp_rejected(self):
        with pytest.raises(SignConventionViolation):
            make_series([0.1j], [], THP)

    def test_direct_construction_checks_signs(self):
        with pytest.raises(SignConventionViolation):
            HarmonicSeries([1, 0.2], [0, 0], THP)
        with pytest.raises(ValueError):
            HarmonicSeries([0.5, 0.2], [0, 0])

    def test_immutable(self):
        f = make_series([0.1], [0.2])
        with pytest.raises(ValueError):
            f.a[1] = 3


class TestEvaluate:
    def test_polynomial(self):
        assert evaluate(make_series([-0.25]), 0.5) == pytest.approx(0.4375, abs=1e-15)

    def test_coanalytic_linear(self):
        # 0.2i + conj(0.5 * 0.2i)
        assert evaluate(make_series([], [0.5]), 0.2j) == pytest.approx(0.1j, abs=1e-15)

    def test_rejects_outside_disk(self):
        with pytest.raises(PointOutsideDisk):
            evaluate(make_series(), 1.0)
        with pytest.raises(PointOutsideDisk):
            evaluate(make_series(), np.array([0.1, 0.6 + 0.8j]))

    def test_matches_power_sum_oracle(self, rng):
        for _ in range(200):
            f = random_series(rng, int(rng.integers(1, 20)))
            z = random_disk_point(rng)
            assert abs(evaluate(f, z) - direct_eval(f, z)) < 1e-12

    def test_vectorised_matches_scalar(self, rng):
        f = random_series(rng, 9)
        zs = np.array([random_disk_point(rng) for _ in range(20)])
        np.testing.assert_allclose(evaluate(f, zs), [evaluate(f, z) for z in zs], atol=1e-15)

    def test_linearity(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 16))
            f, g = random_series(rng, n, scale=0.3), random_series(rng, n, scale=0.3)
            s = HarmonicSeries(np.concatenate([[1], f.a[1:] + g.a[1:]]), f.b + g.b)
            z = random_disk_point(rng)
            assert abs(evaluate(s, z) - (evaluate(f, z) + evaluate(g, z) - z)) < 1e-12


class TestDerivatives:
    def test_identity(self):
        assert analytic_derivatives(make_series(), 0.3j) == (1, 0)

    def test_quadratic(self):
        dh, dg = analytic_derivatives(make_series([-0.25]), 0.8)
        assert dh == pytest.approx(0.6, abs=1e-15) and dg == 0

    def test_linear_coanalytic(self):
        assert analytic_derivatives(make_series([], [0.5]), 0.4 - 0.1j)[1] == 0.5

    def test_central_difference(self, rng):
        step = 1e-5
        for _ in range(100):
            f = random_series(rng, int(rng.integers(2, 16)))
            z = random_disk_point(rng, 0.9)
            h_only = HarmonicSeries(f.a, np.zeros_like(f.b))
            g_only = HarmonicSeries(np.eye(1, f.degree)[0], f.b)
            dh, dg = analytic_derivatives(f, z)
            fd_h = (evaluate(h_only, z + step) - evaluate(h_only, z - step)) / (2 * step)
            # conj(g) is antiholomorphic: conj(d/dz g) = d/dx conj(g)
            fd_g = np.conj((evaluate(g_only, z + step) - evaluate(g_only, z - step)) / (2 * step) - 1)
            assert abs(fd_h - dh) <= 1e-6 * max(1, abs(dh))
            assert abs(fd_g - dg) <= 1e-6 * max(1, abs(dg))


class TestJacobian:
    def test_identity(self):
        assert jacobian(make_series(), 0.5j) == 1

    def test_constant_b1(self):
        f = make_series([], [0.5])
        for z in (0, 0.3, -0.7j, 0.2 + 0.5j):
            assert jacobian(f, z) == pytest.approx(0.75, abs=1e-15)

    def test_quadratic(self):
        assert jacobian(make_series([-0.25]), 0.8) == pytest.approx(0.36, abs=1e-14)

    def test_matches_real_differential(self, rng):
        step = 1e-6
        for _ in range(100):
            f = random_series(rng, int(rng.integers(1, 12)))
            z = random_disk_point(rng, 0.9)
            fx = (evaluate(f, z + step) - evaluate(f, z - step)) / (2 * step)
            fy = (evaluate(f, z + 1j * step) - evaluate(f, z - 1j * step)) / (2 * step)
            det = fx.real * fy.imag - fx.imag * fy.real
            assert abs(det - jacobian(f, z)) < 1e-5


class TestStarlikeFunctional:
    def test_identity(self):
        assert starlike_functional(make_series(), 0.4 - 0.3j) == pytest.approx(1)

    def test_quadratic(self):
        expected = (0.5 - 0.125) / (0.5 - 0.0625)
        assert starlike_functional(make_series([-0.25]), 0.5) == pytest.approx(expected, abs=1e-15)

    def test_coanalytic(self):
        assert starlike_functional(make_series([], [0.5]), 0.5) == pytest.approx(1 / 3, abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateDenominator):
            starlike_functional(make_series(), 0)

    def test_is_angular_derivative_of_argument(self, rng):
        # d/dtheta arg f(r e^{i theta}) by finite differences
        step = 1e-6
        for _ in range(50):
            f = random_series(rng, 6, scale=0.15)
            r, t = 0.3 + 0.6 * rng.uniform(), 2 * np.pi * rng.uniform()
            p = evaluate(f, r * np.exp(1j * (t + step)))
            m = evaluate(f, r * np.exp(1j * (t - step)))
            fd = np.angle(p / m) / (2 * step)
            assert abs(fd - starlike_functional(f, r * np.exp(1j * t))) < 1e-5


class TestConvolve:
    def test_identity_kernel_annihilates_tails(self):
        f = make_series([0.2, 0.3], [0.1, 0.4], THP)
        assert convolve(f, make_series(convention=THP)) == make_series(convention=THP)

    def test_analytic(self):
        fg = convolve(make_series([0.2], [], THP), make_series([0.3], [], THP))
        assert fg.a[1] == pytest.approx(-0.06, abs=1e-17)

    def test_coanalytic(self):
        fg = convolve(make_series([], [-0.5], THP), make_series([], [-0.4], THP))
        assert fg.b[0] == pytest.approx(-0.2, abs=1e-17)

    def test_degree_is_min(self):
        fg = convolve(make_series([0.1, 0.1, 0.1], [], THP), make_series([0.5], [], THP))
        assert fg.degree == 2

    def test_requires_thp(self):
        with pytest.raises(SignConventionViolation):
            convolve(make_series([0.1]), make_series([0.1], [], THP))

    def test_commutative_associative(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 12))
            f, g, k = (random_series(rng, n, THP) for _ in range(3))
            for x, y in ((convolve(f, g), convolve(g, f)),
                         (convolve(convolve(f, g), k), convolve(f, convolve(g, k)))):
                np.testing.assert_allclose(x.a, y.a, atol=1e-15)
                np.testing.assert_allclose(x.b, y.b, atol=1e-15)


class TestNeighborhoodDistance:
    def test_self(self):
        f = make_series([0.1, 0.2], [0.3], THP)
        assert neighborhood_distance(f, f) == 0

    def test_mixed(self):
        f = make_series([0.1], [], THP)
        G = make_series([0.05], [0.02], THP)
        assert neighborhood_distance(f, G) == pytest.approx(0.12, abs=1e-15)

    def test_padding(self):
        f = make_series(convention=THP)
        G = make_series([0, 0.1], [], THP)
        assert neighborhood_distance(f, G) == pytest.approx(0.3, abs=1e-15)

    def test_requires_thp(self):
        with pytest.raises(SignConventionViolation):
            neighborhood_distance(make_series(), make_series(convention=THP))


coef = st.floats(0, 0.3, allow_nan=False)


@st.composite
def thp_series(draw, n):
    a = draw(st.lists(coef, min_size=n - 1, max_size=n - 1))
    b = draw(st.lists(coef, min_size=n, max_size=n))
    return make_series(a, b, THP)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(thp_series(n), thp_series(n), thp_series(n))))
def test_distance_is_a_metric(triple):
    f, g, k = triple
    d = neighborhood_distance
    assert d(f, g) == d(g, f)
    assert d(f, k) <= d(f, g) + d(g, k) + 1e-12
    assert (d(f, g) == 0) == (f == g)
