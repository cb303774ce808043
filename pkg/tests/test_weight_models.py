import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bszego.errors import DomainError, ParityError
from bszego.weight_models import (
    Family,
    MeasureFactor,
    WeightSpec,
    build_szego_factor,
    expected_rho_degree,
    rho_eval,
    squared_factor,
    xi_eta_eval,
)


def brute_force_fejer_riesz(rho_of_t, a, degree):
    """Independent factorization oracle: interpolate rho(cos theta) as a cosine
    polynomial, form the Laurent symbol z^l rho((z + 1/z) -> t), take the roots
    of that 2l-degree polynomial, and keep one of each reciprocal pair (the
    ones outside the closed unit disk, pairing boundary roots evenly)."""
    l = degree
    N = 4 * (l + 1)
    theta = 2 * np.pi * np.arange(N) / N
    t = 0.5 * ((1 - a) + (1 + a) * np.cos(theta))
    g = rho_of_t(np.clip(t, -a, 1.0))
    c = np.fft.fft(g) / N  # cosine coefficients: c[j] = r_j / 2 for j > 0
    r = np.concatenate([c[l:0:-1], [c[0]], c[1 : l + 1]]).real  # z^-l .. z^l
    # symbol P(z) = z^l * sum r_j z^j, a degree-2l polynomial
    P = np.array(r, dtype=float)
    roots = np.roots(P[::-1])
    roots = sorted(roots, key=lambda z: -abs(z))
    outside = roots[:l]
    h = np.polynomial.polynomial.polyfromroots(outside)
    # normalize: |h(1)|^2 = rho(t(theta=0)) and h(0) > 0
    scale = math.sqrt(float(rho_of_t(np.asarray([1.0]))[0])) / abs(np.polynomial.polynomial.polyval(1.0, h))
    h = h * scale
    if h[0].real < 0:
        h = -h
    return h.real


@pytest.mark.parametrize(
    "n,m,a,t,expected",
    [
        (1, 1, 1.0, 0.3, 2.0),
        (1, 1, 1.0, -0.9, 2.0),
    ],
)
def test_rho_constant_case(n, m, a, t, expected):
    spec = WeightSpec(n, m, a)
    assert rho_eval(spec, t) == pytest.approx(expected, abs=1e-14)


def test_rho_hand_expansion():
    spec = WeightSpec(1, 3, 1.0)
    for t in (-0.8, -0.3, 0.0, 0.4, 1.0):
        expected = 2 + 16 * t + 48 * t**2 + 32 * t**3
        assert rho_eval(spec, t) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_rho_squared_family():
    spec = WeightSpec(1, 1, 1.0, Family.SquaredCosPlusCosh)
    assert rho_eval(spec, 0.3) == pytest.approx(4.0, abs=1e-13)


def test_rho_domain_error():
    spec = WeightSpec(2, 3, 1.0)
    with pytest.raises(DomainError):
        rho_eval(spec, 1.5)
    with pytest.raises(DomainError):
        rho_eval(spec, -1.1)


def test_rho_cosh_minus_cos_series_guard():
    spec = WeightSpec(3, 2, 1.0, Family.CoshMinusCosOverT)
    # limit value at 0 is 2(m^2/a + n^2) = 2(4 + 9) = 26
    assert rho_eval(spec, 0.0) == pytest.approx(26.0, abs=1e-10)
    # continuity across the guard boundary
    left = rho_eval(spec, 0.9999999e-6)
    right = rho_eval(spec, 1.0000001e-6)
    assert abs(left - right) < 1e-9 * 26


def test_rho_positivity_all_families():
    cases = [
        WeightSpec(3, 5, 0.5),
        WeightSpec(2, 4, 2.0),
        WeightSpec(2, 3, 1.0, Family.SquaredCosPlusCosh),
        WeightSpec(3, 2, 0.5, Family.CoshMinusCosOverT),
        WeightSpec(2, 5, 2.0, Family.CoshMinusCosOverT),
        WeightSpec(2, 1, 1.0, Family.ProductCosPlusCosh, m_prime=3),
        WeightSpec(3, 2, 2.0, Family.ProductCoshMinusCos, m_prime=2),
        WeightSpec(2, 2, 0.5, Family.MixedPlusMinus, m_prime=2),
    ]
    for spec in cases:
        t = np.linspace(-spec.a, 1.0, 1000)
        vals = rho_eval(spec, t)
        assert np.all(vals > 0), spec


def test_rho_swap_symmetry_exact_at_a_one():
    spec = WeightSpec(3, 5, 1.0)
    swapped = WeightSpec(5, 3, 1.0)
    t = np.linspace(-1, 1, 101)
    lhs = rho_eval(spec, t)
    rhs = rho_eval(swapped, -t)
    assert np.array_equal(lhs, rhs)


class TestXiEta:
    def test_at_origin(self):
        assert xi_eta_eval(WeightSpec(1, 1, 1.0), 0.0) == (1.0, 0.0)

    def test_identity_links_to_rho(self):
        spec = WeightSpec(3, 5, 2.0)
        for t in (-1.7, -0.5, 0.0, 0.5, 0.99):
            xi, eta = xi_eta_eval(spec, t)
            rho = rho_eval(spec, t)
            assert 2 * (xi * xi + eta * eta) == pytest.approx(rho, rel=1e-11)

    def test_continuation_matches_complex_arithmetic(self):
        # Complex-arithmetic reference for t < 0: evaluate the defining
        # formula with principal branches and take real parts.
        n, m, a = 3, 5, 2.0
        spec = WeightSpec(n, m, a)
        for t in (-1.0, -1.9, -0.2):
            z = complex(t)
            xi_c = cmath.cos(n * cmath.asin(cmath.sqrt(z))) * cmath.cosh(
                m * cmath.asinh(cmath.sqrt(z / a))
            )
            eta_c = cmath.sin(n * cmath.asin(cmath.sqrt(z))) * cmath.sinh(
                m * cmath.asinh(cmath.sqrt(z / a))
            )
            xi, eta = xi_eta_eval(spec, t)
            assert xi == pytest.approx(xi_c.real, rel=1e-12)
            assert abs(xi_c.imag) < 1e-12 * (1 + abs(xi))
            assert eta == pytest.approx(eta_c.real, rel=1e-12)
            assert abs(eta_c.imag) < 1e-12 * (1 + abs(eta))

    def test_exact_values_on_negative_axis(self):
        # n=3, m=5, a=2.  At t=-1: xi = cos(5 pi/4) cosh(3 asinh 1) = -5,
        # eta = -sin(5 pi/4) sinh(3 asinh 1) = 7 sqrt(2)/2, and
        # rho(-1) = T_3(3) + T_5(0) = 99.  At the endpoint t=-2:
        # xi = cos(5 pi/2) ... = 0, eta = -sinh(3 asinh sqrt 2) = -11 sqrt 2,
        # rho(-2) = T_3(5) + T_5(-1) = 484.
        spec = WeightSpec(3, 5, 2.0)
        xi, eta = xi_eta_eval(spec, -1.0)
        assert xi == pytest.approx(-5.0, rel=1e-13)
        assert eta == pytest.approx(7 * math.sqrt(2) / 2, rel=1e-13)
        assert rho_eval(spec, -1.0) == pytest.approx(99.0, rel=1e-13)
        xi2, eta2 = xi_eta_eval(spec, -2.0)
        assert abs(xi2) < 1e-13 * 22
        assert eta2 == pytest.approx(-11 * math.sqrt(2), rel=1e-13)
        assert rho_eval(spec, -2.0) == pytest.approx(484.0, rel=1e-13)

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(1, 8),
        st.integers(1, 8),
        st.sampled_from([0.5, 1.0, 2.0]),
        st.floats(0.0, 1.0),
    )
    def test_identity_property(self, n, m, a, frac):
        spec = WeightSpec(n, m, a)
        t = -a + frac * (1 + a)
        xi, eta = xi_eta_eval(spec, t)
        assert 2 * (xi * xi + eta * eta) == pytest.approx(rho_eval(spec, t), rel=1e-11)


class TestSpecValidation:
    def test_basic(self):
        with pytest.raises(ValueError):
            WeightSpec(0, 1, 1.0)
        with pytest.raises(ValueError):
            WeightSpec(1, 1, -1.0)
        with pytest.raises(ValueError):
            WeightSpec(40, 30, 1.0)

    def test_parity_rules(self):
        with pytest.raises(ParityError):
            WeightSpec(2, 1, 1.0, Family.ProductCosPlusCosh, m_prime=2)
        with pytest.raises(ValueError):
            WeightSpec(2, 1, 1.0, Family.ProductCosPlusCosh)


class TestFactor:
    def test_constant_factor(self):
        factor = build_szego_factor(WeightSpec(1, 1, 1.0))
        assert factor.h.degree == 0
        assert factor.h.coeffs[0] == pytest.approx(math.sqrt(2), rel=1e-14)

    def test_cubic_factor_against_brute_force(self):
        spec = WeightSpec(1, 3, 1.0)
        factor = build_szego_factor(spec)
        ref = brute_force_fejer_riesz(lambda t: rho_eval(spec, t), 1.0, 3)
        assert np.max(np.abs(factor.h.coeffs - ref)) < 1e-8 * np.max(np.abs(ref))

    def test_cosh_minus_cos_factor_against_brute_force(self):
        spec = WeightSpec(3, 2, 1.0, Family.CoshMinusCosOverT)
        factor = build_szego_factor(spec)
        assert factor.h.degree == expected_rho_degree(spec) == 2
        ref = brute_force_fejer_riesz(lambda t: rho_eval(spec, t), 1.0, 2)
        assert np.max(np.abs(factor.h.coeffs - ref)) < 1e-8 * np.max(np.abs(ref))

    @pytest.mark.parametrize(
        "spec",
        [
            WeightSpec(3, 5, 2.0),
            WeightSpec(2, 4, 0.5),
            WeightSpec(3, 3, 1.0),
            WeightSpec(3, 3, 2.0),
            WeightSpec(5, 2, 1.0),
            WeightSpec(1, 2, 1.0, Family.CoshMinusCosOverT),
            WeightSpec(4, 4, 1.0, Family.CoshMinusCosOverT),
            WeightSpec(15, 17, 2.0),
        ],
    )
    def test_invariants_on_grid(self, spec):
        factor = build_szego_factor(spec)
        assert factor.h.degree == expected_rho_degree(spec)
        assert factor.h(0.0) > 0
        theta = np.linspace(0, np.pi, 512)
        t = np.clip(0.5 * ((1 - spec.a) + (1 + spec.a) * np.cos(theta)), -spec.a, 1)
        rho = rho_eval(spec, t)
        resid = np.max(np.abs(np.abs(factor.h(np.exp(1j * theta))) ** 2 - rho))
        assert resid <= 1e-9 * np.max(rho)

    def test_degree_formula_against_trailing_coefficients(self):
        # deg rho = m for m > n and 2 floor(m/2) for m = n at a = 1: verify by
        # interpolating rho itself and inspecting trailing coefficients.
        for n, m in [(1, 3), (3, 5), (3, 3), (5, 5)]:
            spec = WeightSpec(n, m, 1.0)
            deg = expected_rho_degree(spec)
            expected = m if m > n else 2 * (m // 2)
            assert deg == expected
            ts = np.cos(np.pi * (2 * np.arange(deg + 3) + 1) / (2 * (deg + 3)))
            vals = rho_eval(spec, ts)
            coeffs = np.polynomial.chebyshev.cheb2poly(
                np.polynomial.chebyshev.chebfit(ts, vals, deg + 2)
            )
            assert np.all(np.abs(coeffs[deg + 1 :]) < 1e-8 * np.max(np.abs(coeffs)))
            assert abs(coeffs[deg]) > 1e-8 * np.max(np.abs(coeffs))

    def test_squared_constant(self):
        base = build_szego_factor(WeightSpec(1, 1, 1.0))
        sq = squared_factor(base)
        assert sq.h.degree == 0
        assert sq.h.coeffs[0] == pytest.approx(2.0, rel=1e-14)

    def test_squared_cubic(self):
        base = build_szego_factor(WeightSpec(1, 3, 1.0))
        sq = squared_factor(base)
        assert sq.h.degree == 6
        # |h^2(e^{i th})|^2 must equal rho^2 pointwise
        theta = np.linspace(0, np.pi, 200)
        rho2 = rho_eval(WeightSpec(1, 3, 1.0), np.cos(theta)) ** 2
        resid = np.abs(np.abs(sq.h(np.exp(1j * theta))) ** 2 - rho2)
        assert np.max(resid) <= 1e-9 * np.max(rho2)

    def test_squared_residual_general_a(self):
        base = build_szego_factor(WeightSpec(3, 3, 2.0))
        sq = squared_factor(base)
        theta = np.linspace(0, np.pi, 300)
        t = np.clip(0.5 * (-1 + 3 * np.cos(theta)), -2, 1)
        rho2 = rho_eval(WeightSpec(3, 3, 2.0), t) ** 2
        resid = np.abs(np.abs(sq.h(np.exp(1j * theta))) ** 2 - rho2)
        assert np.max(resid) <= 1e-9 * np.max(rho2)

    def test_no_factor_for_product_families(self):
        with pytest.raises(ParityError):
            build_szego_factor(WeightSpec(2, 1, 1.0, Family.ProductCosPlusCosh, m_prime=1))
