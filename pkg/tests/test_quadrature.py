"""Quadrature layer: segment, semi-infinite, loop, Weyl, kernel reduction."""

import cmath
import math

import pytest

from legshift.complexfn import cpow, gamma, rgamma, sin_pi
from legshift.errors import ConvergenceError, DomainError
from legshift.quadrature import (
    integrate_loop,
    integrate_segment,
    integrate_semi_infinite,
    integrate_weyl,
    repeated_integral,
)


def test_segment_polynomial():
    res = integrate_segment(lambda t: t * t, 0.0, 1.0)
    assert abs(res.value - 1.0 / 3.0) < 1e-12
    assert res.err_estimate < 1e-9


def test_segment_endpoint_singularity():
    # int_0^1 t^(-1/2) dt = 2, integrable endpoint declared
    res = integrate_segment(
        lambda t: cpow(t, -0.5), 0.0, 1.0, endpoint_exponent_a=-0.5
    )
    assert abs(res.value - 2.0) < 1e-10


def test_segment_both_singular_endpoints():
    # beta integral B(0.3, 0.6)
    res = integrate_segment(
        lambda t: cpow(t, -0.7) * cpow(1.0 - t, -0.4),
        0.0,
        1.0,
        endpoint_exponent_a=-0.7,
        endpoint_exponent_b=-0.4,
    )
    ref = gamma(0.3) * gamma(0.6) / gamma(0.9)
    assert abs(res.value - ref) <= 1e-9 * abs(ref)


def test_segment_rejects_nonintegrable_exponent():
    with pytest.raises(DomainError):
        integrate_segment(lambda t: t, 0.0, 1.0, endpoint_exponent_a=-1.2)


def test_semi_infinite_gamma_integral():
    # int_0^inf t^(0.7-1) e^-t dt = Gamma(0.7)
    res = integrate_semi_infinite(
        lambda t: cpow(t, -0.3) * math.exp(-t),
        0.0,
        endpoint_exponent=-0.3,
    )
    ref = gamma(0.7)
    assert abs(res.value - ref) <= 1e-9 * abs(ref)


def test_semi_infinite_power_decay():
    # int_1^inf t^-3 dt = 1/2
    res = integrate_semi_infinite(
        lambda t: t ** -3.0, 1.0, decay_exponent=3.0
    )
    assert abs(res.value - 0.5) < 1e-9


def test_loop_beta_function():
    # collapsed loop of v^(-lam-1) (1-v)^(sigma-1) = sin(pi(lam+1))/pi B(-lam, sigma)
    lam, sigma = 0.55, 1.3
    res = integrate_loop(lambda v: cpow(1.0 - v, sigma - 1.0), 1.0, lam)
    ref = (
        sin_pi(lam + 1.0)
        / math.pi
        * gamma(-lam)
        * gamma(sigma)
        / gamma(sigma - lam)
    )
    assert abs(res.value - ref) <= 1e-8 * abs(ref)


def test_loop_integer_order_picks_taylor_coefficient():
    # lam = n >= 0 gives (-1)^n g_n
    g = lambda t: cmath.exp(2.0 * t)
    res = integrate_loop(g, 1.0, 2)
    assert abs(res.value - (2.0 ** 2 / 2.0)) < 1e-12
    res1 = integrate_loop(g, 1.0, 3)
    assert abs(res1.value + 8.0 / 6.0) < 1e-12


def test_loop_negative_integer_is_zero():
    res = integrate_loop(lambda t: cmath.exp(t), 1.0, -2)
    assert res.value == 0.0


def test_loop_negative_order_collapses_to_segment():
    # Re lam < 0: plain convergent integral, cross-check against beta form
    lam, sigma = -0.7, 0.45
    res = integrate_loop(
        lambda v: cpow(1.0 - v, sigma - 1.0),
        1.0,
        lam,
        basepoint_exponent=sigma - 1.0,
    )
    ref = (
        sin_pi(lam + 1.0)
        / math.pi
        * gamma(-lam)
        * gamma(sigma)
        / gamma(sigma - lam)
    )
    assert abs(res.value - ref) <= 1e-8 * abs(ref)


def test_weyl_exponential_oracle():
    # (1/Gamma(-lam)) int_0^inf t^(-lam-1) e^(-t) dt = 1 for Re lam < 0;
    # the regularized continuation keeps the value 1 for all non-integer lam
    for lam in (-0.6, 0.4, 1.3):
        res = integrate_weyl(
            lambda t: cmath.exp(-t), lam, c=1.0, decay_exponent=None
        )
        assert abs(res.value - 1.0) < 1e-7, lam


def test_weyl_rejects_integer_order():
    with pytest.raises(DomainError):
        integrate_weyl(lambda t: cmath.exp(-t), 2.0)


def test_repeated_integral_to_one_monomial():
    # double integral over (z,1) of 1: (1-z)^2/2
    z = 0.3
    res = repeated_integral(lambda u: 1.0 + 0.0j, z, 2, "to_one")
    assert abs(res.value - (1.0 - z) ** 2 / 2.0) < 1e-10


def test_repeated_integral_to_infinity_power():
    # n-fold integral to infinity of u^-5: u^(-5+n) / ((4)(3)...) at z
    z = 1.5
    res = repeated_integral(lambda u: u ** -5.0, z, 2, "to_infinity")
    ref = z ** -3.0 / (4.0 * 3.0)
    assert abs(res.value - ref) <= 1e-9 * abs(ref)


def test_repeated_integral_from_one():
    # double integral from 1 of (u-1): (z-1)^3/6
    z = 2.2
    res = repeated_integral(lambda u: u - 1.0, z, 2, "from_one")
    assert abs(res.value - (z - 1.0) ** 3 / 6.0) <= 1e-9


def test_repeated_integral_fold_bounds():
    with pytest.raises(DomainError):
        repeated_integral(lambda u: 1.0, 0.5, 0, "to_one")
    with pytest.raises(DomainError):
        repeated_integral(lambda u: 1.0, 0.5, 9, "to_one")


def test_quadrature_result_arithmetic():
    a = integrate_segment(lambda t: t, 0.0, 1.0)
    b = integrate_segment(lambda t: t * t, 0.0, 1.0)
    s = a + b
    assert abs(s.value - (0.5 + 1.0 / 3.0)) < 1e-10
    assert s.err_estimate >= max(a.err_estimate, b.err_estimate)
    d = a.scaled(2.0)
    assert abs(d.value - 1.0) < 1e-10
