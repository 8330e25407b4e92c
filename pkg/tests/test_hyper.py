"""Hypergeometric kernels: 2F1 continuation and the 3F2 family."""

import math
import random

import mpmath
import pytest

from legshift.complexfn import gamma_ratio
from legshift.errors import PoleError
from legshift.hyper import hyp2f1, hyp3f2_barnes, hyp3f2_series


def _mp_2f1(a, b, c, w):
    return complex(mpmath.hyp2f1(a, b, c, w))


def test_hyp2f1_inside_disk_vs_mpmath():
    cases = [
        (0.5, 1.5, 2.5, 0.3),
        (-0.7, 1.2, 0.9, -0.45),
        (0.3 + 0.2j, 1.1, 2.0 - 0.3j, 0.5 + 0.1j),
    ]
    for a, b, c, w in cases:
        ref = complex(mpmath.hyp2f1(a, b, c, w))
        val = hyp2f1(a, b, c, w)
        assert abs(val - ref) <= 1e-12 * max(abs(ref), 1.0)


def test_hyp2f1_outside_disk_vs_mpmath():
    cases = [
        (0.5, 1.5, 2.5, 3.0 + 0.5j),
        (0.4, 0.9, 1.7, -4.0),
        (0.3, 1.2, 2.1, 0.97),
    ]
    for a, b, c, w in cases:
        ref = complex(mpmath.hyp2f1(a, b, c, complex(w)))
        val = hyp2f1(a, b, c, w)
        assert abs(val - ref) <= 1e-10 * max(abs(ref), 1.0)


def test_hyp2f1_euler_transformation():
    rng = random.Random(7)
    for _ in range(100):
        a = rng.uniform(-1.5, 1.5)
        b = rng.uniform(-1.5, 1.5)
        c = rng.uniform(0.3, 2.5)
        w = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.3, 0.3))
        lhs = hyp2f1(a, b, c, w)
        rhs = (1.0 - w) ** (c - a - b) * hyp2f1(c - a, c - b, c, w)
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), 1.0)


def test_hyp3f2_series_frozen_value():
    # independently frozen with mpmath.hyp3f2(0.5, 1.5, 1, 2, 2.5, 0.3)
    val = hyp3f2_series(0.5, 1.5, 1.0, 2.0, 2.5, 0.3)
    assert abs(val - 1.0506743672046253) < 1e-13


def test_hyp3f2_series_vs_mpmath_complex():
    a1, a2, b1, b2 = 0.8, -0.3, 1.3, 0.6
    w = -0.4 + 0.2j
    ref = complex(mpmath.hyp3f2(a1, a2, 1.0, b1, b2, w))
    val = hyp3f2_series(a1, a2, 1.0, b1, b2, w)
    assert abs(val - ref) <= 1e-12 * abs(ref)


def test_hyp3f2_series_terminating():
    # a2 = -2 terminates the series after three terms
    val = hyp3f2_series(1.4, -2.0, 1.0, 0.9, 1.7, 5.0)
    ref = complex(mpmath.hyp3f2(1.4, -2.0, 1.0, 0.9, 1.7, 5.0))
    assert abs(val - ref) <= 1e-12 * abs(ref)


def test_hyp3f2_barnes_matches_series_in_overlap():
    # the vertical-line continuation and the direct series share an annulus
    nu, mu, lam = 0.6, 0.3, 0.7
    a1, a2, b1, b2 = nu - mu + 1.0, -nu - mu, 1.0 - mu, 1.0 - lam
    for z in (2.5, 2.7, 2.9):
        w = (1.0 - z) / 2.0
        series = hyp3f2_series(a1, a2, 1.0, b1, b2, w)
        barnes = hyp3f2_barnes(a1, a2, 1.0, b1, b2, z) * gamma_ratio(
            [b1, b2], [a1, a2]
        )
        assert abs(series - barnes) <= 1e-10 * abs(series)


def test_hyp3f2_barnes_rejects_wrong_family():
    with pytest.raises(ValueError):
        hyp3f2_barnes(0.5, 1.5, 2.0, 2.0, 2.5, 4.0)  # a3 != 1
    with pytest.raises(ValueError):
        hyp3f2_barnes(0.5, 1.5, 1.0, 2.0, 2.5, 4.0)  # not (nu-mu+1, -nu-mu)


def test_hyp3f2_barnes_prefactor_pole():
    # a2 = -nu-mu a nonpositive integer puts a pole in the gamma prefactor
    nu, mu = 1.3, -1.3
    with pytest.raises(PoleError):
        hyp3f2_barnes(nu - mu + 1.0, -nu - mu, 1.0, 1.0 - mu, 0.3, 4.0)
