"""Associated Legendre functions P, Q of complex degree and order, Ferrers
functions on (-1, 1), Jacobi functions of complex degree, and their first two
derivatives.

Conventions:

* branch cut of P and Q on (-inf, 1]; values on the cut are reached with
  ``boundary_side`` "+" or "-" (limit from above or below);
* Q carries the factor exp(i pi mu) relative to the cut-plane function that
  is real for real parameters on (1, inf) ("Hobson phase"); passing
  ``olver=True`` returns exp(-i pi mu) Q / Gamma(nu+mu+1) instead, which is
  entire in both parameters;
* (z**2-1)**s is always split as (z-1)**s (z+1)**s.

Every representation is a short sum of terms

    K * (z-1)**p * (z+1)**q * 2F1(a, b; c; w(z))

(or (1-x)**p (1+x)**q for Ferrers) with w either (1-z)/2 or 2/(1-z), which
makes first and second derivatives a product-rule exercise; degenerate
parameter combinations (integer order and friends) are resolved by averaging
the two evaluations at parameter +/- i*eps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complexfn import (
    cos_pi,
    cpow,
    gamma,
    gamma_ratio,
    is_nonpositive_integer,
    rgamma,
    sin_pi,
)
from .errors import DomainError
from .hyper import hyp2f1

__all__ = [
    "legendre_p",
    "legendre_q",
    "ferrers_p",
    "ferrers_q",
    "jacobi_p",
    "legendre_deriv",
    "whipple_p_to_q",
    "whipple_q_to_p",
]

_EPS = 1e-6
_CUT_IMAG = 1e-250  # selects the side of the cut without moving the point


def _is_int(x, tol=1e-9) -> bool:
    x = complex(x)
    return abs(x.imag) <= tol and abs(x.real - round(x.real)) <= tol


@dataclass(frozen=True)
class _Term:
    K: complex
    p: complex  # exponent of (z-1), or of (1-x) for Ferrers
    q: complex  # exponent of (z+1), or of (1+x)
    a: complex
    b: complex
    c: complex
    wmap: str  # "half": w=(1-z)/2;  "far": w=2/(1-z)


def _term_derivs(term: _Term, z: complex, order: int, ferrers: bool):
    """(T, T', T'') of K*(z-1)^p(z+1)^q F(w) truncated at the given order."""
    if ferrers:
        pf = cpow(1.0 - z, term.p) * cpow(1.0 + z, term.q)
        L = -term.p / (1.0 - z) + term.q / (1.0 + z)
        Lp = -term.p / (1.0 - z) ** 2 - term.q / (1.0 + z) ** 2
    else:
        pf = cpow(z - 1.0, term.p) * cpow(z + 1.0, term.q)
        L = term.p / (z - 1.0) + term.q / (z + 1.0)
        Lp = -term.p / (z - 1.0) ** 2 - term.q / (z + 1.0) ** 2
    if term.wmap == "half":
        w = (1.0 - z) / 2.0
        w1 = -0.5
        w2 = 0.0
    else:
        w = 2.0 / (1.0 - z)
        w1 = 2.0 / (1.0 - z) ** 2
        w2 = 4.0 / (1.0 - z) ** 3
    a, b, c = term.a, term.b, term.c
    F0 = hyp2f1(a, b, c, w)
    out = [term.K * pf * F0, 0.0, 0.0]
    if order >= 1:
        F1 = a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, w)
        out[1] = term.K * pf * (L * F0 + F1 * w1)
        if order >= 2:
            F2 = (
                a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0))
            ) * hyp2f1(a + 2.0, b + 2.0, c + 2.0, w)
            out[2] = term.K * pf * (
                (Lp + L * L) * F0 + 2.0 * L * F1 * w1 + F2 * w1 * w1 + F1 * w2
            )
    return out


def _eval_terms(terms, z, order, ferrers=False):
    acc = [0.0 + 0.0j, 0.0 + 0.0j, 0.0 + 0.0j]
    for t in terms:
        d = _term_derivs(t, z, order, ferrers)
        for i in range(order + 1):
            acc[i] += d[i]
    return acc


# --- representations ---------------------------------------------------------


def _p_terms(nu, mu):
    return [_Term(rgamma(1.0 - mu), -mu / 2.0, mu / 2.0, -nu, nu + 1.0, 1.0 - mu, "half")]


def _q_far_terms(nu, mu):
    K = (
        cpow(2.0, nu)
        * cmath.exp(1j * math.pi * mu)
        * gamma_ratio([nu + 1.0, nu + mu + 1.0], [2.0 * nu + 2.0])
    )
    return [_Term(K, -nu - mu / 2.0 - 1.0, mu / 2.0, nu + mu + 1.0, nu + 1.0, 2.0 * nu + 2.0, "far")]


def _q_near_terms(nu, mu):
    ph = cmath.exp(1j * math.pi * mu)
    t1 = _Term(0.5 * ph * gamma(mu), -mu / 2.0, mu / 2.0, -nu, nu + 1.0, 1.0 - mu, "half")
    t2 = _Term(
        0.5 * ph * gamma_ratio([nu + mu + 1.0, -mu], [nu - mu + 1.0]),
        mu / 2.0,
        -mu / 2.0,
        -nu,
        nu + 1.0,
        1.0 + mu,
        "half",
    )
    return [t1, t2]


def _ferrers_p_terms(nu, mu):
    return [_Term(rgamma(1.0 - mu), -mu / 2.0, mu / 2.0, -nu, nu + 1.0, 1.0 - mu, "half")]


def _ferrers_q_terms(nu, mu):
    t1 = _Term(
        0.5 * gamma_ratio([nu + mu + 1.0, -mu], [nu - mu + 1.0]),
        mu / 2.0,
        -mu / 2.0,
        -nu,
        nu + 1.0,
        1.0 + mu,
        "half",
    )
    t2 = _Term(
        0.5 * gamma(mu) * cos_pi(mu), -mu / 2.0, mu / 2.0, -nu, nu + 1.0, 1.0 - mu, "half"
    )
    return [t1, t2]


# --- argument preparation ----------------------------------------------------


def _prepare_z(z, boundary_side):
    z = complex(z)
    if z.imag == 0.0 and z.real <= 1.0:
        if z.real in (1.0, -1.0):
            raise DomainError(f"evaluation at the branch point z = {z.real}")
        if boundary_side == "+":
            return complex(z.real, _CUT_IMAG)
        if boundary_side == "-":
            return complex(z.real, -_CUT_IMAG)
        raise DomainError(
            "z lies on the cut (-inf, 1]; pass boundary_side '+' or '-'"
        )
    return z


def _use_far(z: complex) -> bool:
    return abs(2.0 / (1.0 - z)) <= 0.75


# --- public evaluators -------------------------------------------------------


def _legendre_p_derivs(nu, mu, z, order):
    if is_nonpositive_integer(1.0 - mu):
        d = 1j * _EPS
        up = _legendre_p_derivs(nu, mu + d, z, order)
        dn = _legendre_p_derivs(nu, mu - d, z, order)
        return [0.5 * (u + v) for u, v in zip(up, dn)]
    return _eval_terms(_p_terms(nu, mu), z, order)


def _legendre_q_derivs(nu, mu, z, order):
    if _use_far(z):
        if is_nonpositive_integer(2.0 * nu + 2.0):
            d = 1j * _EPS
            up = _legendre_q_derivs(nu + d, mu, z, order)
            dn = _legendre_q_derivs(nu - d, mu, z, order)
            return [0.5 * (u + v) for u, v in zip(up, dn)]
        return _eval_terms(_q_far_terms(nu, mu), z, order)
    if _is_int(mu):
        d = 1j * _EPS
        up = _legendre_q_derivs(nu, mu + d, z, order)
        dn = _legendre_q_derivs(nu, mu - d, z, order)
        return [0.5 * (u + v) for u, v in zip(up, dn)]
    return _eval_terms(_q_near_terms(nu, mu), z, order)


def legendre_p(nu, mu, z, boundary_side=None) -> complex:
    """P_nu^mu(z) on the cut plane C \\ (-inf, 1].

    nu, mu may be any complex numbers; boundary_side "+"/"-" selects the
    limit from above/below when z is real and <= 1.
    """
    nu, mu = complex(nu), complex(mu)
    z = _prepare_z(z, boundary_side)
    return _legendre_p_derivs(nu, mu, z, 0)[0]


def legendre_q(nu, mu, z, boundary_side=None, olver=False) -> complex:
    """Q_nu^mu(z) with the exp(i pi mu) normalization.

    ``olver=True`` returns exp(-i pi mu) Q_nu^mu(z) / Gamma(nu+mu+1), which
    stays finite when nu+mu is a negative integer.
    """
    nu, mu = complex(nu), complex(mu)
    z = _prepare_z(z, boundary_side)
    if olver:
        if is_nonpositive_integer(nu + mu + 1.0):
            d = 1j * _EPS
            up = legendre_q(nu + d, mu, z, olver=True)
            dn = legendre_q(nu - d, mu, z, olver=True)
            return 0.5 * (up + dn)
        return (
            cmath.exp(-1j * math.pi * mu)
            * rgamma(nu + mu + 1.0)
            * _legendre_q_derivs(nu, mu, z, 0)[0]
        )
    return _legendre_q_derivs(nu, mu, z, 0)[0]


def _ferrers_x(x) -> float:
    x = complex(x)
    if x.imag != 0.0:
        raise DomainError("Ferrers functions take a real argument in (-1, 1)")
    if not -1.0 < x.real < 1.0:
        raise DomainError(f"Ferrers argument must lie in (-1, 1), got {x.real}")
    return x.real


def _ferrers_p_derivs(nu, mu, x, order):
    if is_nonpositive_integer(1.0 - mu):
        d = 1j * _EPS
        up = _ferrers_p_derivs(nu, mu + d, x, order)
        dn = _ferrers_p_derivs(nu, mu - d, x, order)
        return [0.5 * (u + v) for u, v in zip(up, dn)]
    return _eval_terms(_ferrers_p_terms(nu, mu), x, order, ferrers=True)


def _ferrers_q_derivs(nu, mu, x, order):
    if _is_int(mu):
        d = 1j * _EPS
        up = _ferrers_q_derivs(nu, mu + d, x, order)
        dn = _ferrers_q_derivs(nu, mu - d, x, order)
        return [0.5 * (u + v) for u, v in zip(up, dn)]
    return _eval_terms(_ferrers_q_terms(nu, mu), x, order, ferrers=True)


def ferrers_p(nu, mu, x) -> complex:
    """Ferrers function of the first kind on (-1, 1)."""
    return _ferrers_p_derivs(complex(nu), complex(mu), _ferrers_x(x), 0)[0]


def ferrers_q(nu, mu, x) -> complex:
    """Ferrers function of the second kind on (-1, 1)."""
    return _ferrers_q_derivs(complex(nu), complex(mu), _ferrers_x(x), 0)[0]


def jacobi_p(nu, alpha, beta, z) -> complex:
    """Jacobi function P_nu^(alpha, beta)(z) of complex degree,

        Gamma(nu+alpha+1)/(Gamma(nu+1) Gamma(alpha+1))
            * 2F1(-nu, nu+alpha+beta+1; alpha+1; (1-z)/2),

    reducing to the Jacobi polynomial at nonnegative integer nu.
    """
    nu, alpha, beta = complex(nu), complex(alpha), complex(beta)
    z = complex(z)
    K = gamma_ratio([nu + alpha + 1.0], [nu + 1.0, alpha + 1.0])
    return K * hyp2f1(-nu, nu + alpha + beta + 1.0, alpha + 1.0, (1.0 - z) / 2.0)


def legendre_deriv(nu, mu, z, order=1, kind="p", boundary_side=None) -> complex:
    """order-th derivative (order 1 or 2) of the selected function at z.

    ``kind``: "p", "q" (cut-plane functions, complex z) or "ferrers_p",
    "ferrers_q" (real x in (-1, 1)).
    """
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {order}")
    nu, mu = complex(nu), complex(mu)
    if kind == "p":
        zz = _prepare_z(z, boundary_side)
        return _legendre_p_derivs(nu, mu, zz, order)[order]
    if kind == "q":
        zz = _prepare_z(z, boundary_side)
        return _legendre_q_derivs(nu, mu, zz, order)[order]
    if kind == "ferrers_p":
        return _ferrers_p_derivs(nu, mu, _ferrers_x(z), order)[order]
    if kind == "ferrers_q":
        return _ferrers_q_derivs(nu, mu, _ferrers_x(z), order)[order]
    raise DomainError(f"unknown kind {kind!r}")


def whipple_p_to_q(nu, mu, y) -> complex:
    """P_nu^mu(y/sqrt(y**2-1)) computed from Q at Whipple-image parameters:

        exp(i pi (nu+1/2)) sqrt(2/pi) / Gamma(-nu-mu)
            * (y**2-1)**(1/4) * Q_{-mu-1/2}^{-nu-1/2}(y),

    valid for y with Re y > 0 off the cut.
    """
    nu, mu = complex(nu), complex(mu)
    y = complex(y)
    K = (
        cmath.exp(1j * math.pi * (nu + 0.5))
        * math.sqrt(2.0 / math.pi)
        * rgamma(-nu - mu)
    )
    q = legendre_q(-mu - 0.5, -nu - 0.5, y)
    return K * cpow(y - 1.0, 0.25) * cpow(y + 1.0, 0.25) * q


def whipple_q_to_p(nu, mu, y) -> complex:
    """Q_nu^mu(y/sqrt(y**2-1)) computed from P at Whipple-image parameters:

        exp(i pi mu) sqrt(pi/2) Gamma(nu+mu+1)
            * (y**2-1)**(1/4) * P_{-mu-1/2}^{-nu-1/2}(y).
    """
    nu, mu = complex(nu), complex(mu)
    y = complex(y)
    K = cmath.exp(1j * math.pi * mu) * math.sqrt(math.pi / 2.0) * gamma(nu + mu + 1.0)
    p = legendre_p(-mu - 0.5, -nu - 0.5, y)
    return K * cpow(y - 1.0, 0.25) * cpow(y + 1.0, 0.25) * p
