"""Gauss 2F1 with full-plane continuation, 3F2 series, and the Barnes-type
vertical-line continuation of the 3F2 family appearing in the fractional
order-lowering results.

Continuation strategy for 2F1: the six fractional-linear argument images
(w, w/(w-1), 1-w, 1/w, 1/(1-w), 1-1/w) are ranked by modulus and the best
admissible one is used.  Degenerate connection coefficients (integer c-a-b or
a-b) are handled by evaluating at parameter +/- i*eps and averaging.  Near the
two exceptional points w = exp(+/- i pi/3), where no image is small, the
hypergeometric ODE is Taylor-stepped along a straight path from the origin.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .complexfn import (
    cpow,
    gamma_ratio,
    is_nonpositive_integer,
    ln_gamma,
    rgamma,
    sin_pi,
)
from .errors import (
    ConvergenceError,
    DegenerateParameterError,
    NumericalError,
    PoleError,
)

__all__ = ["hyp2f1", "hyp3f2_series", "hyp3f2_barnes"]

_EPS_NUDGE = 1e-6
_SERIES_RADIUS = 0.80
_IMAGE_RADIUS = 0.92


def _is_int(x, tol=1e-9) -> bool:
    x = complex(x)
    return abs(x.imag) <= tol and abs(x.real - round(x.real)) <= tol


def _series_2f1(a, b, c, w, max_terms=3000):
    """Defining Gauss series; stops after 3 consecutive negligible terms."""
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * w
        total += term
        if abs(term) <= 1e-16 * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"2F1 series did not converge for |w| = {abs(w):.3f}"
    )


def _terminating_index(a, b, c):
    """Index n if the series terminates at w**n before hitting a c-pole."""
    best = None
    for p in (a, b):
        if is_nonpositive_integer(p):
            n = round(-complex(p).real)
            if best is None or n < best:
                best = n
    if best is None:
        return None
    if is_nonpositive_integer(c) and round(-complex(c).real) < best:
        return None  # c pole strikes first
    return best


def _series_terminating(a, b, c, w, n):
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(n):
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * w
        total += term
    return total


def _ode_taylor_step(a, b, c, w0, f0, f1, h, n_terms=30):
    """One Taylor step of the hypergeometric ODE from w0 with values (F, F')."""
    A = w0 * (1.0 - w0)
    B = 1.0 - 2.0 * w0
    C = -1.0
    D = c - (a + b + 1.0) * w0
    E = -(a + b + 1.0)
    G = -a * b
    coef = [f0, f1]
    for k in range(n_terms - 2):
        fk = coef[k]
        fk1 = coef[k + 1]
        rhs = (B * (k + 1) * k + D * (k + 1)) * fk1 + (C * k * (k - 1) + E * k + G) * fk
        coef.append(-rhs / (A * (k + 2) * (k + 1)))
    val = 0.0 + 0.0j
    der = 0.0 + 0.0j
    for k in range(n_terms - 1, -1, -1):
        val = val * h + coef[k]
    for k in range(n_terms - 1, 0, -1):
        der = der * h + k * coef[k]
    return val, der


def _ode_continue(a, b, c, w_target):
    """Continue 2F1 from the origin to w_target by Taylor-stepping the ODE."""
    direction = w_target / abs(w_target)
    w = 0.45 * direction
    f = _series_2f1(a, b, c, w)
    fp = a * b / c * _series_2f1(a + 1.0, b + 1.0, c + 1.0, w)
    for _ in range(400):
        remaining = w_target - w
        if abs(remaining) < 1e-15:
            return f
        dist = min(abs(w), abs(w - 1.0))
        h = min(0.30 * dist, abs(remaining))
        step = h * remaining / abs(remaining)
        f, fp = _ode_taylor_step(a, b, c, w, f, fp, step)
        w = w + step
    raise ConvergenceError("ODE continuation of 2F1 did not reach the target")


def _eps_average(fn, eps=_EPS_NUDGE):
    """Limit of fn(delta) for delta -> 0 along +/- i*eps (linear extrapolation)."""
    return 0.5 * (fn(1j * eps) + fn(-1j * eps))


def _hyp2f1_core(a, b, c, w):
    a = complex(a)
    b = complex(b)
    c = complex(c)
    w = complex(w)

    if w == 0:
        return 1.0 + 0.0j

    n_term = _terminating_index(a, b, c)
    if n_term is not None:
        return _series_terminating(a, b, c, w, n_term)

    if is_nonpositive_integer(c):
        raise DegenerateParameterError(
            f"2F1 undefined: c = {c} is a nonpositive integer and the series "
            "does not terminate"
        )

    if abs(w) <= _SERIES_RADIUS:
        return _series_2f1(a, b, c, w)

    candidates = []  # (modulus, key)
    candidates.append((abs(w / (w - 1.0)), "pfaff"))
    candidates.append((abs(1.0 - w), "one_minus"))
    if w != 0:
        candidates.append((abs(1.0 / w), "recip"))
        candidates.append((abs(1.0 - 1.0 / w), "one_minus_recip"))
    if w != 1.0:
        candidates.append((abs(1.0 / (1.0 - w)), "recip_one_minus"))
    # penalize images whose connection coefficients are degenerate so that a
    # clean image of comparable size wins
    degenerate = {
        "one_minus": _is_int(c - a - b),
        "recip": _is_int(a - b),
        "recip_one_minus": _is_int(a - b),
        "one_minus_recip": _is_int(c - a - b),
        "pfaff": False,
    }
    ranked = sorted(candidates, key=lambda t: (t[0] + (0.05 if degenerate[t[1]] else 0.0)))
    mod, key = ranked[0]
    if mod > _IMAGE_RADIUS:
        return _ode_continue(a, b, c, w)

    if key == "pfaff":
        return cpow(1.0 - w, -a) * _hyp2f1_core(a, c - b, c, w / (w - 1.0))

    if degenerate[key]:
        if key in ("one_minus", "one_minus_recip"):
            # shift c off the integer lattice of c-a-b
            return _eps_average(lambda d: _hyp2f1_core(a, b, c + d, w))
        # integer a-b: shift a
        return _eps_average(lambda d: _hyp2f1_core(a + d, b, c, w))

    if key == "one_minus":
        u = 1.0 - w
        t1 = gamma_ratio([c, c - a - b], [c - a, c - b]) * _series_2f1(
            a, b, a + b - c + 1.0, u
        )
        t2 = (
            gamma_ratio([c, a + b - c], [a, b])
            * cpow(u, c - a - b)
            * _series_2f1(c - a, c - b, c - a - b + 1.0, u)
        )
        return t1 + t2

    if key == "recip":
        u = 1.0 / w
        t1 = (
            gamma_ratio([c, b - a], [b, c - a])
            * cpow(-w, -a)
            * _series_2f1(a, a - c + 1.0, a - b + 1.0, u)
        )
        t2 = (
            gamma_ratio([c, a - b], [a, c - b])
            * cpow(-w, -b)
            * _series_2f1(b, b - c + 1.0, b - a + 1.0, u)
        )
        return t1 + t2

    if key == "recip_one_minus":
        u = 1.0 / (1.0 - w)
        t1 = (
            gamma_ratio([c, b - a], [b, c - a])
            * cpow(1.0 - w, -a)
            * _series_2f1(a, c - b, a - b + 1.0, u)
        )
        t2 = (
            gamma_ratio([c, a - b], [a, c - b])
            * cpow(1.0 - w, -b)
            * _series_2f1(b, c - a, b - a + 1.0, u)
        )
        return t1 + t2

    # key == "one_minus_recip"
    u = 1.0 - 1.0 / w
    t1 = (
        gamma_ratio([c, c - a - b], [c - a, c - b])
        * cpow(w, -a)
        * _series_2f1(a, a - c + 1.0, a + b - c + 1.0, u)
    )
    t2 = (
        gamma_ratio([c, a + b - c], [a, b])
        * cpow(w, a - c)
        * cpow(1.0 - w, c - a - b)
        * _series_2f1(c - a, 1.0 - a, c - a - b + 1.0, u)
    )
    return t1 + t2


def hyp2f1(a, b, c, w) -> complex:
    """Gauss hypergeometric function 2F1(a, b; c; w), continued off |w| < 1.

    Symmetric in (a, b); the argument must lie off the cut [1, inf) unless it
    carries an explicit imaginary part supplied by the caller.
    """
    # canonical (a, b) order so the result is exactly symmetric
    aa, bb = complex(a), complex(b)
    if (aa.real, aa.imag) > (bb.real, bb.imag):
        aa, bb = bb, aa
    return _hyp2f1_core(aa, bb, complex(c), complex(w))


def hyp3f2_series(a1, a2, a3, b1, b2, w, max_terms=100000) -> complex:
    """3F2(a1, a2, a3; b1, b2; w) by its defining series.

    Requires |w| < 1 - 1e-3 unless a numerator parameter terminates the sum.
    """
    a1, a2, a3 = complex(a1), complex(a2), complex(a3)
    b1, b2 = complex(b1), complex(b2)
    w = complex(w)

    n_term = None
    for p in (a1, a2, a3):
        if is_nonpositive_integer(p):
            n = round(-p.real)
            if n_term is None or n < n_term:
                n_term = n
    if n_term is None and abs(w) >= 1.0 - 1e-3:
        raise ConvergenceError(
            f"3F2 series diverges: |w| = {abs(w):.4f} and no terminating "
            "numerator parameter"
        )

    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    limit = n_term if n_term is not None else max_terms
    for k in range(limit):
        term *= (
            (a1 + k) * (a2 + k) * (a3 + k)
            / ((b1 + k) * (b2 + k) * (1.0 + k))
            * w
        )
        total += term
        if n_term is None:
            if abs(term) <= 1e-16 * abs(total):
                small += 1
                if small >= 3:
                    return total
            else:
                small = 0
    if n_term is None:
        raise ConvergenceError("3F2 series did not meet the tail bound")
    return total


def _barnes_integrand_parts(nu, mu, lam):
    """Gamma-factor ratio of the vertical-line integrand as a function of s."""

    def gamma_ratio_at(s):
        return cmath.exp(
            ln_gamma(nu - mu + s + 1.0)
            + ln_gamma(-nu - mu + s)
            - ln_gamma(-mu + s + 1.0)
            - ln_gamma(-lam + s + 1.0)
        )

    return gamma_ratio_at


def hyp3f2_barnes(a1, a2, a3, b1, b2, z, _depth=0) -> complex:
    """Vertical-line (Mellin-type) continuation of the normalized sum

        Gamma(a1) Gamma(a2) / (Gamma(b1) Gamma(b2)) * 3F2(a1, a2, 1; b1, b2; (1-z)/2)

    for the parameter family a1 = nu-mu+1, a2 = -nu-mu, b1 = 1-mu, b2 = 1-lam.
    Valid for |arg(z-1)| < pi; the straight contour Re s = sigma0 in (-1, 0) is
    corrected by the residues of the parameter-pole sequences lying to its
    right.
    """
    a1, a2, a3 = complex(a1), complex(a2), complex(a3)
    b1, b2 = complex(b1), complex(b2)
    z = complex(z)
    if abs(a3 - 1.0) > 1e-12:
        raise ValueError("third numerator parameter must be 1")
    mu = 1.0 - b1
    nu = a1 + mu - 1.0
    lam = 1.0 - b2
    if abs((-nu - mu) - a2) > 1e-9:
        raise ValueError("parameters are not of the form (nu-mu+1, -nu-mu, 1; 1-mu, 1-lam)")
    if is_nonpositive_integer(a1) or is_nonpositive_integer(a2):
        raise PoleError(
            "normalized 3F2 has a gamma-prefactor pole "
            f"(a1 = {a1}, a2 = {a2})"
        )

    half = (z - 1.0) / 2.0
    if half == 0 or abs(cmath.phase(z - 1.0)) >= math.pi - 1e-12:
        raise ValueError("argument must satisfy |arg(z-1)| < pi")

    if _is_int(2.0 * nu + 1.0, tol=1e-7):
        # half-integer nu makes the two pole sequences collide into double
        # poles; split them by averaging over nu +/- i*eps
        if _depth > 3:
            raise NumericalError("pole sequences stuck in collision")
        d = 1j * _EPS_NUDGE
        vp = hyp3f2_barnes(a1 + d, a2 - d, a3, b1, b2, z, _depth=_depth + 1)
        vm = hyp3f2_barnes(a1 - d, a2 + d, a3, b1, b2, z, _depth=_depth + 1)
        return 0.5 * (vp + vm)

    # parameter poles that lie on the integer lattice coincide with poles of
    # pi/sin(pi s); resolve the double pole by averaging over mu +/- i*eps
    lattice_hit = False
    for head in (nu + mu, mu - nu - 1.0):
        n = 0
        while (head - n).real > -40.0:
            s = head - n
            if abs(s - round(s.real)) < 1e-7:
                lattice_hit = True
            n += 1
    if lattice_hit:
        # shifting mu -> mu - i*d moves a1, a2, b1 together by +i*d
        if _depth > 3:
            raise NumericalError("parameter pole stuck on the sine pole lattice")
        d = 1j * _EPS_NUDGE
        vp = hyp3f2_barnes(a1 + d, a2 + d, a3, b1 + d, b2, z, _depth=_depth + 1)
        vm = hyp3f2_barnes(a1 - d, a2 - d, a3, b1 - d, b2, z, _depth=_depth + 1)
        return 0.5 * (vp + vm)

    # place the line Re s = sigma0 in (-1, 0) away from any nearly-real pole
    near_line_res = [
        (head - n).real
        for head in (nu + mu, mu - nu - 1.0)
        for n in range(int((head.real + 1.5)) + 2)
        if abs((head - n).imag) < 0.3 and -1.2 < (head - n).real < 0.2
    ]
    # the sine factor has poles at every integer; keep clear of 0 and -1 too
    avoid = near_line_res + [0.0, -1.0]
    candidates = [-0.5, -0.25, -0.75, -0.375, -0.625, -0.3, -0.7]
    sigma0 = max(candidates, key=lambda s0: min(abs(r - s0) for r in avoid))
    if min(abs(r - sigma0) for r in avoid) < 0.05:
        raise NumericalError("parameter poles crowd the whole strip (-1, 0)")

    ratio = _barnes_integrand_parts(nu, mu, lam)

    def integrand(s):
        return ratio(s) * (math.pi / sin_pi(s)) * cpow(half, s)

    # decay rate of the integrand along the line
    rate = math.pi - abs(cmath.phase(half))
    if rate < 0.05:
        raise NumericalError("Barnes integrand decays too slowly (arg(z-1) near pi)")
    alpha = (lam - mu - 1.0).real  # polynomial growth exponent of the gamma ratio
    T = (42.0 + 8.0 * max(0.0, alpha)) / rate + 8.0
    nodes, weights = np.polynomial.legendre.leggauss(16)

    # graded panels: fine near tau = 0 where the integrand varies on the scale
    # of the distance to the nearest pole, coarse in the exponential tail
    edges = [0.0]
    while edges[-1] < T:
        t = edges[-1]
        step = 0.25 if t < 1.0 else (0.5 if t < 3.0 else 2.0)
        edges.append(min(t + step, T))
    edges = [-e for e in reversed(edges)] + edges[1:]

    acc = 0.0 + 0.0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        hw = 0.5 * (hi - lo)
        part = 0.0 + 0.0j
        for x, wgt in zip(nodes, weights):
            s = complex(sigma0, mid + hw * x)
            part += wgt * integrand(s)
        acc += hw * part
    # (1/(2 pi i)) * integral over s = sigma0 + i tau of I(s) ds,  ds = i d tau
    line = acc / (2.0 * math.pi)

    # residue corrections for parameter poles right of the line
    res_sum = 0.0 + 0.0j
    for seq in ("A", "B"):
        n = 0
        while True:
            if seq == "A":
                s = nu + mu - n
            else:
                s = mu - nu - 1.0 - n
            if s.real <= sigma0:
                break
            sign = -1.0 if n % 2 else 1.0
            base = sign * math.exp(-math.lgamma(n + 1))
            if seq == "A":
                rest = cmath.exp(
                    ln_gamma(nu - mu + s + 1.0)
                    - ln_gamma(-mu + s + 1.0)
                    - ln_gamma(-lam + s + 1.0)
                )
            else:
                rest = cmath.exp(
                    ln_gamma(-nu - mu + s)
                    - ln_gamma(-mu + s + 1.0)
                    - ln_gamma(-lam + s + 1.0)
                )
            res_sum += base * rest * (math.pi / sin_pi(s)) * cpow(half, s)
            n += 1
            if n > 200:
                raise NumericalError("runaway residue sequence in Barnes evaluation")

    return -(line + res_sum)
