"""Double-exponential quadrature and contour integrals around the origin.

Three primitives drive every numeric evaluation in the identity layer:

* ``integrate_segment``: tanh-sinh rule on a finite segment, tolerant of
  integrable endpoint singularities (declared exponent > -1);
* ``integrate_semi_infinite``: exp-sinh rule on (a, inf) for integrands with
  an integrable singularity at ``a`` and algebraic decay faster than 1/t;
* ``integrate_loop``: the collapsed small-loop contour around t = 0,

      (exp(i pi lam) / (2 pi i)) * loop integral of t**(-lam-1) g(t) dt

  over the path coming in from t = c, encircling 0 once counterclockwise and
  returning to c.  For non-integer lam this equals
  sin(pi (lam+1))/pi times the (regularized) integral of t**(-lam-1) g(t)
  over (0, c); for integer lam = n >= 0 it collapses to (-1)**n times the
  n-th Taylor coefficient of g at 0.

Regularization for Re lam >= 0 subtracts a Taylor polynomial of g at 0 and
adds its integral back analytically; Taylor coefficients come from a Cauchy
trapezoid rule on a circle inside the analyticity disk of g.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complexfn import cpow, rgamma, sin_pi
from .errors import ConvergenceError, DomainError
from typing import Callable

__all__ = [
    "QuadratureResult",
    "integrate_segment",
    "integrate_semi_infinite",
    "integrate_loop",
    "integrate_weyl",
    "repeated_integral",
]

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class QuadratureResult:
    """Value, self-reported error estimate, and integrand evaluation count."""

    value: complex
    err_estimate: float
    evaluations: int

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.err_estimate + other.err_estimate,
            self.evaluations + other.evaluations,
        )

    def scaled(self, factor: complex) -> "QuadratureResult":
        return QuadratureResult(
            self.value * factor,
            self.err_estimate * abs(factor),
            self.evaluations,
        )


def _exact_result(value: complex, evaluations: int = 0) -> QuadratureResult:
    return QuadratureResult(complex(value), 0.0, evaluations)


def integrate_segment(
    f: Callable[[complex], complex],
    a,
    b,
    endpoint_exponent_a: float = 0.0,
    endpoint_exponent_b: float = 0.0,
    target: float = 1e-9,
    max_level: int = 12,
    absolute_floor: float = 0.0,
) -> QuadratureResult:
    """tanh-sinh integral of f over the straight segment from a to b.

    ``endpoint_exponent_*`` declares the power-law behavior of f at each
    endpoint; exponents must exceed -1 (integrable).  Nodes that round onto
    an endpoint are skipped, so f is never called exactly at a or b; the
    sliver lost to that skip is added back analytically from the declared
    power law, since for a mildly singular exponent sigma its mass
    ulp^(1+sigma) is far above target accuracy.  ``absolute_floor`` states
    the magnitude of the quantity this piece contributes to, so a negligible
    piece is not forced to converge in its own relative terms.
    """
    if endpoint_exponent_a <= -1.0 or endpoint_exponent_b <= -1.0:
        raise DomainError(
            "non-integrable endpoint exponent: "
            f"({endpoint_exponent_a}, {endpoint_exponent_b})"
        )
    a = complex(a)
    b = complex(b)
    if a == b:
        return _exact_result(0.0)
    span = b - a

    sigma = min(endpoint_exponent_a, endpoint_exponent_b, 0.0)
    # resolve the weakest endpoint decay: weight ~ exp(-(1+sigma) pi sinh u)
    sinh_max = max(16.0, 45.0 / (math.pi * (1.0 + sigma)))
    sinh_max = min(sinh_max, 600.0)
    u_max = math.asinh(sinh_max)

    evaluations = 0
    # per endpoint side (0: a, 1: b): largest skipped frac, and the kept
    # sample closest to the endpoint for the power-law tail estimate
    skipped_frac = [0.0, 0.0]
    closest = [None, None]  # (frac, fx)
    # node positions are quantized to the ulp grid of the endpoint, which
    # ruins singular samples whose distance to the endpoint is comparable;
    # such nodes are dropped and their mass restored by skipped_sliver()
    quant = (
        64.0 * 2.3e-16 * abs(a) / abs(span),
        64.0 * 2.3e-16 * abs(b) / abs(span),
    )

    def node(u: float):
        ts = _HALF_PI * math.sinh(abs(u))
        if ts > 350.0:
            return None
        e = math.exp(-2.0 * ts)
        frac = e / (1.0 + e)  # (1 - tanh ts)/2
        side = 1 if u >= 0.0 else 0
        if side:
            x = b - span * frac
        else:
            x = a + span * frac
        if x == a or x == b or frac <= quant[side]:
            skipped_frac[side] = max(skipped_frac[side], frac)
            return None
        w = 4.0 * _HALF_PI * math.cosh(u) * e / (1.0 + e) ** 2
        return x, w, frac, side

    def eval_level(h: float, odd_only: bool):
        nonlocal evaluations
        total = 0.0 + 0.0j
        total_abs = 0.0
        j = 1 if odd_only else 0
        step = 2 if odd_only else 1
        while j * h <= u_max:
            for sgn in ((1,) if j == 0 else (1, -1)):
                nd = node(sgn * j * h)
                if nd is not None:
                    x, w, frac, side = nd
                    fx = f(x)
                    total += w * fx
                    total_abs += abs(w * fx)
                    evaluations += 1
                    if closest[side] is None or frac < closest[side][0]:
                        closest[side] = (frac, fx)
            j += step
        return total, total_abs

    def skipped_sliver():
        # mass of the node-rounding gap next to each endpoint, extrapolated
        # from the declared exponent and the closest evaluated sample
        total = 0.0 + 0.0j
        for side, sigma in ((0, endpoint_exponent_a), (1, endpoint_exponent_b)):
            if skipped_frac[side] <= 0.0 or closest[side] is None:
                continue
            frac_ref, f_ref = closest[side]
            coef = f_ref * cpow(frac_ref, -sigma)
            total += coef * cpow(skipped_frac[side], sigma + 1.0) / (
                sigma + 1.0
            ) * span
        return total

    rad = 0.5 * span
    h = 1.0
    acc, acc_abs = eval_level(h, odd_only=False)
    best = acc * h * rad
    err = abs(best) + 1.0
    for _level in range(1, max_level + 1):
        h *= 0.5
        part, part_abs = eval_level(h, odd_only=True)
        acc += part
        acc_abs += part_abs
        cur = acc * h * rad
        noise_floor = 1e-14 * acc_abs * h * abs(rad)
        err = abs(cur - best)
        best = cur
        if err <= target * max(abs(cur), absolute_floor, 1e-30) + noise_floor + 1e-300:
            sliver = skipped_sliver()
            return QuadratureResult(
                best + sliver,
                max(err, noise_floor) + 0.05 * abs(sliver),
                evaluations,
            )
    # sub-ulp intervals cannot converge in relative terms; the achievable
    # accuracy is bounded by the rounding of the node positions themselves
    pos_noise = 2.3e-16 * max(abs(a), abs(b)) / abs(span)
    if err > max(math.sqrt(target), pos_noise) * max(abs(best), absolute_floor, 1e-30) + 1e3 * noise_floor:
        raise ConvergenceError(
            f"segment quadrature stalled: err ~ {err:.2e} after level {max_level}"
        )
    sliver = skipped_sliver()
    return QuadratureResult(best + sliver, err + 0.05 * abs(sliver), evaluations)


def integrate_semi_infinite(
    f: Callable[[float], complex],
    a: float,
    endpoint_exponent: float = 0.0,
    decay_exponent: float | None = None,
    target: float = 1e-9,
    max_level: int = 12,
) -> QuadratureResult:
    """exp-sinh integral of f over (a, inf), t = a + exp((pi/2) sinh u).

    ``endpoint_exponent`` declares the power of (t-a) as t -> a (must be
    > -1); ``decay_exponent``, when supplied, declares that |f| ~ t**(-p)
    as t -> inf and must satisfy p > 1.  Nodes are truncated near
    t - a ~ 1e-260 and t ~ 1e100, so declared-valid integrands stay inside
    double-precision range.
    """
    if endpoint_exponent <= -1.0:
        raise DomainError(f"non-integrable endpoint exponent {endpoint_exponent}")
    if decay_exponent is not None and decay_exponent <= 1.0:
        raise DomainError(
            f"insufficient decay at infinity: declared exponent {decay_exponent} <= 1"
        )

    sigma = min(endpoint_exponent, 0.0)
    # negative u: distance to a shrinks like exp(-(pi/2)|sinh u|)
    sinh_neg = max(16.0, 90.0 / (math.pi * (1.0 + sigma)))
    sinh_neg = min(sinh_neg, 380.0)
    u_min = -math.asinh(sinh_neg)
    # positive u: cap t near 1e100 to keep slowly-decaying integrands finite
    u_max = math.asinh(2.0 * 230.0 / math.pi)

    evaluations = 0

    def node(u: float):
        ts = _HALF_PI * math.sinh(u)
        if ts > 230.0 or ts < -600.0:
            return None
        d = math.exp(ts)
        t = a + d
        if t == a:
            return None
        w = _HALF_PI * math.cosh(u) * d
        return t, w

    def eval_level(h: float, odd_only: bool):
        nonlocal evaluations
        total = 0.0 + 0.0j
        total_abs = 0.0
        j = 1 if odd_only else 0
        step = 2 if odd_only else 1
        while True:
            u_pos = j * h
            u_negv = -j * h
            any_in = False
            if u_pos <= u_max + 1e-12:
                any_in = True
                nd = node(u_pos)
                if nd is not None:
                    t, w = nd
                    ft = f(t)
                    total += w * ft
                    total_abs += abs(w * ft)
                    evaluations += 1
            if j > 0 and u_negv >= u_min - 1e-12:
                any_in = True
                nd = node(u_negv)
                if nd is not None:
                    t, w = nd
                    ft = f(t)
                    total += w * ft
                    total_abs += abs(w * ft)
                    evaluations += 1
            if not any_in:
                break
            j += step
        return total, total_abs

    h = 1.0
    acc, acc_abs = eval_level(h, odd_only=False)
    best = acc * h
    err = abs(best) + 1.0
    for _level in range(1, max_level + 1):
        h *= 0.5
        part, part_abs = eval_level(h, odd_only=True)
        acc += part
        acc_abs += part_abs
        cur = acc * h
        noise_floor = 1e-14 * acc_abs * h
        err = abs(cur - best)
        best = cur
        if err <= target * max(abs(cur), 1e-30) + noise_floor + 1e-300:
            return QuadratureResult(best, max(err, noise_floor), evaluations)
    raise ConvergenceError(
        f"semi-infinite quadrature stalled: err ~ {err:.2e}; "
        "integrand may decay too slowly"
    )


def _taylor_coefficients(
    g: Callable[[complex], complex], radius: float, count: int, n_samples: int = 128
):
    """Taylor coefficients of g at 0 by the trapezoid rule on |t| = radius."""
    samples = [
        g(radius * cmath.exp(2j * math.pi * j / n_samples)) for j in range(n_samples)
    ]
    coeffs = []
    for k in range(count):
        s = 0.0 + 0.0j
        for j, gj in enumerate(samples):
            s += gj * cmath.exp(-2j * math.pi * j * k / n_samples)
        coeffs.append(s / (n_samples * radius**k))
    return coeffs, n_samples


def _poly_eval(coeffs, t):
    acc = 0.0 + 0.0j
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _regularized_lower(
    g: Callable[[complex], complex],
    c: float,
    lam: complex,
    radius: float,
    target: float,
    basepoint_exponent: float = 0.0,
) -> QuadratureResult:
    """Regularized integral of t**(-lam-1) g(t) over (0, c).

    Defined by subtracting the degree-(M-1) Taylor polynomial of g and adding
    back sum_k g_k c**(k-lam)/(k-lam), the analytic continuation of the
    polynomial part from Re lam < 0.
    """
    m_sub = max(int(math.ceil(lam.real)) + 1, 8)
    k_tail = 32
    coeffs, n_eval = _taylor_coefficients(g, radius, m_sub + k_tail)
    t_cut = 0.5 * radius

    # analytic integral of the subtracted remainder over (0, t_cut)
    tail0 = 0.0 + 0.0j
    last = 0.0
    for k in range(m_sub, m_sub + k_tail):
        term = coeffs[k] * cpow(t_cut, k - lam) / (k - lam)
        tail0 += term
        last = abs(term)
    scale = max(abs(tail0), abs(coeffs[0]) * abs(cpow(t_cut, -lam)), 1e-30)
    if last > 1e-10 * scale:
        raise ConvergenceError(
            "Taylor tail of the loop integrand did not decay inside the "
            "analyticity disk"
        )

    head = coeffs[:m_sub]

    def integrand(t):
        return (g(t) - _poly_eval(head, t)) * cpow(t, -lam - 1.0)

    addback = 0.0 + 0.0j
    for k in range(m_sub):
        addback += coeffs[k] * cpow(c, k - lam) / (k - lam)

    seg = integrate_segment(
        integrand,
        t_cut,
        c,
        endpoint_exponent_b=basepoint_exponent,
        target=target,
        absolute_floor=abs(tail0 + addback),
    )

    return QuadratureResult(
        seg.value + tail0 + addback, seg.err_estimate, seg.evaluations + n_eval
    )


def integrate_loop(
    g: Callable[[complex], complex],
    c: float,
    lam,
    analyticity_radius: float | None = None,
    basepoint_exponent: float = 0.0,
    target: float = 1e-9,
) -> QuadratureResult:
    """Collapsed loop contour (exp(i pi lam)/(2 pi i)) * loop of t**(-lam-1) g.

    ``c`` is the start/end point of the loop on the positive real axis;
    ``analyticity_radius`` bounds the disk around 0 where g is analytic
    (defaults to c).  ``basepoint_exponent`` declares a power-law of g at
    t = c.  Integer lam >= 0 gives (-1)**lam times the lam-th Taylor
    coefficient of g; negative integer lam gives 0; otherwise the contour
    collapses onto (0, c) with coefficient sin(pi (lam+1))/pi.
    """
    lam = complex(lam)
    if c <= 0:
        raise DomainError(f"loop base point must be positive, got {c}")
    rho = c if analyticity_radius is None else min(analyticity_radius, 4.0 * c)
    if rho <= 0:
        raise DomainError("analyticity radius must be positive")
    radius = 0.25 * min(c, rho)

    if abs(lam.imag) < 1e-12 and abs(lam.real - round(lam.real)) < 1e-12:
        n = round(lam.real)
        if n < 0:
            return _exact_result(0.0)
        coeffs, n_eval = _taylor_coefficients(g, radius, n + 1)
        sign = -1.0 if n % 2 else 1.0
        return QuadratureResult(sign * coeffs[n], 0.0, n_eval)

    if lam.real < -0.5:
        seg = integrate_segment(
            lambda t: cpow(t, -lam - 1.0) * g(t),
            0.0,
            c,
            endpoint_exponent_a=-lam.real - 1.0,
            endpoint_exponent_b=basepoint_exponent,
            target=target,
        )
        return seg.scaled(sin_pi(lam + 1.0) / math.pi)

    reg = _regularized_lower(
        g, c, lam, radius, target, basepoint_exponent=basepoint_exponent
    )
    return reg.scaled(sin_pi(lam + 1.0) / math.pi)


def integrate_weyl(
    g: Callable[[complex], complex],
    lam,
    c: float = 1.0,
    analyticity_radius: float | None = None,
    decay_exponent: float | None = None,
    target: float = 1e-9,
) -> QuadratureResult:
    """Weyl-type loop from infinity around 0 and back,

        (Gamma(lam+1) exp(i pi lam) / (2 pi i)) *
            loop_(inf,0+,inf) t**(-lam-1) g(t) dt
        = (1/Gamma(-lam)) * regularized integral of t**(-lam-1) g over (0, inf).

    Requires non-integer lam (integer shifts are plain derivatives) and g
    decaying fast enough that t**(-Re lam - 1) g(t) is integrable at infinity.
    """
    lam = complex(lam)
    if abs(lam.imag) < 1e-12 and abs(lam.real - round(lam.real)) < 1e-12:
        raise DomainError(
            "integer-order Weyl loop degenerates to a derivative; "
            "use the one-step recurrences instead"
        )
    if c <= 0:
        raise DomainError(f"split point must be positive, got {c}")
    rho = c if analyticity_radius is None else min(analyticity_radius, 4.0 * c)
    radius = 0.25 * min(c, rho)

    if lam.real < -0.5:
        lower = integrate_segment(
            lambda t: cpow(t, -lam - 1.0) * g(t),
            0.0,
            c,
            endpoint_exponent_a=-lam.real - 1.0,
            target=target,
        )
    else:
        lower = _regularized_lower(g, c, lam, radius, target)

    tail_decay = None
    if decay_exponent is not None:
        tail_decay = decay_exponent + lam.real + 1.0
    upper = integrate_semi_infinite(
        lambda t: cpow(t, -lam - 1.0) * g(t),
        c,
        decay_exponent=tail_decay,
        target=target,
    )
    return (lower + upper).scaled(rgamma(-lam))


def repeated_integral(
    f: Callable[[complex], complex],
    z,
    n: int,
    upper: str = "to_one",
    endpoint_exponent: float = 0.0,
    target: float = 1e-9,
) -> QuadratureResult:
    """n-fold iterated integral of f, collapsed to a single weighted integral.

    The innermost integration variable ranges over the stated interval and
    each further fold integrates the previous result again; the whole nest
    collapses to a kernel of (n-1)-st degree:

    * ``to_one``:      integral over (z, 1)   with kernel (u-z)**(n-1)/(n-1)!
    * ``to_infinity``: integral over (z, inf) with kernel (u-z)**(n-1)/(n-1)!
    * ``from_one``:    integral over (1, z)   with kernel (z-u)**(n-1)/(n-1)!

    ``endpoint_exponent`` declares the power-law behavior of f at the fixed
    endpoint (u = 1 for the finite variants, u -> z for ``to_infinity``'s
    moving endpoint it is ignored).
    """
    if not isinstance(n, int) or not 1 <= n <= 8:
        raise DomainError(f"fold count must be an integer in [1, 8], got {n}")
    if upper not in ("to_one", "to_infinity", "from_one"):
        raise DomainError(f"unknown variant {upper!r}")
    z = complex(z)
    fact = math.factorial(n - 1)

    if upper == "to_one":
        return integrate_segment(
            lambda u: (u - z) ** (n - 1) / fact * f(u),
            z,
            1.0,
            endpoint_exponent_b=endpoint_exponent,
            target=target,
        )
    if upper == "from_one":
        return integrate_segment(
            lambda u: (z - u) ** (n - 1) / fact * f(u),
            1.0,
            z,
            endpoint_exponent_a=endpoint_exponent,
            target=target,
        )
    if z.imag != 0:
        raise DomainError("to_infinity variant requires a real lower endpoint")
    return integrate_semi_infinite(
        lambda u: (u - z.real) ** (n - 1) / fact * f(u),
        z.real,
        target=target,
    )
