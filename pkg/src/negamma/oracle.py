"""Slow arbitrary-precision reference values built on :mod:`mpmath`.

Nothing here shares code paths with the double-precision evaluators except
:func:`recursion_residual`, which deliberately exercises them.  Each call opens
its own precision context, so calls are safe to run concurrently.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import mpmath

from . import kernels
from .errors import DomainError, PrecisionError, QuadratureError
from .mapping import MappedPoint

DEFAULT_DIGITS = 400
MIN_DIGITS = 50
QUAD_DIGITS = 40
QUAD_TARGET = 14
STOP_RUN = 50
LOG10_E = math.log10(math.e)


@dataclass(frozen=True)
class BigReal:
    value: mpmath.mpf
    digits: int

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ValueError(f"oracle precision must be >= {MIN_DIGITS} digits, got {self.digits}")

    def __float__(self) -> float:
        return float(self.value)


def default_digits() -> int:
    """Oracle precision from ``NEGAMMA_ORACLE_DIGITS`` (default 400)."""
    raw = os.environ.get("NEGAMMA_ORACLE_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        raise DomainError(f"NEGAMMA_ORACLE_DIGITS must be an integer, got {raw!r}") from None
    return max(digits, MIN_DIGITS)


def _resolve(digits: int | None, z: float = 0.0) -> int:
    if digits is not None:
        if digits < MIN_DIGITS:
            raise DomainError(f"digits must be >= {MIN_DIGITS}, got {digits}")
        return int(digits)
    # the series cancels roughly e^(2z) before it settles
    return max(default_digits(), int(2.0 * abs(z) * LOG10_E) + 60)


def gammastar_series_big(a: float, z: float, digits: int | None = None) -> BigReal:
    """``gamma*(-a, -z) = e^z sum_n (-z)^n / Gamma(n + 1 - a)`` at ``digits`` decimal digits.

    Terms with ``1/Gamma`` of a non-positive integer vanish, so integer ``a``
    starts the sum at ``n = a``.  The sum stops once ``n >= |z|`` and
    50 consecutive terms fall below ``10^-digits`` of the largest one.
    """
    digits = _resolve(digits, z)
    with mpmath.workdps(digits):
        a_mp = mpmath.mpf(a)
        z_mp = mpmath.mpf(z)
        start = int(a) if (a == math.floor(a) and a >= 0) else 0
        term = (-z_mp) ** start * mpmath.rgamma(start + 1 - a_mp)
        total = term
        biggest = abs(term)
        small = 0
        threshold = mpmath.mpf(10) ** (-digits)
        n = start
        while True:
            n += 1
            term = term * (-z_mp) / (n - a_mp)
            total += term
            size = abs(term)
            if size > biggest:
                biggest = size
            if n >= abs(z) and size < threshold * biggest:
                small += 1
                if small >= STOP_RUN:
                    break
            else:
                small = 0
        if biggest > 0 and (total == 0 or biggest / abs(total) > mpmath.mpf(10) ** (digits - 30)):
            raise PrecisionError(
                f"series cancellation not absorbed at {digits} digits for a={a}, z={z}"
            )
        return BigReal(+(mpmath.exp(z_mp) * total), digits)


def big_lgamma(a: float, digits: int = MIN_DIGITS) -> BigReal:
    with mpmath.workdps(digits):
        return BigReal(mpmath.loggamma(mpmath.mpf(a)), digits)


def big_erfc(x: float, digits: int = MIN_DIGITS) -> BigReal:
    with mpmath.workdps(digits):
        return BigReal(mpmath.erfc(mpmath.mpf(x)), digits)


def big_dawson(x: float, digits: int = MIN_DIGITS) -> BigReal:
    """``F(x) = (sqrt(pi)/2) e^(-x^2) erfi(x)``."""
    with mpmath.workdps(digits + 10):
        x_mp = mpmath.mpf(x)
        value = mpmath.sqrt(mpmath.pi) / 2 * mpmath.exp(-x_mp * x_mp) * mpmath.erfi(x_mp)
    with mpmath.workdps(digits):
        return BigReal(+value, digits)


def _t_of_zeta(zeta, tol):
    """``t > 0`` with ``zeta^2/2 = t - 1 - log t`` by Newton on ``log t``, seeded in double."""
    if zeta == 0:
        return mpmath.mpf(1)
    half = zeta * zeta / 2
    z_float = float(zeta)
    if z_float < -37.0:
        s = -1 - half
    else:
        s = mpmath.mpf(kernels.log_lambda_from_eta(z_float))
    for _ in range(200):
        mu = mpmath.expm1(s)
        step = (mu - s - half) / mu
        s -= step
        if abs(step) <= tol * (1 + abs(s)):
            return mpmath.exp(s)
    raise QuadratureError(f"Newton for t({z_float}) did not converge")


def _h_values(a_mp, eta, lam, nodes, tol):
    out = []
    for zeta in nodes:
        t = _t_of_zeta(zeta, tol)
        g = zeta * t / (t - 1) * (zeta - eta) / (t - lam)
        out.append(mpmath.exp(-a_mp * zeta * zeta / 2) * (g - 1) / (zeta - eta))
    return out


def t_quadrature(a: float, p: MappedPoint | float, digits: int = QUAD_DIGITS,
                 target: int = QUAD_TARGET) -> BigReal:
    """``T_a(eta) = -sqrt(a/(2 pi)) int e^(-a zeta^2/2) h(zeta) d zeta`` by the trapezoidal rule.

    ``h(zeta) = (g(zeta) - 1)/(zeta - eta)`` with
    ``g(zeta) = zeta t/(t - 1) * (zeta - eta)/(t - lambda)``.  Both
    removable singularities (``zeta = 0`` and ``zeta = eta``) are kept off the
    grid.  The rule is run at step ``h`` and ``h/2``; disagreement beyond
    ``10^-target`` raises :class:`QuadratureError`.
    """
    if not a >= 10:
        raise DomainError(f"t_quadrature needs a >= 10, got {a}")
    eta_f = p.eta if isinstance(p, MappedPoint) else float(p)
    if not math.isfinite(eta_f):
        raise DomainError(f"eta must be finite, got {eta_f}")
    digits = max(int(digits), MIN_DIGITS)
    with mpmath.workdps(digits + 10):
        tol = mpmath.mpf(10) ** (-digits)
        a_mp = mpmath.mpf(a)
        eta = mpmath.mpf(eta_f)
        lam = _t_of_zeta(eta, tol)
        ln10 = math.log(10.0)
        radius = math.sqrt(2.0 * target * ln10 / a) + 2.0
        step = math.pi * math.sqrt(2.0 / (a * (target + 3) * ln10))

        def rule(h):
            # grid eta + (k + offset) h, clear of zeta = 0 and zeta = eta
            offset = 0.5
            frac = (-eta_f / h - offset) % 1.0
            if min(frac, 1.0 - frac) < 0.1:
                offset = 0.25
            k_lo = math.floor((-radius - eta_f) / h - offset)
            k_hi = math.ceil((radius - eta_f) / h - offset)
            h_mp = mpmath.mpf(h)
            nodes = [eta + (k + mpmath.mpf(offset)) * h_mp for k in range(k_lo, k_hi + 1)]
            vals = _h_values(a_mp, eta, lam, nodes, tol)
            edge = max(abs(vals[0]), abs(vals[-1]))
            return h_mp * mpmath.fsum(vals), edge

        coarse, edge = rule(step)
        fine, _ = rule(step / 2)
        pref = -mpmath.sqrt(a_mp / (2 * mpmath.pi))
        limit = mpmath.mpf(10) ** (-target)
        scale = max(abs(pref * fine), 1)
        if abs(pref) * edge > limit * scale:
            raise QuadratureError(f"integrand tail {float(abs(pref) * edge):.3g} not below 1e-{target}")
        if abs(pref * (coarse - fine)) > limit * scale:
            raise QuadratureError(
                f"trapezoidal rule not converged: |T_h - T_h/2| = {float(abs(pref * (coarse - fine))):.3g}"
            )
        value = pref * fine
    with mpmath.workdps(digits):
        return BigReal(+value, digits)


def _p_series_big(a, z, tol):
    # sum z^n / ((a+1)...(a+n))
    term = mpmath.mpf(1)
    total = mpmath.mpf(1)
    n = 0
    while True:
        n += 1
        term = term * z / (a + n)
        total += term
        if term < tol * total:
            return total


def _q_fraction_big(a, z, tol):
    # modified Lentz for 1/(z+1-a- 1(1-a)/(z+3-a- 2(2-a)/(z+5-a- ...)))
    tiny = mpmath.mpf(10) ** (-(mpmath.mp.dps + 50))
    b = z + 1 - a
    c = 1 / tiny
    d = 1 / b if b != 0 else 1 / tiny
    h = d
    i = 0
    while True:
        i += 1
        an = -i * (i - a)
        b += 2
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) < tol:
            return h


def _pq_big(a: float, z: float, digits: int | None):
    if not (a > 0 and z > 0 and math.isfinite(a) and math.isfinite(z)):
        raise DomainError(f"need finite a > 0 and z > 0, got a={a}, z={z}")
    digits = _resolve(digits) if digits is not None else default_digits()
    with mpmath.workdps(digits + 20):
        a_mp = mpmath.mpf(a)
        z_mp = mpmath.mpf(z)
        tol = mpmath.mpf(10) ** (-(digits + 10))
        log_front = a_mp * mpmath.log(z_mp) - z_mp
        if z <= a:
            p = mpmath.exp(log_front - mpmath.loggamma(a_mp + 1)) * _p_series_big(a_mp, z_mp, tol)
            q = 1 - p
        else:
            q = mpmath.exp(log_front - mpmath.loggamma(a_mp)) * _q_fraction_big(a_mp, z_mp, tol)
            p = 1 - q
        if not (0 <= p <= 1 and 0 <= q <= 1):
            raise PrecisionError(f"P, Q outside [0, 1] at a={a}, z={z}")
    with mpmath.workdps(digits):
        return BigReal(+p, digits), BigReal(+q, digits)


def q_oracle_big(a: float, z: float, digits: int | None = None) -> BigReal:
    """``Q(a, z)``: series for ``P`` when ``z <= a``, continued fraction for ``Q`` beyond."""
    return _pq_big(a, z, digits)[1]


def p_oracle_big(a: float, z: float, digits: int | None = None) -> BigReal:
    return _pq_big(a, z, digits)[0]


def recursion_residual(a: float, z: float, order: int = 6) -> float:
    """``-gtilde_{a+1}(z) + (z/a) gtilde_a(z) + 1/pi`` from the double-precision path."""
    from .expansion import gtilde

    if a == math.floor(a):
        raise DomainError("the recursion check needs non-integer a")
    upper = gtilde(a + 1.0, z, order).value
    lower = gtilde(a, z, order).value
    return -upper + (z / a) * lower + 1.0 / math.pi


def connection_residual(a: float, z: float, order: int = 6) -> tuple[float, float]:
    """Residual of ``e^{i pi a} Gamma(-a, z e^{i pi}) - e^{-i pi a} Gamma(-a, z e^{-i pi}) = -2 pi i / Gamma(a+1)``.

    Returns ``(relative to the right-hand side, relative to the larger branch value)``.
    Both branch values are scaled by ``Gamma(a+1)`` before subtracting so that
    no intermediate under- or overflows.
    """
    from .expansion import gamma_upper_neg
    from .special import cospi, sinpi

    shift = math.lgamma(a + 1.0)

    def scaled(branch):
        res = gamma_upper_neg(a, z, branch, order, log_scaled=True)
        m = complex(res.value)
        if m == 0:
            return 0j
        return m / abs(m) * math.exp(math.log(abs(m)) + res.log_scale + shift)

    plus, minus = scaled(1), scaled(-1)
    phase = complex(cospi(a), sinpi(a))
    lhs = phase * plus - phase.conjugate() * minus
    diff = abs(lhs + 2j * math.pi)
    return diff / (2.0 * math.pi), diff / max(abs(plus), 2.0 * math.pi)
