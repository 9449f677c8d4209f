"""Pure-Python hot kernels.

This module and ``_kernels.pyx`` implement the same functions with the same
branch points and the same operation order; ``negamma.kernels`` picks one at
import time.  Keep the two in sync.
"""
from __future__ import annotations

import math

SQRT_PI = 1.7724538509055160273
INV_SQRT_PI = 0.56418958354775628695
PI = math.pi

# Dawson regimes: Maclaurin series, Rybicki sampling sum, asymptotic series.
DAWSON_SERIES_MAX = 1.0
DAWSON_ASYMPTOTIC_MIN = 10.0
RYBICKI_STEP = 0.2  # discretisation error ~ exp(-(pi/(2h))**2) ~ 1e-27
RYBICKI_WIDTH = 6.5  # Gaussian window half-width, exp(-6.5**2) ~ 5e-19

SMALL_ETA = 1e-3
LOG1PMX_SERIES_MAX = 0.5
MAX_NEWTON = 30


def dawson(x: float) -> float:
    """Dawson's integral ``F(x) = exp(-x**2) * integral_0^x exp(t**2) dt``."""
    ax = abs(x)
    if ax <= DAWSON_SERIES_MAX:
        # F(x) = sum (-2x^2)^k x / (2k+1)!!
        term = ax
        total = ax
        q = -2.0 * ax * ax
        k = 0
        while True:
            k += 1
            term *= q / (2 * k + 1)
            total += term
            if abs(term) <= 1e-17 * abs(total):
                break
    elif ax < DAWSON_ASYMPTOTIC_MIN:
        # Rybicki: F(x) = pi**-0.5 * sum_{n odd} exp(-(x - n h)**2) / n
        h = RYBICKI_STEP
        n = int(math.floor((ax - RYBICKI_WIDTH) / h))
        if n % 2 == 0:
            n -= 1
        n_hi = (ax + RYBICKI_WIDTH) / h
        total = 0.0
        while n <= n_hi:
            d = ax - n * h
            total += math.exp(-d * d) / n
            n += 2
        total *= INV_SQRT_PI
    else:
        # F(x) ~ 1/(2x) sum (2k-1)!! / (2x^2)^k
        q = 0.5 / (ax * ax)
        term = 1.0
        total = 1.0
        k = 0
        while True:
            k += 1
            term *= (2 * k - 1) * q
            total += term
            if term <= 1e-17 * total or k > 60:
                break
        total *= 0.5 / ax
    return math.copysign(total, x)


def log1pmx(mu: float) -> float:
    """``mu - log(1 + mu)`` without cancellation near ``mu = 0``."""
    if abs(mu) <= LOG1PMX_SERIES_MAX:
        # log(1+mu) = 2 atanh(u), u = mu/(2+mu); mu - 2u = u*mu exactly.
        u = mu / (2.0 + mu)
        u2 = u * u
        s = 0.0
        p = 1.0
        j = 0
        while True:
            t = p / (2 * j + 3)
            s += t
            if t <= 1e-17 * s:
                break
            p *= u2
            j += 1
        return u * mu - 2.0 * u * u2 * s
    return mu - math.log1p(mu)


def eta_from_mu(mu: float) -> float:
    if mu == 0.0:
        return 0.0
    return math.copysign(math.sqrt(2.0 * log1pmx(mu)), mu)


def eta_from_lambda(lam: float, mu: float) -> float:
    """``eta`` from both ``lambda`` and ``mu = lambda - 1``; below 1/2 ``log(lambda)`` is used
    directly, since ``1 + mu`` no longer carries all the digits of ``lambda``."""
    if lam < LOG1PMX_SERIES_MAX:
        return -math.sqrt(2.0 * (mu - math.log(lam)))
    return eta_from_mu(mu)


def log_lambda_from_eta(eta: float) -> float:
    """``s = log(lambda)`` solving ``eta**2/2 = lambda - 1 - s`` with ``sign(s) = sign(eta)``."""
    if eta == 0.0:
        return 0.0
    if abs(eta) <= SMALL_ETA:
        e = eta
        return math.log1p(e * (1.0 + e * (1.0 / 3 + e * (1.0 / 36 + e * (-1.0 / 270 + e / 4320.0)))))
    half = 0.5 * eta * eta
    # Newton on s; phi(s) = lambda - 1 - s - eta^2/2, phi'(s) = mu
    if abs(eta) <= 1.0:
        s = math.log1p(eta + eta * eta / 3.0)
    elif eta > 0.0:
        s = math.log(half + 2.0)
    else:
        s = -1.0 - half
    for _ in range(MAX_NEWTON):
        mu = math.expm1(s)
        if abs(mu) <= LOG1PMX_SERIES_MAX:
            step = (log1pmx(mu) - half) / mu
        else:
            step = (mu - s - half) / mu
        s -= step
        if abs(step) <= 4.4e-16 * abs(s):
            break
    return s


def mu_from_eta(eta: float) -> float:
    """Solve ``eta**2/2 = mu - log(1 + mu)`` with ``sign(mu) = sign(eta)``."""
    if abs(eta) <= SMALL_ETA:
        e = eta
        return e * (1.0 + e * (1.0 / 3 + e * (1.0 / 36 + e * (-1.0 / 270 + e / 4320.0))))
    return math.expm1(log_lambda_from_eta(eta))


class CoeffKernel:
    """Double-precision evaluator for the coefficient functions ``C_n``.

    ``maclaurin[n]`` holds ascending powers of eta; ``laurent_mu[n][k]`` the
    coefficient of ``mu**-k`` (index 0 unused); ``laurent_lam[n]`` the
    numerator ``Q_n`` in ``R_n = Q_n(lambda) / mu**(2n+1)``; ``eta_coef[n]``
    the coefficient of ``eta**-(2n+1)``.
    """

    def __init__(self, maclaurin, laurent_mu, laurent_lam, eta_coef, lengths, switch_radius):
        self.lengths = [int(v) for v in lengths]
        self.maclaurin = [list(map(float, row))[: self.lengths[n]] for n, row in enumerate(maclaurin)]
        self.laurent_mu = [list(map(float, row))[: 2 * n + 2] for n, row in enumerate(laurent_mu)]
        self.laurent_lam = [list(map(float, row))[: 2 * n + 1] for n, row in enumerate(laurent_lam)]
        self.eta_coef = [float(v) for v in eta_coef]
        self.switch_radius = float(switch_radius)
        self.max_order = len(self.maclaurin) - 1

    def eval_c(self, n: int, eta: float, mu: float) -> float:
        if n < 0 or n > self.max_order:
            raise IndexError(n)
        if abs(eta) <= self.switch_radius:
            acc = 0.0
            for c in reversed(self.maclaurin[n]):
                acc = acc * eta + c
            return acc
        deg = 2 * n + 1
        if eta > 0.0:
            w = 1.0 / mu
            r = self.laurent_mu[n]
            acc = r[deg]
            for k in range(deg - 1, 0, -1):
                acc = acc * w + r[k]
            rational = acc * w
        else:
            lam = 1.0 + mu
            acc = 0.0
            for q in reversed(self.laurent_lam[n]):
                acc = acc * lam + q
            rational = acc / mu ** deg
        return rational + self.eta_coef[n] / eta ** deg

    def series(self, eta: float, mu: float, a: float, order: int, alternate: bool):
        """``sum_{n<=order} (+-1)^n C_n / a^n`` and the magnitude of the last term."""
        if order < 0 or order > self.max_order:
            raise IndexError(order)
        total = 0.0
        scale = 1.0
        step = (-1.0 / a) if alternate else (1.0 / a)
        last = 0.0
        for n in range(order + 1):
            last = scale * self.eval_c(n, eta, mu)
            total += last
            scale *= step
        return total, abs(last)

    def gtilde_many(self, a: float, gamma_star: float, zs, order: int):
        """Normalised ``gtilde_a(z)`` for each ``z`` at a fixed non-integer ``a``."""
        if order < 0 or order > self.max_order:
            raise IndexError(order)
        root = math.sqrt(0.5 * a)
        pref = -a / (PI * gamma_star)
        c1 = math.sqrt(2.0 / a)
        out = []
        for z in zs:
            mu = (z - a) / a
            eta = eta_from_lambda(z / a, mu)
            t, _ = self.series(eta, mu, a, order, True)
            out.append(pref * (c1 * dawson(eta * root) + t / a))
        return out
