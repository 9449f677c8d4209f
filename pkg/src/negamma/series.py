"""Truncated power series with exact rational coefficients.

A series is a list of :class:`fractions.Fraction`; index ``k`` holds the
coefficient of ``x**k``.  Every routine takes the number of coefficients
to produce, so truncation is always explicit.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

Series = list[Fraction]


def mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> Series:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def reciprocal(a: Sequence[Fraction], n: int) -> Series:
    """Series of ``1/a(x)``; requires ``a[0] != 0``."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no constant term")
    out = [Fraction(0)] * n
    out[0] = 1 / Fraction(a[0])
    for k in range(1, n):
        acc = sum((a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = -acc / a[0]
    return out


def sqrt_one(a: Sequence[Fraction], n: int) -> Series:
    """Square root of a series whose constant term is 1."""
    if a[0] != 1:
        raise ValueError("sqrt_one needs a[0] == 1")
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for k in range(1, n):
        ak = a[k] if k < len(a) else Fraction(0)
        acc = sum((out[i] * out[k - i] for i in range(1, k)), Fraction(0))
        out[k] = (ak - acc) / 2
    return out


def exp_series(a: Sequence[Fraction], n: int) -> Series:
    """``exp(a(x))`` for a series with ``a[0] == 0``.

    Uses ``e' = a' e``, i.e. ``k e_k = sum_j j a_j e_{k-j}``.
    """
    if a and a[0] != 0:
        raise ValueError("exp_series needs a[0] == 0")
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for k in range(1, n):
        acc = sum((j * a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = acc / k
    return out


def derivative(a: Sequence[Fraction]) -> Series:
    return [k * a[k] for k in range(1, len(a))]


def revert(a: Sequence[Fraction], n: int) -> Series:
    """Compositional inverse by Lagrange inversion.

    Given ``y = a(x)`` with ``a[0] == 0`` and ``a[1] != 0`` returns ``b``
    with ``a(b(y)) = y + O(y**n)``.  Cost is cubic in ``n``; fine for a few
    dozen terms.
    """
    if a[0] != 0 or a[1] == 0:
        raise ValueError("revert needs a[0] == 0 and a[1] != 0")
    phi = reciprocal(a[1:], n)  # x / a(x)
    out = [Fraction(0)] * n
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        power = mul(power, phi, n)
        out[k] = power[k - 1] / k
    return out


def log1pmx_over_square(n: int) -> Series:
    """Series of ``2 (m - log(1 + m)) / m**2``, the square of ``eta/m``."""
    return [Fraction(2 * (-1) ** k, k + 2) for k in range(n)]


def eta_of_mu(n: int) -> Series:
    """``eta(mu) = mu * sqrt(2 (mu - log(1 + mu))) / |mu|`` as a series in ``mu``."""
    root = sqrt_one(log1pmx_over_square(n), n - 1)
    return [Fraction(0)] + root


def mu_of_eta(n: int) -> Series:
    """Inverse of :func:`eta_of_mu`, ``mu = eta + eta**2/3 + eta**3/36 + ...``.

    Differentiating ``eta**2/2 = mu - log(1 + mu)`` gives
    ``mu * mu' = (1 + mu) * eta``.  Matching powers of ``eta`` turns this into a
    quadratic-cost recurrence that yields the same coefficients as
    :func:`revert` applied to :func:`eta_of_mu`.
    """
    c = [Fraction(0)] * max(n, 2)
    c[1] = Fraction(1)
    for k in range(2, n):
        acc = sum((Fraction(k + 1 - i) * c[i] * c[k + 1 - i] for i in range(2, k)), Fraction(0))
        c[k] = (c[k - 1] - acc) / (k + 1)
    return c[:n]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> tuple[Fraction, ...]:
    """Bernoulli numbers ``B_0 .. B_n`` (with ``B_1 = -1/2``)."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum((comb(m + 1, k) * b[k] for k in range(m)), Fraction(0))
        b.append(-acc / (m + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def reciprocal_gamma_star(n: int) -> tuple[Fraction, ...]:
    """Coefficients ``g_0 .. g_{n-1}`` of ``1/Gamma*(a) ~ sum g_k a**-k``.

    ``log Gamma*(a)`` is the Stirling series ``sum B_2j / (2j (2j-1) a**(2j-1))``,
    so the reciprocal is the exponential of its negative.
    """
    b = bernoulli(n + 2)
    log_series = [Fraction(0)] * n
    for j in range(1, n // 2 + 2):
        p = 2 * j - 1
        if p < n:
            log_series[p] = -b[2 * j] / (2 * j * (2 * j - 1))
    return tuple(exp_series(log_series, n))
