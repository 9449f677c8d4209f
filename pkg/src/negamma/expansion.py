"""Uniform asymptotic evaluators for the incomplete gamma functions.

Positive parameters:

    Q(a, z) = erfc(eta sqrt(a/2)) / 2 + exp(-a eta^2/2) / sqrt(2 pi a) * S_a(eta)

with ``S_a ~ sum C_n / a^n``.  Negative parameters use the same coefficients
with alternating signs, ``T_a ~ sum (-1)^n C_n / a^n``, around an error
function of imaginary argument (equivalently Dawson's integral ``F``):

    gamma*(-a, -z) = z^a [cos(pi a) - 2 sin(pi a) e^E Y]

where ``E = a eta^2 / 2``, ``x = eta sqrt(a/2)`` and
``Y = F(x)/sqrt(pi) + T_a(eta)/sqrt(2 pi a)``.  The branch values
``Gamma(-a, z e^{+-i pi})`` and ``gamma(-a, z e^{+-i pi})`` are assembled from
the same ``Y`` so that every huge factor stays explicit and can be moved into
a log scale.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .coefficients import DEFAULT_ORDER, CoefficientTable, default_table
from .errors import DomainError, RangeOverflowError
from .mapping import MappedPoint, map_point
from .special import ComplexValue, cospi, dawson, erfc, gamma_star, is_integer, sinpi

SQRT_PI = math.sqrt(math.pi)
EULER_GAMMA = 0.57721566490153286061
MAX_EXP = 709.0
# parameter above which Q, P and E_p use the uniform expansion (error ~ 1e-14 or less)
UNIFORM_MIN_A = 20.0


class Regime(str, enum.Enum):
    MACLAURIN = "maclaurin"
    LAURENT = "laurent"
    EXACT_INTEGER_A = "exact_integer_a"
    SERIES = "series"
    CONTINUED_FRACTION = "continued_fraction"


@dataclass(frozen=True)
class EvalResult:
    """A value with the regime that produced it.

    The represented number is ``value * exp(log_scale)``; ``log_scale`` is 0
    unless log-scaled output was requested.  ``est_truncation`` is the size of
    the last retained series term, ``|C_N(eta)| / a^N``.
    """

    value: Union[float, ComplexValue]
    regime: Regime
    order_used: int
    est_truncation: float
    log_scale: float = 0.0

    def __post_init__(self):
        if self.est_truncation < 0:
            raise ValueError("est_truncation must be >= 0")
        if isinstance(self.value, float) and not math.isfinite(self.value):
            raise RangeOverflowError(f"non-finite result {self.value}")

    def __float__(self) -> float:
        if isinstance(self.value, ComplexValue):
            raise TypeError("complex result")
        return self.value * math.exp(self.log_scale) if self.log_scale else self.value

    def __complex__(self) -> complex:
        v = complex(self.value)
        return v * math.exp(self.log_scale) if self.log_scale else v


def _table(table: CoefficientTable | None) -> CoefficientTable:
    return default_table() if table is None else table


def _check_order(order: int, table: CoefficientTable) -> None:
    if not 0 <= order <= table.max_order:
        raise DomainError(f"order {order} outside 0..{table.max_order}")


def _regime(p: MappedPoint, table: CoefficientTable) -> Regime:
    return Regime.MACLAURIN if abs(p.eta) <= table.switch_radius else Regime.LAURENT


def t_series(a: float, p: MappedPoint, order: int = DEFAULT_ORDER,
             table: CoefficientTable | None = None) -> EvalResult:
    """``T_a(eta) ~ sum_{n<=order} (-1)^n C_n(eta) / a^n``."""
    table = _table(table)
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    _check_order(order, table)
    total, last = table.kernel.series(p.eta, p.mu, a, order, True)
    return EvalResult(total, _regime(p, table), order, last)


def s_series(a: float, p: MappedPoint, order: int = DEFAULT_ORDER,
             table: CoefficientTable | None = None) -> EvalResult:
    """``S_a(eta) ~ sum_{n<=order} C_n(eta) / a^n``."""
    table = _table(table)
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    _check_order(order, table)
    total, last = table.kernel.series(p.eta, p.mu, a, order, False)
    return EvalResult(total, _regime(p, table), order, last)


def _positive_parts(a, z, order, table):
    if not (a > 0 and z > 0):
        raise DomainError(f"need a > 0 and z > 0, got a={a}, z={z}")
    p = map_point(a, z)
    s = s_series(a, p, order, table)
    x = p.eta * math.sqrt(0.5 * a)
    corr = math.exp(-0.5 * a * p.eta * p.eta) / math.sqrt(2.0 * math.pi * a) * s.value
    return x, corr, s


def _uniform_pair(a, z, order, table):
    # the smaller of Q, P is computed directly and the other as its complement,
    # which keeps relative accuracy and makes P + Q == 1 hold in floating point
    x, corr, s = _positive_parts(a, z, order, table)
    if x >= 0.0:
        q = 0.5 * erfc(x) + corr
        return q, 1.0 - q, s
    p = 0.5 * erfc(-x) - corr
    return 1.0 - p, p, s


def q_uniform(a: float, z: float, order: int = DEFAULT_ORDER,
              table: CoefficientTable | None = None) -> EvalResult:
    """``Q(a, z) = Gamma(a, z) / Gamma(a)`` from the uniform expansion (intended for a >= 1)."""
    q, _, s = _uniform_pair(a, z, order, table)
    return EvalResult(q, s.regime, order, s.est_truncation)


def p_uniform(a: float, z: float, order: int = DEFAULT_ORDER,
              table: CoefficientTable | None = None) -> EvalResult:
    """``P(a, z) = gamma(a, z) / Gamma(a) = 1 - Q(a, z)``."""
    _, p, s = _uniform_pair(a, z, order, table)
    return EvalResult(p, s.regime, order, s.est_truncation)


def _p_series(a: float, z: float) -> float:
    # P = z^a e^-z / Gamma(a+1) * sum z^n / ((a+1)...(a+n))
    term = 1.0
    total = 1.0
    ap = a
    for _ in range(10000):
        ap += 1.0
        term *= z / ap
        total += term
        if term < 1e-17 * total:
            return total * math.exp(a * math.log(z) - z - math.lgamma(a + 1.0))
    raise ArithmeticError("P series did not converge")


def _q_continued_fraction(a: float, z: float) -> float:
    # modified Lentz on Q = z^a e^-z / Gamma(a) * 1/(z+1-a- 1(1-a)/(z+3-a- ...))
    tiny = 1e-300
    b = z + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * math.exp(a * math.log(z) - z - math.lgamma(a))
    raise ArithmeticError("Q continued fraction did not converge")


def _ratios(a: float, z: float, order: int, table) -> tuple[float, float, EvalResult]:
    if not (a > 0 and z > 0):
        raise DomainError(f"need a > 0 and z > 0, got a={a}, z={z}")
    if a >= UNIFORM_MIN_A:
        q, p, info = _uniform_pair(a, z, order, table)
        return p, q, EvalResult(q, info.regime, order, info.est_truncation)
    if z < a + 1.0:
        p = _p_series(a, z)
        return p, 1.0 - p, EvalResult(p, Regime.SERIES, 0, 0.0)
    q = _q_continued_fraction(a, z)
    return 1.0 - q, q, EvalResult(q, Regime.CONTINUED_FRACTION, 0, 0.0)


def q_ratio(a: float, z: float, order: int = DEFAULT_ORDER,
            table: CoefficientTable | None = None) -> EvalResult:
    """``Q(a, z)`` for any ``a > 0``: uniform expansion for ``a >= 20``, classical methods below."""
    _, q, info = _ratios(a, z, order, table)
    return EvalResult(q, info.regime, info.order_used, info.est_truncation)


def p_ratio(a: float, z: float, order: int = DEFAULT_ORDER,
            table: CoefficientTable | None = None) -> EvalResult:
    """``P(a, z)`` for any ``a > 0``; see :func:`q_ratio`."""
    p, _, info = _ratios(a, z, order, table)
    return EvalResult(p, info.regime, info.order_used, info.est_truncation)


class NegativeParts(NamedTuple):
    point: MappedPoint
    x: float  # eta sqrt(a/2)
    exponent: float  # a eta^2 / 2
    dawson: float
    t: EvalResult
    y: float  # F(x)/sqrt(pi) + T/sqrt(2 pi a)


def negative_parts(a: float, z: float, order: int = DEFAULT_ORDER,
                   table: CoefficientTable | None = None) -> NegativeParts:
    """Shared ingredients of every negative-parameter evaluator."""
    if not (a > 0 and z > 0):
        raise DomainError(f"need a > 0 and z > 0, got a={a}, z={z}")
    p = map_point(a, z)
    t = t_series(a, p, order, table)
    x = p.eta * math.sqrt(0.5 * a)
    f = dawson(x)
    y = f / SQRT_PI + t.value / math.sqrt(2.0 * math.pi * a)
    return NegativeParts(p, x, 0.5 * a * p.eta * p.eta, f, t, y)


def _fold(re: float, im: float, log_scale: float, log_scaled: bool, what: str):
    """Multiply ``re + i im`` by ``exp(log_scale)`` unless log-scaled output was asked for."""
    if log_scaled:
        return re, im, log_scale
    if log_scale <= MAX_EXP:
        factor = math.exp(log_scale)
        return re * factor, im * factor, 0.0
    mag = math.hypot(re, im)
    if mag == 0.0:
        return 0.0, 0.0, 0.0
    log_mag = math.log(mag) + log_scale
    if log_mag > MAX_EXP:
        raise RangeOverflowError(f"{what} overflows double precision; use log_scaled=True")
    factor = math.exp(log_mag) / mag
    return re * factor, im * factor, 0.0


def gamma_star_neg(a: float, z: float, order: int = DEFAULT_ORDER,
                   table: CoefficientTable | None = None, log_scaled: bool = False) -> EvalResult:
    """``gamma*(-a, -z)`` for real ``a > 0`` and ``z > 0``.

    Integer ``a`` is exact: ``(-z)^a``.
    """
    if not (a > 0 and z > 0):
        raise DomainError(f"need a > 0 and z > 0, got a={a}, z={z}")
    if is_integer(a):
        sign = -1.0 if int(a) % 2 else 1.0
        if not log_scaled:
            try:
                return EvalResult(sign * math.pow(z, a), Regime.EXACT_INTEGER_A, 0, 0.0)
            except OverflowError:
                raise RangeOverflowError("(-z)^a overflows; use log_scaled=True") from None
        return EvalResult(sign, Regime.EXACT_INTEGER_A, 0, 0.0, a * math.log(z))
    parts = negative_parts(a, z, order, table)
    c, s = cospi(a), sinpi(a)
    e = parts.exponent
    t = parts.t
    if not log_scaled and e <= MAX_EXP:
        inner = c - 2.0 * s * math.exp(e) * parts.y
        try:
            value = math.pow(z, a) * inner
        except OverflowError:
            value = math.inf
        if math.isfinite(value):
            return EvalResult(value, t.regime, order, t.est_truncation)
    # log form: z^a e^E (c e^-E - 2 s Y)
    mantissa = c * math.exp(-e) - 2.0 * s * parts.y
    value, _, scale = _fold(mantissa, 0.0, a * math.log(z) + e, log_scaled, "gamma*(-a,-z)")
    return EvalResult(value, t.regime, order, t.est_truncation, scale)


def gtilde(a: float, z: float, order: int = DEFAULT_ORDER,
           table: CoefficientTable | None = None) -> EvalResult:
    """Overflow-free normalisation of ``gamma*(-a, -z)``.

    Defined by ``gamma*(-a, -z) = z^a cos(pi a) + sin(pi a) Gamma(a) e^z gtilde_a(z)``
    and evaluated as ``-(a / (pi Gamma*(a))) [sqrt(2/a) F(x) + T_a(eta)/a]``.
    """
    if is_integer(a):
        raise DomainError("gtilde is undefined at integer a (its factor sin(pi a) vanishes)")
    parts = negative_parts(a, z, order, table)
    bracket = math.sqrt(2.0 / a) * parts.dawson + parts.t.value / a
    value = -a / (math.pi * gamma_star(a)) * bracket
    return EvalResult(value, parts.t.regime, order, parts.t.est_truncation)


def gtilde_many(a: float, zs, order: int = DEFAULT_ORDER,
                table: CoefficientTable | None = None) -> list[float]:
    """Vectorised :func:`gtilde` through the compiled kernel (same arithmetic)."""
    table = _table(table)
    if not a > 0 or is_integer(a):
        raise DomainError(f"gtilde needs non-integer a > 0, got {a}")
    _check_order(order, table)
    zs = [float(z) for z in zs]
    for z in zs:
        if not z > 0 or not z / a >= 1e-300:
            raise DomainError(f"z must be positive, got {z}")
    return list(table.kernel.gtilde_many(float(a), gamma_star(a), zs, order))


def _check_branch(branch: int) -> int:
    if branch not in (1, -1):
        raise DomainError(f"branch must be +1 or -1, got {branch}")
    return branch


def _inverse_factorial_log(a: float) -> tuple[float, float]:
    """``(m, s)`` with ``1/Gamma(a+1) = m * exp(s)``, exact gamma when it fits."""
    if a + 1.0 <= 170.0:
        return 1.0 / math.gamma(a + 1.0), 0.0
    return 1.0, -math.lgamma(a + 1.0)


def gamma_upper_neg(a: float, z: float, branch: int, order: int = DEFAULT_ORDER,
                    table: CoefficientTable | None = None, log_scaled: bool = False) -> EvalResult:
    """``Gamma(-a, z e^{i pi branch})`` for real ``a > 0``, ``z > 0``.

    ``-(2 pi / Gamma(a+1)) e^E [(s/2 e^-E + c Y) + i branch (c/2 e^-E - s Y)]``
    with ``c = cos(pi a)``, ``s = sin(pi a)``; the two branches are conjugate.
    """
    b = _check_branch(branch)
    parts = negative_parts(a, z, order, table)
    c, s = cospi(a), sinpi(a)
    e = parts.exponent
    damp = math.exp(-e)
    inv_fact, inv_log = _inverse_factorial_log(a)
    pref = -2.0 * math.pi * inv_fact
    re = pref * (0.5 * s * damp + c * parts.y)
    im = pref * b * (0.5 * c * damp - s * parts.y)
    re, im, log_scale = _fold(re, im, e + inv_log, log_scaled, "Gamma(-a, z e^{+-i pi})")
    return EvalResult(ComplexValue(re, im), parts.t.regime, order, parts.t.est_truncation, log_scale)


def gamma_neg_a(a: float) -> float:
    """``Gamma(-a) = -pi / (sin(pi a) Gamma(a+1))`` for non-integer ``a > 0``."""
    if is_integer(a):
        raise DomainError("Gamma(-a) has a pole at integer a")
    inv_fact, inv_log = _inverse_factorial_log(a)
    return -math.pi * inv_fact * math.exp(inv_log) / sinpi(a)


def gamma_lower_neg(a: float, z: float, branch: int, order: int = DEFAULT_ORDER,
                    table: CoefficientTable | None = None, log_scaled: bool = False) -> EvalResult:
    """``gamma(-a, z e^{i pi branch}) = Gamma(-a) (z e^{i pi branch})^-a gamma*(-a, -z)``."""
    b = _check_branch(branch)
    if is_integer(a):
        raise DomainError("gamma(-a, .) has a pole at integer a")
    parts = negative_parts(a, z, order, table)
    c, s = cospi(a), sinpi(a)
    e = parts.exponent
    inv_fact, inv_log = _inverse_factorial_log(a)
    # Gamma(-a) z^-a gamma* = -(pi/(s Gamma(a+1))) e^E (c e^-E - 2 s Y)
    real_part = -math.pi * inv_fact / s * (c * math.exp(-e) - 2.0 * s * parts.y)
    re = real_part * c
    im = -b * real_part * s
    re, im, log_scale = _fold(re, im, e + inv_log, log_scaled, "gamma(-a, z e^{+-i pi})")
    return EvalResult(ComplexValue(re, im), parts.t.regime, order, parts.t.est_truncation, log_scale)


def _ep_continued_fraction(p: float, z: float) -> float:
    # modified Lentz on E_p(z) = e^-z / (z + p - 1*p/(z + p + 2 - 2(p+1)/(z + p + 4 - ...)))
    tiny = 1e-300
    b = z + p
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (p - 1.0 + i)
        b += 2.0
        d = 1.0 / (an * d + b) if an * d + b != 0 else 1.0 / tiny
        c = b + an / c
        if c == 0:
            c = tiny
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * math.exp(-z)
    raise ArithmeticError("E_p continued fraction did not converge")


def _ep_series(p: float, z: float) -> float:
    # non-integer p: E_p(z) = Gamma(1-p) z^(p-1) - sum (-z)^k / (k! (1-p+k))
    # integer p = n >= 1: the k = n-1 term becomes (-z)^(n-1)/(n-1)! (psi(n) - log z)
    n = round(p)
    integer = p == n and n >= 1
    total = 0.0
    term = 1.0  # (-z)^k / k!
    k = 0
    while True:
        if integer and k == n - 1:
            psi = -EULER_GAMMA + sum(1.0 / m for m in range(1, n))
            contrib = -term * (psi - math.log(z))
        else:
            contrib = term / (1.0 - p + k)
        total -= contrib
        k += 1
        term *= -z / k
        if abs(term) < 1e-17 * abs(total) and k > n:
            break
    if integer:
        return total
    return math.gamma(1.0 - p) * z ** (p - 1.0) + total


def exp_integral_p(p: float, z: float, order: int = DEFAULT_ORDER,
                   table: CoefficientTable | None = None) -> EvalResult:
    """Generalised exponential integral ``E_p(z) = z^(p-1) Gamma(1-p, z)`` for ``z > 0``.

    For ``1 - p >= 20`` this is ``z^(p-1) Gamma(1-p) Q(1-p, z)`` with the uniform
    expansion; otherwise the classical continued fraction (``z >= 1``) or
    power series (``z < 1``).  The series loses about ``-log10|p - n|`` digits
    when ``p`` is within a hair of a positive integer ``n`` without equalling it.
    """
    if not z > 0 or not math.isfinite(z):
        raise DomainError(f"E_p needs z > 0, got {z}")
    if not math.isfinite(p):
        raise DomainError(f"E_p needs finite p, got {p}")
    a = 1.0 - p
    if a >= UNIFORM_MIN_A:
        q = q_uniform(a, z, order, table)
        log_value = (p - 1.0) * math.log(z) + math.lgamma(a)
        if log_value > MAX_EXP:
            raise RangeOverflowError("E_p overflows")
        return EvalResult(q.value * math.exp(log_value), q.regime, order, q.est_truncation)
    if z >= 1.0:
        return EvalResult(_ep_continued_fraction(p, z), Regime.CONTINUED_FRACTION, 0, 0.0)
    return EvalResult(_ep_series(p, z), Regime.SERIES, 0, 0.0)
