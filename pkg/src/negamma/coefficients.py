"""Exact generation and fast evaluation of the coefficient functions ``C_n(eta)``.

The coefficients obey ``C_0 = 1/mu - 1/eta`` and
``eta C_n = C_{n-1}'(eta) + g_n f(eta)`` with ``mu = lambda - 1``,
``f = eta/mu`` and ``g_n`` the coefficients of ``1/Gamma*(a)``.  Two exact
representations are generated:

* Laurent: ``C_n = sum_k r_{n,k} mu^-k + e_n eta^-(2n+1)``.  Substituting
  ``d/d eta = (lambda eta / mu) d/d mu`` gives
  ``R_n = (1 + mu)/mu R_{n-1}' + g_n/mu`` for the rational part and
  ``e_n = -(2n-1) e_{n-1}`` for the pure ``eta`` part.
* Maclaurin: a power series in ``eta``, obtained from the series of
  ``mu(eta)``; the two singular parts cancel so it is regular at 0.

The Laurent form suffers cancellation for small ``|eta|``; the Maclaurin form
converges for ``|eta| < 2 sqrt(pi)``.  The evaluator uses Maclaurin inside
``switch_radius`` and Laurent outside.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import kernels
from .errors import GenerationError
from .mapping import MappedPoint
from .series import derivative, mu_of_eta, reciprocal, reciprocal_gamma_star

DEFAULT_ORDER = 6
DEFAULT_MAX_ORDER = 8
DEFAULT_SWITCH_RADIUS = 2.0
DEFAULT_TERMS = 130
MACLAURIN_TAIL = 1e-19


def double_factorial(n: int) -> int:
    out = 1
    for k in range(n, 0, -2):
        out *= k
    return out


def expected_eta_coef(n: int) -> int:
    """``(-1)**(n+1) (2n-1)!!`` with ``(-1)!! = 1``."""
    return (-1) ** (n + 1) * double_factorial(2 * n - 1)


@dataclass(frozen=True)
class GammaStarCoeffs:
    gamma: tuple[Fraction, ...]


@dataclass(frozen=True)
class LaurentC:
    n: int
    r: tuple[Fraction, ...]  # r[k - 1] multiplies mu**-k, k = 1 .. 2n+1
    eta_coef: Fraction

    @property
    def degree(self) -> int:
        return 2 * self.n + 1

    def lambda_poly(self) -> tuple[Fraction, ...]:
        """Coefficients ``q_j`` with ``sum_k r_k mu^-k = sum_j q_j lambda^j / mu^(2n+1)``.

        Well conditioned as ``lambda -> 0``, where the ``mu`` powers cancel badly.
        """
        d = self.degree
        # numerator in powers of mu: sum_k r_k mu^(d - k)
        num = [Fraction(0)] * d
        for k, r in enumerate(self.r, start=1):
            num[d - k] += r
        out = [Fraction(0)] * d
        for j, c in enumerate(num):
            if c:
                for i in range(j + 1):
                    out[i] += c * comb(j, i) * (-1) ** (j - i)
        return tuple(out)

    def evaluate(self, mu: float, eta: float) -> float:
        """Naive double-precision evaluation; loses digits for small ``|eta|``."""
        total = sum(float(r) * mu ** (-k) for k, r in enumerate(self.r, start=1))
        return total + float(self.eta_coef) * eta ** (-self.degree)

    def evaluate_mp(self, mu, eta):
        """Evaluate with :mod:`mpmath` numbers at the caller's working precision."""
        import mpmath

        total = mpmath.mpf(0)
        for k, r in enumerate(self.r, start=1):
            total += mpmath.mpf(r.numerator) / r.denominator * mu ** (-k)
        e = self.eta_coef
        return total + mpmath.mpf(e.numerator) / e.denominator * eta ** (-self.degree)


@dataclass(frozen=True)
class MaclaurinC:
    n: int
    c: tuple[float, ...]

    def evaluate(self, eta: float) -> float:
        acc = 0.0
        for v in reversed(self.c):
            acc = acc * eta + v
        return acc


@dataclass(frozen=True)
class CoefficientTable:
    max_order: int
    laurent: tuple[LaurentC, ...]
    maclaurin: tuple[MaclaurinC, ...]
    switch_radius: float
    gamma: GammaStarCoeffs
    kernel: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (len(self.laurent) == len(self.maclaurin) == self.max_order + 1):
            raise ValueError("table needs max_order + 1 entries of each representation")
        object.__setattr__(self, "kernel", _make_kernel(self))

    def eval(self, n: int, p: MappedPoint) -> float:
        return eval_C(self, n, p)


def _make_kernel(table: CoefficientTable):
    n_rows = table.max_order + 1
    width = max(len(m.c) for m in table.maclaurin)
    mac = np.zeros((n_rows, width))
    lengths = np.zeros(n_rows, dtype=np.int_)
    lmu = np.zeros((n_rows, 2 * table.max_order + 2))
    llam = np.zeros((n_rows, 2 * table.max_order + 2))
    ec = np.zeros(n_rows)
    for n in range(n_rows):
        m = table.maclaurin[n]
        mac[n, : len(m.c)] = m.c
        lengths[n] = len(m.c)
        lc = table.laurent[n]
        for k, r in enumerate(lc.r, start=1):
            lmu[n, k] = float(r)
        for j, q in enumerate(lc.lambda_poly()):
            llam[n, j] = float(q)
        ec[n] = float(lc.eta_coef)
    return kernels.CoeffKernel(mac, lmu, llam, ec, lengths, table.switch_radius)


def generate_gamma_coeffs(count: int) -> GammaStarCoeffs:
    return GammaStarCoeffs(reciprocal_gamma_star(count))


def generate_laurent(order: int) -> list[LaurentC]:
    if order < 0:
        raise ValueError("order must be >= 0")
    gamma = reciprocal_gamma_star(order + 1)
    rational = {1: Fraction(1)}
    eta_coef = Fraction(-1)
    out = [LaurentC(0, (Fraction(1),), eta_coef)]
    for n in range(1, order + 1):
        nxt: dict[int, Fraction] = {}
        # (1 + mu)/mu * d/dmu (r mu^-k) = -k r (mu^-(k+2) + mu^-(k+1))
        for k, r in rational.items():
            nxt[k + 2] = nxt.get(k + 2, Fraction(0)) - k * r
            nxt[k + 1] = nxt.get(k + 1, Fraction(0)) - k * r
        nxt[1] = nxt.get(1, Fraction(0)) + gamma[n]
        rational = nxt
        eta_coef = -(2 * n - 1) * eta_coef
        if eta_coef != expected_eta_coef(n):
            raise GenerationError(f"eta coefficient of C_{n} is {eta_coef}")
        deg = 2 * n + 1
        if max(rational) != deg:
            raise GenerationError(f"C_{n} rational part has degree {max(rational)}, expected {deg}")
        out.append(LaurentC(n, tuple(rational.get(k, Fraction(0)) for k in range(1, deg + 1)), eta_coef))
    return out


def maclaurin_exact(order: int, terms: int) -> list[list[Fraction]]:
    """Exact Maclaurin coefficients of ``C_0 .. C_order``, ``terms`` of each."""
    if order < 0 or terms < 1:
        raise ValueError("need order >= 0 and terms >= 1")
    gamma = reciprocal_gamma_star(order + 1)
    length = terms + 2 * order + 2
    mu = mu_of_eta(length + 1)
    f = reciprocal(mu[1:], length)  # eta / mu
    if f[0] != 1:
        raise GenerationError("f(0) must be 1")
    current = f[1:]  # C_0 = (f - 1) / eta
    out = [current[:terms]]
    for n in range(1, order + 1):
        d = derivative(current)
        rhs = [d[j] + gamma[n] * f[j] for j in range(len(d))]
        if rhs[0] != 0:
            raise GenerationError(f"C_{n - 1}'(0) + g_{n} f(0) = {rhs[0]} is not zero")
        current = rhs[1:]
        out.append(current[:terms])
    return out


def _trim(coeffs: list[Fraction], radius: float, tail: float, n: int) -> tuple[float, ...]:
    values = [float(c) for c in coeffs]
    keep = len(values)
    while keep > 1 and abs(values[keep - 1]) * radius ** (keep - 1) <= tail:
        keep -= 1
    if keep > len(values) - 8:
        raise GenerationError(f"Maclaurin series of C_{n} too short for radius {radius}")
    return tuple(values[:keep])


def generate_maclaurin(order: int, terms: int = DEFAULT_TERMS, radius: float | None = None,
                       tail: float = MACLAURIN_TAIL) -> list[MaclaurinC]:
    """Maclaurin representations, trimmed so the first dropped term at ``radius`` is below ``tail``.

    With ``radius=None`` no trimming is done.
    """
    exact = maclaurin_exact(order, terms)
    if radius is None:
        return [MaclaurinC(n, tuple(float(c) for c in row)) for n, row in enumerate(exact)]
    return [MaclaurinC(n, _trim(row, radius, tail, n)) for n, row in enumerate(exact)]


def build_table(max_order: int = DEFAULT_MAX_ORDER, switch_radius: float = DEFAULT_SWITCH_RADIUS,
                terms: int = DEFAULT_TERMS) -> CoefficientTable:
    laurent = tuple(generate_laurent(max_order))
    maclaurin = tuple(generate_maclaurin(max_order, terms, radius=switch_radius))
    gamma = generate_gamma_coeffs(max(max_order + 1, 5))
    return CoefficientTable(max_order, laurent, maclaurin, switch_radius, gamma)


@lru_cache(maxsize=1)
def default_table() -> CoefficientTable:
    return build_table()


def eval_C(table: CoefficientTable, n: int, p: MappedPoint) -> float:
    """``C_n`` at ``p``: Maclaurin for ``|eta| <= switch_radius``, Laurent beyond."""
    if not 0 <= n <= table.max_order:
        raise IndexError(f"order {n} outside 0..{table.max_order}")
    return table.kernel.eval_c(n, p.eta, p.mu)


def _frac(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def table_to_dict(table: CoefficientTable, n_max: int | None = None) -> dict:
    """JSON-ready export of the gamma coefficients and ``C_0 .. C_n_max``."""
    if n_max is None:
        n_max = DEFAULT_ORDER
    if not 0 <= n_max <= table.max_order:
        raise IndexError(f"n_max {n_max} outside 0..{table.max_order}")
    n_gamma = max(n_max + 1, 5)
    return {
        "gamma": [_frac(g) for g in table.gamma.gamma[:n_gamma]],
        "switch_radius": table.switch_radius,
        "coefficients": [
            {
                "n": n,
                "laurent": [[k, r.numerator, r.denominator] for k, r in enumerate(table.laurent[n].r, start=1)],
                "eta_coef": _frac(table.laurent[n].eta_coef),
                "maclaurin": list(table.maclaurin[n].c),
            }
            for n in range(n_max + 1)
        ],
    }
