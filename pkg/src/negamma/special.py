"""Double-precision scalar building blocks.

``erfc`` and ``ln_gamma`` delegate to the C library through :mod:`math`;
Dawson's integral comes from the selected kernel backend; ``gamma_star``
switches to its asymptotic series for ``a >= 12``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, RangeOverflowError
from .series import reciprocal_gamma_star

TWO_OVER_SQRT_PI = 1.1283791670955125739
LOG_SQRT_2PI = 0.91893853320467274178

GAMMA_STAR_SWITCH = 12.0
_GAMMA_STAR_TERMS = 22
# Gamma*(a) ~ sum (-1)^n g_n / a^n where 1/Gamma*(a) ~ sum g_n / a^n.
_GAMMA_STAR_SERIES = tuple(
    float((-1) ** n * g) for n, g in enumerate(reciprocal_gamma_star(_GAMMA_STAR_TERMS))
)

# exp(x**2) overflows past this
ERFC_IMAG_MAX = 26.6417


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise RangeOverflowError(f"non-finite complex value ({self.re}, {self.im})")

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexValue":
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def conjugate(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)


def erfc(x: float) -> float:
    return math.erfc(x)


def dawson(x: float) -> float:
    """Dawson's integral ``F(x) = exp(-x**2) * integral_0^x exp(t**2) dt``.

    Maclaurin series for ``|x| <= 1``, Rybicki's exponentially convergent sum
    for ``1 < |x| < 10`` and the asymptotic series ``1/(2x) + 1/(4x^3) + ...``
    beyond.
    """
    return kernels.dawson(float(x))


def erfc_imag(x: float) -> ComplexValue:
    """``erfc(i x) = 1 - (2i/sqrt(pi)) exp(x**2) F(x)`` for real ``x``."""
    if abs(x) > ERFC_IMAG_MAX:
        raise RangeOverflowError(f"exp(x**2) overflows for x = {x}")
    im = -TWO_OVER_SQRT_PI * math.exp(x * x) * dawson(x)
    return ComplexValue(1.0, im)


def ln_gamma(a: float) -> float:
    if not a > 0.0:
        raise DomainError(f"ln_gamma needs a > 0, got {a}")
    return math.lgamma(a)


def gamma_star(a: float) -> float:
    """Scaled gamma function ``sqrt(a/(2 pi)) e^a a^-a Gamma(a)``, which tends to 1."""
    if not a > 0.0:
        raise DomainError(f"gamma_star needs a > 0, got {a}")
    if a < GAMMA_STAR_SWITCH:
        return math.exp(math.lgamma(a) + a - a * math.log(a) + 0.5 * math.log(a) - LOG_SQRT_2PI)
    x = 1.0 / a
    acc = 0.0
    for g in reversed(_GAMMA_STAR_SERIES):
        acc = acc * x + g
    return acc


def sinpi(x: float) -> float:
    """``sin(pi x)`` with the argument reduced to ``[-1/2, 1/2]`` first."""
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def cospi(x: float) -> float:
    n = round(x)
    r = x - n
    if abs(r) == 0.5:
        return 0.0
    c = math.cos(math.pi * r)
    return -c if n % 2 else c


def is_integer(a: float) -> bool:
    return math.isfinite(a) and a == math.floor(a)
