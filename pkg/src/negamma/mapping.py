"""The saddle-point variable ``eta`` with ``eta**2/2 = lambda - 1 - log(lambda)``.

Only the real branch is handled: ``lambda > 0`` and ``sign(eta) = sign(lambda - 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError

MIN_LAMBDA = 1e-300
# |eta| beyond which lambda under- or overflows a double
MAX_NEG_ETA = 37.1
MAX_POS_ETA = 1.8e154


@dataclass(frozen=True)
class MappedPoint:
    """A point ``lambda = z/a`` with ``mu = lambda - 1`` and its ``eta``.

    ``mu`` is stored rather than recomputed from ``lambda`` so that no
    cancellation is introduced near the transition point.
    """

    lam: float
    mu: float
    eta: float

    @property
    def f(self) -> float:
        """``f(eta) = eta / (lambda - 1) = (1/lambda) d lambda / d eta``."""
        if self.mu == 0.0:
            return 1.0
        return self.eta / self.mu


def eta_from_lambda(lam: float) -> MappedPoint:
    if not (math.isfinite(lam) and lam >= MIN_LAMBDA):
        raise DomainError(f"lambda must be finite and >= {MIN_LAMBDA}, got {lam}")
    mu = lam - 1.0
    return MappedPoint(lam, mu, kernels.eta_from_lambda(lam, mu))


def map_point(a: float, z: float) -> MappedPoint:
    """Map ``(a, z)`` to ``lambda = z/a`` with ``mu = (z - a)/a`` formed directly."""
    if not (a > 0.0 and z > 0.0):
        raise DomainError(f"need a > 0 and z > 0, got a={a}, z={z}")
    lam = z / a
    if not lam >= MIN_LAMBDA:
        raise DomainError(f"z/a = {lam} is below {MIN_LAMBDA}")
    mu = (z - a) / a
    return MappedPoint(lam, mu, kernels.eta_from_lambda(lam, mu))


def lambda_from_eta(eta: float) -> MappedPoint:
    """Invert the mapping: the unique ``lambda > 0`` on the side given by ``sign(eta)``.

    ``lambda`` and ``mu`` both come from ``log(lambda)``, so ``lambda`` keeps full
    relative accuracy even when it is tiny.
    """
    if not math.isfinite(eta):
        raise DomainError(f"eta must be finite, got {eta}")
    if eta < -MAX_NEG_ETA or eta > MAX_POS_ETA:
        raise DomainError(f"lambda({eta}) is not representable")
    if abs(eta) <= kernels.SMALL_ETA:
        mu = kernels.mu_from_eta(eta)
        return MappedPoint(1.0 + mu, mu, eta)
    s = kernels.log_lambda_from_eta(eta)
    return MappedPoint(math.exp(s), math.expm1(s), eta)


def t_from_zeta(zeta: float) -> float:
    """``t`` with ``zeta**2/2 = t - log(t) - 1``, ``sign(zeta) = sign(t - 1)``."""
    return lambda_from_eta(zeta).lam


def dlambda_deta(p: MappedPoint) -> float:
    """``d lambda / d eta = lambda * eta / (lambda - 1)``; equals 1 at the transition point."""
    return p.lam * p.f
