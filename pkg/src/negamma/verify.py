"""Seeded recursion sweeps and table rows around the transition point."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .coefficients import DEFAULT_ORDER
from .errors import DomainError
from .expansion import gamma_star_neg, gtilde, gtilde_many
from .oracle import recursion_residual
from .special import is_integer

INV_PI = 1.0 / math.pi
# keeps z/a above the smallest lambda the mapping accepts
MIN_LAMBDA_DRAW = 1e-290


@dataclass(frozen=True)
class SweepReport:
    """Maximum ``|residual|`` of the ``a -> a+1`` recursion per interval ``k``.

    Samples are drawn with numpy's PCG64 generator seeded by ``seed``, so the
    report is reproducible across platforms.
    """

    a: float
    k_max: int
    samples_per_k: int
    seed: int
    max_abs_residual: float
    per_k_max: list[float]

    def __post_init__(self):
        if self.per_k_max and self.max_abs_residual != max(self.per_k_max):
            raise ValueError("max_abs_residual must equal max(per_k_max)")

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_draws(a: float, k_max: int, samples: int, seed: int) -> list[np.ndarray]:
    """Uniform ``z`` in ``[(1 - 2^-k) a, (1 + 2^-k) a]`` for ``k = 0 .. k_max``."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(k_max + 1):
        width = 2.0 ** -k
        zs = rng.uniform((1.0 - width) * a, (1.0 + width) * a, samples)
        out.append(np.maximum(zs, MIN_LAMBDA_DRAW * (a + 1.0)))
    return out


def run_sweep(a: float, k_max: int = 6, samples: int = 100, seed: int = 0,
              order: int = DEFAULT_ORDER) -> SweepReport:
    if not a > 0 or is_integer(a):
        raise DomainError(f"the sweep needs non-integer a > 0, got {a}")
    if k_max < 0 or samples < 1:
        raise DomainError("need k_max >= 0 and samples >= 1")
    per_k = []
    for zs in sweep_draws(a, k_max, samples, seed):
        lower = np.array(gtilde_many(a, zs, order))
        upper = np.array(gtilde_many(a + 1.0, zs, order))
        residual = -upper + (zs / a) * lower + INV_PI
        per_k.append(float(np.max(np.abs(residual))))
    return SweepReport(float(a), int(k_max), int(samples), int(seed), max(per_k), per_k)


@dataclass(frozen=True)
class TableRow:
    z: float
    gtilde: float
    gamma_star: float
    residual: float


def table_rows(a: float, z_from: float, z_to: float, step: float,
               order: int = DEFAULT_ORDER) -> list[TableRow]:
    """Rows ``(z, gtilde_a(z), gamma*(-a, -z), recursion residual)``."""
    if not (step > 0 and z_from <= z_to):
        raise DomainError("need z_from <= z_to and step > 0")
    count = int(math.floor((z_to - z_from) / step + 1e-9)) + 1
    rows = []
    for i in range(count):
        z = z_from + i * step
        rows.append(TableRow(
            z,
            gtilde(a, z, order).value,
            float(gamma_star_neg(a, z, order)),
            recursion_residual(a, z, order),
        ))
    return rows
