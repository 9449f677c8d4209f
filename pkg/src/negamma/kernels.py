"""Backend selection for the hot kernels.

The compiled extension ``negamma._kernels`` is used when it was built;
otherwise, or when ``NEGAMMA_PURE_PYTHON`` is set to a non-empty value, the
pure-Python twin ``negamma._pykernels`` is loaded.  Both expose the same
names with identical semantics.
"""
import os

from ._pykernels import SMALL_ETA  # shared constant; both backends use 1e-3

if os.environ.get("NEGAMMA_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = "python" if _impl.__name__.endswith("_pykernels") else "cython"

dawson = _impl.dawson
log1pmx = _impl.log1pmx
eta_from_mu = _impl.eta_from_mu
eta_from_lambda = _impl.eta_from_lambda
log_lambda_from_eta = _impl.log_lambda_from_eta
mu_from_eta = _impl.mu_from_eta
CoeffKernel = _impl.CoeffKernel

__all__ = [
    "BACKEND", "CoeffKernel", "dawson", "eta_from_lambda", "eta_from_mu", "log1pmx",
    "log_lambda_from_eta", "mu_from_eta",
]
