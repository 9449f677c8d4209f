# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Mirrors ``_pykernels.py`` line for line."""

from libc.math cimport copysign, exp, expm1, fabs, floor, log, log1p, pow, sqrt

import numpy as np

cdef double INV_SQRT_PI = 0.56418958354775628695
cdef double PI = 3.141592653589793

cdef double DAWSON_SERIES_MAX = 1.0
cdef double DAWSON_ASYMPTOTIC_MIN = 10.0
cdef double RYBICKI_STEP = 0.2
cdef double RYBICKI_WIDTH = 6.5

cdef double SMALL_ETA = 1e-3
cdef double LOG1PMX_SERIES_MAX = 0.5
cdef int MAX_NEWTON = 30


cdef double _dawson(double x) nogil:
    cdef double ax = fabs(x)
    cdef double term, total, q, h, d, n_hi
    cdef long k, n
    if ax <= DAWSON_SERIES_MAX:
        term = ax
        total = ax
        q = -2.0 * ax * ax
        k = 0
        while True:
            k += 1
            term *= q / (2 * k + 1)
            total += term
            if fabs(term) <= 1e-17 * fabs(total):
                break
    elif ax < DAWSON_ASYMPTOTIC_MIN:
        h = RYBICKI_STEP
        n = <long>floor((ax - RYBICKI_WIDTH) / h)
        if n % 2 == 0:
            n -= 1
        n_hi = (ax + RYBICKI_WIDTH) / h
        total = 0.0
        while n <= n_hi:
            d = ax - n * h
            total += exp(-d * d) / n
            n += 2
        total *= INV_SQRT_PI
    else:
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
    return copysign(total, x)


cdef double _log1pmx(double mu) nogil:
    cdef double u, u2, s, p, t
    cdef int j
    if fabs(mu) <= LOG1PMX_SERIES_MAX:
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
    return mu - log1p(mu)


cdef double _eta_from_mu(double mu) nogil:
    if mu == 0.0:
        return 0.0
    return copysign(sqrt(2.0 * _log1pmx(mu)), mu)


cdef double _eta_from_lambda(double lam, double mu) nogil:
    if lam < LOG1PMX_SERIES_MAX:
        return -sqrt(2.0 * (mu - log(lam)))
    return _eta_from_mu(mu)


cdef double _log_lambda_from_eta(double eta) nogil:
    cdef double e, half, s, mu, step
    cdef int it
    if eta == 0.0:
        return 0.0
    if fabs(eta) <= SMALL_ETA:
        e = eta
        return log1p(e * (1.0 + e * (1.0 / 3 + e * (1.0 / 36 + e * (-1.0 / 270 + e / 4320.0)))))
    half = 0.5 * eta * eta
    if fabs(eta) <= 1.0:
        s = log1p(eta + eta * eta / 3.0)
    elif eta > 0.0:
        s = log(half + 2.0)
    else:
        s = -1.0 - half
    for it in range(MAX_NEWTON):
        mu = expm1(s)
        if fabs(mu) <= LOG1PMX_SERIES_MAX:
            step = (_log1pmx(mu) - half) / mu
        else:
            step = (mu - s - half) / mu
        s -= step
        if fabs(step) <= 4.4e-16 * fabs(s):
            break
    return s


cdef double _mu_from_eta(double eta) nogil:
    cdef double e
    if fabs(eta) <= SMALL_ETA:
        e = eta
        return e * (1.0 + e * (1.0 / 3 + e * (1.0 / 36 + e * (-1.0 / 270 + e / 4320.0))))
    return expm1(_log_lambda_from_eta(eta))


def dawson(double x):
    """Dawson's integral ``F(x) = exp(-x**2) * integral_0^x exp(t**2) dt``."""
    return _dawson(x)


def log1pmx(double mu):
    return _log1pmx(mu)


def eta_from_mu(double mu):
    return _eta_from_mu(mu)


def eta_from_lambda(double lam, double mu):
    return _eta_from_lambda(lam, mu)


def log_lambda_from_eta(double eta):
    return _log_lambda_from_eta(eta)


def mu_from_eta(double eta):
    return _mu_from_eta(eta)


cdef class CoeffKernel:
    cdef double[:, ::1] _mac
    cdef double[:, ::1] _lmu
    cdef double[:, ::1] _llam
    cdef double[::1] _ec
    cdef long[::1] _len
    cdef readonly double switch_radius
    cdef readonly int max_order

    def __init__(self, maclaurin, laurent_mu, laurent_lam, eta_coef, lengths, switch_radius):
        self._mac = np.ascontiguousarray(maclaurin, dtype=np.float64)
        self._lmu = np.ascontiguousarray(laurent_mu, dtype=np.float64)
        self._llam = np.ascontiguousarray(laurent_lam, dtype=np.float64)
        self._ec = np.ascontiguousarray(eta_coef, dtype=np.float64)
        self._len = np.ascontiguousarray(lengths, dtype=np.int_)
        self.switch_radius = switch_radius
        self.max_order = self._mac.shape[0] - 1

    cdef double _eval_c(self, int n, double eta, double mu) nogil:
        cdef double acc, w, rational, lam
        cdef long j, k
        cdef int deg
        if fabs(eta) <= self.switch_radius:
            acc = 0.0
            for j in range(self._len[n] - 1, -1, -1):
                acc = acc * eta + self._mac[n, j]
            return acc
        deg = 2 * n + 1
        if eta > 0.0:
            w = 1.0 / mu
            acc = self._lmu[n, deg]
            for k in range(deg - 1, 0, -1):
                acc = acc * w + self._lmu[n, k]
            rational = acc * w
        else:
            lam = 1.0 + mu
            acc = 0.0
            for k in range(deg - 1, -1, -1):
                acc = acc * lam + self._llam[n, k]
            rational = acc / pow(mu, deg)
        return rational + self._ec[n] / pow(eta, deg)

    cdef double _series(self, double eta, double mu, double a, int order, bint alternate,
                        double* last) nogil:
        cdef double total = 0.0
        cdef double scale = 1.0
        cdef double step = (-1.0 / a) if alternate else (1.0 / a)
        cdef double term = 0.0
        cdef int n
        for n in range(order + 1):
            term = scale * self._eval_c(n, eta, mu)
            total += term
            scale *= step
        last[0] = fabs(term)
        return total

    def eval_c(self, int n, double eta, double mu):
        if n < 0 or n > self.max_order:
            raise IndexError(n)
        return self._eval_c(n, eta, mu)

    def series(self, double eta, double mu, double a, int order, bint alternate):
        """``sum_{n<=order} (+-1)^n C_n / a^n`` and the magnitude of the last term."""
        cdef double last = 0.0
        if order < 0 or order > self.max_order:
            raise IndexError(order)
        total = self._series(eta, mu, a, order, alternate, &last)
        return total, last

    def gtilde_many(self, double a, double gamma_star, zs, int order):
        """Normalised ``gtilde_a(z)`` for each ``z`` at a fixed non-integer ``a``."""
        if order < 0 or order > self.max_order:
            raise IndexError(order)
        cdef double[::1] zv = np.ascontiguousarray(zs, dtype=np.float64)
        cdef Py_ssize_t m = zv.shape[0]
        out_arr = np.empty(m, dtype=np.float64)
        cdef double[::1] out = out_arr
        cdef double root = sqrt(0.5 * a)
        cdef double pref = -a / (PI * gamma_star)
        cdef double c1 = sqrt(2.0 / a)
        cdef double mu, eta, t, last
        cdef Py_ssize_t i
        with nogil:
            for i in range(m):
                mu = (zv[i] - a) / a
                eta = _eta_from_lambda(zv[i] / a, mu)
                t = self._series(eta, mu, a, order, True, &last)
                out[i] = pref * (c1 * _dawson(eta * root) + t / a)
        return out_arr.tolist()
