import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negamma.coefficients import default_table, eval_C
from negamma.errors import DomainError, RangeOverflowError
from negamma.expansion import (
    EvalResult,
    Regime,
    exp_integral_p,
    gamma_lower_neg,
    gamma_neg_a,
    gamma_star_neg,
    gamma_upper_neg,
    gtilde,
    gtilde_many,
    p_ratio,
    p_uniform,
    q_ratio,
    q_uniform,
    s_series,
    t_series,
)
from negamma.mapping import lambda_from_eta, map_point
from negamma.oracle import gammastar_series_big, q_oracle_big
from negamma.special import ComplexValue, gamma_star

# mpmath at 40 digits
Q_100_100 = 0.48670120172085134
Q_100_500 = 1.5008794119250894e-106
E1_1 = 0.21938393439552027
E_MINUS25_3 = 6102292996923.4104
E_2P5_0P3 = 0.36786241753840449


def big(res):
    """An EvalResult as an mpmath number, log scale folded in."""
    v = res.value
    base = mpmath.mpc(v.re, v.im) if isinstance(v, ComplexValue) else mpmath.mpf(v)
    return base * mpmath.exp(res.log_scale)


def test_t_series_examples():
    p0 = lambda_from_eta(0.0)
    for a in (1.0, 37.0, 1e4):
        assert t_series(a, p0, 0).value == pytest.approx(-1 / 3, abs=1e-16)
    assert t_series(100.0, p0, 1).value == pytest.approx(-1 / 3 + (1 / 540) / 100, abs=1e-16)


def test_s_series_examples():
    p0 = lambda_from_eta(0.0)
    assert s_series(50.0, p0, 0).value == pytest.approx(-1 / 3, abs=1e-16)
    table = default_table()
    for eta in (-3.0, -0.4, 0.7, 2.5):
        p = lambda_from_eta(eta)
        a = 40.0
        even = sum(eval_C(table, n, p) / a**n for n in range(0, 7, 2))
        assert s_series(a, p).value + t_series(a, p).value == pytest.approx(2 * even, rel=1e-14)


def test_series_regime_and_truncation():
    assert t_series(100.0, lambda_from_eta(1.5)).regime is Regime.MACLAURIN
    r = t_series(100.0, lambda_from_eta(-2.5))
    assert r.regime is Regime.LAURENT
    assert 0 < r.est_truncation < 1e-10
    with pytest.raises(DomainError):
        t_series(100.0, lambda_from_eta(0.0), 99)
    with pytest.raises(DomainError):
        s_series(-1.0, lambda_from_eta(0.0))


def test_q_uniform_examples():
    q = q_uniform(100.0, 100.0).value
    assert q == pytest.approx(Q_100_100, rel=1e-13)
    assert q == pytest.approx(0.5 - 1 / (3 * math.sqrt(200 * math.pi)), abs=1e-4)
    tail = q_uniform(100.0, 500.0).value
    assert tail <= 1e-100
    assert tail == pytest.approx(Q_100_500, rel=1e-12)
    with pytest.raises(DomainError):
        q_uniform(0.0, 1.0)
    with pytest.raises(DomainError):
        p_uniform(1.0, -1.0)


@settings(max_examples=500)
@given(st.floats(1, 1e4), st.floats(0.01, 20))
def test_p_plus_q_is_one(a, lam):
    z = a * lam
    assert q_uniform(a, z).value + p_uniform(a, z).value == 1.0
    assert q_ratio(a, z).value + p_ratio(a, z).value == 1.0


def test_q_uniform_against_oracle():
    for a in (30.0, 77.7, 150.0):
        for lam in (0.6, 0.95, 1.0, 1.07, 1.8):
            want = float(q_oracle_big(a, a * lam, 60).value)
            assert q_uniform(a, a * lam).value == pytest.approx(want, rel=5e-12)


def test_classical_ratios():
    for z in (0.1, 1.0, 3.0, 30.0):
        assert q_ratio(1.0, z).value == pytest.approx(math.exp(-z), rel=1e-15)
    assert q_ratio(1.0, 1.0).value == pytest.approx(0.36787944117144233, rel=1e-15)
    assert q_ratio(5.0, 3.0).regime is Regime.SERIES
    assert q_ratio(5.0, 8.0).regime is Regime.CONTINUED_FRACTION
    assert q_ratio(25.0, 20.0).regime is Regime.MACLAURIN
    for a, z in ((0.3, 0.2), (2.5, 7.0), (12.0, 11.0), (19.9, 40.0)):
        want = float(mpmath.gammainc(a, z, regularized=True))
        assert q_ratio(a, z).value == pytest.approx(want, rel=1e-13)
        assert p_ratio(a, z).value == pytest.approx(1 - want, rel=1e-13)


def test_gamma_star_neg_examples():
    r = gamma_star_neg(3.0, 2.0)
    assert r.value == -8.0 and r.regime is Regime.EXACT_INTEGER_A
    assert gamma_star_neg(100.25, 100.0).value == pytest.approx(2.34010604791689845e200, rel=5e-13)
    assert gamma_star_neg(100.25, 90.0).value == pytest.approx(1.20552423411674426e196, rel=5e-13)


@given(st.integers(1, 60), st.floats(1e-3, 1e3))
def test_integer_a_is_exact(n, z):
    assert gamma_star_neg(float(n), z).value == (-z) ** n


def test_overflow_and_log_scale():
    with pytest.raises(RangeOverflowError):
        gamma_star_neg(300.5, 300.0)
    big_r = gamma_star_neg(300.5, 300.0, log_scaled=True)
    want = gammastar_series_big(300.5, 300.0).value
    assert float(abs(big(big_r) - want) / abs(want)) < 1e-12
    small = gamma_star_neg(100.25, 100.0, log_scaled=True)
    assert float(big(small)) == pytest.approx(gamma_star_neg(100.25, 100.0).value, rel=1e-13)
    r = gamma_star_neg(400.0, 300.0, log_scaled=True)
    assert r.regime is Regime.EXACT_INTEGER_A and r.log_scale == 400.0 * math.log(300.0)


def test_gtilde_examples():
    assert gtilde(100.25, 100.0).value == pytest.approx(0.185636311520584, rel=5e-13)
    assert gtilde(100.25, 90.0).value == pytest.approx(2.464370784806670, rel=5e-13)
    assert gtilde(100.25, 110.0).value == pytest.approx(-2.150228198004453, rel=5e-13)
    for bad in (3.0, 100.0):
        with pytest.raises(DomainError):
            gtilde(bad, 50.0)


def test_gtilde_many_matches_scalar():
    zs = np.linspace(1.0, 300.0, 97)
    many = gtilde_many(100.25, zs)
    for z, v in zip(zs, many):
        assert v == pytest.approx(gtilde(100.25, float(z)).value, rel=1e-15, abs=1e-300)
    with pytest.raises(DomainError):
        gtilde_many(100.0, zs)
    with pytest.raises(DomainError):
        gtilde_many(100.5, [0.0])


def test_gtilde_to_gamma_star_scaling():
    # gamma* = z^a cos(pi a) + sin(pi a) Gamma(a) e^z gtilde
    for a, z in ((50.5, 45.0), (100.25, 103.0), (180.75, 170.0)):
        with mpmath.workdps(40):
            am, zm = mpmath.mpf(a), mpmath.mpf(z)
            g = gtilde(a, z).value
            rebuilt = zm**am * mpmath.cospi(am) + mpmath.sinpi(am) * mpmath.gamma(am) * mpmath.exp(zm) * g
            direct = big(gamma_star_neg(a, z, log_scaled=True))
            assert float(abs(rebuilt - direct) / abs(direct)) < 1e-13


def test_first_order_recursion_in_gamma_star():
    # gamma*(-a-1,-z) + z gamma*(-a,-z) + sin(pi a) e^z Gamma(a+1) / pi = 0
    for a, z in ((100.25, 95.0), (100.25, 100.0), (60.6, 70.0)):
        with mpmath.workdps(40):
            g1 = big(gamma_star_neg(a + 1, z, log_scaled=True))
            g0 = big(gamma_star_neg(a, z, log_scaled=True))
            third = mpmath.sinpi(a) * mpmath.exp(z) * mpmath.gamma(a + 1) / mpmath.pi
            scale = max(abs(g1), abs(z * g0), abs(third))
            assert float(abs(g1 + z * g0 + third) / scale) <= 1e-12


def test_t_ode_residual():
    a = 100.0
    h = 1e-5
    gs = gamma_star(a)
    for eta in np.linspace(-2, 2, 41):
        def t(e):
            return t_series(a, lambda_from_eta(e)).value

        p = lambda_from_eta(float(eta))
        res = (t(eta + h) - t(eta - h)) / (2 * h) + a * eta * t(eta) - a * (p.f * gs - 1)
        assert abs(res) <= 1e-4 * a


def test_branch_conjugacy_and_small_a_connection():
    for a, z in ((0.5, 1.0), (7.3, 9.0), (100.25, 100.0), (3.0, 2.0)):
        up = gamma_upper_neg(a, z, 1).value
        dn = gamma_upper_neg(a, z, -1).value
        assert dn == up.conjugate()
        lo_up = gamma_lower_neg(a, z, 1).value if a != 3.0 else None
        if lo_up is not None:
            assert gamma_lower_neg(a, z, -1).value == lo_up.conjugate()
    a, z = 0.5, 0.5
    lhs = cmath.exp(1j * math.pi * a) * complex(gamma_upper_neg(a, z, 1)) - cmath.exp(
        -1j * math.pi * a) * complex(gamma_upper_neg(a, z, -1))
    assert lhs == pytest.approx(-7.08981540362206j, abs=1e-13)


def test_upper_consistent_with_gamma_star():
    # Gamma(-a, z e^{+-i pi}) = Gamma(-a) [1 - z^-a e^{-+i pi a} gamma*(-a,-z)]
    for a, z in ((7.3, 8.0), (50.5, 45.0), (100.25, 100.0), (100.25, 112.0)):
        with mpmath.workdps(40):
            gs = big(gamma_star_neg(a, z, log_scaled=True))
            for b in (1, -1):
                want = gamma_neg_a(a) * (1 - mpmath.mpf(z) ** (-a) * mpmath.expjpi(-b * a) * gs)
                got = big(gamma_upper_neg(a, z, b, log_scaled=True))
                assert float(abs(got - want) / abs(want)) <= 1e-12


def test_lower_plus_upper_is_gamma_neg_a():
    for a, z in ((0.5, 1.0), (7.3, 9.0), (100.25, 100.0), (150.5, 140.0)):
        g = gamma_neg_a(a)
        for b in (1, -1):
            total = complex(gamma_lower_neg(a, z, b)) + complex(gamma_upper_neg(a, z, b))
            assert abs(total - g) <= 1e-12 * abs(g)
    assert gamma_neg_a(0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-15)
    with pytest.raises(DomainError):
        gamma_neg_a(4.0)
    with pytest.raises(DomainError):
        gamma_lower_neg(4.0, 1.0, 1)
    with pytest.raises(DomainError):
        gamma_upper_neg(4.5, 1.0, 0)


def test_lower_against_oracle():
    def oracle(a, z, b):
        with mpmath.workdps(60):
            gs = gammastar_series_big(a, z).value
            return complex(mpmath.gamma(-a) * mpmath.mpf(z) ** (-a) * mpmath.expjpi(-b * a) * gs)

    for a, z in ((50.5, 50.0), (100.25, 97.0)):
        for b in (1, -1):
            want = oracle(a, z, b)
            got = complex(gamma_lower_neg(a, z, b))
            assert abs(got - want) <= 1e-12 * abs(want)
    # at a = 1/2 the expansion in 1/a is only qualitatively right
    want = oracle(0.5, 1.0, 1)
    got = complex(gamma_lower_neg(0.5, 1.0, 1))
    assert abs(got - want) <= 0.25 * abs(want)


def test_exp_integral_p():
    assert exp_integral_p(1.0, 1.0).value == pytest.approx(E1_1, rel=1e-14)
    for z in (0.3, 1.0, 4.0, 40.0):
        assert exp_integral_p(0.0, z).value == pytest.approx(math.exp(-z) / z, rel=1e-14)
    assert exp_integral_p(2.5, 0.3).value == pytest.approx(E_2P5_0P3, rel=1e-14)
    r = exp_integral_p(-25.0, 3.0)
    assert r.value == pytest.approx(E_MINUS25_3, rel=1e-13)
    assert r.regime in (Regime.MACLAURIN, Regime.LAURENT)
    for p in (3.0, 0.5, -4.2):
        want = float(mpmath.expint(p, 0.5))
        assert exp_integral_p(p, 0.5).value == pytest.approx(want, rel=1e-13)
    values = [exp_integral_p(1.5, z).value for z in (1.0, 10.0, 100.0, 600.0)]
    assert all(b < a for a, b in zip(values, values[1:])) and values[-1] < 1e-250
    for bad in (0.0, -1.0, math.inf):
        with pytest.raises(DomainError):
            exp_integral_p(1.0, bad)


def test_eval_result_contract():
    with pytest.raises(ValueError):
        EvalResult(1.0, Regime.LAURENT, 6, -1.0)
    with pytest.raises(RangeOverflowError):
        EvalResult(math.inf, Regime.LAURENT, 6, 0.0)
    r = EvalResult(2.0, Regime.MACLAURIN, 6, 0.0, math.log(3.0))
    assert float(r) == pytest.approx(6.0)
    c = EvalResult(ComplexValue(1.0, 1.0), Regime.LAURENT, 6, 0.0)
    assert complex(c) == 1 + 1j
    with pytest.raises(TypeError):
        float(c)


def test_regime_follows_switch_radius():
    r = default_table().switch_radius
    a = 100.25
    inside = map_point(a, a * float(lambda_from_eta(0.99 * r).lam))
    outside = map_point(a, a * float(lambda_from_eta(1.01 * r).lam))
    assert gtilde(a, inside.lam * a).regime is Regime.MACLAURIN
    assert gtilde(a, outside.lam * a).regime is Regime.LAURENT
