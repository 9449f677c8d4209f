import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negamma.errors import DomainError, RangeOverflowError
from negamma.oracle import big_dawson, big_erfc, big_lgamma
from negamma.special import (
    GAMMA_STAR_SWITCH,
    ComplexValue,
    cospi,
    dawson,
    erfc,
    erfc_imag,
    gamma_star,
    ln_gamma,
    sinpi,
)

# mpmath at 40 digits
ERFC_1 = 0.15729920705028513
ERFC_M1 = 1.8427007929497149
DAWSON_1 = 0.5380795069127684
DAWSON_10 = 0.05025384718759853
ERFC_I1_IM = -1.650425758797543
LGAMMA_101_25 = 364.89222670395091
GAMMA_STAR_100_25 = 1.0008315980244331


def test_erfc_examples():
    assert erfc(0.0) == 1.0
    assert erfc(1.0) == pytest.approx(ERFC_1, rel=4e-16)
    assert erfc(-1.0) == pytest.approx(ERFC_M1, rel=4e-16)


def test_erfc_symmetry_random():
    rng = np.random.default_rng(11)
    xs = rng.uniform(-6, 6, 10_000)
    worst = max(abs(erfc(x) + erfc(-x) - 2.0) for x in xs)
    assert worst <= 2.3e-16


def test_erfc_against_big_oracle():
    for x in (-3.0, -0.4, 0.2, 1.7, 5.0, 12.0):
        assert erfc(x) == pytest.approx(float(big_erfc(x).value), rel=1e-15)


def test_dawson_examples(kmod):
    assert kmod.dawson(0.0) == 0.0
    assert kmod.dawson(1.0) == pytest.approx(DAWSON_1, rel=2e-16)
    assert kmod.dawson(10.0) == pytest.approx(DAWSON_10, rel=2e-16)
    assert kmod.dawson(10.0) == pytest.approx(1 / 20 + 1 / 4000, rel=1e-4)


def test_dawson_against_big_oracle(kmod):
    xs = np.concatenate([np.linspace(-12, 12, 241), [1e-8, 0.999, 1.001, 9.999, 10.001, 30.0, 1e4]])
    for x in xs:
        want = float(big_dawson(float(x)).value)
        got = kmod.dawson(float(x))
        if want == 0.0:
            assert got == 0.0
        else:
            assert abs(got - want) <= 1e-15 * abs(want), x


def test_dawson_regimes_agree_at_switches(kmod):
    for x in (1.0, 10.0):
        lo, hi = kmod.dawson(math.nextafter(x, 0)), kmod.dawson(x + 1e-12)
        assert abs(hi - lo) <= 1e-15 * abs(lo) + 1e-12


@given(st.floats(-50, 50))
def test_dawson_is_odd(x):
    assert dawson(-x) == -dawson(x)


def test_dawson_ode():
    h = 1e-5
    for x in np.linspace(-5, 5, 201):
        d = (dawson(x + h) - dawson(x - h)) / (2 * h)
        assert abs(d - 1.0 + 2.0 * x * dawson(x)) <= 1e-10


def test_dawson_asymptotic_envelope():
    for x in np.geomspace(10, 1e6, 50):
        assert abs(2 * x * dawson(x) - 1.0) <= 3 / (2 * x * x)


def test_erfc_imag():
    assert erfc_imag(0.0) == ComplexValue(1.0, 0.0)
    v = erfc_imag(1.0)
    assert v.re == 1.0
    assert v.im == pytest.approx(ERFC_I1_IM, rel=4e-16)
    for x in (0.3, 2.0, 7.5):
        assert erfc_imag(-x).im == -erfc_imag(x).im


def test_erfc_imag_overflow():
    with pytest.raises(RangeOverflowError):
        erfc_imag(27.0)


def test_complex_value_rejects_non_finite():
    with pytest.raises(RangeOverflowError):
        ComplexValue(math.inf, 0.0)
    with pytest.raises(RangeOverflowError):
        ComplexValue(0.0, math.nan)
    v = ComplexValue(3.0, -4.0)
    assert abs(v) == 5.0
    assert v.conjugate() == ComplexValue(3.0, 4.0)
    assert complex(v) == 3 - 4j


def test_ln_gamma():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(2.0) == 0.0
    assert ln_gamma(101.25) == pytest.approx(LGAMMA_101_25, rel=4 * 2.2e-16)
    assert ln_gamma(101.25) == pytest.approx(float(big_lgamma(101.25).value), rel=1e-15)
    for bad in (0.0, -1.5):
        with pytest.raises(DomainError):
            ln_gamma(bad)


def test_gamma_star_examples():
    assert gamma_star(1.0) == pytest.approx(math.e / math.sqrt(2 * math.pi), rel=1e-15)
    assert gamma_star(100.25) == pytest.approx(GAMMA_STAR_100_25, rel=1e-15)
    for a in (1e3, 1e6):
        assert gamma_star(a) - 1 == pytest.approx(1 / (12 * a), rel=1e-2)
    with pytest.raises(DomainError):
        gamma_star(0.0)


def test_gamma_star_threshold_overlap():
    import mpmath

    def exact(a):
        with mpmath.workdps(40):
            a = mpmath.mpf(a)
            return float(mpmath.sqrt(a / (2 * mpmath.pi)) * mpmath.exp(a) * a ** (-a) * mpmath.gamma(a))

    for a in (GAMMA_STAR_SWITCH - 1e-9, GAMMA_STAR_SWITCH, 15.0, 40.0, 3.0, 0.1):
        assert gamma_star(a) == pytest.approx(exact(a), rel=1e-14)


def test_gamma_star_bounded_and_decreasing():
    a = np.linspace(1, 500, 2000)
    g = np.array([gamma_star(x) for x in a])
    assert np.all(g > 1) and np.all(g <= 1.085)
    assert np.all(np.diff(g) < 0)


@settings(max_examples=300)
@given(st.floats(-1e6, 1e6), st.integers(-1000, 1000))
def test_sinpi_cospi_periodicity(x, k):
    assert sinpi(x + 2 * k) == pytest.approx(sinpi(x), abs=1e-9)
    assert sinpi(x) ** 2 + cospi(x) ** 2 == pytest.approx(1.0, abs=1e-15)


def test_sinpi_exact_at_integers():
    for n in range(-5, 300):
        assert sinpi(float(n)) == 0.0
        assert cospi(n + 0.5) == 0.0
    assert sinpi(100.25) == pytest.approx(math.sqrt(0.5), rel=1e-15)
