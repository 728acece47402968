from fractions import Fraction
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.special import erfc as sp_erfc

from stefan_latent.kummer import inerfc, kummer_m, kummer_m_derivative

ALPHAS = [0, 0.5, 1, 1.5, 2, 3]


def families(alpha):
    """(a, z-sign) pairs the solution formulas evaluate."""
    return {
        -alpha / 2: -1,
        -alpha / 2 + 0.5: -1,
        alpha / 2 + 0.5: 1,
        alpha / 2 + 1: 1,
        alpha / 2 + 1.5: 1,
    }


def test_value_at_zero():
    assert kummer_m(0.7, 0.5, 0.0) == 1.0


def test_exponential_case():
    assert kummer_m(0.5, 0.5, 1.0) == pytest.approx(math.e, rel=1e-15)


def test_erf_closed_form():
    # M(1, 3/2, x) = (sqrt(pi)/2) e^x erf(sqrt(x)) / sqrt(x)
    x = 0.25
    expected = math.sqrt(math.pi) / 2 * math.exp(x) * math.erf(math.sqrt(x)) / math.sqrt(x)
    assert expected == pytest.approx(1.184593072938653, rel=1e-15)
    assert kummer_m(1, 1.5, x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("b", [0, -1, -3])
def test_rejects_nonpositive_integer_b(b):
    with pytest.raises(ValueError):
        kummer_m(0.5, b, 1.0)


def test_overflow():
    with pytest.raises(OverflowError):
        kummer_m(1.5, 0.5, 800.0)


def test_terminating_series():
    # a = -1: M(-1, 1/2, z) = 1 - 2z
    for z in (-3.0, -0.4, 0.3, 2.0):
        assert kummer_m(-1, 0.5, z) == pytest.approx(1 - 2 * z, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("alpha", np.linspace(0, 10, 11))
@pytest.mark.parametrize("b", [0.5, 1.5])
def test_accuracy_against_mpmath(alpha, b):
    mpmath.mp.dps = 40
    for a, sign in families(alpha).items():
        for mag in (0.01, 0.5, 3.0, 12.0, 30.0, 50.0):
            z = sign * mag
            ref = float(mpmath.hyp1f1(a, b, z))
            assert kummer_m(a, b, z) == pytest.approx(ref, rel=1e-13)


def test_derivative_examples():
    assert kummer_m_derivative(0.5, 0.5, 0.3) == pytest.approx(math.exp(0.3), rel=1e-14)
    assert kummer_m_derivative(1, 1.5, 0.0) == pytest.approx(2 / 3, rel=1e-15)


def test_derivative_against_central_difference():
    h = 1e-6
    fd = (kummer_m(0.75, 0.5, 0.2 + h) - kummer_m(0.75, 0.5, 0.2 - h)) / (2 * h)
    assert kummer_m_derivative(0.75, 0.5, 0.2) == pytest.approx(fd, rel=1e-8)


# repeated erfc integrals ------------------------------------------------------

def test_inerfc_order_zero():
    assert inerfc(0, 0.0) == 1.0


def test_inerfc_order_one_at_zero():
    oracle = quad(sp_erfc, 0, math.inf, epsabs=1e-15)[0]
    assert oracle == pytest.approx(0.5641895835477563, rel=1e-12)
    assert inerfc(1, 0.0) == pytest.approx(oracle, rel=1e-12)


def test_inerfc_order_two_by_quadrature():
    def i1(t):
        return math.exp(-t * t) / math.sqrt(math.pi) - t * math.erfc(t)

    oracle = quad(i1, 0.5, math.inf, epsabs=1e-15, epsrel=1e-14)[0]
    assert oracle == pytest.approx(0.06996472345317693, rel=1e-12)
    assert inerfc(2, 0.5) == pytest.approx(oracle, rel=1e-9)


def test_inerfc_negative_order():
    with pytest.raises(ValueError):
        inerfc(-1, 0.3)


@pytest.mark.parametrize("n", range(9))
def test_inerfc_against_integral_representation(n):
    # i^n erfc(z) = 2/sqrt(pi) int_z^inf (t - z)^n / n! exp(-t^2) dt
    mpmath.mp.dps = 30
    for z in np.linspace(-5, 5, 21):
        zz = mpmath.mpf(float(z))
        ref = 2 / mpmath.sqrt(mpmath.pi) * mpmath.quad(
            lambda t: (t - zz) ** n / mpmath.factorial(n) * mpmath.exp(-t * t),
            [zz, zz + 3, zz + 10, mpmath.inf])
        assert inerfc(n, z) == pytest.approx(float(ref), rel=1e-11)


def test_inerfc_integral_definition():
    # d/dz i^n erfc = -i^(n-1) erfc
    h = 1e-5
    for n in (1, 3, 6):
        for z in (-1.2, 0.4, 2.5):
            fd = (inerfc(n, z + h) - inerfc(n, z - h)) / (2 * h)
            assert fd == pytest.approx(-inerfc(n - 1, z), rel=1e-7)


# identities ------------------------------------------------------------------

@pytest.mark.parametrize("alpha", ALPHAS)
def test_exponential_identity(alpha):
    # products reach ~4e3 at alpha=3, so the combination is formed exactly
    # from the returned doubles; float rounding here alone is ~ulp(4e3)
    for z in np.linspace(0, 4, 100):
        w = -z * z
        m = [Fraction(kummer_m(*args, w)) for args in (
            (-alpha / 2 + 0.5, 1.5), (-alpha / 2 + 1, 1.5), (-alpha / 2, 0.5), (-alpha / 2 + 0.5, 0.5))]
        combo = 2 * Fraction(alpha) * Fraction(w) * m[0] * m[1] + m[2] * m[3]
        assert abs(float(combo - Fraction(math.exp(w)))) <= 1e-12


@pytest.mark.parametrize("a", [-0.75, -0.25, 0.25, 0.75, 1.25, 1.75])
def test_power_derivative_identity(a):
    b = 1.5
    h = 1e-6
    for z in np.linspace(0.1, 3, 30):
        fd = ((z + h) ** (b - 1) * kummer_m(a, b, z + h) - (z - h) ** (b - 1) * kummer_m(a, b, z - h)) / (2 * h)
        exact = (b - 1) * z ** (b - 2) * kummer_m(a, b - 1, z)
        assert fd == pytest.approx(exact, rel=1e-7)


def test_large_argument_leading_order():
    a, b, z = 1.5, 0.5, 40.0
    ratio = kummer_m(a, b, z) / (math.gamma(b) / math.gamma(a) * math.exp(z) * z ** (a - b))
    assert abs(ratio - 1) < 0.05


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_integer_order_bridges(n):
    for z in np.linspace(0.05, 2, 40):
        even = 2 ** (n - 1) * math.gamma(n / 2 + 1) * (inerfc(n, z) + inerfc(n, -z))
        odd = 2 ** (n - 2) * math.gamma(n / 2 + 0.5) * (inerfc(n, -z) - inerfc(n, z))
        assert kummer_m(-n / 2, 0.5, -z * z) == pytest.approx(even, rel=1e-10)
        assert z * kummer_m(-n / 2 + 0.5, 1.5, -z * z) == pytest.approx(odd, rel=1e-10)


@settings(max_examples=300, deadline=None)
@given(
    alpha=st.integers(0, 640).map(lambda k: k / 64),
    which=st.integers(0, 4),
    b=st.sampled_from([0.5, 1.5]),
    z=st.floats(-25, 25),
)
def test_kummer_transformation_closure(alpha, which, b, z):
    # dyadic alpha keeps b - (b - a) == a exact
    a = [-alpha / 2, -alpha / 2 + 0.5, alpha / 2 + 0.5, alpha / 2 + 1, alpha / 2 + 1.5][which]
    lhs = kummer_m(a, b, z)
    rhs = math.exp(z) * kummer_m(b - a, b, -z)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)
