import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_otto.errors import DomainError, ResourceLimitError
from unruh_otto.specfun import lerch_phi

# independently computed with 50-digit working precision
GOLDEN = 0.9522918415301704  # z=0.9, s=2, a=1.3


def test_golden_value():
    assert lerch_phi(0.9, 2, 1.3) == pytest.approx(GOLDEN, rel=1e-13)


def test_z_zero_is_first_term_only():
    assert lerch_phi(0.0, 2, 1.7) == 1.7 ** -2
    assert lerch_phi(0.0, 1, 0.25) == 4.0


def test_s1_matches_logarithm():
    # sum z^k/(k+1) = -log(1-z)/z
    for z in (0.1, 0.5, 0.9, 0.99):
        assert lerch_phi(z, 1, 1.0) == pytest.approx(-math.log1p(-z) / z,
                                                     rel=1e-12)


@pytest.mark.parametrize("z,s,a", [
    (0.3, 1, 0.5),
    (0.7, 2, 1.0),
    (0.95, 2, 0.05),
    (0.999, 1, 2.5),
    (0.5, 2, 3.0),
])
def test_matches_extended_precision(z, s, a):
    expected = float(mpmath.lerchphi(z, s, a))
    assert lerch_phi(z, s, a) == pytest.approx(expected, rel=1e-11)


def test_tolerance_controls_tail():
    loose = lerch_phi(0.99, 2, 1.0, tol=1e-8)
    tight = lerch_phi(0.99, 2, 1.0, tol=1e-14)
    assert abs(loose - tight) <= 1e-8


@pytest.mark.parametrize("z", [-0.1, 1.0, 1.5, math.inf, math.nan])
def test_z_domain(z):
    with pytest.raises(DomainError):
        lerch_phi(z, 2, 1.0)


@pytest.mark.parametrize("a", [0.0, -1.0, math.nan])
def test_a_domain(a):
    with pytest.raises(DomainError):
        lerch_phi(0.5, 2, a)


@pytest.mark.parametrize("s", [0, -1, 1.5])
def test_s_domain(s):
    with pytest.raises(DomainError):
        lerch_phi(0.5, s, 1.0)


def test_tol_domain():
    with pytest.raises(DomainError):
        lerch_phi(0.5, 2, 1.0, tol=0.0)


def test_term_cap_raises():
    with pytest.raises(ResourceLimitError):
        lerch_phi(0.999999, 2, 1.0, max_terms=100)


@given(z=st.floats(0.0, 0.95), a1=st.floats(0.05, 10.0),
       bump=st.floats(0.1, 10.0), s=st.sampled_from([1, 2]))
@settings(max_examples=60, deadline=None)
def test_decreasing_in_a(z, a1, bump, s):
    # every series term 1/(k+a)^s shrinks as a grows
    assert lerch_phi(z, s, a1) > lerch_phi(z, s, a1 + bump)


@given(z=st.floats(0.0, 0.99), a=st.floats(1.0, 5.0))
@settings(max_examples=60, deadline=None)
def test_s2_below_s1(z, a):
    # term-wise 1/(k+a)^2 <= 1/(k+a) once a >= 1
    assert lerch_phi(z, 2, a) <= lerch_phi(z, 1, a) + 1e-15
