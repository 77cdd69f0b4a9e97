import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_otto.errors import DomainError
from unruh_otto.response import (V_MAX, delta_p, delta_p_unreduced,
                                 j_function, perturbative_validity, v_max_for,
                                 vacuum_response)

Y8 = 2.0 * math.atanh(0.8)
Y5 = 2.0 * math.atanh(0.5)

# frozen reference values, cross-validated against both quadrature oracles
J_M40 = 0.026182410419473473   # J(-1/40, 2*atanh 0.8)
J_P40 = 0.039915064027824854   # J(+1/40, 2*atanh 0.8)
J_M15 = 0.015387774305436582   # J(-1/15, 2*atanh 0.8)
J_M100 = 0.008611099822741896  # J(-0.01, 2*atanh 0.5)


@pytest.mark.parametrize("x,y,expected", [
    (-1 / 40, Y8, J_M40),
    (1 / 40, Y8, J_P40),
    (-1 / 15, Y8, J_M15),
    (-0.01, Y5, J_M100),
])
def test_reference_values(x, y, expected):
    assert j_function(x, y) == pytest.approx(expected, rel=1e-12)


def test_asymmetry_at_a_point():
    x, y = 0.3, 1.0
    assert j_function(x, y) - j_function(-x, y) == pytest.approx(0.075,
                                                                 abs=1e-10)


@given(x=st.floats(-5.0, 5.0).filter(lambda t: abs(t) > 1e-3),
       y=st.floats(0.01, 2.0 * math.pi - 0.01))
@settings(max_examples=200, deadline=None)
def test_asymmetry_identity(x, y):
    assert abs(j_function(x, y) - j_function(-x, y) - x * y / 4.0) < 1e-10


def test_vanishing_window():
    for x in (-2.0, -0.1, 0.1, 2.0):
        assert abs(j_function(x, 1e-6)) < 1e-6


def test_small_window_slope():
    # J ~ sign(x) |x| y / 8 for y -> 0
    x, y = 0.7, 1e-4
    assert j_function(x, y) == pytest.approx(x * y / 8.0, rel=1e-3)


@pytest.mark.parametrize("x,y", [
    (0.0, 1.0), (math.inf, 1.0), (math.nan, 1.0),
    (0.5, 0.0), (0.5, -1.0), (0.5, 2.0 * math.pi), (0.5, 7.0),
])
def test_j_domain(x, y):
    with pytest.raises(DomainError):
        j_function(x, y)


def test_vacuum_response_is_reduced_j():
    assert vacuum_response(40.0, -1.0, Y8 / 40.0) == j_function(-1 / 40, Y8)
    assert vacuum_response(2.0, 3.0, 0.5) == j_function(1.5, 1.0)


def test_population_kick_reference():
    assert delta_p(40.0, 0.5, 0.8) == pytest.approx(-0.006866326804175686,
                                                    rel=1e-12)


def test_kick_signs_near_crossover():
    # hot contact pumps up, cold contact drains, below the fixed point
    assert delta_p(40.0, 0.293, 0.8) > 0.0
    assert delta_p(15.0, 0.293, 0.8) < 0.0


@pytest.mark.parametrize("a,v,g", [(40.0, 0.8, 1.0), (5.0, 0.3, 0.5),
                                   (100.0, 0.9, 2.0)])
def test_balanced_population_closed_form(a, v, g):
    expected = -g * g * math.atanh(v) / (4.0 * a)
    assert delta_p(a, 0.5, v, g) == pytest.approx(expected, rel=1e-12)


def test_vanishing_contact_time():
    assert abs(delta_p(7.0, 0.4, 1e-8)) < 1e-7


@given(a=st.floats(0.5, 200.0), p=st.floats(0.0, 1.0),
       v=st.floats(0.05, 0.95), g=st.floats(0.1, 2.0))
@settings(max_examples=150, deadline=None)
def test_reduced_and_unreduced_agree(a, p, v, g):
    assert delta_p(a, p, v, g) == pytest.approx(
        delta_p_unreduced(a, p, v, g), abs=1e-10)


@given(a=st.floats(0.5, 200.0), p1=st.floats(0.0, 0.5),
       p3=st.floats(0.5, 1.0), v=st.floats(0.05, 0.95))
@settings(max_examples=150, deadline=None)
def test_affine_in_population(a, p1, p3, v):
    p2 = 0.5 * (p1 + p3)
    second_diff = delta_p(a, p1, v) + delta_p(a, p3, v) - 2.0 * delta_p(a, p2, v)
    assert abs(second_diff) < 1e-12


@pytest.mark.parametrize("kwargs", [
    dict(a=0.0, p=0.5, v=0.5), dict(a=-1.0, p=0.5, v=0.5),
    dict(a=1.0, p=-0.1, v=0.5), dict(a=1.0, p=1.1, v=0.5),
    dict(a=1.0, p=0.5, v=0.0), dict(a=1.0, p=0.5, v=1.1),
    dict(a=1.0, p=0.5, v=0.999),  # above tanh(pi)
    dict(a=1.0, p=0.5, v=0.5, g=0.0),
])
def test_kick_domain(kwargs):
    with pytest.raises(DomainError):
        delta_p(**kwargs)


def test_speed_ceiling_message():
    with pytest.raises(DomainError, match=r"v out of \(0, tanh\(pi\)\)"):
        delta_p(40.0, 0.1, 1.1)
    assert 0.9962 < V_MAX < 0.9963


def test_validity_ratio_pass_and_fail():
    good = perturbative_validity(40.0, 0.99, 1.0, margin=10.0)
    assert good.passed and good.ratio == pytest.approx(15.11, abs=0.01)
    bad = perturbative_validity(1.0, 0.99, 1.0, margin=10.0)
    assert not bad.passed and bad.ratio == pytest.approx(0.378, abs=0.001)


def test_validity_speed_ceiling():
    assert v_max_for(2.0, 1.0) == pytest.approx(math.tanh(2.0), rel=1e-15)
    verdict = perturbative_validity(2.0, 0.5, 1.0, margin=2.0)
    assert verdict.v_max == pytest.approx(0.9640, abs=5e-5)


def test_validity_reports_shifted_population():
    verdict = perturbative_validity(40.0, 0.8, 1.0, p=0.5)
    assert verdict.population_after == pytest.approx(
        0.5 + delta_p(40.0, 0.5, 0.8), rel=1e-14)
    assert verdict.in_unit_interval is True


def test_validity_margin_domain():
    with pytest.raises(DomainError):
        perturbative_validity(40.0, 0.8, margin=1.0)
