"""Closed-form vacuum response of a uniformly accelerated two-level system.

A qubit of gap omega coupled to the massless scalar vacuum for a finite
stretch of uniformly accelerated motion picks up a population change that
is governed by a single dimensionless response function J(x, y), with
x = omega/alpha the gap measured in units of the proper acceleration and
y = alpha*T the contact duration measured in proper-acceleration units.
J assembles a short-window term regular in y, a Heaviside piece present
only for de-excitation (x > 0), and four Lerch-transcendent terms carrying
the thermal structure of the accelerated vacuum:

    J(x,y) = (y/2)^2 e^{-|x|y} / (8 sin^2(y/2)) - 1/8 + (|x| y / 4) theta(x)
           + (y^2 z / 32 pi^2) [phi(z,2,1+y/2pi) - phi(z,2,1-y/2pi)]
           + (|x| y^2 z / 16 pi) [phi(z,1,1+y/2pi) - phi(z,1,1-y/2pi)],

with z = e^{-2 pi |x|}.  Two exact properties pin the normalization and
are exercised heavily by the test suite:

    J(x,y) - J(-x,y) = x*y/4          (detailed-balance-like asymmetry)
    J(x,y) -> 0 as y -> 0+            (no response without contact)

The population correction for a qubit prepared with excited population p,
riding a hyperbolic worldline of reduced acceleration a = alpha/omega and
speed endpoint v (so y = 2*arctanh(v)), is

    delta_p = g^2 [ (1 - 2p) J(-1/a, y) - p * arctanh(v) / (2a) ],

equivalently g^2 [ (1-p) J(-1/a, y) - p J(1/a, y) ] via the asymmetry
identity.  Both forms are exposed and must agree to 1e-10.

Domain: y must lie in (0, 2*pi) — the sin^2(y/2) factor vanishes and the
Lerch shift 1 - y/2pi hits zero at y = 2*pi — which for cycle speeds means
v < tanh(pi) ~ 0.99627.  Values of J can be negative at small reduced
acceleration; this is a genuine feature of the finite-contact response and
marks the region where the perturbative treatment loses validity (see
``perturbative_validity``).
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .specfun import lerch_phi

TWO_PI = 2.0 * math.pi

#: Largest admissible cycle speed: y = 2*arctanh(v) must stay below 2*pi.
V_MAX = math.tanh(math.pi)


def _check_speed(v: float) -> None:
    if not 0.0 < v < V_MAX:
        raise DomainError("v out of (0, tanh(pi))")


def _check_reduced_point(a: float, p: float, v: float, g: float) -> None:
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError("a must be positive and finite")
    if not 0.0 <= p <= 1.0:
        raise DomainError("p out of [0, 1]")
    _check_speed(v)
    if not g > 0.0:
        raise DomainError("g must be positive")


def j_function(x: float, y: float) -> float:
    """Evaluate the vacuum-response function J(x, y).

    Raises DomainError for y outside (0, 2*pi) or x = 0 (the Heaviside
    convention at x = 0 never arises for finite reduced accelerations).
    """
    x = float(x)
    y = float(y)
    if not 0.0 < y < TWO_PI:
        raise DomainError("y out of (0, 2*pi)")
    if x == 0.0 or not math.isfinite(x):
        raise DomainError("x must be nonzero and finite")

    ax = abs(x)
    z = math.exp(-TWO_PI * ax)
    shift = y / TWO_PI
    sin_half = math.sin(0.5 * y)

    value = (0.5 * y) ** 2 * math.exp(-ax * y) / (8.0 * sin_half ** 2) - 0.125
    if x > 0.0:
        value += 0.25 * ax * y
    d2 = lerch_phi(z, 2, 1.0 + shift) - lerch_phi(z, 2, 1.0 - shift)
    d1 = lerch_phi(z, 1, 1.0 + shift) - lerch_phi(z, 1, 1.0 - shift)
    value += y * y * z / (32.0 * math.pi ** 2) * d2
    value += ax * y * y * z / (16.0 * math.pi) * d1
    return value


def vacuum_response(alpha: float, omega: float, duration: float) -> float:
    """Response integral for acceleration alpha, gap omega, proper duration T.

    Dimensionless packaging of j_function: equals J(omega/alpha, alpha*T).
    """
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    return j_function(omega / alpha, alpha * duration)


def delta_p(a: float, p: float, v: float, g: float = 1.0) -> float:
    """Population correction delta_p for one vacuum contact (reduced form)."""
    _check_reduced_point(a, p, v, g)
    y = 2.0 * math.atanh(v)
    return g * g * ((1.0 - 2.0 * p) * j_function(-1.0 / a, y)
                    - p * math.atanh(v) / (2.0 * a))


def delta_p_unreduced(a: float, p: float, v: float, g: float = 1.0) -> float:
    """delta_p written with both excitation and de-excitation responses.

    Equals ``delta_p`` to 1e-10 (linked by the x*y/4 asymmetry identity);
    kept as an independent route for cross-checking.
    """
    _check_reduced_point(a, p, v, g)
    y = 2.0 * math.atanh(v)
    return g * g * ((1.0 - p) * j_function(-1.0 / a, y)
                    - p * j_function(1.0 / a, y))


def v_max_for(a: float, g: float = 1.0) -> float:
    """Largest speed for which the perturbative correction stays small."""
    if not a > 0.0 or not g > 0.0:
        raise DomainError("a and g must be positive")
    return math.tanh(a / (g * g))


@dataclass(frozen=True)
class ValidityVerdict:
    """Outcome of the perturbative small-correction check.

    ``ratio`` is a / (g^2 * arctanh(v)); the check passes when it is at
    least ``margin``.  When an initial population was supplied, the
    corrected population p + delta_p and its membership in (0, 1) are
    reported as well.
    """
    ratio: float
    margin: float
    passed: bool
    v_max: float
    population_after: Optional[float] = None
    in_unit_interval: Optional[bool] = None


def perturbative_validity(a: float, v: float, g: float = 1.0,
                          margin: float = 10.0,
                          p: Optional[float] = None) -> ValidityVerdict:
    """Check a >> g^2 * arctanh(v), the condition for |delta_p| << 1.

    ``margin`` sets how many times larger a must be (must exceed 1).
    """
    if not margin > 1.0:
        raise DomainError("margin must exceed 1")
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError("a must be positive and finite")
    if not g > 0.0:
        raise DomainError("g must be positive")
    if not 0.0 < v < 1.0:
        raise DomainError("v out of (0, tanh(pi))")

    ratio = a / (g * g * math.atanh(v))
    verdict_pass = ratio >= margin
    vmax = v_max_for(a, g)
    if p is None:
        return ValidityVerdict(ratio=ratio, margin=margin, passed=verdict_pass,
                               v_max=vmax)
    shifted = p + delta_p(a, p, v, g)
    return ValidityVerdict(ratio=ratio, margin=margin, passed=verdict_pass,
                           v_max=vmax, population_after=shifted,
                           in_unit_interval=0.0 < shifted < 1.0)
