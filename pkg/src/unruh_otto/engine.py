"""Four-stroke Otto cycle driven by uniformly accelerated vacuum contacts.

The working medium is a two-level detector with populations (1-p, p).
One cycle consists of: (1) adiabatic gap compression omega1 -> omega2
at frozen population, (2) a hot contact — uniform acceleration alpha_H
through the vacuum at gap omega2, shifting the excited population by
dp_hot, (3) adiabatic expansion omega2 -> omega1, and (4) a cold
contact at acceleration alpha_C and gap omega1.  Populations only move
during contacts; the gap only moves during adiabats, so every stage is
either pure work or pure heat and q1 = w2 = q3 = w4 = 0 identically.

The cycle closes (returns to the same p) at the critical probability
p0, where the hot and cold population kicks cancel.  Work is extracted
when the hot contact pumps population up, i.e. dp_hot > 0.  Everything
here is leading order in the coupling g, so the two contacts decouple
and p0 follows in closed form from the vacuum response function.

A classical reference is provided: contacts with ideal thermal baths
whose temperatures are identified with the reduced accelerations
directly (Gibbs weight exp(-1/a)), not with a/2pi — the comparison is
defined this way on purpose, so the two engines agree in the
high-acceleration limit rather than differing by a constant factor.
Do not "fix" the missing 2pi.
"""

import math
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple

from .errors import ConsistencyError, DomainError
from .response import (V_MAX, ValidityVerdict, j_function,
                       perturbative_validity)

__all__ = [
    "EngineConfig", "StageLedger", "CycleSolution",
    "critical_probability", "stage_ledger", "solve_cycle",
    "classical_delta_p", "work_comparison",
]


def _check_speed(v: float) -> None:
    if not (math.isfinite(v) and 0.0 < v < V_MAX):
        raise DomainError("v out of (0, tanh(pi))")


def _check_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be positive")


def _kick(a: float, p: float, v: float, g: float = 1.0) -> float:
    """Population kick of one contact, continued to arbitrary real p.

    Same arithmetic as :func:`unruh_otto.response.delta_p`, without the
    p in [0, 1] population contract: the kick is affine in p, and the
    cycle's fixed point can land outside the unit interval (the cycle
    is then infeasible, but its residuals and feasibility diagnostics
    must still evaluate).
    """
    y = 2.0 * math.atanh(v)
    return g * g * ((1.0 - 2.0 * p) * j_function(-1.0 / a, y)
                    - p * math.atanh(v) / (2.0 * a))


@dataclass(frozen=True)
class EngineConfig:
    """Fixed cycle parameters.

    Gaps omega1 <= omega2 (equal gaps give a degenerate, work-free cycle
    and are deliberately allowed as a trivial test point); proper
    accelerations alpha_H (hot contact, at gap omega2) and alpha_C (cold
    contact, at gap omega1); contact end speed v shared by both
    contacts; coupling g; initial excited population p.  The reduced
    accelerations a_H = alpha_H/omega2 and a_C = alpha_C/omega1 act as
    the dimensionless contact temperatures.
    """
    omega1: float
    omega2: float
    alpha_H: float
    alpha_C: float
    v: float
    g: float = 1.0
    p: float = 0.0

    def __post_init__(self) -> None:
        _check_positive("omega1", self.omega1)
        _check_positive("omega2", self.omega2)
        if self.omega2 < self.omega1:
            raise DomainError("omega2 must be at least omega1")
        _check_positive("alpha_H", self.alpha_H)
        _check_positive("alpha_C", self.alpha_C)
        _check_speed(self.v)
        _check_positive("g", self.g)
        if not (math.isfinite(self.p) and 0.0 <= self.p <= 1.0):
            raise DomainError("p out of [0, 1]")

    @property
    def a_H(self) -> float:
        """Reduced acceleration of the hot contact, alpha_H / omega2."""
        return self.alpha_H / self.omega2

    @property
    def a_C(self) -> float:
        """Reduced acceleration of the cold contact, alpha_C / omega1."""
        return self.alpha_C / self.omega1


@dataclass(frozen=True)
class StageLedger:
    """Per-stage energy bookkeeping for one cycle.

    Stage numbering follows the cycle order: 1 compression, 2 hot
    contact, 3 expansion, 4 cold contact.  Work is energy delivered to
    the medium, heat is energy absorbed by the medium, so q_total +
    w_total = 0 (first law); ``first_law_residual`` records the actual
    balance relative to the largest stage magnitude.  w_ext = -w_total
    is the work extracted per cycle and eta = 1 - omega1/omega2 is the
    gap-ratio efficiency (the exact value of w_ext / q2 whenever q2 is
    nonzero, and independent of accelerations, speed, and coupling).
    """
    q1: float
    w1: float
    q2: float
    w2: float
    q3: float
    w3: float
    q4: float
    w4: float
    q_total: float
    w_total: float
    w_ext: float
    eta: float
    first_law_residual: float


def stage_ledger(cfg: EngineConfig, dp_hot: float) -> StageLedger:
    """Energy ledger for one cycle starting at population cfg.p.

    The hot contact moves the population by dp_hot and the cold contact
    moves it back by exactly -dp_hot (a closed cycle is imposed; pair
    with :func:`critical_probability` for the population where that
    actually holds).
    """
    if not math.isfinite(dp_hot):
        raise DomainError("dp_hot must be finite")
    omega1, omega2, p = cfg.omega1, cfg.omega2, cfg.p

    w1 = p * (omega2 - omega1)
    q2 = omega2 * dp_hot
    w3 = (p + dp_hot) * (omega1 - omega2)
    q4 = omega1 * (-dp_hot)

    q_total = q2 + q4
    w_total = w1 + w3
    balance = q_total + w_total
    scale = max(abs(w1), abs(q2), abs(w3), abs(q4))
    residual = abs(balance) / scale if scale > 0.0 else 0.0

    return StageLedger(q1=0.0, w1=w1, q2=q2, w2=0.0, q3=0.0, w3=w3,
                       q4=q4, w4=0.0, q_total=q_total, w_total=w_total,
                       w_ext=-w_total, eta=1.0 - omega1 / omega2,
                       first_law_residual=residual)


def critical_probability(a_H: float, a_C: float, v: float) -> float:
    """Initial population at which the hot and cold contact kicks cancel.

    Solving dp(a_H, p) + dp(a_C, p) = 0 for p gives the closed form
    p0 = P / (1 + 2 P) with

        P = 2 a_H a_C [J(-1/a_H, y) + J(-1/a_C, y)]
            / ((a_H + a_C) atanh(v)),        y = 2 atanh(v).

    The result is cross-checked by substituting it back into the two
    population kicks; a residual above 1e-10 raises ConsistencyError.
    p0 is a fixed point of the linearized population dynamics, not
    automatically a probability: it is negative whenever the response
    offsets sum negative (both contacts de-exciting), and a cycle is
    operable as a heat engine only for 0 < p0 < 1/2.
    """
    _check_positive("a_H", a_H)
    _check_positive("a_C", a_C)
    _check_speed(v)

    y = 2.0 * math.atanh(v)
    offset_sum = j_function(-1.0 / a_H, y) + j_function(-1.0 / a_C, y)
    pump = 2.0 * a_H * a_C * offset_sum / ((a_H + a_C) * math.atanh(v))

    denom = 1.0 + 2.0 * pump
    if denom == 0.0 or not math.isfinite(pump):
        raise DomainError("critical probability diverges for these parameters")
    p0 = pump / denom

    kick_hot = _kick(a_H, p0, v)
    kick_cold = _kick(a_C, p0, v)
    scale = max(abs(kick_hot), abs(kick_cold), 1.0)
    if abs(kick_hot + kick_cold) > 1e-10 * scale:
        raise ConsistencyError(
            f"closed-form fixed point leaves kick residual "
            f"{kick_hot + kick_cold:.3e} at p0 = {p0!r}")
    return p0


@dataclass(frozen=True)
class CycleSolution:
    """Closed cycle at the critical population.

    ``feasible`` is the heat-engine flag: True when the hot contact
    pumps population up (dp_hot > 0), so that for omega2 > omega1 the
    cycle extracts work; False means the same parameters run a
    refrigerator.  dp_cold = -dp_hot by construction of p0.
    """
    p0: float
    dp_hot: float
    dp_cold: float
    feasible: bool
    validity_hot: ValidityVerdict
    validity_cold: ValidityVerdict


def solve_cycle(cfg: EngineConfig) -> CycleSolution:
    """Close the cycle for the given configuration.

    Computes the reduced accelerations, the critical population p0,
    and the hot-contact kick dp_hot = dp(a_H, p0, v, g) there, plus
    perturbative-validity verdicts for both contacts.  cfg.p is not
    used: the cycle is solved at its own fixed point.  No exception is
    raised for an infeasible or validity-violating configuration — the
    numbers and verdicts are returned so parameter scans can see where
    and how operation fails.
    """
    p0 = critical_probability(cfg.a_H, cfg.a_C, cfg.v)
    dp_hot = _kick(cfg.a_H, p0, cfg.v, cfg.g)

    def verdict(a: float, kick: float) -> ValidityVerdict:
        shifted = p0 + kick
        return replace(perturbative_validity(a, cfg.v, cfg.g),
                       population_after=shifted,
                       in_unit_interval=0.0 < shifted < 1.0)

    return CycleSolution(p0=p0, dp_hot=dp_hot, dp_cold=-dp_hot,
                         feasible=dp_hot > 0.0,
                         validity_hot=verdict(cfg.a_H, dp_hot),
                         validity_cold=verdict(cfg.a_C, -dp_hot))


def classical_delta_p(a_H: float, a_C: float) -> float:
    """Population gain per cycle with ideal thermal baths instead of contacts.

    Each bath fully thermalizes the two-level medium to the Gibbs
    population 1 / (1 + exp(1/a)) at dimensionless temperature a (the
    reduced acceleration itself), so the hot-contact gain is the
    difference of the two thermal populations, independent of coupling
    and contact duration.  Evaluated as (tanh(1/2a_C) - tanh(1/2a_H))/2,
    which saturates instead of overflowing as a -> 0+.
    """
    _check_positive("a_H", a_H)
    _check_positive("a_C", a_C)
    return 0.5 * (math.tanh(0.5 / a_C) - math.tanh(0.5 / a_H))


def work_comparison(a_H: float, a_C: float, v_list: Sequence[float],
                    gap_diff: float = 1.0,
                    g: float = 1.0) -> List[Tuple[float, float, float]]:
    """Work per cycle, accelerated-vacuum contacts versus thermal baths.

    For each speed in v_list the vacuum cycle is closed at its critical
    population and extracts w_unruh = gap_diff * dp(a_H, p0, v, g); the
    classical reference extracts w_cl = gap_diff * classical_delta_p
    independent of v (and of g — full thermalization has no coupling
    scale).  Returns rows (v, w_unruh, w_cl).  Longer contacts (larger
    v) push w_unruh toward the classical value from below.
    """
    _check_positive("gap_diff", gap_diff)
    _check_positive("g", g)
    w_cl = classical_delta_p(a_H, a_C) * gap_diff
    rows = []
    for v in v_list:
        p0 = critical_probability(a_H, a_C, v)
        dp_hot = _kick(a_H, p0, v, g)
        rows.append((float(v), dp_hot * gap_diff, w_cl))
    return rows
