"""Coulomb phase shifts sigma_l(eta) for integer l >= 0.

Exact routes
    ``sigma0_exact``        -gamma*eta minus the atan-excess series
    ``sigma0_power_series`` odd-zeta power series, |eta| < 1
    ``sigma_l_exact``       sigma_0 plus the finite arctangent sum
Approximations
    ``sigma_l_order0``, ``sigma_l_order1``, ``sigma0_large_eta``,
    ``sigma_l_log_approx``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from scipy.optimize import brentq

from ._backend import kernels
from .core import (
    DEFAULT_CONFIG,
    EULER_GAMMA,
    CoulombDomainError,
    ConvergenceError,
    EvalConfig,
    check_finite,
    zeta_odd,
)
from .gamma_kernel import gamma_ratio_phase

__all__ = [
    "PhaseMethod",
    "PhaseQuery",
    "PhaseResult",
    "sigma0_exact",
    "sigma0_power_series",
    "power_series_order",
    "sigma_l_exact",
    "sigma_l_gudermann",
    "sigma_l_order0",
    "delta_sigma_l",
    "sigma_l_order1",
    "sigma0_large_eta",
    "sigma_l_log_approx",
    "find_sigma0_zero",
    "sigma0",
    "phase",
    "order1_error",
    "NEAR_ZERO_THRESHOLD",
    "METHOD_ALIASES",
]

# below this |sigma_0| the order-1 error is reported as absolute, not relative
NEAR_ZERO_THRESHOLD = 1e-3


class PhaseMethod(str, Enum):
    EXACT_SUM = "ExactSum"
    EXACT_GUDERMANN = "ExactGudermann"
    ORDER0 = "Order0"
    ORDER1 = "Order1"
    POWER_SERIES = "PowerSeries"
    LARGE_ETA = "LargeEta"
    LOG_APPROX = "LogApprox"


@dataclass(frozen=True)
class PhaseQuery:
    l: int
    eta: float

    def __post_init__(self):
        _check_query(self.l, self.eta)


@dataclass(frozen=True)
class PhaseResult:
    sigma: float
    method: PhaseMethod
    error_bound: Optional[float] = None
    terms_used: Optional[int] = None

    @property
    def over_pi(self) -> float:
        return self.sigma / math.pi


def _check_query(l, eta):
    if isinstance(l, bool) or int(l) != l or l < 0:
        raise CoulombDomainError(f"l must be a non-negative integer, got {l!r}")
    check_finite(eta=eta)


def _unpack(q):
    if isinstance(q, PhaseQuery):
        return q.l, q.eta
    l, eta = q
    _check_query(l, eta)
    return int(l), float(eta)


# --------------------------------------------------------------------------
# sigma_0, direct sum


def _u_minus_atan(u: float) -> float:
    """u - atan(u) without cancellation for small u."""
    if abs(u) > 0.25:
        return u - math.atan(u)
    u2 = u * u
    total = 0.0
    # u^3/3 - u^5/5 + ..., 0.25^30 < 1e-18
    for k in range(15, 0, -1):
        total = u2 * ((-1) ** (k + 1) / (2 * k + 1) + total)
    return u * total


def _excess_tail(eta: float, n: int) -> float:
    """sum_{j>n} [atan(eta/j) - eta/j] by the midpoint Euler-Maclaurin rule.

    The integral of the summand from X = n + 1/2 to infinity is closed form;
    the f'(X)/24 term is the first midpoint correction.
    """
    x = n + 0.5
    u = eta / x
    integral = x * _u_minus_atan(u) - 0.5 * eta * math.log1p(u * u)
    fprime = eta**3 / (x * x * (x * x + eta * eta))
    return integral + fprime / 24.0


def _excess_terms(eta: float, cfg: EvalConfig) -> tuple[int, float]:
    # Next midpoint correction is 7/5760 f'''(X) with f''' ~ 20 eta^3 / X^6;
    # doubled for safety. X >= 4|eta| keeps that leading form honest.
    a = abs(eta)
    c = 2.0 * 7.0 / 5760.0 * 20.0 * a**3
    n = max(8, math.ceil(4.0 * a), math.ceil((c / cfg.series_rel_tol) ** (1.0 / 6.0)))
    x = n + 0.5
    return n, c / x**6


def sigma0_exact(eta: float, cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    """sigma_0 = -gamma*eta - sum_{j>=1} [atan(eta/j) - eta/j]."""
    check_finite(eta=eta)
    if eta == 0:
        return PhaseResult(0.0, PhaseMethod.EXACT_SUM, 0.0, 0)
    a = abs(eta)
    n, err = _excess_terms(a, cfg)
    if n > cfg.max_terms:
        raise ConvergenceError(f"sigma_0({eta}) needs {n} terms, max_terms={cfg.max_terms}")
    value = -EULER_GAMMA * a - (kernels.atan_excess_sum(a, n) + _excess_tail(a, n))
    if eta < 0:
        value = -value
    return PhaseResult(value, PhaseMethod.EXACT_SUM, err, n)


# --------------------------------------------------------------------------
# sigma_0, power series


def _power_term(k: int, eta: float, cfg: EvalConfig) -> float:
    # -(-1)^k zeta(2k+1) eta^(2k+1) / (2k+1)
    s = 2 * k + 1
    sign = 1.0 if k % 2 else -1.0
    return sign * zeta_odd(k, cfg) * eta**s / s


def power_series_order(eta: float, tol: float = 1e-12, cfg: EvalConfig = DEFAULT_CONFIG) -> int:
    """Smallest k_max whose alternating-series remainder bound is below ``tol``."""
    if not abs(eta) < 1:
        raise CoulombDomainError(f"the power series needs |eta| < 1, got {eta}")
    k = 1
    while abs(_power_term(k + 1, eta, cfg)) >= tol:
        k += 1
        if k > cfg.max_terms:
            raise ConvergenceError(f"power series at eta={eta} needs more than {cfg.max_terms} terms")
    return k


def sigma0_power_series(eta: float, k_max: int, cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    check_finite(eta=eta)
    if not abs(eta) < 1:
        raise CoulombDomainError(f"the power series needs |eta| < 1, got {eta}")
    if k_max < 1:
        raise CoulombDomainError(f"k_max must be >= 1, got {k_max}")
    terms = [-EULER_GAMMA * eta] + [_power_term(k, eta, cfg) for k in range(k_max, 0, -1)]
    bound = abs(_power_term(k_max + 1, eta, cfg))
    return PhaseResult(math.fsum(terms), PhaseMethod.POWER_SERIES, bound, k_max)


# --------------------------------------------------------------------------
# sigma_l


def sigma_l_exact(q, cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    """sigma_0 plus sum_{m=1}^{l} atan(eta/m)."""
    l, eta = _unpack(q)
    if l == 0:
        return sigma0_exact(eta, cfg)
    # evaluate at |eta| so the result is exactly odd in eta
    s0 = sigma0_exact(abs(eta), cfg)
    value = s0.sigma + kernels.atan_sum(abs(eta), l)
    if eta < 0:
        value = -value
    return PhaseResult(value, PhaseMethod.EXACT_SUM, s0.error_bound, s0.terms_used + l)


def sigma_l_gudermann(q, cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    l, eta = _unpack(q)
    return PhaseResult(gamma_ratio_phase(l, eta, cfg), PhaseMethod.EXACT_GUDERMANN)


def _order0_value(l: int, eta: float) -> float:
    lp1 = l + 1.0
    return (l + 0.5) * math.atan(eta / lp1) + eta * (math.log(math.hypot(lp1, eta)) - 1.0)


def sigma_l_order0(q) -> PhaseResult:
    """Zeroth-order Stirling phase with the bound on the dropped remainder."""
    l, eta = _unpack(q)
    lp1 = l + 1.0
    bound = 1.0 / (6.0 * (lp1 + math.hypot(lp1, eta)))
    return PhaseResult(_order0_value(l, eta), PhaseMethod.ORDER0, bound)


def delta_sigma_l(q) -> float:
    l, eta = _unpack(q)
    lp1 = l + 1.0
    return -eta / (12.0 * (lp1 * lp1 + eta * eta))


def sigma_l_order1(q) -> PhaseResult:
    l, eta = _unpack(q)
    return PhaseResult(_order0_value(l, eta) + delta_sigma_l((l, eta)), PhaseMethod.ORDER1)


def sigma0_large_eta(eta: float) -> PhaseResult:
    check_finite(eta=eta)
    if not eta > 0:
        raise CoulombDomainError(f"the large-eta form needs eta > 0, got {eta}")
    return PhaseResult(math.pi / 4.0 + eta * (math.log(eta) - 1.0), PhaseMethod.LARGE_ETA)


def sigma_l_log_approx(q) -> PhaseResult:
    l, eta = _unpack(q)
    if l < 1:
        raise CoulombDomainError("the logarithmic form eta*ln(l+1) is meant for l >= 1")
    return PhaseResult(eta * math.log(l + 1.0), PhaseMethod.LOG_APPROX)


# --------------------------------------------------------------------------


def find_sigma0_zero(cfg: EvalConfig = DEFAULT_CONFIG, bracket=(1.0, 3.0)) -> float:
    """Positive zero of sigma_0(eta), close to 1.810."""
    lo, hi = bracket
    f_lo = sigma0_exact(lo, cfg).sigma
    f_hi = sigma0_exact(hi, cfg).sigma
    if f_lo * f_hi > 0:
        raise CoulombDomainError(f"sigma_0 does not change sign on [{lo}, {hi}]")
    return brentq(lambda e: sigma0_exact(e, cfg).sigma, lo, hi, xtol=cfg.root_abs_tol)


def sigma0(eta: float, cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    """Power series for |eta| < 0.5, direct sum otherwise."""
    if abs(eta) < 0.5:
        return sigma0_power_series(eta, power_series_order(eta, cfg.series_rel_tol, cfg), cfg)
    return sigma0_exact(eta, cfg)


METHOD_ALIASES = {
    "exact": PhaseMethod.EXACT_SUM,
    "gudermann": PhaseMethod.EXACT_GUDERMANN,
    "order0": PhaseMethod.ORDER0,
    "order1": PhaseMethod.ORDER1,
    "power": PhaseMethod.POWER_SERIES,
    "large-eta": PhaseMethod.LARGE_ETA,
    "log": PhaseMethod.LOG_APPROX,
}


def phase(l: int, eta: float, method="exact", cfg: EvalConfig = DEFAULT_CONFIG) -> PhaseResult:
    """Evaluate sigma_l(eta) by the named route.

    ``power`` and ``large-eta`` are sigma_0 formulas and reject l != 0.
    """
    m = METHOD_ALIASES.get(method, method)
    m = PhaseMethod(m)
    q = PhaseQuery(l, eta)
    if m is PhaseMethod.EXACT_SUM:
        return sigma_l_exact(q, cfg)
    if m is PhaseMethod.EXACT_GUDERMANN:
        return sigma_l_gudermann(q, cfg)
    if m is PhaseMethod.ORDER0:
        return sigma_l_order0(q)
    if m is PhaseMethod.ORDER1:
        return sigma_l_order1(q)
    if m is PhaseMethod.LOG_APPROX:
        return sigma_l_log_approx(q)
    if l != 0:
        raise CoulombDomainError(f"method {m.value} is defined for l = 0 only")
    if m is PhaseMethod.POWER_SERIES:
        return sigma0_power_series(eta, power_series_order(eta, cfg.series_rel_tol, cfg), cfg)
    return sigma0_large_eta(eta)


def order1_error(eta: float, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[float, str]:
    """Error of sigma_0^(1) against the exact sigma_0.

    Relative when |sigma_0| >= NEAR_ZERO_THRESHOLD, absolute otherwise; the
    second element names which.
    """
    exact = sigma0_exact(eta, cfg).sigma
    diff = sigma_l_order1((0, eta)).sigma - exact
    if abs(exact) < NEAR_ZERO_THRESHOLD:
        return diff, "absolute"
    return diff / exact, "relative"
