"""The Stirling correction mu(z), defined by
Gamma(z) = sqrt(2 pi) e^{-z} z^{z-1/2} e^{mu(z)} on the cut plane.

Two independent evaluations are provided: the convergent Gudermann series
(the reference) and the divergent Stirling series (the approximation under
study).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from ._backend import kernels
from .core import (
    DEFAULT_CONFIG,
    CoulombDomainError,
    ConvergenceError,
    EvalConfig,
    bernoulli_2n,
    check_finite,
    on_branch_cut,
)

__all__ = [
    "MuMethod",
    "MuResult",
    "mu_gudermann",
    "mu_bound",
    "mu_stirling",
    "exp_mu_series",
    "gamma_ratio_phase",
    "stirling_coefficient",
    "SHIFT_RADIUS",
]

# Arguments with |z| below this are shifted right through the functional equation.
SHIFT_RADIUS = 8.0


class MuMethod(str, Enum):
    GUDERMANN = "Gudermann"
    STIRLING = "Stirling"


@dataclass(frozen=True)
class MuResult:
    value: complex
    terms_used: int
    bound: float
    method: MuMethod


def _check_z(z: complex) -> complex:
    z = complex(z)
    check_finite(z=z)
    if on_branch_cut(z):
        raise CoulombDomainError(f"z = {z} lies on the cut (-inf, 0]")
    return z


def stirling_coefficient(n: int) -> float:
    """B_{2n} / ((2n-1) 2n): 1/12, -1/360, 1/1260, ..."""
    return bernoulli_2n(n) / ((2 * n - 1) * (2 * n))


def mu_bound(z: complex) -> float:
    """|mu(z)| <= 1 / (12 cos^2(phi/2) |z|) with phi the principal argument."""
    z = _check_z(z)
    c = math.cos(0.5 * math.atan2(z.imag, z.real))
    return 1.0 / (12.0 * c * c * abs(z))


def _tail_radius(tol: float) -> float:
    # After replacing the tail mu(W) by 1/(12 W) - 1/(360 W^3), the residual
    # is about 1/(1260 |W|^5), inflated by at most 1/cos^6(phi/2) <= 8 for
    # Re W >= 0.
    return max(SHIFT_RADIUS, (8.0 / (1260.0 * tol)) ** 0.2)


def mu_gudermann(z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> MuResult:
    """Evaluate mu(z) from the Gudermann series.

    For |z| < 8 the argument is first shifted to z+n with |z+n| >= 8 and the
    n functional-equation steps are added back. The series from the shifted
    point is summed until the first omitted argument W satisfies Re W >= 0
    and |W| >= R(tol); the omitted tail, which is exactly mu(W), is replaced
    by its two leading terms 1/(12 W) - 1/(360 W^3).
    """
    z = _check_z(z)
    n_shift = 0
    while abs(z + n_shift) < SHIFT_RADIUS:
        n_shift += 1
    w = z + n_shift

    radius = _tail_radius(cfg.series_rel_tol)
    n_main = max(1, math.ceil(-w.real))
    if abs(w + n_main) < radius:
        # smallest n with |w + n| >= radius
        disc = radius * radius - w.imag * w.imag
        n_main = max(n_main, math.ceil(math.sqrt(disc) - w.real)) if disc > 0 else n_main
        while abs(w + n_main) < radius:
            n_main += 1

    total = n_shift + n_main
    if total > cfg.max_terms:
        raise ConvergenceError(
            f"mu({z}) needs {total} Gudermann terms, max_terms={cfg.max_terms}"
        )

    shift_part = kernels.gudermann_sum(z, n_shift)
    main_part = kernels.gudermann_sum(w, n_main)
    inv = 1.0 / (w + n_main)
    tail = inv * (1.0 / 12.0 - inv * inv / 360.0)
    value = shift_part + main_part + tail
    if not cmath.isfinite(value):
        raise ConvergenceError(f"non-finite Gudermann sum at z = {z}")
    return MuResult(value=value, terms_used=total, bound=mu_bound(z), method=MuMethod.GUDERMANN)


def mu_stirling(z: complex, n_terms: int) -> complex:
    """Partial sum of the (divergent) Stirling series for mu(z)."""
    z = _check_z(z)
    if z == 0:
        raise CoulombDomainError("mu_stirling is undefined at z = 0")
    if not 1 <= n_terms <= 10:
        raise CoulombDomainError(f"n_terms must be in [1, 10], got {n_terms}")
    inv = 1.0 / z
    inv2 = inv * inv
    power = inv
    total = 0j
    for n in range(1, n_terms + 1):
        total += stirling_coefficient(n) * power
        power *= inv2
    return total


def exp_mu_series(z: complex) -> complex:
    """1 + 1/(12z) + 1/(288z^2) - 139/(51840z^3)."""
    z = _check_z(z)
    if abs(z) < 1.0:
        raise CoulombDomainError(f"exp_mu_series needs |z| >= 1, got |z| = {abs(z)}")
    u = 1.0 / z
    return 1.0 + u * (1.0 / 12.0 + u * (1.0 / 288.0 - u * (139.0 / 51840.0)))


def gamma_ratio_phase(l: int, eta: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """sigma_l as arg Gamma(1+l+i eta) / 2, via sigma_l^(0) + Im mu(1+l+i eta).

    This is the Gudermann reference route; it shares nothing with the
    finite-sum route in :mod:`coulphase.phase_shifts` beyond ``atan``.
    """
    if l < 0 or int(l) != l:
        raise CoulombDomainError(f"l must be a non-negative integer, got {l}")
    check_finite(eta=eta)
    if eta == 0:
        return 0.0
    lp1 = float(l) + 1.0
    order0 = (l + 0.5) * math.atan2(eta, lp1) + eta * (math.log(math.hypot(lp1, eta)) - 1.0)
    return order0 + mu_gudermann(complex(lp1, eta), cfg).value.imag
