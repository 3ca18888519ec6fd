"""Semiclassical Coulomb phases: the closed-form WKB phase, eikonal phases for
three screening functions, and classical/quantum deflection functions.

Eikonal routines take the impact parameter ``b`` and screening length ``a``
directly; relating them to (lambda, k) through lambda = k*b is left to the
caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_CONFIG, EULER_GAMMA, CoulombDomainError, EvalConfig, check_finite
from .phase_shifts import sigma_l_exact

__all__ = [
    "SemiclassicalQuery",
    "wkb_phase",
    "eikonal_sharp",
    "eikonal_sharp_limit",
    "eikonal_exponential",
    "eikonal_gaussian",
    "deflection_classical",
    "deflection_quantum",
    "SCREENINGS",
]


@dataclass(frozen=True)
class SemiclassicalQuery:
    """Parameters shared by the WKB and eikonal formulas.

    ``a_half`` is half the head-on distance of closest approach, so that
    eta = k * a_half; it is unrelated to the screening length ``a``.
    """

    k: float
    eta: float
    b: float | None = None
    a: float | None = None

    def __post_init__(self):
        check_finite(k=self.k, eta=self.eta)
        if not self.k > 0:
            raise CoulombDomainError(f"k must be > 0, got {self.k}")
        for name in ("b", "a"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise CoulombDomainError(f"{name} must be finite and > 0, got {v}")

    @property
    def lam(self) -> float:
        if self.b is None:
            raise CoulombDomainError("lambda = k*b needs the impact parameter b")
        return self.k * self.b

    @property
    def a_half(self) -> float:
        return self.eta / self.k


def _positive(**values):
    check_finite(**values)
    for name, v in values.items():
        if not v > 0:
            raise CoulombDomainError(f"{name} must be > 0, got {v}")


def wkb_phase(lam: float, eta: float) -> float:
    """Point-Coulomb WKB phase at semiclassical angular momentum lam = l + 1/2.

    The arcsine term asin(eta / hypot(eta, lam)) is evaluated as
    atan2(eta, lam), which is the same angle for lam > 0.
    """
    _positive(lam=lam)
    check_finite(eta=eta)
    return eta * math.log(math.hypot(eta, lam)) + lam * math.atan2(eta, lam) - eta


def eikonal_sharp(b: float, a: float, eta: float) -> float:
    """Eikonal phase with a sharp cutoff at radius ``a`` (needs b <= a).

    -(eta/2) ln((a + s)/(a - s)) with s = sqrt(a^2 - b^2), rewritten as
    -eta ln((a + s)/b) since (a - s)(a + s) = b^2.
    """
    _positive(b=b, a=a)
    check_finite(eta=eta)
    if b > a:
        raise CoulombDomainError(f"impact parameter b={b} lies outside the screening radius a={a}")
    s = math.sqrt((a - b) * (a + b))
    return -eta * math.log1p((a + s - b) / b)


def eikonal_sharp_limit(b: float, a: float, eta: float) -> float:
    _positive(b=b, a=a)
    check_finite(eta=eta)
    if not b < a:
        raise CoulombDomainError(f"the a >> b limit needs b < a, got b={b}, a={a}")
    return eta * math.log(b / (2.0 * a))


def eikonal_exponential(b: float, a: float, eta: float) -> float:
    _positive(b=b, a=a)
    check_finite(eta=eta)
    return eta * (math.log(b / (2.0 * a)) - EULER_GAMMA)


def eikonal_gaussian(b: float, a: float, eta: float) -> float:
    _positive(b=b, a=a)
    check_finite(eta=eta)
    return eta * (math.log(b / (2.0 * a)) - 0.5 * EULER_GAMMA)


SCREENINGS = {
    "sharp": eikonal_sharp,
    "sharp-limit": eikonal_sharp_limit,
    "exponential": eikonal_exponential,
    "gaussian": eikonal_gaussian,
}


def deflection_classical(lam: float, eta: float) -> float:
    """Rutherford deflection 2 atan(eta/lam), in radians."""
    _positive(lam=lam)
    check_finite(eta=eta)
    return 2.0 * math.atan(eta / lam)


def deflection_quantum(l: int, eta: float, cfg: EvalConfig = DEFAULT_CONFIG, mode: str = "difference") -> float:
    """2 (sigma_l - sigma_{l-1}).

    ``mode="difference"`` subtracts two full exact phase shifts;
    ``mode="recursion"`` uses the one-step identity 2 atan(eta/l).
    """
    if isinstance(l, bool) or int(l) != l or l < 1:
        raise CoulombDomainError(f"the quantum deflection needs integer l >= 1, got {l!r}")
    check_finite(eta=eta)
    if mode == "recursion":
        return 2.0 * math.atan(eta / l)
    if mode != "difference":
        raise CoulombDomainError(f"unknown mode {mode!r}")
    return 2.0 * (sigma_l_exact((l, eta), cfg).sigma - sigma_l_exact((l - 1, eta), cfg).sigma)
