"""Foundation values shared by every route: constants, Bernoulli numbers,
odd zeta values and the arctangent form of the log ratio.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "EULER_GAMMA",
    "CoulombDomainError",
    "ConvergenceError",
    "EvalConfig",
    "euler_gamma_constant",
    "bernoulli_2n",
    "zeta_odd",
    "half_log_ratio_as_atan",
    "check_finite",
    "on_branch_cut",
]

EULER_GAMMA = 0.57721566490153286060651209008240243

# B_2 .. B_20
_BERNOULLI_EVEN = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)


class CoulombDomainError(ValueError):
    """An argument lies outside the domain of the requested formula."""


class ConvergenceError(ArithmeticError):
    """A series could not reach the requested tolerance within ``max_terms``."""


@dataclass(frozen=True)
class EvalConfig:
    """Truncation and root-finding settings.

    Attributes
    ----------
    series_rel_tol : float
        Target relative accuracy of every truncated series.
    max_terms : int
        Hard cap on the number of summed terms.
    root_abs_tol : float
        Absolute tolerance of the sigma_0 zero finder.
    stirling_terms : int
        Default number of Stirling-series terms.
    """

    series_rel_tol: float = 1e-14
    max_terms: int = 10**6
    root_abs_tol: float = 1e-10
    stirling_terms: int = 3

    def __post_init__(self):
        if not (self.series_rel_tol > 0 and math.isfinite(self.series_rel_tol)):
            raise CoulombDomainError(f"series_rel_tol must be > 0, got {self.series_rel_tol}")
        if self.max_terms < 1:
            raise CoulombDomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if not (self.root_abs_tol > 0 and math.isfinite(self.root_abs_tol)):
            raise CoulombDomainError(f"root_abs_tol must be > 0, got {self.root_abs_tol}")
        if self.stirling_terms < 1:
            raise CoulombDomainError(f"stirling_terms must be >= 1, got {self.stirling_terms}")

    @classmethod
    def from_env(cls, **overrides) -> "EvalConfig":
        """Defaults, then ``COULPHASE_TOL``, then explicit ``overrides``."""
        cfg = cls()
        env_tol = os.environ.get("COULPHASE_TOL")
        if env_tol:
            try:
                cfg = replace(cfg, series_rel_tol=float(env_tol))
            except ValueError as exc:
                raise CoulombDomainError(f"COULPHASE_TOL is not a number: {env_tol!r}") from exc
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(cfg, **overrides) if overrides else cfg


DEFAULT_CONFIG = EvalConfig()


def check_finite(**values: float) -> None:
    for name, v in values.items():
        if isinstance(v, complex):
            ok = cmath.isfinite(v)
        else:
            ok = math.isfinite(v)
        if not ok:
            raise CoulombDomainError(f"{name} must be finite, got {v!r}")


def on_branch_cut(z: complex) -> bool:
    """True when ``z`` lies on the non-positive real axis."""
    return z.imag == 0.0 and z.real <= 0.0


def euler_gamma_constant() -> float:
    return EULER_GAMMA


def bernoulli_2n(n: int) -> float:
    """Return the Bernoulli number B_{2n} for 1 <= n <= 10."""
    if not 1 <= n <= len(_BERNOULLI_EVEN):
        raise CoulombDomainError(f"bernoulli_2n is tabulated for 1 <= n <= 10, got {n}")
    return float(_BERNOULLI_EVEN[n - 1])


def bernoulli_2n_exact(n: int) -> Fraction:
    if not 1 <= n <= len(_BERNOULLI_EVEN):
        raise CoulombDomainError(f"bernoulli_2n is tabulated for 1 <= n <= 10, got {n}")
    return _BERNOULLI_EVEN[n - 1]


def zeta_odd(k: int, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Riemann zeta at the odd integer 2k+1.

    Sums m^{-s} for m = 1..N and adds the integral tail with the trapezoid
    end correction, sum_{m>N} m^{-s} ~ N^{1-s}/(s-1) - N^{-s}/2. The
    remaining error is below s/(12 N^{s+1}), and N is the smallest value
    pushing that below ``cfg.series_rel_tol`` (zeta >= 1, so absolute and
    relative tolerance coincide up to a factor <= 1.21).
    """
    if k < 1:
        raise CoulombDomainError(f"zeta_odd needs k >= 1, got {k}")
    return _zeta_odd_cached(k, cfg.series_rel_tol, cfg.max_terms)


@lru_cache(maxsize=512)
def _zeta_odd_cached(k: int, tol: float, max_terms: int) -> float:
    s = 2 * k + 1
    n = max(2, math.ceil((s / (12.0 * tol)) ** (1.0 / (s + 1))))
    if n > max_terms:
        raise ConvergenceError(f"zeta({s}) needs {n} terms, max_terms={max_terms}")
    head = math.fsum(m ** -float(s) for m in range(n, 0, -1))
    tail = n ** (1.0 - s) / (s - 1) - 0.5 * n ** -float(s)
    return head + tail


def half_log_ratio_as_atan(x: float, y: float) -> float:
    """arctan(y/x), which equals Log((x+iy)/(x-iy)) / (2i) for x > 0."""
    check_finite(x=x, y=y)
    if not x > 0:
        raise CoulombDomainError(f"the identity needs x > 0, got x={x}")
    return math.atan2(y, x)
