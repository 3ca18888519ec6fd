"""Point-Coulomb scattering phase shifts sigma_l(eta).

Exact evaluation (finite arctangent sum plus a tail-corrected sigma_0 series,
and an independent Gudermann-series route), Stirling-series approximations
with error bounds, and WKB/eikonal semiclassical formulas.
"""

from ._backend import BACKEND
from .core import (
    EULER_GAMMA,
    ConvergenceError,
    CoulombDomainError,
    EvalConfig,
    bernoulli_2n,
    euler_gamma_constant,
    half_log_ratio_as_atan,
    zeta_odd,
)
from .gamma_kernel import MuResult, exp_mu_series, gamma_ratio_phase, mu_bound, mu_gudermann, mu_stirling
from .phase_shifts import (
    PhaseMethod,
    PhaseQuery,
    PhaseResult,
    delta_sigma_l,
    find_sigma0_zero,
    phase,
    sigma0,
    sigma0_exact,
    sigma0_large_eta,
    sigma0_power_series,
    sigma_l_exact,
    sigma_l_log_approx,
    sigma_l_order0,
    sigma_l_order1,
)
from .semiclassical import (
    SemiclassicalQuery,
    deflection_classical,
    deflection_quantum,
    eikonal_exponential,
    eikonal_gaussian,
    eikonal_sharp,
    eikonal_sharp_limit,
    wkb_phase,
)

__version__ = "0.1.0"
