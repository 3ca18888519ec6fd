import math

import mpmath
import pytest

from coulphase import _pykernels

try:
    from coulphase import _ckernels
except ImportError:  # extension not built
    _ckernels = None

KERNEL_MODULES = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    KERNEL_MODULES.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNEL_MODULES)
def kernel_module(request):
    return request.param


def mp_sigma(l, eta, dps=30):
    """Reference sigma_l = Im log Gamma(1 + l + i eta) at high precision."""
    with mpmath.workdps(dps):
        return float(mpmath.im(mpmath.loggamma(mpmath.mpc(1 + l, eta))))


def mp_mu(z, dps=30):
    """Reference mu(z) = log Gamma(z) - [ln(2 pi)/2 - z + (z - 1/2) Log z]."""
    with mpmath.workdps(dps):
        w = mpmath.mpc(z)
        return complex(mpmath.loggamma(w) - (mpmath.log(2 * mpmath.pi) / 2 - w + (w - 0.5) * mpmath.log(w)))


PI = math.pi
