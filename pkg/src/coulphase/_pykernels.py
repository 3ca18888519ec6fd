"""Pure-Python (numpy + fsum) versions of the summation kernels.

Same signatures and semantics as the compiled ``_ckernels`` module; used when
the extension is not built or ``COULPHASE_PURE_PYTHON`` is set.
"""

import math

import numpy as np

# |w| above which a Gudermann term is evaluated from its 1/w expansion
SERIES_RADIUS = 10.0
# c_k = (-1)^k (k-1) / (2k(k+1)), k = 2..18; truncation error < 1e-20 for |w| >= 10
_SERIES_COEFFS = tuple((-1) ** k * (k - 1) / (2.0 * k * (k + 1)) for k in range(2, 19))


def _fsum_complex(values):
    return complex(math.fsum(values.real), math.fsum(values.imag))


def gudermann_sum(z, n):
    """Sum of the first ``n`` Gudermann terms (w+1/2) Log(1+1/w) - 1, w = z+m."""
    if n <= 0:
        return 0j
    w = complex(z) + np.arange(n, dtype=float)
    far = np.abs(w) >= SERIES_RADIUS
    terms = np.empty(n, dtype=complex)

    u = 1.0 / w[far]
    acc = np.zeros_like(u)
    for c in reversed(_SERIES_COEFFS):
        acc = (acc + c) * u
    terms[far] = acc * u

    near = w[~far]
    terms[~far] = (near + 0.5) * np.log(1.0 + 1.0 / near) - 1.0
    return _fsum_complex(terms)


def atan_excess_sum(eta, n):
    """sum_{j=1}^{n} [atan(eta/j) - eta/j]."""
    if n <= 0:
        return 0.0
    j = np.arange(n, 0, -1, dtype=float)
    x = eta / j
    return math.fsum(np.arctan(x) - x)


def atan_sum(eta, l):
    """sum_{m=1}^{l} atan(eta/m)."""
    if l <= 0:
        return 0.0
    m = np.arange(1, l + 1, dtype=float)
    return math.fsum(np.arctan(eta / m))
