# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled summation kernels. Mirrors ``_pykernels`` exactly."""

from libc.math cimport atan, fabs, hypot

cdef extern from "<complex.h>" nogil:
    double complex clog(double complex)

cdef double SERIES_RADIUS = 10.0
cdef int N_COEFFS = 17
cdef double COEFFS[17]

cdef int _k
for _k in range(2, 19):
    COEFFS[_k - 2] = (-1.0 if _k % 2 else 1.0) * (_k - 1) / (2.0 * _k * (_k + 1))


cdef inline double complex _term(double wr, double wi) nogil:
    cdef double d, ur, ui, ar, ai, tr
    cdef double complex w
    cdef int i
    if hypot(wr, wi) >= SERIES_RADIUS:
        # u = 1/w, then Horner in real arithmetic
        d = wr * wr + wi * wi
        ur = wr / d
        ui = -wi / d
        ar = 0.0
        ai = 0.0
        for i in range(N_COEFFS - 1, -1, -1):
            ar += COEFFS[i]
            tr = ar * ur - ai * ui
            ai = ar * ui + ai * ur
            ar = tr
        tr = ar * ur - ai * ui
        ai = ar * ui + ai * ur
        return tr + 1j * ai
    w = wr + 1j * wi
    return (w + 0.5) * clog(1.0 + 1.0 / w) - 1.0


cdef inline void _neumaier(double *s, double *c, double x) nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def gudermann_sum(z, Py_ssize_t n):
    """Sum of the first ``n`` Gudermann terms (w+1/2) Log(1+1/w) - 1, w = z+m."""
    cdef double complex zc = complex(z)
    cdef double complex t
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef Py_ssize_t m
    with nogil:
        for m in range(n):
            t = _term(zc.real + <double>m, zc.imag)
            _neumaier(&sr, &cr, t.real)
            _neumaier(&si, &ci, t.imag)
    return complex(sr + cr, si + ci)


def atan_excess_sum(double eta, Py_ssize_t n):
    """sum_{j=1}^{n} [atan(eta/j) - eta/j], summed from j = n down."""
    cdef double s = 0.0, c = 0.0, x
    cdef Py_ssize_t j
    with nogil:
        for j in range(n, 0, -1):
            x = eta / <double>j
            _neumaier(&s, &c, atan(x) - x)
    return s + c


def atan_sum(double eta, Py_ssize_t l):
    """sum_{m=1}^{l} atan(eta/m)."""
    cdef double s = 0.0, c = 0.0
    cdef Py_ssize_t m
    with nogil:
        for m in range(1, l + 1):
            _neumaier(&s, &c, atan(eta / <double>m))
    return s + c
