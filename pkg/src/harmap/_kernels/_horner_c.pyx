# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Horner kernel.

Runs the same per-point recurrence acc = acc*z + c as the numpy fallback,
with complex arithmetic spelled out on real pairs over flat work arrays so
the compiler can vectorize the inner loop.  Results agree with the fallback
to a unit in the last place (numpy's batched complex multiply may use fused
multiply-add; this kernel is compiled with contraction off).
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc

cnp.import_array()


def polyval_many(const double complex[::1] coeffs, const double complex[::1] z):
    """Evaluate sum_k coeffs[k] * z**k at every point of ``z`` by Horner's rule."""
    cdef Py_ssize_t n = coeffs.shape[0]
    cdef Py_ssize_t m = z.shape[0]
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] res = out
    if m == 0:
        return out
    cdef double* buf = <double*> malloc(4 * m * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef double* zr = buf
    cdef double* zi = buf + m
    cdef double* ar = buf + 2 * m
    cdef double* ai = buf + 3 * m
    cdef Py_ssize_t i, k
    cdef double cr, ci, tr
    cr = coeffs[n - 1].real
    ci = coeffs[n - 1].imag
    for i in range(m):
        zr[i] = z[i].real
        zi[i] = z[i].imag
        ar[i] = cr
        ai[i] = ci
    for k in range(n - 2, -1, -1):
        cr = coeffs[k].real
        ci = coeffs[k].imag
        for i in range(m):
            tr = (ar[i] * zr[i] - ai[i] * zi[i]) + cr
            ai[i] = (ar[i] * zi[i] + ai[i] * zr[i]) + ci
            ar[i] = tr
    for i in range(m):
        res[i] = ar[i] + 1j * ai[i]
    free(buf)
    return out
