# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``.

The values are arbitrary-precision Python integers, so the arithmetic
itself stays in CPython's long implementation; Cython removes the
interpreter dispatch around the O(n^2) convolution loop, which is where
the series engine spends nearly all of its time.
"""

BACKEND = "cython"


def convolve(list a, list b, Py_ssize_t n_out):
    """Truncated convolution of integer lists: out[k] = sum a[i]*b[k-i], k < n_out."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i, j, hi
    cdef list out = [0] * n_out
    cdef object ai, acc
    if na == 0 or nb == 0:
        return out
    for i in range(min(na, n_out)):
        ai = a[i]
        if not ai:
            continue
        hi = nb if nb < n_out - i else n_out - i
        for j in range(hi):
            acc = out[i + j]
            out[i + j] = acc + ai * b[j]
    return out
