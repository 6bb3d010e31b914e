# cython: language_level=3
"""Compiled kernels for integer coordinate tensors.

Mirrors the pure-Python tensor helpers in `numberfield` (nested tuples of
arbitrary-precision ints, one nesting level per tower level).  The integers
stay Python objects — the win is C-level recursion and loop bookkeeping,
which dominates at the small coordinate sizes typical of the pipeline.
"""

from math import gcd as _int_gcd

from .errors import InternalInvariantError


cdef tuple _tadd_c(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if type(x) is int:
            out[i] = x + y
        else:
            out[i] = _tadd_c(<tuple> x, <tuple> y)
    return tuple(out)


cdef tuple _tsub_c(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if type(x) is int:
            out[i] = x - y
        else:
            out[i] = _tsub_c(<tuple> x, <tuple> y)
    return tuple(out)


cdef tuple _tneg_c(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x
    for i in range(n):
        x = a[i]
        if type(x) is int:
            out[i] = -x
        else:
            out[i] = _tneg_c(<tuple> x)
    return tuple(out)


cdef tuple _tscale_c(tuple a, object k):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x
    for i in range(n):
        x = a[i]
        if type(x) is int:
            out[i] = x * k
        else:
            out[i] = _tscale_c(<tuple> x, k)
    return tuple(out)


cdef tuple _tdiv_c(tuple a, object k):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x
    for i in range(n):
        x = a[i]
        if type(x) is int:
            out[i] = x // k
        else:
            out[i] = _tdiv_c(<tuple> x, k)
    return tuple(out)


cdef bint _tbool_c(tuple a) except -1:
    cdef object x
    for x in a:
        if type(x) is int:
            if x:
                return True
        elif _tbool_c(<tuple> x):
            return True
    return False


cdef object _tcontent_c(tuple a, object g):
    cdef object x
    for x in a:
        if type(x) is int:
            g = _int_gcd(g, x)
        else:
            g = _tcontent_c(<tuple> x, g)
        if g == 1:
            return g
    return g


cdef tuple _texact_c(tuple a, object k):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object x, q, rem
    for i in range(n):
        x = a[i]
        if type(x) is int:
            q, rem = divmod(x, k)
            if rem:
                raise InternalInvariantError(
                    "inexact division in a remainder sequence row"
                )
            out[i] = q
        else:
            out[i] = _texact_c(<tuple> x, k)
    return tuple(out)


def tadd(tuple a, tuple b):
    return _tadd_c(a, b)


def tsub(tuple a, tuple b):
    return _tsub_c(a, b)


def tneg(tuple a):
    return _tneg_c(a)


def tscale(tuple a, k):
    return _tscale_c(a, k)


def tdiv(tuple a, k):
    return _tdiv_c(a, k)


def tbool(tuple a):
    return _tbool_c(a)


def tcontent(tuple a, g=0):
    return _tcontent_c(a, g)


def texact(tuple a, k):
    return _texact_c(a, k)


def conv_reduce(tuple a, tuple b, rows):
    """Bottom-level product: integer convolution of two length-n coordinate
    tuples followed by the reduction rows for theta^n .. theta^(2n-2)."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef object ai, bj, c, ri, row
    cdef list out = [0] * (2 * n - 1)
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    for k in range(2 * n - 2, n - 1, -1):
        c = out[k]
        if c:
            row = rows[k - n]
            for i in range(n):
                ri = row[i]
                if ri:
                    out[i] = out[i] + c * ri
    return tuple(out[:n])
