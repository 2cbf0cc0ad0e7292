# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels: dense convolution, long division, complex Horner.

Each entry point first tries a machine-integer fast path (signed 64-bit with
overflow checking) and falls back to exact Python-object arithmetic when the
operands do not fit. Contracts match `_kernels_py`.
"""

cimport cython

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

from fractions import Fraction

BACKEND = "c"


def _ratio(a, b):
    q = Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


cdef int64_t* _to_i64(list xs) except NULL:
    # Raises OverflowError for out-of-range ints, TypeError for non-ints.
    cdef Py_ssize_t n = len(xs), i
    cdef int64_t* buf = <int64_t*> malloc(n * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = xs[i]
    except BaseException:
        free(buf)
        raise
    return buf


@cython.overflowcheck(True)
def _conv_i64(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef int64_t* pa = NULL
    cdef int64_t* pb = NULL
    cdef int64_t* po = NULL
    cdef int64_t ai
    try:
        pa = _to_i64(a)
        pb = _to_i64(b)
        po = <int64_t*> malloc((la + lb - 1) * sizeof(int64_t))
        if po == NULL:
            raise MemoryError()
        for i in range(la + lb - 1):
            po[i] = 0
        for i in range(la):
            ai = pa[i]
            if ai == 0:
                continue
            for j in range(lb):
                po[i + j] = po[i + j] + ai * pb[j]
        return [po[i] for i in range(la + lb - 1)]
    finally:
        free(pa)
        free(pb)
        free(po)


def _conv_obj(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


def conv(list a, list b):
    """Dense convolution (polynomial product). Both inputs nonempty."""
    try:
        return _conv_i64(a, b)
    except (OverflowError, TypeError):
        return _conv_obj(a, b)


@cython.overflowcheck(True)
def _divmod_i64_monic(list num, list den):
    # Divisor is monic with int coefficients; quotient needs no division.
    cdef Py_ssize_t ln = len(num), ld = len(den), qlen = ln - ld + 1, k, i
    cdef int64_t* r = NULL
    cdef int64_t* d = NULL
    cdef int64_t c
    try:
        r = _to_i64(num)
        d = _to_i64(den)
        q = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = r[k + ld - 1]
            q[k] = c
            if c != 0:
                for i in range(ld - 1):
                    r[k + i] = r[k + i] - c * d[i]
                r[k + ld - 1] = 0
        return q, [r[i] for i in range(ld - 1)]
    finally:
        free(r)
        free(d)


def _divmod_obj(list num, list den):
    cdef Py_ssize_t ld = len(den), qlen = len(num) - ld + 1, k, i
    r = list(num)
    lead = den[ld - 1]
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = r[k + ld - 1]
        if c == 0:
            continue
        f = c if lead == 1 else _ratio(c, lead)
        q[k] = f
        for i in range(ld - 1):
            di = den[i]
            if di != 0:
                r[k + i] = r[k + i] - f * di
        r[k + ld - 1] = 0
    return q, r[: ld - 1]


def divmod_dense(list num, list den):
    """Long division, returns (quotient, remainder) as raw coefficient lists."""
    if len(num) < len(den):
        return [], list(num)
    if den[len(den) - 1] == 1:
        try:
            return _divmod_i64_monic(num, den)
        except (OverflowError, TypeError):
            pass
    return _divmod_obj(num, den)


def eval_complex_many(list coeffs, list points):
    """Horner evaluation of one real-coefficient polynomial at many complex points."""
    cdef Py_ssize_t n = len(coeffs), m = len(points), i, j
    cdef double* cs = NULL
    cdef double complex z, s
    out = []
    if n == 0:
        return [0j] * m
    try:
        cs = <double*> malloc(n * sizeof(double))
        if cs == NULL:
            raise MemoryError()
        for i in range(n):
            cs[i] = float(coeffs[i])
        for j in range(m):
            z = complex(points[j])
            s = 0
            for i in range(n - 1, -1, -1):
                s = s * z + cs[i]
            out.append(s)
        return out
    finally:
        free(cs)
