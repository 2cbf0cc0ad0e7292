"""Pure-Python reference kernels.

Same contracts as the compiled module `_fastkernels`; used when the
extension is unavailable or when SPPOLY_PURE is set. Coefficient lists are
dense, ascending, and hold exact scalars (int or Fraction).
"""

from fractions import Fraction

BACKEND = "python"


def _ratio(a, b):
    # Exact a/b, collapsed to int when the denominator cancels.
    q = Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


def conv(a, b):
    """Dense convolution (polynomial product). Both inputs nonempty."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def divmod_dense(num, den):
    """Long division, returns (quotient, remainder) as raw coefficient lists.

    `den` must be canonical (nonzero leading coefficient). The remainder list
    may carry trailing zeros; callers trim.
    """
    ld = len(den)
    if len(num) < ld:
        return [], list(num)
    r = list(num)
    lead = den[ld - 1]
    qlen = len(num) - ld + 1
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = r[k + ld - 1]
        if c == 0:
            continue
        f = c if lead == 1 else _ratio(c, lead)
        q[k] = f
        for i in range(ld - 1):
            di = den[i]
            if di:
                r[k + i] -= f * di
        r[k + ld - 1] = 0
    return q, r[: ld - 1]


def eval_complex_many(coeffs, points):
    """Horner evaluation of one real-coefficient polynomial at many complex points."""
    cs = [float(c) for c in reversed(coeffs)]
    out = []
    for z in points:
        z = complex(z)
        s = 0j
        for c in cs:
            s = s * z + c
        out.append(s)
    return out
