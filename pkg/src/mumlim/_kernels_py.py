"""Pure-Python reference kernels for the hot inner loops.

The compiled extension mumlim._kernels implements the same five functions
with C-level loop scaffolding; both operate on lists of exact rational
scalars and must produce identical output. Keep the two files in sync.

Conventions: a "series" is a list of QQ coefficients a_0..a_N; a "ptable"
P is a list of rows with P[j][m] = p_j(m), row j having length N+1-j, so
that applying the operator sum_j t^j p_j(theta) to sum a_n t^n gives
b_n = sum_{j<=n} P[j][n-j] * a[n-j].
"""

from .rationals import ZERO


def cauchy_mul(a, b):
    """Truncated Cauchy product; len(a) == len(b), result has the same length."""
    n = len(a)
    out = [ZERO] * n
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def mul_poly(a, p):
    """Multiply a series by a (short) polynomial coefficient list."""
    n = len(a)
    out = [ZERO] * n
    for k in range(min(len(p), n)):
        pk = p[k]
        if not pk:
            continue
        for i in range(n - k):
            ai = a[i]
            if ai:
                out[i + k] += pk * ai
    return out


def div_poly(a, d):
    """Divide a series by a polynomial with d[0] != 0 (series division)."""
    n = len(a)
    d0 = d[0]
    nd = len(d)
    out = [ZERO] * n
    for i in range(n):
        acc = a[i]
        for k in range(1, min(i, nd - 1) + 1):
            dk = d[k]
            oik = out[i - k]
            if dk and oik:
                acc -= dk * oik
        out[i] = acc / d0
    return out


def apply_ptable(P, a):
    """b_n = sum_{j<=n} P[j][n-j] * a[n-j] for the full truncation range."""
    n = len(a)
    out = [ZERO] * n
    for j in range(n):
        row = P[j]
        for m in range(len(row)):
            am = a[m]
            if am:
                v = row[m]
                if v:
                    out[j + m] += v * am
    return out


def solve_ptable(P, b, r, a0):
    """Forward substitution for sum_j P[j][n-j] a_{n-j} = b_n with p_0 = theta^r.

    a_0 is the free normalization; division by n^r is exact for n >= 1.
    """
    n = len(b)
    a = [ZERO] * n
    a[0] = a0
    for m in range(1, n):
        acc = b[m]
        for j in range(1, m + 1):
            am = a[m - j]
            if am:
                v = P[j][m - j]
                if v:
                    acc -= v * am
        a[m] = acc / (m**r)
    return a
