"""Exact comparison of sums of square roots of rationals.

Every value sign*sqrt(p/q) is rewritten as (coefficient)*sqrt(core) with a
squarefree integer core; sums are then compared coefficient-by-coefficient
within each core, which is an exact equality test because square roots of
distinct squarefree integers are linearly independent over the rationals.
"""

from sympy import factorint

from .backend import R, ZERO, numer, denom


def sqrt_decompose(x):
    """Write sqrt(x) = coef*sqrt(core) with core a squarefree positive integer."""
    if x < 0:
        raise ValueError("radicand must be nonnegative")
    if x == 0:
        return ZERO, 1
    p, q = numer(x), denom(x)
    m = int(p * q)
    s, core = 1, 1
    for prime, e in factorint(m).items():
        s *= prime ** (e // 2)
        if e % 2:
            core *= prime
    return R(s, q), int(core)


def qsqrt_decompose(q):
    """Signed decomposition of a QSqrt value into (coefficient, core)."""
    coef, core = sqrt_decompose(q.radicand)
    return q.sign * coef, core


def qsqrt_sum_collect(values):
    """Collect a list of QSqrt values into a {core: coefficient} map."""
    acc = {}
    for q in values:
        coef, core = qsqrt_decompose(q)
        acc[core] = acc.get(core, ZERO) + coef
    return {c: v for c, v in acc.items() if v != ZERO}

def qsqrt_sums_equal(left, right):
    """Exact equality of two sums of QSqrt values."""
    return qsqrt_sum_collect(left) == qsqrt_sum_collect(right)
