"""Scalar kernel: Pochhammer symbols, terminating hypergeometric series,
and exact sign*sqrt(rational) values (QSqrt).

All inputs and outputs are exact rationals from the selected backend; no
floating point is ever used.
"""

import math

from .backend import R, ZERO, ONE, numer, denom, rat_str


class BottomPole(ArithmeticError):
    """A bottom Pochhammer vanished before the series terminated."""


def pochhammer(a, n):
    """Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = ONE
    for k in range(n):
        out *= a + k
    return out


def _termination_order(top):
    """Minimal m with a top parameter equal to -m, or None."""
    m = None
    for a in top:
        if a.denominator == 1 and a.numerator <= 0:
            k = -int(a.numerator)
            if m is None or k < m:
                m = k
    return m


def hyp_terminating(top, bottom, z):
    """Exact value of a terminating pFq at argument z.

    Terminates at the minimal m with a top parameter equal to -m.  Raises
    BottomPole if a bottom Pochhammer vanishes at or before that order.
    """
    m = _termination_order(top)
    if m is None:
        raise ValueError("series does not terminate: no nonpositive-integer top parameter")
    total = ZERO
    term = ONE
    for k in range(m + 1):
        total += term
        if k == m:
            break
        num = ONE
        for a in top:
            num *= a + k
        den = ONE
        for b in bottom:
            f = b + k
            if f == 0:
                raise BottomPole(f"bottom parameter {rat_str(b)} poles at k={k + 1}")
            den *= f
        term = term * num * z / (den * (k + 1))
    return total


def hyp_with_prefactor(top, bottom, m, z=ONE):
    """Exact value of prod_b (b)_m * pFq(-m, top; bottom; z).

    The product of the bottom Pochhammers up to m is folded into each term,
    so the combination is a polynomial in the bottom parameters and stays
    finite even where the bare series has a pole: the k-th term carries
    (b)_m/(b)_k = (b+k)_{m-k}.  Used by the Tratnik-style product formulas
    whose prefactors are exactly these bottom Pochhammers.
    """
    total = ZERO
    zp = ONE
    for k in range(m + 1):
        num = pochhammer(R(-m), k)
        for a in top:
            num *= pochhammer(a, k)
        for b in bottom:
            num *= pochhammer(b + k, m - k)
        total += num * zp / math.factorial(k)
        zp *= z
    return total


def _sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class QSqrt:
    """Exact value sign * sqrt(radicand) with rational radicand >= 0.

    Two QSqrt values are equal iff their (sign, radicand) pairs are equal,
    which coincides with value equality since sqrt is injective on [0, oo).
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign, radicand):
        radicand = R(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if radicand == 0:
            sign = 0
        elif sign == 0:
            radicand = R(0)
        self.sign = sign
        self.radicand = radicand

    @classmethod
    def of_rational(cls, x):
        """QSqrt equal to the rational x (radicand x^2)."""
        return cls(_sign_of(x), x * x)

    @classmethod
    def sqrt(cls, x):
        """Principal square root of a nonnegative rational."""
        return cls(1 if x > 0 else 0, x)

    def square(self):
        return self.radicand if self.sign != 0 else ZERO

    def __mul__(self, other):
        if isinstance(other, QSqrt):
            return QSqrt(self.sign * other.sign, self.radicand * other.radicand)
        return NotImplemented

    def scale(self, x):
        """Multiply by a rational x (exact; folds x^2 into the radicand)."""
        return QSqrt(self.sign * _sign_of(x), self.radicand * x * x)

    def scale_sqrt(self, x):
        """Multiply by sqrt(x) for a nonnegative rational x."""
        if x < 0:
            raise ValueError("radicand must be nonnegative")
        return QSqrt(self.sign if x > 0 else 0, self.radicand * x)

    def __neg__(self):
        return QSqrt(-self.sign, self.radicand)

    def is_zero(self):
        return self.sign == 0

    def as_rational(self):
        """Exact rational value, or None when the radicand is not a perfect square."""
        p, q = numer(self.radicand), denom(self.radicand)
        sp = math.isqrt(p)
        sq = math.isqrt(q)
        if sp * sp != p or sq * sq != q:
            return None
        return self.sign * R(sp, sq)

    def __eq__(self, other):
        if isinstance(other, QSqrt):
            return self.sign == other.sign and self.radicand == other.radicand
        return NotImplemented

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def __repr__(self):
        return f"QSqrt({self.sign}, {rat_str(self.radicand)})"

    def to_json(self):
        return {"sign": self.sign, "radicand": rat_str(self.radicand)}
