"""Sparse multivariate polynomials over exact rationals.

A polynomial is a dict mapping exponent tuples to nonzero rational
coefficients.  Keys are ordered graded-reverse-lexicographically for
serialization so output is deterministic.
"""

from .backend import R, ZERO, ONE, rat_str, rat_from_str


class DimensionMismatch(ValueError):
    pass


def grevlex_key(exp):
    """Sort key: graded, then reverse-lexicographic within a degree."""
    return (sum(exp), tuple(reversed(exp)))


class SparsePoly:
    """Polynomial in d variables; immutable by convention."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if c != 0:
                    self.terms[tuple(exp)] = c

    @classmethod
    def zero(cls, d):
        return cls(d)

    @classmethod
    def constant(cls, d, c):
        return cls(d, {(0,) * d: R(c)})

    @classmethod
    def variable(cls, d, i):
        """x_{i+1} as a polynomial (0-based index i)."""
        exp = [0] * d
        exp[i] = 1
        return cls(d, {tuple(exp): ONE})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if self.d != other.d:
            raise DimensionMismatch(f"{self.d} vs {other.d} variables")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        p = SparsePoly(self.d)
        p.terms = out
        return p

    def __neg__(self):
        p = SparsePoly(self.d)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, ZERO) + c1 * c2
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        p = SparsePoly(self.d)
        p.terms = out
        return p

    def scale(self, c):
        if c == 0:
            return SparsePoly(self.d)
        p = SparsePoly(self.d)
        p.terms = {e: c * v for e, v in self.terms.items()}
        return p

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.d, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.d == other.d and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def eval(self, point):
        if len(point) != self.d:
            raise DimensionMismatch(f"point has {len(point)} coords, poly has {self.d}")
        total = ZERO
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= x**e
            total += v
        return total

    def subst(self, replacements):
        """Substitute each variable x_i by the polynomial replacements[i]."""
        d_out = replacements[0].d
        result = SparsePoly(d_out)
        powers = [{0: SparsePoly.constant(d_out, 1)} for _ in range(self.d)]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = pw(i, e - 1) * replacements[i]
            return cache[e]

        for exp, c in self.terms.items():
            term = SparsePoly.constant(d_out, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * pw(i, e)
            result = result + term
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]))

    def leading(self):
        """(exponent, coefficient) of the grevlex-largest term; None if zero."""
        if not self.terms:
            return None
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def to_json(self):
        return {
            "d": self.d,
            "terms": [{"exp": list(e), "coef": rat_str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["d"], {tuple(t["exp"]): rat_from_str(t["coef"]) for t in obj["terms"]})

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"{rat_str(c)}" + (f"*{mono}" if mono else ""))
        return "SparsePoly(" + " + ".join(bits) + ")"


def substitute_homogeneous(coeffs, lin, hom, n):
    """sum_k coeffs[k] * lin^k * hom^(n-k) for a degree-n coefficient list.

    Equals hom^n * f(lin/hom) wherever hom != 0, with f = sum coeffs[k] t^k.
    """
    if len(coeffs) > n + 1:
        raise ValueError("coefficient list longer than degree+1")
    d = lin.d
    result = SparsePoly(d)
    lin_pow = SparsePoly.constant(d, 1)
    hom_pows = [SparsePoly.constant(d, 1)]
    for _ in range(n):
        hom_pows.append(hom_pows[-1] * hom)
    for k, c in enumerate(coeffs):
        if c != 0:
            result = result + (lin_pow * hom_pows[n - k]).scale(c)
        if k < n:
            lin_pow = lin_pow * lin
    return result
