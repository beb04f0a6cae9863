"""Jacobi polynomials on the simplex and the symmetric group acting on them.

The simplex in d variables carries the normalized measure with density
proportional to x_1^k1 ... x_d^kd (1-|x|)^k_{d+1}; parameters are the
(d+1)-tuple kappa.  Monomial moments are products of Pochhammer symbols,
so all inner products here are exact rationals.
"""

import itertools
import re

from .backend import R, ZERO, ONE
from .exact_arith import pochhammer
from .multipoly import SparsePoly, grevlex_key, substitute_homogeneous

_TOKEN = re.compile(r"\d+")


class Permutation:
    """Permutation of {1, ..., m}, stored as the tuple of images."""

    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)
        if sorted(self.img) != list(range(1, len(self.img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.img)}: {img}")

    @classmethod
    def identity(cls, m):
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, text, m):
        """Parse cycle notation like "(12)", "(1 3)(2 4)", "e" or "()"."""
        text = text.strip()
        img = list(range(1, m + 1))
        if text in ("e", "id", "()", "1", ""):
            return cls(img)
        if not text.startswith("("):
            raise ValueError(f"bad cycle notation: {text!r}")
        for cyc in re.findall(r"\(([^()]*)\)", text):
            if "," in cyc or " " in cyc:
                entries = [int(t) for t in _TOKEN.findall(cyc)]
            else:
                entries = [int(ch) for ch in cyc.strip()]
            if not entries:
                continue
            if any(e < 1 or e > m for e in entries):
                raise ValueError(f"cycle entry out of range 1..{m}: {cyc}")
            if len(set(entries)) != len(entries):
                raise ValueError(f"repeated entry in cycle: {cyc}")
            # compose this cycle on the left of what we have so far
            cyc_map = {entries[i]: entries[(i + 1) % len(entries)] for i in range(len(entries))}
            img = [cyc_map.get(v, v) for v in img]
        return cls(img)

    @property
    def m(self):
        return len(self.img)

    def __call__(self, i):
        return self.img[i - 1]

    def __mul__(self, other):
        """Composition self * other: apply other first, then self."""
        if self.m != other.m:
            raise ValueError("size mismatch")
        return Permutation(self.img[other.img[i] - 1] for i in range(self.m))

    def inverse(self):
        inv = [0] * self.m
        for i, v in enumerate(self.img):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def is_identity(self):
        return all(self.img[i] == i + 1 for i in range(self.m))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.m + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return "e"
        return "".join("(" + "".join(str(v) for v in c) + ")" for c in cycs)

    def act_params(self, kappa):
        """Permuted parameter tuple: entry i becomes kappa[tau(i)]."""
        if len(kappa) != self.m:
            raise ValueError("parameter length mismatch")
        return tuple(kappa[self(i) - 1] for i in range(1, self.m + 1))

    def act_vars(self, poly):
        """Permute the barycentric variables (x_1,...,x_d, 1-|x|) of poly."""
        d = poly.d
        if self.m != d + 1:
            raise ValueError("permutation must act on d+1 slots")
        last = SparsePoly.constant(d, ONE)
        for i in range(d):
            last = last - SparsePoly.variable(d, i)
        xs = [SparsePoly.variable(d, i) for i in range(d)] + [last]
        return poly.subst([xs[self(i + 1) - 1] for i in range(d)])


def all_permutations(m):
    return [Permutation(img) for img in itertools.permutations(range(1, m + 1))]


def jacobi_1d(n, a, b):
    """Coefficient list (ascending in t) of the Jacobi polynomial P_n^{(a,b)}(t).

    Normalization: P_n^{(a,b)}(1) = (a+1)_n / n!.
    """
    a = R(a)
    b = R(b)
    coeffs = [ZERO] * (n + 1)
    # P = sum_k (-n)_k (n+a+b+1)_k / ((a+1)_k k!) ((1-t)/2)^k, times (a+1)_n/n!
    lead = pochhammer(a + 1, n) / pochhammer(ONE, n)
    term = lead
    # ((1-t)/2)^k expanded incrementally
    half_pow = [ONE]
    for k in range(n + 1):
        if k > 0:
            term = term * (R(-n) + (k - 1)) * (n + a + b + k) / ((a + k) * k)
            new = [ZERO] * (k + 1)
            for j, c in enumerate(half_pow):
                new[j] += c / 2
                new[j + 1] -= c / 2
            half_pow = new
        for j, c in enumerate(half_pow):
            coeffs[j] += term * c
    return coeffs


def simplex_moment(gamma, kappa):
    """Normalized moment of the monomial x^gamma; gamma may have d or d+1 parts."""
    d = len(kappa) - 1
    if len(gamma) == d:
        gamma = tuple(gamma) + (0,)
    s = sum(gamma)
    val = ONE
    for ki, gi in zip(kappa, gamma):
        val *= pochhammer(R(ki) + 1, gi)
    total = sum((R(k) for k in kappa), ZERO) + d + 1
    return val / pochhammer(total, s)


_MOMENT_CACHE = {}


def _moment_cached(gamma, kappa):
    key = (gamma, kappa)
    v = _MOMENT_CACHE.get(key)
    if v is None:
        v = simplex_moment(gamma, kappa)
        _MOMENT_CACHE[key] = v
    return v


def inner_product_simplex(f, g, kappa):
    """Exact inner product of two polynomials w.r.t. the normalized measure."""
    kappa = tuple(R(k) for k in kappa)
    h = f * g
    total = ZERO
    for gamma, c in h.terms.items():
        total += c * _moment_cached(gamma, kappa)
    return total


def a_coeffs(nu, kappa):
    """Auxiliary parameters a_j = |kappa^{j+1}| + 2|nu^{j+1}| + d - j."""
    d = len(nu)
    out = []
    for j in range(1, d + 1):
        tail_k = sum((R(k) for k in kappa[j:]), ZERO)
        tail_n = sum(nu[j:])
        out.append(tail_k + 2 * tail_n + d - j)
    return out


def jacobi_simplex_basis(nu, kappa):
    """Orthogonal basis polynomial for multi-index nu on the simplex."""
    d = len(nu)
    if len(kappa) != d + 1:
        raise ValueError("kappa must have d+1 entries")
    aj = a_coeffs(nu, kappa)
    result = SparsePoly.constant(d, ONE)
    prev_sum = SparsePoly.zero(d)  # |x_{j-1}| = x_1 + ... + x_{j-1}
    one = SparsePoly.constant(d, ONE)
    for j in range(d):
        hom = one - prev_sum
        lin = SparsePoly.variable(d, j).scale(R(2)) - hom
        coeffs = jacobi_1d(nu[j], aj[j], R(kappa[j]))
        result = result * substitute_homogeneous(coeffs, lin, hom, nu[j])
        prev_sum = prev_sum + SparsePoly.variable(d, j)
    return result


def norm_A(nu, kappa):
    """Squared norm of the basis polynomial under the normalized measure."""
    d = len(nu)
    kappa = [R(k) for k in kappa]
    aj = a_coeffs(nu, kappa)
    total = sum(kappa, ZERO) + d + 1
    val = ONE / pochhammer(total, 2 * sum(nu))
    for j in range(d):
        k, a, n = kappa[j], aj[j], nu[j]
        val *= (
            pochhammer(k + a + 1, 2 * n)
            * pochhammer(k + 1, n)
            * pochhammer(a + 1, n)
            / (pochhammer(k + a + 1, n) * pochhammer(ONE, n))
        )
    return val


def enumerate_basis(d, n):
    """All multi-indices of length d and total degree n, in grevlex order."""
    out = []

    def rec(prefix, rem):
        if len(prefix) == d - 1:
            out.append(tuple(prefix) + (rem,))
            return
        for v in range(rem + 1):
            rec(prefix + [v], rem - v)

    rec([], n)
    out.sort(key=grevlex_key)
    return out
