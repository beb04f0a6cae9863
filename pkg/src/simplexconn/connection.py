"""Connection matrices between permuted families of simplex orthogonal bases.

For a permutation tau of the d+1 barycentric slots, the matrix C^tau(kappa)
expands the tau-transformed basis for parameters tau.kappa in the basis for
kappa, degree by degree.  Entries are exact rationals; the normalized
(orthogonal-matrix) version has entries sign * sqrt(rational).
"""

from .backend import R, ZERO, ONE
from .exact_arith import QSqrt
from .multipoly import grevlex_key
from .simplex import (
    enumerate_basis,
    inner_product_simplex,
    jacobi_simplex_basis,
    norm_A,
)


class ConnMatrix:
    """Square matrix of rationals indexed by the degree-n multi-indices."""

    __slots__ = ("d", "n", "order", "rows")

    def __init__(self, d, n, rows, order=None):
        self.d = d
        self.n = n
        self.order = order if order is not None else enumerate_basis(d, n)
        self.rows = rows

    @classmethod
    def from_func(cls, d, n, func):
        order = enumerate_basis(d, n)
        rows = [[R(func(nu, mu)) for mu in order] for nu in order]
        return cls(d, n, rows, order)

    def entry(self, nu, mu):
        return self.rows[self.order.index(tuple(nu))][self.order.index(tuple(mu))]

    def matmul(self, other):
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("size mismatch")
        size = len(self.order)
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                s = ZERO
                for k in range(size):
                    a = self.rows[i][k]
                    if a != 0:
                        s += a * other.rows[k][j]
                row.append(s)
            rows.append(row)
        return ConnMatrix(self.d, self.n, rows, self.order)

    def is_identity(self):
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v != (ONE if i == j else ZERO):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, ConnMatrix)
            and self.order == other.order
            and self.rows == other.rows
        )

    def to_json(self):
        from .backend import rat_str

        return {
            "order": [list(nu) for nu in self.order],
            "entries": [[rat_str(v) for v in row] for row in self.rows],
        }


_POLY_CACHE = {}
_ACTED_CACHE = {}
_GRAM_CACHE = {}


def _basis_poly(nu, kappa):
    key = (nu, kappa)
    p = _POLY_CACHE.get(key)
    if p is None:
        p = jacobi_simplex_basis(nu, kappa)
        _POLY_CACHE[key] = p
    return p


def _acted_poly(tau, nu, kappa):
    """tau acting on the variables of the basis polynomial for (nu, kappa)."""
    key = (tau.img, nu, kappa)
    p = _ACTED_CACHE.get(key)
    if p is None:
        p = tau.act_vars(_basis_poly(nu, kappa))
        _ACTED_CACHE[key] = p
    return p


def gram_connection(tau, kappa, n):
    """Connection matrix by direct inner products against the target basis."""
    d = tau.m - 1
    kappa = tuple(R(k) for k in kappa)
    key = (tau.img, kappa, n)
    cached = _GRAM_CACHE.get(key)
    if cached is not None:
        return cached
    tk = tau.act_params(kappa)
    order = enumerate_basis(d, n)
    targets = [(_basis_poly(mu, kappa), norm_A(mu, kappa)) for mu in order]
    rows = []
    for nu in order:
        src = _acted_poly(tau, nu, tk)
        rows.append([inner_product_simplex(src, pmu, kappa) / Amu for pmu, Amu in targets])
    mat = ConnMatrix(d, n, rows, order)
    _GRAM_CACHE[key] = mat
    return mat


def normalize(mat, tau, kappa):
    """Entries of the orthogonal-matrix version, as QSqrt values.

    hat_c[nu,mu] = c[nu,mu] * sqrt(A_mu(kappa) / A_nu(tau.kappa)).
    """
    kappa = tuple(R(k) for k in kappa)
    tk = tau.act_params(kappa)
    A_src = [norm_A(nu, tk) for nu in mat.order]
    A_tgt = [norm_A(mu, kappa) for mu in mat.order]
    out = []
    for i, row in enumerate(mat.rows):
        out.append(
            [QSqrt.of_rational(c).scale_sqrt(A_tgt[j] / A_src[i]) for j, c in enumerate(row)]
        )
    return out


def verify_row_orthogonality(mat, tau, kappa):
    """sum_w c[nu,w] c[mu,w] A_w(kappa) == delta(nu,mu) A_nu(tau.kappa)."""
    kappa = tuple(R(k) for k in kappa)
    tk = tau.act_params(kappa)
    A_tgt = [norm_A(mu, kappa) for mu in mat.order]
    A_src = [norm_A(nu, tk) for nu in mat.order]
    size = len(mat.order)
    for i in range(size):
        for j in range(i, size):
            s = sum((mat.rows[i][k] * mat.rows[j][k] * A_tgt[k] for k in range(size)), ZERO)
            expect = A_src[i] if i == j else ZERO
            if s != expect:
                return False
    return True


def verify_column_orthogonality(mat, tau, kappa):
    """sum_w c[w,nu] c[w,mu] / A_w(tau.kappa) == delta(nu,mu) / A_nu(kappa)."""
    kappa = tuple(R(k) for k in kappa)
    tk = tau.act_params(kappa)
    A_tgt = [norm_A(mu, kappa) for mu in mat.order]
    A_src = [norm_A(nu, tk) for nu in mat.order]
    size = len(mat.order)
    for i in range(size):
        for j in range(i, size):
            s = sum((mat.rows[k][i] * mat.rows[k][j] / A_src[k] for k in range(size)), ZERO)
            expect = ONE / A_tgt[i] if i == j else ZERO
            if s != expect:
                return False
    return True


def verify_inverse_identity(mat_tau, mat_inv, tau, kappa):
    """C^{tau^-1}(kappa)[nu,mu] == (A_nu(tau^-1.kappa)/A_mu(kappa)) C^tau(tau^-1.kappa)[mu,nu].

    mat_tau must be C^tau at parameters tau^-1.kappa; mat_inv is C^{tau^-1}
    at kappa.
    """
    kappa = tuple(R(k) for k in kappa)
    ik = tau.inverse().act_params(kappa)
    A_src = [norm_A(nu, ik) for nu in mat_inv.order]
    A_tgt = [norm_A(mu, kappa) for mu in mat_inv.order]
    size = len(mat_inv.order)
    for i in range(size):
        for j in range(size):
            if mat_inv.rows[i][j] != (A_src[i] / A_tgt[j]) * mat_tau.rows[j][i]:
                return False
    return True


def verify_convolution(mat_12, mat_2_at_t1k, mat_1_at_k):
    """C^{t1 t2}(kappa) == C^{t2}(t1.kappa) @ C^{t1}(kappa)."""
    return mat_12 == mat_2_at_t1k.matmul(mat_1_at_k)


def clear_caches():
    _POLY_CACHE.clear()
    _ACTED_CACHE.clear()
    _GRAM_CACHE.clear()
