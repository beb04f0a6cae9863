"""Orthogonal polynomial bases on the unit ball and unit sphere.

Every basis element is stored in factored parity form x^eps * core(x_1^2,
..., x_d^2), so no square roots ever appear. Connection coefficients on the
ball reduce, parity class by parity class, to the simplex ones with shifted
parameters.
"""

from math import comb

from .backend import R, ZERO, ONE
from .exact_arith import QSqrt, pochhammer
from .multipoly import SparsePoly, grevlex_key, substitute_homogeneous
from .simplex import (
    Permutation,
    enumerate_basis,
    inner_product_simplex,
    jacobi_1d,
    jacobi_simplex_basis,
    norm_A,
    simplex_moment,
)
from .connection import gram_connection, normalize


class ParityMismatch(ValueError):
    pass


class NotProportional(ValueError):
    pass


class ParityPoly:
    """x^eps * core(x_1^2, ..., x_d^2), with eps in {0,1}^d."""

    def __init__(self, eps, core):
        self.eps = tuple(int(e) for e in eps)
        if any(e not in (0, 1) for e in self.eps):
            raise ValueError("parity entries must be 0 or 1")
        if core.d != len(self.eps):
            raise ValueError("core dimension must match parity length")
        self.core = core

    @property
    def d(self):
        return len(self.eps)

    def degree(self):
        return sum(self.eps) + 2 * self.core.degree()

    def permute(self, tau):
        """Substitute x_i <- x_{tau(i)} for a permutation of the d variables."""
        eps = [0] * self.d
        for i in range(1, self.d + 1):
            eps[tau(i) - 1] = self.eps[i - 1]
        terms = {}
        for exp, c in self.core.terms.items():
            new = [0] * self.d
            for i in range(1, self.d + 1):
                new[tau(i) - 1] = exp[i - 1]
            terms[tuple(new)] = terms.get(tuple(new), ZERO) + c
        return ParityPoly(eps, SparsePoly(self.d, terms))

    def expand(self):
        """The genuine polynomial in x (exponents eps + 2*core exponents)."""
        terms = {}
        for exp, c in self.core.terms.items():
            key = tuple(e + 2 * g for e, g in zip(self.eps, exp))
            terms[key] = c
        return SparsePoly(self.d, terms)

    def __eq__(self, other):
        return self.eps == other.eps and self.core == other.core

    def __repr__(self):
        return "ParityPoly(eps=%r, core=%r)" % (self.eps, self.core)


def poly_to_parity(p):
    """Split a polynomial with a single parity class into factored form."""
    eps = None
    terms = {}
    for exp, c in p.terms.items():
        e = tuple(g % 2 for g in exp)
        if eps is None:
            eps = e
        elif e != eps:
            raise ParityMismatch("polynomial mixes parity classes")
        terms[tuple((g - b) // 2 for g, b in zip(exp, e))] = c
    if eps is None:
        eps = (0,) * p.d
    return ParityPoly(eps, SparsePoly(p.d, terms))


def shifted(kappa, eps):
    """kappa + eps, the parity shift acting on the first d parameters."""
    out = list(R(k) for k in kappa)
    for i, e in enumerate(eps):
        out[i] = out[i] + e
    return tuple(out)


def ball_inner_product(p, q, kappa):
    """Inner product on the ball with weight prod |x_i|^(2k_i+1)(1-|x|^2)^k_last.

    Zero across parity classes; within a class it is the normalized simplex
    inner product of the cores at the shifted parameters.
    """
    if p.eps != q.eps:
        return ZERO
    return inner_product_simplex(p.core, q.core, shifted(kappa, p.eps))


def q_ball(nu, eps, kappa):
    """Parity-class orthogonal basis element on the ball."""
    if len(nu) != len(eps):
        raise ValueError("index and parity must have the same length")
    return ParityPoly(eps, jacobi_simplex_basis(nu, shifted(kappa, eps)))


def ball_norm(nu, eps, kappa):
    return norm_A(nu, shifted(kappa, eps))


def ball_enumerate(d, n):
    """All (nu, eps) with |eps| + 2|nu| = n, ordered by grevlex on 2nu+eps."""
    out = []
    for alpha in enumerate_basis(d, n):
        eps = tuple(a % 2 for a in alpha)
        nu = tuple((a - e) // 2 for a, e in zip(alpha, eps))
        out.append((nu, eps))
    return out


def gegenbauer_gen(n, lam, mu):
    """Generalized Gegenbauer C_n as (parity bit, even core in t^2).

    C_n(t) = t^parity * sum_k core[k] t^(2k), orthogonal for
    |t|^(2 mu) (1-t^2)^(lam-1/2) on [-1, 1].
    """
    lam, mu = R(lam), R(mu)
    m = n // 2
    half = R(1, 2)
    if n % 2 == 0:
        pref = pochhammer(lam + mu, m) / pochhammer(mu + half, m)
        jac = jacobi_1d(m, lam - half, mu - half)
    else:
        pref = pochhammer(lam + mu, m + 1) / pochhammer(mu + half, m + 1)
        jac = jacobi_1d(m, lam - half, mu + half)
    # compose with 2z - 1 to get the core in z = t^2
    core = [ZERO] * (m + 1)
    for k, c in enumerate(jac):
        # c * (2z-1)^k
        for i in range(k + 1):
            sgn = -ONE if (k - i) % 2 else ONE
            core[i] += pref * c * sgn * R(2) ** i * comb(k, i)
    return n % 2, core


def ball_cartesian(alpha, kappa):
    """Cartesian ball basis element built from generalized Gegenbauer factors."""
    d = len(alpha)
    kappa = tuple(R(k) for k in kappa)
    eps = tuple(a % 2 for a in alpha)
    core = SparsePoly.constant(d, ONE)
    for j in range(d):
        lam = sum(alpha[j + 1:]) + sum(kappa[j + 1:], ZERO) + d - (j + 1)
        parity, coeffs = gegenbauer_gen(alpha[j], lam + R(1, 2), kappa[j] + R(1, 2))
        lin = SparsePoly.variable(d, j)
        hom = SparsePoly.constant(d, ONE)
        for i in range(j):
            hom = hom - SparsePoly.variable(d, i)
        core = core * substitute_homogeneous(coeffs, lin, hom, alpha[j] // 2)
    return ParityPoly(eps, core)


def proportionality(p, q):
    """The scalar c with p = c*q, or raise NotProportional."""
    if p.is_zero() or q.is_zero():
        raise NotProportional("zero polynomial")
    _, lead_q = q.leading()
    exp, lead_p = p.leading()
    if exp != q.leading()[0]:
        raise NotProportional("leading monomials differ")
    c = lead_p / lead_q
    if p != q.scale(c):
        raise NotProportional("polynomials are not scalar multiples")
    return c


def verify_ball_equivalence(alpha, kappa):
    """Check that the Gegenbauer-product element is a multiple of q_ball."""
    eps = tuple(a % 2 for a in alpha)
    nu = tuple((a - e) // 2 for a, e in zip(alpha, eps))
    cart = ball_cartesian(alpha, kappa)
    ref = q_ball(nu, eps, kappa)
    scalar = proportionality(cart.core, ref.core)
    return {"alpha": tuple(alpha), "eps": eps, "nu": nu, "scalar": scalar}


def _extend(tau, m):
    """Embed a permutation of {1..tau.m} into S_m fixing the remaining slots."""
    img = tuple(tau(i) for i in range(1, tau.m + 1)) + tuple(range(tau.m + 1, m + 1))
    return Permutation(img)


def ball_connection(tau, kappa, n):
    """Normalized ball connection coefficients for tau permuting x_1..x_d.

    Returns a dict mapping ((nu, eps), (mu, eta)) to QSqrt over the degree-n
    ball basis; entries are zero unless eta is the tau-image of eps, and each
    parity block is the normalized simplex matrix at the shifted parameters.
    """
    d = tau.m
    kappa = tuple(R(k) for k in kappa)
    tau_ext = _extend(tau, d + 1)
    out = {}
    by_eps = {}
    for nu, eps in ball_enumerate(d, n):
        by_eps.setdefault(eps, []).append(nu)
    for eps, nus in by_eps.items():
        eta = [0] * d
        for i in range(1, d + 1):
            eta[tau(i) - 1] = eps[i - 1]
        eta = tuple(eta)
        kap_eta = shifted(kappa, eta)
        deg = (n - sum(eps)) // 2
        block = gram_connection(tau_ext, kap_eta, deg)
        hat = normalize(block, tau_ext, kap_eta)
        idx = {m: i for i, m in enumerate(block.order)}
        for nu in nus:
            for mu in block.order:
                out[((nu, eps), (mu, eta))] = hat[idx[nu]][idx[mu]]
    return out


def ball_gram(tau, kappa, n):
    """Direct Gram-matrix oracle for the ball connection coefficients."""
    d = tau.m
    kappa = tuple(R(k) for k in kappa)
    tkappa = _extend(tau, d + 1).act_params(kappa)
    order = ball_enumerate(d, n)
    targets = {key: q_ball(*key, kappa) for key in order}
    rows = []
    for nu, eps in order:
        src = q_ball(nu, eps, tkappa).permute(tau)
        row = []
        for key in order:
            row.append(ball_inner_product(src, targets[key], kappa) / ball_norm(*key, kappa))
        rows.append(row)
    return order, rows


# ---------------------------------------------------------------------------
# disk polar basis
# ---------------------------------------------------------------------------


def harmonic_pair(m):
    """Real and imaginary parts of (x1 + i x2)^m as bivariate polynomials."""
    c = SparsePoly.constant(2, ONE)
    s = SparsePoly.zero(2)
    x1 = SparsePoly.variable(2, 0)
    x2 = SparsePoly.variable(2, 1)
    for _ in range(m):
        c, s = c * x1 - s * x2, s * x1 + c * x2
    return c, s


def disk_polar_basis(j, i, n, mu):
    """Polar-coordinates disk basis element as a genuine bivariate polynomial.

    Radial Jacobi factor in 2r^2-1 of index j times r^(n-2j) cos((n-2j)t)
    for i=1 or the sine analogue for i=2.
    """
    m = n - 2 * j
    if m < 0 or (i == 2 and m == 0):
        raise ValueError("invalid polar basis index")
    cosp, sinp = harmonic_pair(m)
    trig = cosp if i == 1 else sinp
    x1 = SparsePoly.variable(2, 0)
    x2 = SparsePoly.variable(2, 1)
    lin = x1 * x1 + x2 * x2
    radial = SparsePoly.zero(2)
    r2pow = SparsePoly.constant(2, ONE)
    # P_j^{(mu, m)}(2u-1) with u = r^2
    coeffs = [ZERO] * (j + 1)
    for k, c in enumerate(jacobi_1d(j, R(mu), R(m))):
        for t in range(k + 1):
            sgn = -ONE if (k - t) % 2 else ONE
            coeffs[t] += c * sgn * R(2) ** t * comb(k, t)
    for k in range(j + 1):
        radial = radial + r2pow.scale(coeffs[k])
        r2pow = r2pow * lin
    return radial * trig


def verify_disk_polar(n, mu):
    """Match every polar element to a parity image of the 1<->3 swapped basis."""
    kappa = (R(-1, 2), R(-1, 2), R(mu))
    swap = Permutation((3, 2, 1))
    elems = []
    for j in range(n // 2 + 1):
        elems.append((j, 1))
        if n - 2 * j > 0:
            elems.append((j, 2))
    report = []
    for j, i in elems:
        pp = poly_to_parity(disk_polar_basis(j, i, n, mu))
        matches = []
        for nu, eps in ball_enumerate(2, n):
            if eps != pp.eps:
                continue
            cand = swap.act_vars(jacobi_simplex_basis(nu, swap.act_params(shifted(kappa, eps))))
            try:
                scalar = proportionality(pp.core, cand)
            except NotProportional:
                continue
            matches.append({"nu": nu, "eps": eps, "scalar": scalar})
        if len(matches) != 1:
            raise NotProportional("polar element (%d,%d) has %d matches" % (j, i, len(matches)))
        report.append({"j": j, "i": i, **matches[0]})
    return report


# ---------------------------------------------------------------------------
# sphere
# ---------------------------------------------------------------------------


def sphere_moment(b, kappa):
    """Normalized moment of y^(2b) on the sphere with weight prod |y_i|^(2k_i+1)."""
    return simplex_moment(b, kappa)


def sphere_inner_product(p, q, kappa):
    """Normalized inner product over the sphere; zero across parity classes."""
    if p.eps != q.eps:
        return ZERO
    total = ZERO
    for ea, ca in p.core.terms.items():
        for eb, cb in q.core.terms.items():
            b = tuple(x + y + e for x, y, e in zip(ea, eb, p.eps))
            total += ca * cb * sphere_moment(b, kappa)
    return total


def sphere_basis(nu, eps, kappa, n):
    """Homogeneous degree-n harmonic-type element in d+1 variables.

    Built from the degree-|nu| simplex polynomial at the shifted parameters by
    homogenizing each monomial u^g to y'^(2g) (y_1^2+...+y_{d+1}^2)^(|nu|-|g|)
    and multiplying by y^eps.
    """
    d = len(nu)
    if len(eps) != d + 1:
        raise ParityMismatch("parity must have d+1 entries")
    if 2 * sum(nu) + sum(eps) != n:
        raise ParityMismatch("degree does not match 2|nu|+|eps|")
    P = jacobi_simplex_basis(nu, shifted(kappa, eps))
    m = sum(nu)
    allsum = SparsePoly.zero(d + 1)
    for i in range(d + 1):
        allsum = allsum + SparsePoly.variable(d + 1, i)
    powers = [SparsePoly.constant(d + 1, ONE)]
    for _ in range(m):
        powers.append(powers[-1] * allsum)
    core = SparsePoly.zero(d + 1)
    for g, c in P.terms.items():
        mono = SparsePoly(d + 1, {tuple(g) + (0,): c})
        core = core + mono * powers[m - sum(g)]
    return ParityPoly(eps, core)


def sphere_enumerate(d, n):
    """All (nu, eps) with eps in {0,1}^(d+1) and 2|nu| + |eps| = n."""
    out = []
    for bits in range(1 << (d + 1)):
        eps = tuple((bits >> i) & 1 for i in range(d + 1))
        rem = n - sum(eps)
        if rem < 0 or rem % 2:
            continue
        for nu in enumerate_basis(d, rem // 2):
            out.append((nu, eps))
    return out


def dim_harmonic(n, nvars):
    """Dimension of degree-n harmonic-type homogeneous polynomials in nvars."""
    lower = comb(n - 2 + nvars - 1, nvars - 1) if n >= 2 else 0
    return comb(n + nvars - 1, nvars - 1) - lower


def laplacian(p):
    terms = {}
    for exp, c in p.terms.items():
        for i, e in enumerate(exp):
            if e >= 2:
                new = exp[:i] + (e - 2,) + exp[i + 1:]
                terms[new] = terms.get(new, ZERO) + c * e * (e - 1)
    return SparsePoly(p.d, {k: v for k, v in terms.items() if v != ZERO})


def example_910_check(n):
    """Spherical-harmonics families from the simplex basis at the -1/2 shifts.

    Verifies pairwise orthogonality on the sphere under the surface measure and
    exact annihilation by the Laplacian for every element of degree n.
    """
    kappa = (R(-1, 2), R(-1, 2), R(-1, 2))
    order = sphere_enumerate(2, n)
    if len(order) != dim_harmonic(n, 3):
        raise AssertionError("family count does not match the harmonic dimension")
    elems = [(key, sphere_basis(key[0], key[1], kappa, n)) for key in order]
    failures = []
    for a in range(len(elems)):
        key_a, pa = elems[a]
        if not laplacian(pa.expand()).is_zero():
            failures.append(("laplacian", key_a))
        for b in range(a + 1, len(elems)):
            key_b, pb = elems[b]
            if sphere_inner_product(pa, pb, kappa) != ZERO:
                failures.append(("orthogonality", key_a, key_b))
    return {"n": n, "count": len(elems), "failures": failures}
