"""Hahn and Krawtchouk polynomials of several variables.

Both families are built as Tratnik-style products of one-variable kernels
with the leading Pochhammer prefactor folded into the series, so every value
is an exact rational even when intermediate bottom parameters would vanish.
Their connection coefficients coincide with (Hahn) or are limits of
(Krawtchouk) the simplex Jacobi ones.
"""

import itertools

from .backend import R, ZERO, ONE
from .exact_arith import QSqrt, hyp_terminating, hyp_with_prefactor, pochhammer
from .multipoly import SparsePoly, grevlex_key
from .simplex import a_coeffs, enumerate_basis, jacobi_simplex_basis, norm_A
from .connection import ConnMatrix


def compositions(total, parts):
    """All tuples in N_0^parts summing to total."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------
# Hahn
# ---------------------------------------------------------------------------


def hahn_1d(n, x, a, b, N):
    """Q_n(x; a, b, N) as a terminating 3F2 at z=1."""
    a, b = R(a), R(b)
    return hyp_terminating([R(-n), n + a + b + 1, R(-x)], [a + 1, R(-N)], ONE)


def hahn_multi(nu, x, kappa, N):
    """Product-form Hahn polynomial H_nu(x; kappa, N); x in Z^{d+1}, |x| = N."""
    d = len(nu)
    kappa = [R(k) for k in kappa]
    aj = a_coeffs(nu, kappa)
    val = ONE / pochhammer(R(-N), sum(nu))
    if sum(nu) % 2:
        val = -val
    for j in range(d):
        Nj = N - sum(x[:j]) - sum(nu[j + 1:])
        f = hyp_with_prefactor(
            [R(nu[j]) + kappa[j] + aj[j] + 1, R(-x[j])],
            [kappa[j] + 1, R(-Nj)],
            nu[j],
        )
        val *= f / pochhammer(aj[j] + 1, nu[j])
    return val


def hahn_weight(alpha, kappa):
    val = ONE
    for ai, ki in zip(alpha, kappa):
        val *= pochhammer(R(ki) + 1, ai) / pochhammer(ONE, ai)
    return val


def hahn_inner(fvals, gvals, kappa, N):
    """<f, g> from values indexed by the compositions grid of |alpha| = N."""
    d = len(kappa) - 1
    lam = sum((R(k) for k in kappa), ZERO) + d + 1
    grid = compositions(N, d + 1)
    s = sum((fvals[a] * gvals[a] * hahn_weight(a, kappa) for a in grid), ZERO)
    return pochhammer(ONE, N) / pochhammer(lam, N) * s


def p_factor(nu, kappa):
    """Product of the values at 1 of the one-variable Jacobi factors."""
    aj = a_coeffs(nu, kappa)
    val = ONE
    for j, n in enumerate(nu):
        val *= pochhammer(aj[j] + 1, n) / pochhammer(ONE, n)
    return val


def hahn_norm_B(nu, kappa, N):
    """Squared norm of H_nu under the normalized Hahn inner product."""
    d = len(nu)
    kappa = [R(k) for k in kappa]
    aj = a_coeffs(nu, kappa)
    lam = sum(kappa, ZERO) + d + 1
    n = sum(nu)
    val = pochhammer(lam, N + n) / (pochhammer(R(-N), n) * pochhammer(lam, N) * pochhammer(lam, 2 * n))
    if n % 2:
        val = -val
    for j in range(d):
        k, a, m = kappa[j], aj[j], nu[j]
        val *= (
            pochhammer(k + a + 1, 2 * m)
            * pochhammer(k + 1, m)
            * pochhammer(ONE, m)
            / (pochhammer(k + a + 1, m) * pochhammer(a + 1, m))
        )
    return val


def hahn_from_generating(nu, kappa, N):
    """Values of H_nu on the grid, extracted from the homogenized simplex basis.

    Homogenize P_nu/p_nu to total degree N in d+1 variables; the coefficient
    of y^alpha times alpha!/N! is H_nu(alpha).
    """
    d = len(nu)
    P = jacobi_simplex_basis(nu, kappa)
    pn = p_factor(nu, kappa)
    coefs = {}
    for gamma, c in P.terms.items():
        rem = N - sum(gamma)
        # expand (y_1 + ... + y_{d+1})^rem multinomially
        for extra in compositions(rem, d + 1):
            alpha = tuple(g + e for g, e in zip(gamma + (0,), extra))
            mult = pochhammer(ONE, rem)
            for e in extra:
                mult /= pochhammer(ONE, e)
            coefs[alpha] = coefs.get(alpha, ZERO) + c * mult / pn
    out = {}
    nfact = pochhammer(ONE, N)
    for alpha in compositions(N, d + 1):
        c = coefs.get(alpha, ZERO)
        afact = ONE
        for a in alpha:
            afact *= pochhammer(ONE, a)
        out[alpha] = afact / nfact * c
    return out


def hahn_values(nu, kappa, N):
    """Values of the product-form H_nu on the full grid."""
    d = len(nu)
    return {alpha: hahn_multi(nu, alpha, kappa, N) for alpha in compositions(N, d + 1)}


def hahn_connection(tau, kappa, N, n):
    """Connection matrix of the Hahn family by discrete inner products."""
    d = tau.m - 1
    kappa = tuple(R(k) for k in kappa)
    tk = tau.act_params(kappa)
    order = enumerate_basis(d, n)
    grid = compositions(N, d + 1)
    vals = {mu: hahn_values(mu, kappa, N) for mu in order}
    rows = []
    for nu in order:
        src = {a: hahn_multi(nu, tuple(a[tau(i) - 1] for i in range(1, d + 2)), tk, N) for a in grid}
        row = []
        for mu in order:
            row.append(hahn_inner(src, vals[mu], kappa, N) / hahn_norm_B(mu, kappa, N))
        rows.append(row)
    return ConnMatrix(d, n, rows, order)


# ---------------------------------------------------------------------------
# Krawtchouk
# ---------------------------------------------------------------------------


def kraw_1d(n, x, p, N):
    """K_n(x; p, N) as a terminating 2F1 at 1/p."""
    return hyp_terminating([R(-n), R(-x)], [R(-N)], ONE / R(p))


def kraw_grid(d, N):
    return [x for total in range(N + 1) for x in compositions(total, d)]


def kraw_multi(nu, x, rho, N):
    """Product-form Krawtchouk polynomial K_nu(x; rho, N); x in N_0^d, |x| <= N."""
    d = len(nu)
    rho = [R(r) for r in rho]
    val = ONE / pochhammer(R(-N), sum(nu))
    for j in range(d):
        Nj = N - sum(x[:j]) - sum(nu[j + 1:])
        z = (ONE - sum(rho[:j], ZERO)) / rho[j]
        val *= hyp_with_prefactor([R(-x[j])], [R(-Nj)], nu[j], z)
    return val


def kraw_weight(x, rho, N):
    rho = [R(r) for r in rho]
    rest = ONE - sum(rho, ZERO)
    val = pochhammer(ONE, N) * rest ** (N - sum(x)) / pochhammer(ONE, N - sum(x))
    for xi, ri in zip(x, rho):
        val *= ri**xi / pochhammer(ONE, xi)
    return val


def kraw_norm_C(nu, rho, N):
    d = len(nu)
    rho = [R(r) for r in rho]
    val = ONE / pochhammer(R(-N), sum(nu))
    if sum(nu) % 2:
        val = -val
    for j in range(d):
        rest = ONE - sum(rho[: j + 1], ZERO)
        nxt = nu[j + 1] if j + 1 < d else 0
        val *= pochhammer(ONE, nu[j]) * rest ** (nu[j] + nxt) / rho[j] ** nu[j]
    return val


def kraw_inner(fvals, gvals, rho, N):
    d = len(rho)
    return sum(
        (fvals[x] * gvals[x] * kraw_weight(x, rho, N) for x in kraw_grid(d, N)), ZERO
    )


def kraw_dual(x, nu, rho):
    """Dual variables/indices/parameters; an involution."""
    d = len(nu)
    rho = [R(r) for r in rho]
    tot = sum(rho, ZERO)
    x_t = tuple(nu[d - j] for j in range(1, d + 1))
    nu_t = tuple(x[d - j] for j in range(1, d + 1))
    rho_t = tuple(
        rho[d - j] * (ONE - tot) / ((ONE - sum(rho[: d - j + 1], ZERO)) * (ONE - sum(rho[: d - j], ZERO)))
        for j in range(1, d + 1)
    )
    return x_t, nu_t, rho_t


def tau_rho(tau, rho):
    """Action of a (d+1)-slot permutation on rho: permute (rho, 1-|rho|), drop last."""
    rho = [R(r) for r in rho]
    ext = rho + [ONE - sum(rho, ZERO)]
    return tuple(ext[tau(i) - 1] for i in range(1, tau.m))


def kraw_connection(tau, rho, N, n):
    """Connection matrix of the Krawtchouk family by discrete inner products."""
    d = tau.m - 1
    rho = tuple(R(r) for r in rho)
    trho = tau_rho(tau, rho)
    order = enumerate_basis(d, n)
    grid = kraw_grid(d, N)
    vals = {mu: {x: kraw_multi(mu, x, rho, N) for x in grid} for mu in order}
    rows = []
    for nu in order:
        src = {}
        for x in grid:
            ext = tuple(x) + (N - sum(x),)
            tx = tuple(ext[tau(i) - 1] for i in range(1, d + 1))
            src[x] = kraw_multi(nu, tx, trho, N)
        row = []
        for mu in order:
            row.append(kraw_inner(src, vals[mu], rho, N) / kraw_norm_C(mu, rho, N))
        rows.append(row)
    return ConnMatrix(d, n, rows, order)


def kraw_cc_cyclic_hat(nu, mu, rho, n, form=1):
    """Normalized cyclic-permutation coefficient in closed Krawtchouk form."""
    d = len(nu)
    rho = [R(r) for r in rho]
    tot = sum(rho, ZERO)

    def pre(j):  # |rho_j| = rho_1 + ... + rho_j
        return sum(rho[:j], ZERO)

    if form == 1:
        rr = tuple(
            rho[0] * rho[j] / ((ONE - rho[0]) * (ONE + rho[0] - pre(j + 1)) * (ONE + rho[0] - pre(j)))
            for j in range(1, d)
        )
        x = tuple(nu[: d - 1])
        idx = tuple(mu[1:])
    elif form == 2:
        rr = tuple(
            rho[0] * rho[d - j] * (ONE - tot)
            / ((ONE - pre(d - j)) * (ONE - pre(d - j + 1)) * (ONE + rho[0] - tot))
            for j in range(1, d)
        )
        x = tuple(reversed(mu[1:]))
        idx = tuple(reversed(nu[: d - 1]))
    else:
        raise ValueError("form must be 1 or 2")
    val = kraw_multi(idx, x, rr, n)
    w = kraw_weight(x, rr, n)
    c2 = kraw_norm_C(idx, rr, n)
    s = (1 if val > 0 else -1 if val < 0 else 0) * (1 if (n + nu[d - 1]) % 2 == 0 else -1)
    return QSqrt(1 if s > 0 else -1 if s < 0 else 0, w * val * val / c2)


def hahn_kraw_scaled(nu, x, rho, N, t):
    """Hahn value at kappa = t(rho, 1-|rho|), rescaled to the Krawtchouk limit."""
    d = len(nu)
    rho = [R(r) for r in rho]
    kappa = tuple(t * r for r in rho) + (t * (ONE - sum(rho, ZERO)),)
    h = hahn_multi(nu, tuple(x) + (N - sum(x),), kappa, N)
    scale = ONE
    for j in range(d):
        rest = ONE - sum(rho[: j + 1], ZERO)
        scale *= (rest / rho[j]) ** nu[j]
    if sum(nu) % 2:
        scale = -scale
    return h * scale
