"""Closed-form connection coefficients between permuted simplex bases.

For d=2 all six permutations have explicit formulas; for d=3 all 24 are
reachable from a handful of explicit cases by exact matrix convolution and
a sign rule.  For general d, permutations fixing a prefix or acting inside
a prefix reduce to lower dimension, and the full cycle (12...d) has three
closed forms built from multivariable Racah polynomials.
"""

from .backend import R, ZERO, ONE
from .exact_arith import QSqrt, hyp_terminating, pochhammer
from .racah import (
    racah_1d,
    racah_multi,
    racah_norm_1d,
    racah_norm_sq,
    racah_second,
    racah_second_norm_sq,
    racah_weight_1d,
    racah_weight_multi,
)
from .simplex import Permutation, enumerate_basis, norm_A
from .connection import ConnMatrix, gram_connection


def _sign(k):
    return ONE if k % 2 == 0 else -ONE


# ---------------------------------------------------------------------------
# d = 2
# ---------------------------------------------------------------------------


def _f43_2d(j, m, kappa, n):
    k1, k2, k3 = (R(k) for k in kappa)
    tot = k1 + k2 + k3
    return hyp_terminating(
        [R(-m), m + k2 + k3 + 1, R(-j), j + k1 + k3 + 1],
        [R(-n), k3 + 1, R(n) + tot + 2],
        ONE,
    )


def _d_coeff_2d(j, m, kappa, n):
    k1, k2, k3 = (R(k) for k in kappa)
    tot = k1 + k2 + k3
    return (
        _sign(n + m)
        * pochhammer(R(-n), j)
        * pochhammer(k2 + 1, n - j)
        * pochhammer(k3 + 1, j)
        / (pochhammer(ONE, j) * pochhammer(k2 + 1, m))
        * pochhammer(R(n) + tot + 2, m)
        / (pochhammer(k2 + k3 + 2 * m + 2, n - m) * pochhammer(k2 + k3 + m + 1, m))
    )


def cc_2d_entry(tau_name, j, m, kappa, n):
    """Entry c_{j,m} of the degree-n connection matrix for a 3-slot permutation."""
    kappa = tuple(R(k) for k in kappa)
    if tau_name == "e":
        return ONE if j == m else ZERO
    if tau_name == "(12)":
        return _d_coeff_2d(j, m, kappa, n) * _f43_2d(j, m, kappa, n)
    if tau_name == "(23)":
        return _sign(j) if j == m else ZERO
    if tau_name == "(123)":
        return _sign(j) * cc_2d_entry("(12)", j, m, kappa, n)
    if tau_name == "(13)":
        k23 = (kappa[0], kappa[2], kappa[1])
        return _sign(m + j) * cc_2d_entry("(12)", j, m, k23, n)
    if tau_name == "(132)":
        return _sign(j) * cc_2d_entry("(13)", j, m, kappa, n)
    raise ValueError(f"unknown permutation {tau_name!r}")


_S3_NAMES = {
    (1, 2, 3): "e",
    (2, 1, 3): "(12)",
    (3, 2, 1): "(13)",
    (1, 3, 2): "(23)",
    (2, 3, 1): "(123)",
    (3, 1, 2): "(132)",
}


def cc_2d_matrix(tau, kappa, n):
    """Degree-n connection matrix for tau in S_3, rows nu=(n-j,j), cols (n-m,m)."""
    name = _S3_NAMES[tau.img if isinstance(tau, Permutation) else tuple(tau)]
    order = enumerate_basis(2, n)
    rows = [[cc_2d_entry(name, j, m, kappa, n) for m in range(n + 1)] for j in range(n + 1)]
    return ConnMatrix(2, n, rows, order)


def cc_2d_hat12(j, m, kappa, n, form=1):
    """Normalized entry for tau=(12) as sign * sqrt(rational), two Racah forms."""
    k1, k2, k3 = (R(k) for k in kappa)
    if form == 1:
        sigma = (R(-n) - 1, R(n) + k1 + k3 + 1, k3, k2)
        val = racah_1d(j, m, *sigma)
        w = racah_weight_1d(m, *sigma)
        r2 = racah_norm_1d(j, *sigma, n)
    else:
        sigma = (R(-n) - 1, R(n) + k2 + k3 + 1, k3, k1)
        val = racah_1d(m, j, *sigma)
        w = racah_weight_1d(j, *sigma)
        r2 = racah_norm_1d(m, *sigma, n)
    sgn = _sign(n + m + j) * (1 if val > 0 else -1 if val < 0 else 0)
    return QSqrt(1 if sgn > 0 else -1 if sgn < 0 else 0, w * val * val / r2)


def verify_sum_identity(k, ell, kappa, n):
    """Check the exact summation identity tying three 4F3 kernels together.

    Returns (lhs, rhs) of the identity; they must be equal.
    """
    k1, k2, k3 = (R(k_) for k_ in kappa)
    tot = k1 + k2 + k3

    def wstar(x, a, b, c, dlt):
        # Racah weight with the trailing (c+1)_x/(dlt+1)_x ratio inverted;
        # reduces to the plain weight when c == dlt
        return racah_weight_1d(x, a, b, c, dlt) * pochhammer(dlt + 1, x) / pochhammer(c + 1, x)

    lhs = ZERO
    for m in range(n + 1):
        u = wstar(m, R(-n) - 1, R(n) + tot - k1 + 1, k3, k1)
        f1 = hyp_terminating(
            [R(-m), m + k1 + k3 + 1, R(-k), k + k1 + k2 + 1],
            [R(-n), k1 + 1, R(n) + tot + 2],
            ONE,
        )
        f2 = hyp_terminating(
            [R(-m), m + k1 + k3 + 1, R(-ell), ell + k2 + k3 + 1],
            [R(-n), k3 + 1, R(n) + tot + 2],
            ONE,
        )
        lhs += _sign(m) * u * f1 * f2
    rhs = (
        _sign(n + k + ell)
        * pochhammer(k2 + 1, k)
        * pochhammer(k2 + 1, ell)
        / pochhammer(k2 + 1, n)
        * pochhammer(k1 + k3 + 2, n)
        / (pochhammer(k1 + 1, k) * pochhammer(k3 + 1, ell))
        * hyp_terminating(
            [R(-k), k + k1 + k2 + 1, R(-ell), ell + k2 + k3 + 1],
            [R(-n), k2 + 1, R(n) + tot + 2],
            ONE,
        )
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# d = 3: all 24 permutations of the four slots
# ---------------------------------------------------------------------------

# Permutations whose matrices equal another's up to the sign (-1)^{nu_3}
_S4_SIGN_RULE = {
    "(34)": "e",
    "(12)(34)": "(12)",
    "(134)": "(13)",
    "(143)": "(14)",
    "(234)": "(23)",
    "(243)": "(24)",
    "(1234)": "(123)",
    "(1243)": "(124)",
    "(1324)": "(13)(24)",
    "(1342)": "(132)",
    "(1423)": "(14)(23)",
    "(1432)": "(142)",
}

# tau = tau1 * tau2 (tau2 applied first); C^{tau}(k) = C^{tau2}(tau1.k) @ C^{tau1}(k)
_S4_CONVOLUTION = {
    "(132)": ("(123)", "(123)"),
    "(124)": ("(12)", "(24)"),
    "(142)": ("(24)", "(12)"),
    "(13)": ("(123)", "(12)"),
    "(14)": ("(124)", "(12)"),
    "(13)(24)": ("(13)", "(24)"),
    "(14)(23)": ("(14)", "(23)"),
}

# slot map for permutations fixing slot 1: relabel {2,3,4} -> {1,2,3}
_S4_FIX1_TO_S3 = {"(23)": "(12)", "(24)": "(13)"}


def _perm4(name):
    return Permutation.from_cycles(name, 4)


def cc_3d_matrix(tau, kappa, n):
    """Degree-n connection matrix for tau in S_4, by closed forms only."""
    name = repr(tau if isinstance(tau, Permutation) else _perm4(tau))
    kappa = tuple(R(k) for k in kappa)
    return _cc_3d_by_name(name, kappa, n)


def _cc_3d_by_name(name, kappa, n):
    order = enumerate_basis(3, n)
    k1, k2, k3, k4 = kappa

    if name == "e":
        return ConnMatrix.from_func(3, n, lambda nu, mu: ONE if nu == mu else ZERO)

    if name in _S4_SIGN_RULE:
        base = _cc_3d_by_name(_S4_SIGN_RULE[name], kappa, n)
        rows = [
            [_sign(nu[2]) * v for v in base.rows[i]] for i, nu in enumerate(order)
        ]
        return ConnMatrix(3, n, rows, order)

    if name == "(12)":
        def entry(nu, mu):
            if nu[2] != mu[2]:
                return ZERO
            khat = (k1, k2, k3 + k4 + 2 * nu[2] + 1)
            return cc_2d_entry("(12)", nu[1], mu[1], khat, n - nu[2])

        return ConnMatrix.from_func(3, n, entry)

    if name in _S4_FIX1_TO_S3:
        name2d = _S4_FIX1_TO_S3[name]

        def entry(nu, mu):
            if nu[0] != mu[0]:
                return ZERO
            return cc_2d_entry(name2d, nu[2], mu[2], (k2, k3, k4), n - nu[0])

        return ConnMatrix.from_func(3, n, entry)

    if name == "(123)":
        # single surviving convolution term through omega = (nu1, n-nu1-mu3, mu3)
        k12 = (k2, k1, k3, k4)

        def entry(nu, mu):
            om = (nu[0], n - nu[0] - mu[2], mu[2])
            if om[1] < 0:
                return ZERO
            # c^{(23)}_{nu,om} at parameters (12).kappa
            a = cc_2d_entry("(12)", nu[2], om[2], (k12[1], k12[2], k12[3]), n - nu[0])
            if a == 0:
                return ZERO
            khat = (k1, k2, k3 + k4 + 2 * om[2] + 1)
            b = cc_2d_entry("(12)", om[1], mu[1], khat, n - om[2])
            return a * b

        return ConnMatrix.from_func(3, n, entry)

    if name in _S4_CONVOLUTION:
        n1, n2 = _S4_CONVOLUTION[name]
        t1 = _perm4(n1)
        m1 = _cc_3d_by_name(n1, kappa, n)
        m2 = _cc_3d_by_name(n2, t1.act_params(kappa), n)
        return m2.matmul(m1)

    raise ValueError(f"unknown S4 permutation {name!r}")


def _hat_racah_2v(idx, x, beta, n):
    """(value, weight, norm^2) pieces for a 2-variable Racah evaluation."""
    val = racah_multi(idx, x, beta, n)
    w = racah_weight_multi(x, beta, n)
    r2 = racah_norm_sq(idx, beta, n)
    return val, w, r2


def _qsqrt_signed(sign_factor, val, w, r2):
    s = sign_factor * (1 if val > 0 else -1 if val < 0 else 0)
    return QSqrt(1 if s > 0 else -1 if s < 0 else 0, w * val * val / r2)


def cc_3d_hat(tau_name, nu, mu, kappa, n):
    """Normalized connection coefficient for d=3 in closed QSqrt form.

    Supported directly: (123), (132), (124), (142), (1234), (1342),
    (1243), (1432), and the summation form for (13).
    """
    kappa = tuple(R(k) for k in kappa)
    k1, k2, k3, k4 = kappa
    tot = k1 + k2 + k3 + k4
    if tau_name == "(123)":
        beta = (k1, k1 + k4 + 1, k1 + k3 + k4 + 2, tot + 3)
        x = (nu[2], nu[1] + nu[2])
        val, w, r2 = _hat_racah_2v((mu[2], mu[1]), x, beta, n)
        return _qsqrt_signed(_sign(n + nu[2]), val, w, r2)
    if tau_name == "(132)":
        beta = (k3, k3 + k4 + 1, k2 + k3 + k4 + 2, tot + 3)
        y = (mu[2], mu[1] + mu[2])
        val, w, r2 = _hat_racah_2v((nu[2], nu[1]), y, beta, n)
        return _qsqrt_signed(_sign(n + mu[2]), val, w, r2)
    if tau_name == "(124)":
        k34 = (k1, k2, k4, k3)
        return cc_3d_hat("(123)", nu, mu, k34, n).scale(_sign(nu[2] + mu[2]))
    if tau_name == "(142)":
        k34 = (k1, k2, k4, k3)
        return cc_3d_hat("(132)", nu, mu, k34, n).scale(_sign(nu[2] + mu[2]))
    if tau_name == "(1234)":
        return cc_3d_hat("(123)", nu, mu, kappa, n).scale(_sign(nu[2]))
    if tau_name == "(1342)":
        return cc_3d_hat("(132)", nu, mu, kappa, n).scale(_sign(nu[2]))
    if tau_name == "(1243)":
        k34 = (k1, k2, k4, k3)
        return cc_3d_hat("(123)", nu, mu, k34, n).scale(_sign(mu[2]))
    if tau_name == "(1432)":
        k34 = (k1, k2, k4, k3)
        return cc_3d_hat("(132)", nu, mu, k34, n).scale(_sign(mu[2]))
    raise ValueError(f"no direct normalized form for {tau_name!r}")


def cc_3d_hat13_terms(nu, mu, kappa, n):
    """Normalized (13) coefficient as a list of QSqrt summands.

    The sum collapses to a single sign*sqrt(rational); summands individually
    do not, so the caller must combine them by square-free radicand class.
    """
    kappa = tuple(R(k) for k in kappa)
    k1, k2, k3, k4 = kappa
    tot = k1 + k2 + k3 + k4
    sigma = (R(-n) + nu[2] - 1, R(n) + nu[2] + tot - k3 + 2, k1 + k4 + 2 * nu[2] + 1, k3)
    beta = (k1, k1 + k4 + 1, k1 + k3 + k4 + 2, tot + 3)
    n1 = n - nu[2]
    r2_1d = racah_norm_1d(nu[1], *sigma, n1)
    terms = []
    for ell in range(n1 + 1):
        val1 = racah_1d(nu[1], ell, *sigma)
        w1 = racah_weight_1d(ell, *sigma)
        x = (nu[2], ell + nu[2])
        val2, w2, r2_2 = _hat_racah_2v((mu[2], mu[1]), x, beta, n)
        sgn = _sign(nu[1] + ell)
        v = val1 * val2
        s = sgn * (1 if v > 0 else -1 if v < 0 else 0)
        terms.append(QSqrt(1 if s > 0 else -1 if s < 0 else 0, w1 * w2 * v * v / (r2_1d * r2_2)))
    return terms


# ---------------------------------------------------------------------------
# general d: reductions and the cyclic permutation
# ---------------------------------------------------------------------------


def reduce_fix_first(tau, j):
    """For tau fixing slots 1..j, the induced permutation on the remaining slots."""
    m = tau.m
    for i in range(1, j + 1):
        if tau(i) != i:
            raise ValueError(f"tau does not fix slot {i}")
    return Permutation(tuple(tau(i) - j for i in range(j + 1, m + 1)))


def cc_fix_first(tau, kappa, n, j, lower_cc):
    """Connection matrix when tau fixes slots 1..j, from lower-dim matrices.

    lower_cc(tau_low, kappa_low, n_low) must return the ConnMatrix for the
    reduced problem in d-j variables.
    """
    d = tau.m - 1
    kappa = tuple(R(k) for k in kappa)
    tau_low = reduce_fix_first(tau, j)
    k_low = kappa[j:]
    order = enumerate_basis(d, n)
    sub = {}

    def entry(nu, mu):
        if nu[:j] != mu[:j]:
            return ZERO
        n_low = n - sum(nu[:j])
        m = sub.get(n_low)
        if m is None:
            m = lower_cc(tau_low, k_low, n_low)
            sub[n_low] = m
        return m.entry(nu[j:], mu[j:])

    return ConnMatrix.from_func(d, n, entry)


def cc_fix_last(tau, kappa, n, k, lower_cc):
    """Connection matrix when tau lies in S_k acting on the first k slots, k <= d."""
    d = tau.m - 1
    kappa = tuple(R(kk) for kk in kappa)
    for i in range(k + 1, d + 2):
        if tau(i) != i:
            raise ValueError(f"tau does not fix slot {i}")
    tau_low = Permutation(tuple(tau(i) for i in range(1, k + 1)))
    sub = {}

    def entry(nu, mu):
        if nu[k:] != mu[k:]:
            return ZERO
        tail = sum(nu[k:])
        k_low = kappa[:k] + (sum(kappa[k:], ZERO) + 2 * tail + d - k,)
        n_low = n - tail
        key = (k_low, n_low)
        m = sub.get(key)
        if m is None:
            m = lower_cc(tau_low, k_low, n_low)
            sub[key] = m
        return m.entry(nu[:k], mu[:k])

    return ConnMatrix.from_func(d, n, entry)


def cc_cyclic_hat(nu, mu, kappa, n, form=1):
    """Normalized coefficient for the full cycle (12...d), three closed forms."""
    d = len(nu)
    kappa = tuple(R(k) for k in kappa)

    def ksuf(j):
        # |kappa^{j}| = kappa_j + ... + kappa_{d+1} (1-based j)
        return sum(kappa[j - 1:], ZERO)

    if form == 1:
        beta = tuple(kappa[0] + ksuf(d + 2 - j) + j if j > 0 else kappa[0] for j in range(d + 1))
        x = tuple(sum(nu[d - j:]) for j in range(1, d))  # |nu^d|, ..., |nu^2|
        idx = tuple(reversed(mu[1:]))  # mu_d, ..., mu_2
        val = racah_multi(idx, x, beta, n)
        w = racah_weight_multi(x, beta, n)
        r2 = racah_norm_sq(idx, beta, n)
    elif form == 2:
        beta = (kappa[0],) + tuple(-ksuf(j + 1) - 2 * n - d + j for j in range(1, d + 1))
        x = tuple(sum(mu[:j]) for j in range(1, d))  # |mu_1|, ..., |mu_{d-1}|
        idx = tuple(nu[: d - 1])
        val = racah_multi(idx, x, beta, n)
        w = racah_weight_multi(x, beta, n)
        r2 = racah_norm_sq(idx, beta, n)
    elif form == 3:
        beta = tuple(ksuf(d + 1 - j) + j for j in range(d)) + (-R(2 * n) - kappa[0],)
        x = tuple(sum(mu[d - j:]) for j in range(1, d))  # |mu^d|, ..., |mu^2|
        idx = tuple(reversed(nu[: d - 1]))  # nu_{d-1}, ..., nu_1
        val = racah_second(idx, x, beta, n)
        w = racah_weight_multi(x, beta, n)
        r2 = racah_second_norm_sq(idx, beta, n)
    else:
        raise ValueError("form must be 1, 2 or 3")
    return _qsqrt_signed(_sign(n + nu[d - 1]), val, w, r2)


def cc_adjacent_hat(nu, mu, kappa, n, j):
    """Normalized coefficient for the transposition (j, j+1), 1 <= j <= d."""
    d = len(nu)
    kappa = tuple(R(k) for k in kappa)
    if j == d:
        if nu != tuple(mu):
            return QSqrt(0, ZERO)
        return QSqrt(1 if nu[d - 1] % 2 == 0 else -1, ONE)
    if tuple(nu[: j - 1]) != tuple(mu[: j - 1]) or tuple(nu[j + 1:]) != tuple(mu[j + 1:]):
        return QSqrt(0, ZERO)
    ksuf = lambda i: sum(kappa[i - 1:], ZERO)
    nsuf = lambda i: sum(nu[i - 1:])
    sigma = (
        R(-(nu[j - 1] + nu[j])) - 1,
        ksuf(j + 1) + nsuf(j) + nsuf(j + 2) + d - j,
        ksuf(j + 2) + 2 * nsuf(j + 2) + d - j - 1,
        kappa[j - 1],
    )
    N = nu[j - 1] + nu[j]
    val = racah_1d(mu[j], nu[j], *sigma)
    w = racah_weight_1d(nu[j], *sigma)
    r2 = racah_norm_1d(mu[j], *sigma, N)
    return _qsqrt_signed(_sign(mu[j - 1] + nu[j]), val, w, r2)


def connection_matrix(tau, kappa, n, method="closed"):
    """Connection matrix for tau, by closed forms (d<=3) or direct inner products."""
    d = tau.m - 1
    if method == "gram":
        return gram_connection(tau, kappa, n)
    if d == 2:
        return cc_2d_matrix(tau, kappa, n)
    if d == 3:
        return cc_3d_matrix(tau, kappa, n)
    if tau.is_identity():
        return ConnMatrix.from_func(d, n, lambda nu, mu: ONE if nu == mu else ZERO)
    fixed_prefix = 0
    for i in range(1, d + 2):
        if tau(i) == i:
            fixed_prefix += 1
        else:
            break
    if fixed_prefix >= 1 and d - fixed_prefix <= 3:
        return cc_fix_first(tau, tuple(R(k) for k in kappa), n, fixed_prefix, connection_matrix)
    top_fixed = all(tau(i) == i for i in range(5, d + 2))
    if top_fixed and d > 3:
        return cc_fix_last(tau, tuple(R(k) for k in kappa), n, 4, _embedded_s4)
    return gram_connection(tau, kappa, n)


def _embedded_s4(tau_low, kappa_low, n_low):
    if tau_low.m == 4:
        return cc_3d_matrix(tau_low, kappa_low, n_low)
    return connection_matrix(tau_low, kappa_low, n_low)
