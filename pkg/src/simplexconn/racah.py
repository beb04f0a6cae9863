"""Racah polynomials: one-variable and the multivariable product family.

The multivariable family lives on lattice points 0 <= x_1 <= ... <= x_d <= N
with a parameter vector beta of length d+2.  Each product factor is computed
with its Pochhammer prefactor folded into the series, so the value is a
polynomial in all parameters and no intermediate bottom-parameter pole can
occur.
"""

import itertools

from .backend import R, ZERO, ONE
from .exact_arith import hyp_terminating, hyp_with_prefactor, pochhammer


def racah_1d(n, x, a, b, c, dlt):
    """R_n(lambda(x); a, b, c, dlt) as a terminating 4F3 at z=1."""
    a, b, c, dlt = R(a), R(b), R(c), R(dlt)
    return hyp_terminating(
        [R(-n), n + a + b + 1, R(-x), R(x) + c + dlt + 1],
        [a + 1, b + dlt + 1, c + 1],
        ONE,
    )


def racah_weight_1d(x, a, b, c, dlt):
    a, b, c, dlt = R(a), R(b), R(c), R(dlt)
    num = (
        pochhammer(c + dlt + 1, x)
        * pochhammer((c + dlt + 3) / 2, x)
        * pochhammer(a + 1, x)
        * pochhammer(b + dlt + 1, x)
        * pochhammer(c + 1, x)
    )
    den = (
        pochhammer(ONE, x)
        * pochhammer((c + dlt + 1) / 2, x)
        * pochhammer(c + dlt - a + 1, x)
        * pochhammer(c - b + 1, x)
        * pochhammer(dlt + 1, x)
    )
    return num / den


def racah_norm_1d(n, a, b, c, dlt, N):
    """Squared norm by direct summation over the support 0..N."""
    return sum(
        (racah_weight_1d(x, a, b, c, dlt) * racah_1d(n, x, a, b, c, dlt) ** 2 for x in range(N + 1)),
        ZERO,
    )


def lattice_points(d, N):
    """All (x_1,...,x_d) with 0 <= x_1 <= ... <= x_d <= N."""
    return [tuple(c) for c in itertools.combinations_with_replacement(range(N + 1), d)]


def _prefix(nu, j):
    """nu_1 + ... + nu_j."""
    return sum(nu[:j])


def _suffix(nu, j):
    """nu_j + ... + nu_d (1-based j)."""
    return sum(nu[j - 1:])


def racah_multi(nu, x, beta, N):
    """Multivariable Racah polynomial R_nu(x; beta, N).

    nu, x have length d; beta has length d+2 (indices 0..d+1); the
    convention x_0 = 0, x_{d+1} = N is applied internally.
    """
    d = len(nu)
    beta = [R(b) for b in beta]
    xx = [0] + list(x) + [N]
    val = ONE
    for j in range(1, d + 1):
        s = _prefix(nu, j - 1)
        top = [
            R(nu[j - 1]) + 2 * s + beta[j + 1] - beta[0] - 1,
            R(s - xx[j]),
            R(s) + beta[j] + xx[j],
        ]
        bottom = [
            R(2 * s) + beta[j] - beta[0],
            R(s) + beta[j + 1] + xx[j + 1],
            R(s - xx[j + 1]),
        ]
        val *= hyp_with_prefactor(top, bottom, nu[j - 1])
    return val


def racah_weight_multi(x, beta, N):
    d = len(x)
    beta = [R(b) for b in beta]
    xx = [0] + list(x) + [N]
    val = ONE
    for j in range(d + 1):
        gap = xx[j + 1] - xx[j]
        tot = xx[j + 1] + xx[j]
        val *= (
            pochhammer(beta[j + 1] - beta[j], gap)
            * pochhammer(beta[j + 1], tot)
            / (pochhammer(ONE, gap) * pochhammer(beta[j] + 1, tot))
        )
    for j in range(1, d + 1):
        val *= pochhammer((beta[j] + 2) / 2, xx[j]) / pochhammer(beta[j] / 2, xx[j])
    return val


def racah_norm_sq(nu, beta, N):
    """Squared norm of R_nu(.; beta, N), in closed form."""
    d = len(nu)
    beta = [R(b) for b in beta]
    n = sum(nu)
    val = (
        pochhammer(beta[d + 1], N + n)
        * pochhammer(R(-N), n)
        * pochhammer(R(-N) - beta[0], n)
        * pochhammer(R(2 * n) + beta[d + 1] - beta[0], N - n)
        / (pochhammer(ONE, N) * pochhammer(beta[0] + 1, N))
    )
    for k in range(1, d + 1):
        s_prev = _prefix(nu, k - 1)
        s_cur = _prefix(nu, k)
        val *= (
            pochhammer(ONE, nu[k - 1])
            * pochhammer(beta[k + 1] - beta[k], nu[k - 1])
            * pochhammer(R(2 * s_prev) + beta[k] - beta[0], nu[k - 1])
            * pochhammer(R(s_cur + s_prev) + beta[k + 1] - beta[0] - 1, nu[k - 1])
        )
    return val


def dual_map(x, nu, beta, N):
    """Dual variables/indices/parameters; an involution together with N."""
    d = len(nu)
    beta = [R(b) for b in beta]
    xx = [0] + list(x) + [N]
    x_t = tuple(N - _prefix(nu, d + 1 - j) for j in range(1, d + 1))
    nu_t = tuple(xx[d + 2 - j] - xx[d + 1 - j] for j in range(1, d + 1))
    beta_t = [beta[0]] + [beta[0] - beta[d + 2 - j] - 2 * N + 1 for j in range(1, d + 2)]
    return x_t, nu_t, tuple(beta_t)


def duality_normalizer(nu, beta, N):
    """(-N)_{|nu|} (-N-beta_0)_{|nu|} prod_j (beta_{j+1}-beta_j)_{nu_j}."""
    d = len(nu)
    beta = [R(b) for b in beta]
    n = sum(nu)
    val = pochhammer(R(-N), n) * pochhammer(R(-N) - beta[0], n)
    for j in range(1, d + 1):
        val *= pochhammer(beta[j + 1] - beta[j], nu[j - 1])
    return val


def conj_map(x, nu, beta, N):
    """Reflected variables/indices/parameters for the second product family."""
    d = len(nu)
    beta = [R(b) for b in beta]
    x_c = tuple(N - x[d - j] for j in range(1, d + 1))
    nu_c = tuple(nu[d - j] for j in range(1, d + 1))
    beta_c = tuple(-R(2 * N) - beta[d + 1 - j] for j in range(d + 2))
    return x_c, nu_c, beta_c


def racah_second(nu, x, beta, N):
    """Second product family R'_nu(x; beta, N) (suffix-indexed factors)."""
    d = len(nu)
    beta = [R(b) for b in beta]
    xx = [0] + list(x) + [N]
    val = ONE
    for j in range(1, d + 1):
        s = _suffix(nu, j + 1) if j < d else 0
        top = [
            R(nu[j - 1]) + 2 * s + beta[d + 1] - beta[j - 1] - 1,
            R(s - N + xx[j]),
            R(s - N) - beta[j] - xx[j],
        ]
        bottom = [
            R(2 * s) + beta[d + 1] - beta[j],
            R(s - N) - beta[j - 1] - xx[j - 1],
            R(s - N + xx[j - 1]),
        ]
        val *= hyp_with_prefactor(top, bottom, nu[j - 1])
    return val


def racah_second_norm_sq(nu, beta, N):
    """Squared norm of R'_nu under the same weight, by direct summation."""
    d = len(nu)
    total = ZERO
    for x in lattice_points(d, N):
        v = racah_second(nu, x, beta, N)
        total += racah_weight_multi(x, beta, N) * v * v
    return total


def dual2_map(x, nu, beta, N):
    """Dual map landing in the second family (compose dual and reflection)."""
    d = len(nu)
    beta = [R(b) for b in beta]
    xx = [0] + list(x) + [N]
    x_t = tuple(_prefix(nu, j) for j in range(1, d + 1))
    nu_t = tuple(xx[j + 1] - xx[j] for j in range(1, d + 1))
    beta_t = tuple(
        [beta[j + 1] - beta[0] - 1 for j in range(d + 1)] + [-R(2 * N) - beta[0]]
    )
    return x_t, nu_t, beta_t


def param_bridge_1d(beta, N):
    """One-variable parameters (a, b, c, dlt) matching the d=1 product family."""
    beta = [R(b) for b in beta]
    return (R(-N) - 1, beta[2] - beta[0] - 1 + N, beta[1] - beta[0] - 1, beta[0])
