from simplexconn.backend import R, ZERO, ONE
from simplexconn.exact_arith import pochhammer
from simplexconn import racah as rc
from simplexconn.discrete import compositions

BETA2 = tuple(R(2 * i + 1, 2) + i for i in range(4))  # d = 2
BETA3 = tuple(R(3 * i + 2, 3) + i * i for i in range(5))  # d = 3


def index_set(d, N):
    return [nu for t in range(N + 1) for nu in compositions(t, d)]


def test_racah_1d_orthogonality():
    a, b, dlt = R(1, 2), R(1, 3), R(1, 4)
    N = 5
    c = R(-N - 1)  # truncation
    for n in range(N + 1):
        for m in range(n + 1):
            s = sum(
                (
                    rc.racah_weight_1d(x, a, b, c, dlt)
                    * rc.racah_1d(n, x, a, b, c, dlt)
                    * rc.racah_1d(m, x, a, b, c, dlt)
                    for x in range(N + 1)
                ),
                ZERO,
            )
            expect = rc.racah_norm_1d(n, a, b, c, dlt, N) if n == m else ZERO
            assert s == expect


def test_multivariable_orthogonality_d2():
    N = 4
    grid = rc.lattice_points(2, N)
    idxs = index_set(2, N)
    vals = {nu: [rc.racah_multi(nu, x, BETA2, N) for x in grid] for nu in idxs}
    weights = [rc.racah_weight_multi(x, BETA2, N) for x in grid]
    for i, nu in enumerate(idxs):
        for mu in idxs[i:]:
            s = sum(
                (w * a * b for w, a, b in zip(weights, vals[nu], vals[mu])), ZERO
            )
            expect = rc.racah_norm_sq(nu, BETA2, N) if nu == mu else ZERO
            assert s == expect


def test_duality_relation_and_involution():
    N = 4
    for nu in index_set(2, N):
        for x in rc.lattice_points(2, N):
            xt, nut, bt = rc.dual_map(x, nu, BETA2, N)
            lhs = rc.racah_multi(nu, x, BETA2, N) / rc.duality_normalizer(nu, BETA2, N)
            rhs = rc.racah_multi(nut, xt, bt, N) / rc.duality_normalizer(nut, bt, N)
            assert lhs == rhs
            back = rc.dual_map(xt, nut, bt, N)
            assert back == (tuple(x), tuple(nu), tuple(BETA2))


def test_second_family_via_reflection():
    N = 4
    for nu in index_set(2, N):
        for x in rc.lattice_points(2, N):
            xc, nuc, bc = rc.conj_map(x, nu, BETA2, N)
            assert rc.racah_multi(nu, x, BETA2, N) == rc.racah_second(nuc, xc, bc, N)


def test_second_family_orthogonality():
    N = 3
    grid = rc.lattice_points(2, N)
    idxs = index_set(2, N)
    weights = [rc.racah_weight_multi(x, BETA2, N) for x in grid]
    vals = {nu: [rc.racah_second(nu, x, BETA2, N) for x in grid] for nu in idxs}
    for i, nu in enumerate(idxs):
        for mu in idxs[i:]:
            s = sum((w * a * b for w, a, b in zip(weights, vals[nu], vals[mu])), ZERO)
            expect = rc.racah_second_norm_sq(nu, BETA2, N) if nu == mu else ZERO
            assert s == expect


def test_dual_then_reflect_lands_in_second_family():
    N = 4
    for nu in index_set(2, N)[:12]:
        for x in rc.lattice_points(2, N):
            xt2, nut2, bt2 = rc.dual2_map(x, nu, BETA2, N)
            xt, nut, bt = rc.dual_map(x, nu, BETA2, N)
            assert rc.racah_second(nut2, xt2, bt2, N) == rc.racah_multi(nut, xt, bt, N)


def test_one_variable_bridge():
    N = 5
    beta = tuple(R(i + 1, 3) + 2 * i for i in range(3))  # d = 1
    a, b, c, dlt = rc.param_bridge_1d(beta, N)
    for n in range(N + 1):
        for x in range(N + 1):
            pref = (
                pochhammer(beta[1] - beta[0], n)
                * pochhammer(beta[2] + N, n)
                * pochhammer(R(-N), n)
            )
            lhs = rc.racah_multi((n,), (x,), beta, N)
            assert lhs == pref * rc.racah_1d(n, x, a, b, c, dlt)


def test_norm_closed_form_d3_spot():
    N = 3
    grid = rc.lattice_points(3, N)
    weights = [rc.racah_weight_multi(x, BETA3, N) for x in grid]
    for nu in [(0, 0, 0), (1, 0, 0), (0, 1, 1), (2, 1, 0), (1, 1, 1)]:
        vals = [rc.racah_multi(nu, x, BETA3, N) for x in grid]
        s = sum((w * v * v for w, v in zip(weights, vals)), ZERO)
        assert s == rc.racah_norm_sq(nu, BETA3, N)
