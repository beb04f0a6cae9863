from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from simplexconn.backend import R, ZERO, ONE
from simplexconn.exact_arith import pochhammer
from simplexconn.multipoly import SparsePoly
from simplexconn.simplex import (
    Permutation,
    all_permutations,
    enumerate_basis,
    inner_product_simplex,
    jacobi_1d,
    jacobi_simplex_basis,
    norm_A,
    simplex_moment,
)


def perms(m):
    return st.permutations(range(1, m + 1)).map(lambda t: Permutation(tuple(t)))


class TestPermutation:
    def test_from_cycles(self):
        tau = Permutation.from_cycles("(12)", 3)
        assert (tau(1), tau(2), tau(3)) == (2, 1, 3)
        tau = Permutation.from_cycles("(1 3)(2 4)", 4)
        assert [tau(i) for i in (1, 2, 3, 4)] == [3, 4, 1, 2]
        assert Permutation.from_cycles("e", 3).is_identity()

    def test_cycle_repr_roundtrip(self):
        for tau in all_permutations(4):
            assert Permutation.from_cycles(repr(tau), 4) == tau

    @given(perms(4), perms(4), perms(4))
    @settings(max_examples=50, deadline=None)
    def test_group_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == Permutation.identity(4)
        assert a.inverse().inverse() == a

    @given(perms(3), perms(3))
    @settings(max_examples=30, deadline=None)
    def test_param_action_is_homomorphism(self, a, b):
        kappa = (R(1), R(2), R(3))
        assert (a * b).act_params(kappa) == b.act_params(a.act_params(kappa))

    def test_var_action_matches_barycentric_slots(self):
        # substituting x_i <- X_tau(i) with X = (x1, x2, 1 - x1 - x2)
        tau = Permutation.from_cycles("(13)", 3)
        x1 = SparsePoly.variable(2, 0)
        acted = tau.act_vars(x1)
        one = SparsePoly.constant(2, ONE)
        assert acted == one - x1 - SparsePoly.variable(2, 1)

    @given(perms(3), perms(3))
    @settings(max_examples=30, deadline=None)
    def test_var_action_composition(self, a, b):
        p = SparsePoly.variable(2, 0) * SparsePoly.variable(2, 1)
        assert (a * b).act_vars(p) == a.act_vars(b.act_vars(p))


def test_enumerate_basis_counts_and_order():
    for d in range(1, 7):
        for n in range(9):
            assert len(enumerate_basis(d, n)) == comb(n + d - 1, n)
    # 2D convention: position j holds (n-j, j)
    assert enumerate_basis(2, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]


def test_simplex_moment_dirichlet():
    kappa = (R(1, 2), R(1), R(3, 2))
    lam = sum(kappa) + 3
    for gamma in [(0, 0), (1, 0), (2, 3)]:
        expect = (
            pochhammer(kappa[0] + 1, gamma[0])
            * pochhammer(kappa[1] + 1, gamma[1])
            / pochhammer(lam, sum(gamma))
        )
        assert simplex_moment(gamma, kappa) == expect
    assert simplex_moment((0, 0), kappa) == ONE


def test_jacobi_1d_value_at_one():
    # normalization P_n(1) = (a+1)_n / n!
    for n in range(6):
        a, b = R(1, 2), R(5, 3)
        coeffs = jacobi_1d(n, a, b)
        value = sum(coeffs)
        assert value == pochhammer(a + 1, n) / pochhammer(ONE, n)


def test_jacobi_1d_orthogonality_via_moments():
    # orthogonality on [0,1] against t^b (1-t)^a realized through the d=1 simplex
    a, b = R(2), R(1, 2)
    kappa1 = (b, a)
    for n in range(4):
        for m in range(n):
            # build polynomials in the single simplex variable t
            def poly(k):
                t = SparsePoly.variable(1, 0)
                coeffs = jacobi_1d(k, a, b)
                out = SparsePoly.zero(1)
                power = SparsePoly.constant(1, ONE)
                two_t_minus_1 = t.scale(R(2)) - SparsePoly.constant(1, ONE)
                for c in coeffs:
                    out = out + power.scale(c)
                    power = power * two_t_minus_1
                return out

            assert inner_product_simplex(poly(n), poly(m), kappa1) == ZERO


def test_basis_orthogonality_and_norms_d2():
    kappa = (R(1, 2), R(1, 3), R(2))
    for n in range(4):
        basis = [(nu, jacobi_simplex_basis(nu, kappa)) for nu in enumerate_basis(2, n)]
        for i, (nu, p) in enumerate(basis):
            assert inner_product_simplex(p, p, kappa) == norm_A(nu, kappa)
            for mu, q in basis[i + 1:]:
                assert inner_product_simplex(p, q, kappa) == ZERO


def test_basis_orthogonality_across_degrees_d3():
    kappa = (ZERO, R(1, 2), R(1), R(3, 2))
    elems = [
        (nu, jacobi_simplex_basis(nu, kappa))
        for n in range(3)
        for nu in enumerate_basis(3, n)
    ]
    for i, (nu, p) in enumerate(elems):
        for mu, q in elems[i + 1:]:
            expected = norm_A(nu, kappa) if nu == mu else ZERO
            assert inner_product_simplex(p, q, kappa) == expected
