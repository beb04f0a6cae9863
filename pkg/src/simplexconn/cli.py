"""Command-line interface: basis construction, connection matrices, verification.

Rationals are written "p/q", permutations in 1-based cycle notation such as
"(12)" or "(1 3)(2 4)". Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

import argparse
import json
import os
import random
import sys

from .backend import R, ZERO, ONE, rat_from_str, rat_str
from .exact_arith import QSqrt, hyp_with_prefactor, pochhammer
from .multipoly import SparsePoly
from .simplex import Permutation, all_permutations, enumerate_basis, jacobi_simplex_basis, norm_A
from .connection import (
    gram_connection,
    normalize,
    verify_row_orthogonality,
    verify_column_orthogonality,
    verify_inverse_identity,
    verify_convolution,
)
from .closed_forms import connection_matrix, verify_sum_identity
from . import racah as rc
from . import discrete as ds
from . import ballsphere as bs


def parse_rationals(text):
    return tuple(rat_from_str(part.strip()) for part in text.split(","))


def matrix_json(mat):
    return {
        "d": mat.d,
        "n": mat.n,
        "order": [list(nu) for nu in mat.order],
        "entries": [[rat_str(c) for c in row] for row in mat.rows],
    }


def hat_json(order, grid):
    return {
        "order": [list(nu) for nu in order],
        "entries": [[q.to_json() for q in row] for row in grid],
    }


def emit(args, payload, name):
    if args.output == "csv":
        rows = payload.get("entries", [])
        text = "\n".join(
            ",".join(c if isinstance(c, str) else json.dumps(c) for c in row) for row in rows
        ) + "\n"
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, name + ("." + args.output))
        with open(path, "w") as fh:
            fh.write(text)
        print(path)
    else:
        sys.stdout.write(text)


def cmd_basis(args):
    kappa = parse_rationals(args.kappa)
    d = len(kappa) - 1
    if args.family == "simplex":
        out = []
        for nu in enumerate_basis(d, args.n):
            out.append({"nu": list(nu), "poly": jacobi_simplex_basis(nu, kappa).to_json(),
                        "norm": rat_str(norm_A(nu, kappa))})
        emit(args, {"family": "simplex", "kappa": [rat_str(k) for k in kappa], "basis": out}, "basis")
    elif args.family == "ball":
        out = []
        for nu, eps in bs.ball_enumerate(d, args.n):
            p = bs.q_ball(nu, eps, kappa)
            out.append({"nu": list(nu), "eps": list(eps), "core": p.core.to_json(),
                        "norm": rat_str(bs.ball_norm(nu, eps, kappa))})
        emit(args, {"family": "ball", "kappa": [rat_str(k) for k in kappa], "basis": out}, "basis")
    elif args.family == "sphere":
        out = []
        for nu, eps in bs.sphere_enumerate(d - 1, args.n):
            p = bs.sphere_basis(nu, eps, kappa, args.n)
            out.append({"nu": list(nu), "eps": list(eps), "core": p.core.to_json()})
        emit(args, {"family": "sphere", "kappa": [rat_str(k) for k in kappa], "basis": out}, "basis")
    else:
        raise SystemExit(2)
    return 0


def cmd_connect(args):
    tau_text = args.tau
    if args.family == "simplex":
        kappa = parse_rationals(args.kappa)
        d = len(kappa) - 1
        tau = Permutation.from_cycles(tau_text, d + 1)
        mats = {}
        if args.method in ("gram", "both"):
            mats["gram"] = gram_connection(tau, kappa, args.n)
        if args.method in ("closed", "both"):
            mats["closed"] = connection_matrix(tau, kappa, args.n, method="closed")
        if args.method == "both" and mats["gram"] != mats["closed"]:
            diff = []
            for i, nu in enumerate(mats["gram"].order):
                for j, mu in enumerate(mats["gram"].order):
                    a, b = mats["gram"].rows[i][j], mats["closed"].rows[i][j]
                    if a != b:
                        diff.append({"nu": list(nu), "mu": list(mu),
                                     "gram": rat_str(a), "closed": rat_str(b)})
            emit(args, {"mismatch": diff}, "connect-diff")
            return 1
        mat = mats.get("closed", mats.get("gram"))
        payload = matrix_json(mat)
        if args.normalized:
            payload["normalized"] = hat_json(mat.order, normalize(mat, tau, kappa))
        emit(args, payload, "connect")
        return 0
    if args.family == "hahn":
        kappa = parse_rationals(args.kappa)
        d = len(kappa) - 1
        tau = Permutation.from_cycles(tau_text, d + 1)
        mat = ds.hahn_connection(tau, kappa, args.N, args.n)
        emit(args, matrix_json(mat), "connect")
        return 0
    if args.family == "kraw":
        rho = parse_rationals(args.rho)
        d = len(rho)
        tau = Permutation.from_cycles(tau_text, d + 1)
        mat = ds.kraw_connection(tau, rho, args.N, args.n)
        emit(args, matrix_json(mat), "connect")
        return 0
    if args.family == "ball":
        kappa = parse_rationals(args.kappa)
        d = len(kappa) - 1
        tau = Permutation.from_cycles(tau_text, d)
        conn = bs.ball_connection(tau, kappa, args.n)
        entries = [
            {"nu": list(src[0]), "eps": list(src[1]), "mu": list(tgt[0]),
             "eta": list(tgt[1]), "value": val.to_json()}
            for (src, tgt), val in sorted(conn.items())
        ]
        emit(args, {"family": "ball", "entries": entries}, "connect")
        return 0
    raise SystemExit(2)


def _random_kappa(rng, d):
    return tuple(R(rng.randint(0, 12), rng.randint(1, 6)) for _ in range(d + 1))


def _suite_structural(args, rng):
    kappa = parse_rationals(args.kappa) if args.kappa else _random_kappa(rng, args.d)
    d = len(kappa) - 1
    n = args.n
    failures = []
    mats = {}
    for tau in all_permutations(d + 1):
        mat = gram_connection(tau, kappa, n)
        mats[repr(tau)] = (tau, mat)
        if not verify_row_orthogonality(mat, tau, kappa):
            failures.append(("row-orthogonality", repr(tau)))
        if not verify_column_orthogonality(mat, tau, kappa):
            failures.append(("column-orthogonality", repr(tau)))
        inv = tau.inverse()
        mat_at_invk = gram_connection(tau, inv.act_params(kappa), n)
        inv_mat = gram_connection(inv, kappa, n)
        if not verify_inverse_identity(mat_at_invk, inv_mat, tau, kappa):
            failures.append(("inverse", repr(tau)))
    perms = all_permutations(d + 1)
    for _ in range(args.count):
        t1, t2 = rng.choice(perms), rng.choice(perms)
        prod = t1 * t2
        lhs = gram_connection(prod, kappa, n)
        m2 = gram_connection(t2, t1.act_params(kappa), n)
        m1 = gram_connection(t1, kappa, n)
        if not verify_convolution(lhs, m2, m1):
            failures.append(("convolution", repr(t1), repr(t2)))
    return failures


def _suite_whipple(args, rng):
    failures = []
    for _ in range(args.count):
        m = rng.randint(0, 6)
        X = R(rng.randint(-20, 20), rng.randint(1, 5))
        Y = R(rng.randint(-20, 20), rng.randint(1, 5))
        Z = R(rng.randint(-20, 20), rng.randint(1, 5))
        U = R(rng.randint(1, 20), rng.randint(1, 5))
        V = R(rng.randint(1, 20), rng.randint(1, 5))
        W = 1 - m + X + Y + Z - U - V
        lhs = hyp_with_prefactor([X, Y, Z], [U, V, W], m)
        rhs = hyp_with_prefactor([U - X, U - Y, Z], [1 - V + Z - m, 1 - W + Z - m, U], m)
        if lhs != rhs:
            failures.append((m, rat_str(X), rat_str(Y), rat_str(Z), rat_str(U), rat_str(V)))
    return failures


def _suite_sum_identity(args, rng):
    kappa = parse_rationals(args.kappa) if args.kappa else (R(1, 2), R(1, 3), R(1, 2))
    failures = []
    for n in range(args.n + 1):
        for k in range(n + 1):
            for ell in range(n + 1):
                lhs, rhs = verify_sum_identity(k, ell, kappa, n)
                if lhs != rhs:
                    failures.append((n, k, ell))
    return failures


def _suite_racah(args, rng):
    failures = []
    d, N = args.d, args.N
    beta = tuple(R(2 * i + 1, 2) + i * i for i in range(d + 2))
    grid = rc.lattice_points(d, N)
    idxs = ds.kraw_grid(d, N)
    for nu in idxs:
        for mu in idxs:
            s = sum(
                (rc.racah_weight_multi(x, beta, N) * rc.racah_multi(nu, x, beta, N)
                 * rc.racah_multi(mu, x, beta, N) for x in grid), ZERO)
            expect = rc.racah_norm_sq(nu, beta, N) if nu == mu else ZERO
            if s != expect:
                failures.append((nu, mu))
    return failures


def _suite_example_910(args, rng):
    failures = []
    for n in range(args.n + 1):
        rep = bs.example_910_check(n)
        failures.extend(rep["failures"])
    return failures


def _suite_dimensions(args, rng):
    from math import comb
    failures = []
    for d in range(1, 7):
        for n in range(9):
            if len(enumerate_basis(d, n)) != comb(n + d - 1, n):
                failures.append(("simplex", d, n))
    for d in range(1, 4):
        for n in range(6):
            if len(bs.ball_enumerate(d, n)) != comb(n + d - 1, n):
                failures.append(("ball", d, n))
            if len(bs.sphere_enumerate(d, n)) != bs.dim_harmonic(n, d + 1):
                failures.append(("sphere", d, n))
    return failures


SUITES = {
    "orthogonality": _suite_structural,
    "whipple": _suite_whipple,
    "sum-identity": _suite_sum_identity,
    "racah-orthogonality": _suite_racah,
    "example-9-10": _suite_example_910,
    "dimensions": _suite_dimensions,
}


def cmd_verify(args):
    rng = random.Random(args.seed)
    suite = SUITES.get(args.suite)
    if suite is None:
        print("unknown suite: %s (choose from %s)" % (args.suite, ", ".join(sorted(SUITES))),
              file=sys.stderr)
        return 2
    failures = suite(args, rng)
    report = {"suite": args.suite, "seed": args.seed, "failures": [list(map(str, f)) if isinstance(f, tuple) else f for f in failures]}
    emit(args, report, "verify-" + args.suite)
    return 1 if failures else 0


def build_parser():
    p = argparse.ArgumentParser(prog="simplexconn",
                                description="Exact connection coefficients for multivariate orthogonal polynomials")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="directory for artifact files")
    common.add_argument("--output", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="print an orthogonal basis", parents=[common])
    b.add_argument("--family", choices=("simplex", "ball", "sphere"), default="simplex")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--kappa", required=True, help="comma-separated rationals, d+1 entries")
    b.set_defaults(func=cmd_basis)

    c = sub.add_parser("connect", help="compute a connection matrix", parents=[common])
    c.add_argument("--family", choices=("simplex", "hahn", "kraw", "ball"), default="simplex")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--N", type=int, default=None, help="lattice size for discrete families")
    c.add_argument("--kappa", default=None)
    c.add_argument("--rho", default=None)
    c.add_argument("--tau", required=True, help='cycle notation, e.g. "(12)" or "e"')
    c.add_argument("--method", choices=("gram", "closed", "both"), default="gram")
    c.add_argument("--normalized", action="store_true")
    c.set_defaults(func=cmd_connect)

    v = sub.add_parser("verify", help="run a verification suite", parents=[common])
    v.add_argument("--suite", required=True)
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--N", type=int, default=4)
    v.add_argument("--kappa", default=None)
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
