"""Benchmark the gmpy2 and fractions arithmetic backends.

Runs the same workload (a d=3 Gram connection matrix plus a multivariable
Racah orthogonality sweep) in subprocesses with SIMPLEXCONN_BACKEND set to
each backend and reports wall-clock times.

Usage: python -m simplexconn.bench [--n N] [--d D]
"""

import argparse
import os
import subprocess
import sys
import time

WORKLOAD = r"""
import time
from simplexconn.backend import BACKEND, R, ZERO
from simplexconn.simplex import Permutation, all_permutations
from simplexconn.connection import gram_connection
from simplexconn import racah as rc

d, n, N = {d}, {n}, 4
kappa = tuple(R(i + 1, i + 2) for i in range(d + 1))
t0 = time.time()
for tau in all_permutations(d + 1):
    gram_connection(tau, kappa, n)
t1 = time.time()
beta = tuple(R(2 * i + 1, 2) for i in range(3 + 1))
grid = rc.lattice_points(2, N)
for nu in grid:
    if sum(nu) <= N:
        sum((rc.racah_weight_multi(x, beta, N) * rc.racah_multi(nu, x, beta, N) ** 2
             for x in grid), ZERO)
t2 = time.time()
print("%s gram=%.3fs racah=%.3fs" % (BACKEND, t1 - t0, t2 - t1))
"""


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3, help="polynomial degree for the Gram workload")
    ap.add_argument("--d", type=int, default=3, help="dimension for the Gram workload")
    args = ap.parse_args(argv)
    code = WORKLOAD.format(d=args.d, n=args.n)
    for backend in ("gmpy2", "fraction"):
        env = dict(os.environ, SIMPLEXCONN_BACKEND=backend)
        t0 = time.time()
        res = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        if res.returncode != 0:
            print("%s: failed\n%s" % (backend, res.stderr.strip()))
            continue
        print("%s (total %.3fs)" % (res.stdout.strip(), time.time() - t0))
    return 0


if __name__ == "__main__":
    sys.exit(main())
