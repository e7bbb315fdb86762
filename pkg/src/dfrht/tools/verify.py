# dfrht/tools/verify.py
#
# dfrht control script: Compare the fast transform against the dense one.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

description = "Check the fast transform against the dense matrix."

from typing import List

import numpy as np

from dfrht import kernel, oracle
from dfrht.tools import util

MAX_SIZE = 128

def main(argv: List[str]) -> int:

    parser = util.ArgumentParser(usage='%(prog)s [options]',
                                 epilog=util.alpha_desc)
    parser.add_argument("--size", type=util.power_of_two(MAX_SIZE),
                        required=True, metavar="N",
                        help="transform size (a power of two)")
    util.add_alpha_args(parser)
    parser.add_argument("--trials", type=util.min_int(1), default=10,
                        metavar="T", help="random signals of each kind")
    parser.add_argument("--tol", type=util.positive_float, default=1e-10,
                        metavar="EPS", help="max. absolute error allowed")
    parser.add_argument("--seed", type=util.uint, default=util.DEFAULT_SEED,
                        help="random seed")
    args = util.parse_args(parser, argv, description)
    alpha = util.resolve_alpha(args)
    n = util.exponent(args.size)

    rng = np.random.default_rng(args.seed)
    plan = kernel.make_plan(n, alpha)
    dense = oracle.dfrht_dense_matrix(n, alpha)
    ws = kernel.Workspace(n)
    print(plan)

    max_err = 0.0
    start = util.timer()
    for complex_values in (False, True):
        for _ in range(args.trials):
            x = util.random_signal(rng, args.size, complex_values)
            y, _ = kernel.dfrht_apply(plan, x, ws)
            err = float(np.max(np.abs(y - oracle.dense_apply(dense, x))))
            max_err = max(max_err, err)
    wall_time_ns = max(0, int((util.timer() - start) * 1e9))

    ok = max_err <= args.tol
    print("N=%d a=%s: %d real + %d complex trials, max. error %.3g: %s"
          % (args.size, alpha, args.trials, args.trials, max_err,
             'OK' if ok else 'FAILED (tolerance %g)' % args.tol))

    util.emit_report(util.RunReport(n=n, alpha=alpha, method='verify',
                                    wall_time_ns=wall_time_ns,
                                    max_abs_error=max_err))
    return util.EXIT_OK if ok else util.EXIT_FAILED

# Local variables:
# python-indent: 4
# End:
