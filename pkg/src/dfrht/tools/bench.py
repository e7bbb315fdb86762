# dfrht/tools/bench.py
#
# dfrht control script: Time the fast and dense transforms.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

description = "Benchmark the fast transform, and the dense one for small N."

from typing import Any, Dict, List

import numpy as np

from dfrht import hadamard, kernel, oracle
from dfrht.tools import util

# Largest N for which the dense matrix is built for comparison.
DENSE_MAX_SIZE = 1 << hadamard.MAX_EXPONENT

def bench_size(size: int, alpha: float, repeats: int,
               rng: np.random.Generator) -> Dict[str, Any]:
    n = util.exponent(size)
    x = util.random_signal(rng, size)
    plan = kernel.make_plan(n, alpha)
    ws = kernel.Workspace(n)
    predicted = kernel.predicted_op_counts(n)
    direct = kernel.direct_op_counts(n)
    res: Dict[str, Any] = {
        'n': n,
        'size': size,
        'alpha': alpha,
        'fast_time_ns': util.median_time_ns(
            lambda: kernel.dfrht_apply(plan, x, ws), repeats),
        'predicted': util.counts(predicted),
        'direct': util.counts(direct),
        'mult_ratio': direct.real_mults / predicted.real_mults }
    if size <= DENSE_MAX_SIZE:
        m = oracle.dfrht_dense_matrix(n, alpha)
        res['dense_time_ns'] = util.median_time_ns(
            lambda: oracle.dense_apply(m, x), repeats)
    return res

def main(argv: List[str]) -> int:

    parser = util.ArgumentParser(usage='%(prog)s [options]',
                                 epilog=util.sizes_desc)
    parser.add_argument("--sizes", required=True, metavar="SIZES",
                        type=util.size_list(1<<kernel.MAX_EXPONENT),
                        help="transform sizes to time")
    parser.add_argument("--alpha", type=util.finite_float, default=0.5,
                        metavar="A", help="fractional order")
    parser.add_argument("--repeats", type=util.min_int(1), default=5,
                        metavar="R", help="timed runs per size")
    parser.add_argument("--seed", type=util.uint, default=util.DEFAULT_SEED,
                        help="random seed")
    args = util.parse_args(parser, argv, description)

    rng = np.random.default_rng(args.seed)
    for size in args.sizes:
        res = bench_size(size, args.alpha, args.repeats, rng)
        s = "N=%-8d fast %10.3f ms" % (size, res['fast_time_ns'] / 1e6)
        if 'dense_time_ns' in res:
            s += ", dense %10.3f ms" % (res['dense_time_ns'] / 1e6)
        print(s)
        util.emit_report(res)
    return util.EXIT_OK

# Local variables:
# python-indent: 4
# End:
