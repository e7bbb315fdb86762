# dfrht/tools/opcount.py
#
# dfrht control script: Check the fast transform's operation counts.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

description = "Report predicted, direct and measured operation counts."

from typing import List

import numpy as np

from dfrht import kernel
from dfrht.tools import util

def main(argv: List[str]) -> int:

    parser = util.ArgumentParser(usage='%(prog)s [options]')
    parser.add_argument("--size", type=util.power_of_two(1<<kernel.MAX_EXPONENT),
                        required=True, metavar="N",
                        help="transform size (a power of two)")
    parser.add_argument("--alpha", type=util.finite_float, default=0.5,
                        metavar="A", help="fractional order of the test run")
    parser.add_argument("--seed", type=util.uint, default=util.DEFAULT_SEED,
                        help="random seed for the test signal")
    args = util.parse_args(parser, argv, description)
    n = util.exponent(args.size)

    rng = np.random.default_rng(args.seed)
    x = util.random_signal(rng, args.size)
    plan = kernel.make_plan(n, args.alpha)
    _, measured = kernel.dfrht_apply(plan, x)
    predicted = kernel.predicted_op_counts(n)
    direct = kernel.direct_op_counts(n)

    print("N=%d: fast %d mults, %d adds; direct %d mults, %d adds"
          % (args.size, predicted.real_mults, predicted.real_adds,
             direct.real_mults, direct.real_adds))
    ok = measured == predicted
    if not ok:
        print("ERROR: measured %d mults, %d adds"
              % (measured.real_mults, measured.real_adds))

    util.emit_report({ 'n': n,
                       'size': args.size,
                       'predicted': util.counts(predicted),
                       'direct': util.counts(direct),
                       'measured': util.counts(measured),
                       'match': ok })
    return util.EXIT_OK if ok else util.EXIT_FAILED

# Local variables:
# python-indent: 4
# End:
