# dfrht/tools/matrix.py
#
# dfrht control script: Write out a dense DFRHT matrix.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

description = "Write the N x N fractional Hadamard matrix to a file."

from typing import List

from dfrht import oracle, signalfile
from dfrht.tools import util

MAX_SIZE = 4096

def main(argv: List[str]) -> int:

    parser = util.ArgumentParser(usage='%(prog)s [options]',
                                 epilog=util.alpha_desc)
    parser.add_argument("--size", type=util.power_of_two(MAX_SIZE),
                        required=True, metavar="N",
                        help="matrix order (a power of two)")
    util.add_alpha_args(parser)
    parser.add_argument("--output", required=True, metavar="FILE",
                        help="output matrix file")
    parser.add_argument("--format", choices=list(signalfile.formats),
                        help="output file format%no_default")
    args = util.parse_args(parser, argv, description)
    alpha = util.resolve_alpha(args)
    n = util.exponent(args.size)

    cls = signalfile.get_file_class(args.output, args.format)
    start = util.timer()
    m = oracle.dfrht_dense_matrix(n, alpha)
    wall_time_ns = max(0, int((util.timer() - start) * 1e9))
    cls.matrix_to_file(args.output, m.entries, { 'n': n, 'alpha': alpha })
    print("Wrote %dx%d matrix to %s" % (m.size, m.size, args.output))

    util.emit_report(util.RunReport(n=n, alpha=alpha, method='dense',
                                    wall_time_ns=wall_time_ns))
    return util.EXIT_OK

# Local variables:
# python-indent: 4
# End:
