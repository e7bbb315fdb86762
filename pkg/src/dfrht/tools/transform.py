# dfrht/tools/transform.py
#
# dfrht control script: Transform a signal file.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

description = "Apply the fractional Hadamard transform to a signal file."

from typing import List

from dfrht import error, hadamard, kernel, oracle, signalfile
from dfrht.signal import exponent_of_length
from dfrht.tools import util

methods = [ 'fast', 'dense' ]

def main(argv: List[str]) -> int:

    epilog = (util.alpha_desc + "\n"
              + "FORMAT options:\n" + util.columnify(signalfile.formats)
              + "\n\nWithout --format, files are typed by suffix: "
              + ', '.join(signalfile.file_types))
    parser = util.ArgumentParser(usage='%(prog)s [options]', epilog=epilog)
    util.add_alpha_args(parser)
    parser.add_argument("--input", required=True, metavar="FILE",
                        help="input signal file")
    parser.add_argument("--output", required=True, metavar="FILE",
                        help="output signal file")
    parser.add_argument("--method", choices=methods, default='fast',
                        help="transform method")
    parser.add_argument("--format", choices=list(signalfile.formats),
                        help="output file format (input is typed by suffix)"
                        "%no_default")
    args = util.parse_args(parser, argv, description)
    alpha = util.resolve_alpha(args)

    in_cls = signalfile.get_file_class(args.input)
    out_cls = signalfile.get_file_class(args.output, args.format)

    x = in_cls.from_file(args.input)
    max_n = (kernel.MAX_EXPONENT if args.method == 'fast'
             else hadamard.MAX_EXPONENT)
    n = exponent_of_length(len(x), max_n)
    print("Transforming %s: N=%d, a=%s, method %s"
          % (args.input, len(x), alpha, args.method))

    report = util.RunReport(n=n, alpha=alpha, method=args.method,
                            wall_time_ns=0)
    start = util.timer()
    if args.method == 'fast':
        plan = kernel.make_plan(n, alpha)
        y, count = kernel.dfrht_apply(plan, x)
        report.op_count = util.counts(count)
    else:
        y = oracle.dense_apply(oracle.dfrht_dense_matrix(n, alpha), x)
    report.wall_time_ns = max(0, int((util.timer() - start) * 1e9))

    out_cls.to_file(args.output, y, { 'n': n, 'alpha': alpha })
    print("Wrote %s" % args.output)
    util.emit_report(report)
    return util.EXIT_OK

# Local variables:
# python-indent: 4
# End:
