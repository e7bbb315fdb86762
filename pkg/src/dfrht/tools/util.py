# dfrht/tools/util.py
#
# dfrht control script: Utility functions.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations
from typing import Any, Callable, Dict, List, Optional, TextIO

import argparse, json, re, sys
import itertools as it
from dataclasses import dataclass, asdict
from timeit import default_timer as timer

import numpy as np

from dfrht import kernel
from dfrht.kernel import OpCount

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILED = 3

DEFAULT_SEED = 0x12345678

# Set by cli.main() to the real stdout while prints go to stderr.
report_stream: Optional[TextIO] = None


def columnify(strings, columns=80, sep=2):
    max_len = max(len(s) for s in strings) + sep
    per_row = max(1, columns // max_len)
    return '\n'.join(map(lambda row: (f'{{:{max_len}}}'*per_row).format(*row),
                         it.zip_longest(*[iter(strings)]*per_row,
                                        fillvalue='')))


class CmdlineHelpFormatter(argparse.ArgumentDefaultsHelpFormatter,
                           argparse.RawDescriptionHelpFormatter):
    def _get_help_string(self, action):
        help = action.help
        if '%no_default' in help:
            return help.replace('%no_default', '')
        if ('%(default)' in help
            or action.default is None
            or action.default is False
            or action.default is argparse.SUPPRESS):
            return help
        return help + ' (default: %(default)s)'


class ArgumentParser(argparse.ArgumentParser):
    def __init__(self, formatter_class=CmdlineHelpFormatter, *args, **kwargs):
        return super().__init__(formatter_class=formatter_class,
                                allow_abbrev=False,
                                *args, **kwargs)

def min_int(_min):
    def x(value):
        ivalue = int(value)
        if ivalue < _min:
            raise argparse.ArgumentTypeError("must be %d or greater" % _min)
        return ivalue
    return x
uint = min_int(0)

def finite_float(value: str) -> float:
    f = float(value)
    if not np.isfinite(f):
        raise argparse.ArgumentTypeError("must be finite: '%s'" % value)
    return f

def positive_float(value: str) -> float:
    f = finite_float(value)
    if f <= 0:
        raise argparse.ArgumentTypeError("must be positive: '%s'" % value)
    return f

def power_of_two(max_size: int) -> Callable[[str], int]:
    """Argument type: a power of two N with 2 <= N <= max_size."""
    def x(value):
        try:
            ivalue = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError("invalid size: '%s'" % value)
        if ivalue < 2 or ivalue & (ivalue - 1):
            raise argparse.ArgumentTypeError(
                "size must be a power of two (>= 2): '%s'" % value)
        if ivalue > max_size:
            raise argparse.ArgumentTypeError(
                "size must be %d or smaller: '%s'" % (max_size, value))
        return ivalue
    return x

sizes_desc = """\
SIZES: Comma-separated list of:
  N                   :: A power of two
  A..B                :: Every power of two from A to B
  e.g. '8,64..1024'
"""

def size_list(max_size: int) -> Callable[[str], List[int]]:
    size = power_of_two(max_size)
    def x(value):
        sizes: List[int] = []
        for item in value.split(','):
            m = re.match(r'(\d+)\.\.(\d+)$', item.strip())
            if m is None:
                sizes.append(size(item.strip()))
                continue
            s, e = size(m.group(1)), size(m.group(2))
            if s > e:
                raise argparse.ArgumentTypeError(
                    "empty size range: '%s'" % item)
            while s <= e:
                sizes.append(s)
                s *= 2
        return sizes
    return x

def exponent(size: int) -> int:
    return size.bit_length() - 1

alpha_desc = """\
The fractional order is a = alpha/pi: give it directly with --alpha, or
as the angle alpha (radians) with --angle.
"""

def add_alpha_args(parser: argparse.ArgumentParser,
                   default: Optional[float] = None) -> None:
    g = parser.add_mutually_exclusive_group(required=default is None)
    g.add_argument("--alpha", type=finite_float, metavar="A",
                   default=default, help="fractional order a")
    g.add_argument("--angle", type=finite_float, metavar="RAD",
                   help="angle alpha in radians (a = alpha/pi)")

def resolve_alpha(args: argparse.Namespace) -> float:
    if args.angle is not None:
        return kernel.exponent_from_angle(args.angle)
    return args.alpha

def parse_args(parser: ArgumentParser, argv: List[str],
               description: str) -> argparse.Namespace:
    parser.description = description
    parser.prog += ' ' + argv[1]
    return parser.parse_args(argv[2:])


## Reports

@dataclass
class RunReport:
    n: int
    alpha: float
    method: str
    wall_time_ns: int
    op_count: Optional[Dict[str, int]] = None
    max_abs_error: Optional[float] = None

    def as_dict(self) -> Dict[str, Any]:
        return { k: v for k, v in asdict(self).items() if v is not None }

def emit_report(obj: Any) -> None:
    """Writes one single-line JSON object to standard output."""
    if isinstance(obj, RunReport):
        obj = obj.as_dict()
    stream = report_stream if report_stream is not None else sys.stdout
    stream.write(json.dumps(obj) + '\n')
    stream.flush()

def counts(c: OpCount) -> Dict[str, int]:
    return c.as_dict()


## Timing and test signals

def time_ns(fn: Callable[[], Any]) -> int:
    start = timer()
    fn()
    return max(0, int((timer() - start) * 1e9))

def median_time_ns(fn: Callable[[], Any], repeats: int) -> int:
    times = sorted(time_ns(fn) for _ in range(repeats))
    return times[len(times)//2]

def random_signal(rng: np.random.Generator, size: int,
                  complex_values: bool = False) -> np.ndarray:
    x = rng.standard_normal(size)
    if complex_values:
        x = x + 1j * rng.standard_normal(size)
    return x

# Local variables:
# python-indent: 4
# End:
