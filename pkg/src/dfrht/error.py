# dfrht/error.py
#
# Error management and reporting.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from typing import Type
import numbers

class Fatal(Exception):
    pass

class SizeError(Fatal, ValueError):
    """Exponent or length outside the supported range."""
    pass

class ShapeError(Fatal, ValueError):
    """Vector length does not match the transform size."""
    pass

class DegenerateInput(Fatal, ValueError):
    pass

class FormatError(Fatal, ValueError):
    """Signal file content cannot be parsed."""
    pass

def check(pred, desc, cls: Type[Fatal] = Fatal) -> None:
    if not pred:
        raise cls(desc)

def check_exponent(n: int, max_n: int, what: str = 'exponent') -> None:
    check(isinstance(n, numbers.Integral) and 1 <= n <= max_n,
          '%s %r out of range (1..%d)' % (what, n, max_n), SizeError)

# Local variables:
# python-indent: 4
# End:
