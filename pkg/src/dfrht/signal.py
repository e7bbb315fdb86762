# dfrht/signal.py
#
# Dense signal vectors: coercion and size checks shared by all transforms.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations
from typing import Union

import numpy as np
import numpy.typing as npt

from dfrht import error

RealSignal = npt.NDArray[np.float64]
ComplexSignal = npt.NDArray[np.complex128]
Signal = Union[RealSignal, ComplexSignal]

def as_signal(x: npt.ArrayLike, n: int) -> Signal:
    """Returns x as a 1-D float64 or complex128 array of length 2**n.
    Real input stays real; anything complex becomes complex128.
    """
    a = np.asarray(x)
    dtype = np.complex128 if np.iscomplexobj(a) else np.float64
    a = a.astype(dtype, copy=False)
    error.check(a.ndim == 1 and a.shape[0] == 1 << n,
                'signal of shape %s does not match transform size %d'
                % (a.shape, 1 << n), error.ShapeError)
    return a

def exponent_of_length(length: int, max_n: int) -> int:
    """Returns n such that length == 2**n, for 1 <= n <= max_n."""
    error.check(length >= 2 and length & (length - 1) == 0,
                'length %d is not a power of two (>= 2)' % length,
                error.SizeError)
    n = length.bit_length() - 1
    error.check(n <= max_n, 'length %d exceeds the limit of %d'
                % (length, 1 << max_n), error.SizeError)
    return n

def width(x: Signal) -> int:
    """Real values per element: 1 for real, 2 for complex."""
    return 2 if np.iscomplexobj(x) else 1

# Local variables:
# python-indent: 4
# End:
