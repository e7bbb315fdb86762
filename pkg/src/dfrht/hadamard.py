# dfrht/hadamard.py
#
# Normalised Sylvester-Hadamard matrices: the a=1 reference transform.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from dfrht import error
from dfrht.signal import Signal, as_signal

# Dense N x N matrices exist for testing and the dense backend only.
MAX_EXPONENT = 12

SYLVESTER2 = np.array([[1.0, 1.0], [1.0, -1.0]])

@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    n: int
    entries: npt.NDArray[np.float64]

    @property
    def size(self) -> int:
        return 1 << self.n


def hadamard_matrix(n: int) -> HadamardMatrix:
    """Builds the +/-1 Sylvester matrix of order 2^n by doubling, then
    scales it once by 2^(-n/2).
    """
    error.check_exponent(n, MAX_EXPONENT)
    s = SYLVESTER2
    for _ in range(n - 1):
        s = np.kron(SYLVESTER2, s)
    h = s * 2.0 ** (-n / 2)
    h.setflags(write=False)
    return HadamardMatrix(n, h)


def hadamard_apply(n: int, x: npt.ArrayLike) -> Signal:
    x = as_signal(x, n)
    return hadamard_matrix(n).entries @ x

# Local variables:
# python-indent: 4
# End:
