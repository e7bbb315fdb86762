# dfrht/oracle.py
#
# Dense DFRHT matrices straight from the eigendecomposition:
#   H_N^a = (1/c^n) . V_N . diag(exp(-j.k.pi.a)) . V_N^T
# Deliberately naive; the reference for every fast-path result.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from dfrht import error, eigen
from dfrht.hadamard import MAX_EXPONENT
from dfrht.signal import ComplexSignal, as_signal

@dataclass(frozen=True, eq=False)
class DenseFractionalMatrix:
    n: int
    alpha: float
    entries: npt.NDArray[np.complex128]

    @property
    def size(self) -> int:
        return 1 << self.n


def dfrht_dense_matrix(n: int, alpha: float) -> DenseFractionalMatrix:
    error.check_exponent(n, MAX_EXPONENT)
    basis = eigen.sequenced_eigenbasis(n)
    v = basis.columns
    lam = eigen.fractional_eigenvalues(np.arange(1 << n), alpha)
    m = (v * lam) @ v.T / eigen.constants(n).c_n
    m.setflags(write=False)
    return DenseFractionalMatrix(n, float(alpha), m)


def dense_apply(m: DenseFractionalMatrix, x: npt.ArrayLike) -> ComplexSignal:
    x = as_signal(x, m.n)
    return m.entries @ x


def normalized_eigenbasis(n: int) -> npt.NDArray[np.float64]:
    """Z_N = V_N / sqrt(c^n): orthonormal, sequency-ordered columns."""
    basis = eigen.sequenced_eigenbasis(n)
    return basis.columns / np.sqrt(eigen.constants(n).c_n)


def hadamard_from_eigenbasis(n: int) -> npt.NDArray[np.float64]:
    """H_N reassembled as Z . diag((-1)^k) . Z^T."""
    z = normalized_eigenbasis(n)
    signs = eigen.sequenced_eigenbasis(n).eigen_signs
    return (z * signs) @ z.T

# Local variables:
# python-indent: 4
# End:
