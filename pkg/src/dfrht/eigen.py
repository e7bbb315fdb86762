# dfrht/eigen.py
#
# Sequency-ordered eigenvectors of the normalised Hadamard matrix.
#
# Eigenvectors are generated recursively from those of H_2 and kept
# unnormalised: every entry is +/- a power of b = sqrt(2)-1, and every
# column has squared norm c^n where c = 1 + b^2.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations
from typing import Tuple

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from dfrht import error
from dfrht.hadamard import MAX_EXPONENT

Vector = npt.NDArray[np.float64]

B = np.sqrt(2.0) - 1.0
C = 1.0 + B * B

@dataclass(frozen=True, eq=False)
class Constants:
    n: int
    b: float
    c: float
    b_powers: Vector # b^0 ... b^n

    @property
    def c_n(self) -> float:
        """Squared norm of every unnormalised eigenvector of H_{2^n}."""
        return self.c ** self.n


def constants(n: int) -> Constants:
    error.check(n >= 0, 'negative exponent %d' % n, error.SizeError)
    b_powers = np.empty(n + 1)
    b_powers[0] = 1.0
    for k in range(1, n + 1):
        b_powers[k] = b_powers[k-1] * B
    b_powers.setflags(write=False)
    return Constants(n, B, C, b_powers)


@dataclass(frozen=True, eq=False)
class SequencedEigenbasis:
    n: int
    columns: Vector      # N x N; column k is v_N^(k)
    eigen_signs: npt.NDArray[np.int8]  # lambda_k = (-1)^k

    def column(self, k: int) -> Vector:
        return self.columns[:, k]


def base_eigenvectors() -> Tuple[Tuple[Vector, int], Tuple[Vector, int]]:
    """Eigenvectors of H_2 with their eigenvalues +1 and -1."""
    return ((np.array([1.0, B]), 1), (np.array([-B, 1.0]), -1))


def extend_hat(v: npt.ArrayLike) -> Vector:
    """[v ; b.v]: an eigenvector of the doubled matrix, same eigenvalue."""
    v = np.asarray(v, dtype=np.float64)
    return np.concatenate((v, B * v))


def extend_tilde(v: npt.ArrayLike) -> Vector:
    """[-b.v ; v]: an eigenvector of the doubled matrix, negated eigenvalue."""
    v = np.asarray(v, dtype=np.float64)
    return np.concatenate((-B * v, v))


def sequenced_eigenbasis(n: int) -> SequencedEigenbasis:
    error.check_exponent(n, MAX_EXPONENT)
    (v0, _), (v1, _) = base_eigenvectors()
    v = np.column_stack((v0, v1))
    # One doubling per level. Column-wise extend_hat / extend_tilde, placed
    # at 4l, 4l+1, 4l+2, 4l+3 from parents 2l and 2l+1.
    for _ in range(n - 1):
        hat = np.vstack((v, B * v))
        tilde = np.vstack((-B * v, v))
        size = 2 * v.shape[0]
        w = np.empty((size, size))
        w[:, 0::4] = hat[:, 0::2]
        w[:, 1::4] = tilde[:, 0::2]
        w[:, 2::4] = tilde[:, 1::2]
        w[:, 3::4] = hat[:, 1::2]
        v = w
    v.setflags(write=False)
    signs = np.where(np.arange(1 << n) % 2 == 0, 1, -1).astype(np.int8)
    signs.setflags(write=False)
    return SequencedEigenbasis(n, v, signs)


def sign_changes(v: npt.ArrayLike) -> int:
    """Number of adjacent pairs of opposite strict sign."""
    v = np.asarray(v, dtype=np.float64)
    error.check(np.all(v != 0),
                'zero entry in vector: sign changes undefined',
                error.DegenerateInput)
    neg = np.signbit(v)
    return int(np.count_nonzero(neg[1:] != neg[:-1]))


def fractional_eigenvalues(k: npt.ArrayLike,
                           alpha: float) -> npt.NDArray[np.complex128]:
    """lambda_k^a = exp(-j.pi.a.k), evaluated on the argument a.k reduced
    modulo 2 so that large indices keep full accuracy.
    """
    r = np.mod(alpha * np.asarray(k, dtype=np.float64), 2.0)
    theta = np.pi * r
    return np.cos(theta) - 1j * np.sin(theta)

# Local variables:
# python-indent: 4
# End:
