# dfrht/permute.py
#
# Permutations in index form, and the column permutation P_N relating the
# sequency-ordered eigenbasis V_N to its recursive rearrangement V-bar_N.
#
# Convention: a permutation matrix M is stored as `forward`, where
# forward[i] is the column holding the 1 in row i. Applying M to x gives
# y[i] = x[forward[i]].
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from dfrht import error
from dfrht.eigen import B
from dfrht.hadamard import MAX_EXPONENT

Index = npt.NDArray[np.intp]

class IndexPermutation:

    def __init__(self, forward: npt.ArrayLike) -> None:
        f = np.array(forward, dtype=np.intp)
        error.check(f.ndim == 1 and f.size >= 1,
                    'permutation must be a non-empty index array')
        error.check(np.array_equal(np.sort(f), np.arange(f.size)),
                    'index array is not a bijection on 0..%d' % (f.size-1))
        f.setflags(write=False)
        self.forward: Index = f

    def __repr__(self) -> str:
        return 'IndexPermutation(%s)' % self.forward.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexPermutation):
            return NotImplemented
        return np.array_equal(self.forward, other.forward)

    def __len__(self) -> int:
        return self.size

    @property
    def size(self) -> int:
        return int(self.forward.size)

    def __matmul__(self, other: IndexPermutation) -> IndexPermutation:
        """Index form of the matrix product self . other."""
        error.check(self.size == other.size, 'permutation size mismatch')
        return IndexPermutation(other.forward[self.forward])

    def inverse(self) -> IndexPermutation:
        inv = np.empty_like(self.forward)
        inv[self.forward] = np.arange(self.size)
        return IndexPermutation(inv)

    def direct_sum(self, other: IndexPermutation) -> IndexPermutation:
        """Block-diagonal [self 0; 0 other]."""
        return IndexPermutation(np.concatenate(
            (self.forward, other.forward + self.size)))

    def apply(self, x: npt.ArrayLike) -> np.ndarray:
        x = np.asarray(x)
        error.check(x.shape[:1] == (self.size,),
                    'vector of length %d does not match permutation of '
                    'size %d' % (x.shape[0] if x.ndim else 0, self.size),
                    error.ShapeError)
        return x[self.forward]

    def matrix(self) -> npt.NDArray[np.int8]:
        m = np.zeros((self.size, self.size), dtype=np.int8)
        m[np.arange(self.size), self.forward] = 1
        return m


def identity(size: int) -> IndexPermutation:
    return IndexPermutation(np.arange(size))


def perfect_shuffle(size: int) -> IndexPermutation:
    """S_N: output 2i <- input i, output 2i+1 <- input i + N/2."""
    error.check(size >= 2 and size % 2 == 0,
                'perfect shuffle needs an even size >= 2, got %d' % size,
                error.SizeError)
    half = size // 2
    f = np.empty(size, dtype=np.intp)
    f[0::2] = np.arange(half)
    f[1::2] = np.arange(half, size)
    return IndexPermutation(f)


def counter_identity(size: int) -> IndexPermutation:
    """J_m: ones on the antidiagonal."""
    error.check(size >= 1, 'counter-identity needs size >= 1, got %d' % size,
                error.SizeError)
    return IndexPermutation(np.arange(size)[::-1])


def column_permutation(n: int) -> IndexPermutation:
    """P_N with V_N = V-bar_N . P_N, from P_2 = I_2 and
    P_N = S_N . (P_{N/2} (+) P_{N/2} . J_{N/2}).
    """
    error.check(n >= 1, 'exponent %d out of range' % n, error.SizeError)
    p = identity(2)
    for m in range(2, n + 1):
        half = 1 << (m - 1)
        p = perfect_shuffle(2 * half) @ p.direct_sum(p @ counter_identity(half))
    return p


def vbar_matrix(n: int) -> npt.NDArray[np.float64]:
    """Dense V-bar_N by the block recursion [[V, -bV], [bV, V]]."""
    error.check_exponent(n, MAX_EXPONENT)
    v2 = np.array([[1.0, -B], [B, 1.0]])
    v = v2
    for _ in range(n - 1):
        v = np.kron(v2, v)
    return v

# Local variables:
# python-indent: 4
# End:
