# dfrht/kernel.py
#
# Fast discrete fractional Hadamard transform.
#
#   y = V-bar . L . V-bar^T . x,   L = (1/c^n) . P . Lambda^a . P^T
#
# V-bar and its transpose are applied as  C . B . A_n ... A_1 . x  where
# the A_k stages combine inputs with +/-1 weights only, B scales segment k
# by b^k, and C (or the alternating-sign C-bar for the transpose) sums the
# n+1 segments. Real operations are tallied into an OpCount as we go.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

from __future__ import annotations
from typing import List, Optional, Protocol, Tuple

from enum import Enum
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from dfrht import error, eigen, permute
from dfrht.hadamard import MAX_EXPONENT as DENSE_MAX_EXPONENT
from dfrht.signal import Signal, ComplexSignal, as_signal, width

# Limited by the (n+1).N workspace.
MAX_EXPONENT = 20


class OpCount:
    """Exact tallies of real multiplications and real additions."""

    def __init__(self, real_mults: int = 0, real_adds: int = 0) -> None:
        error.check(real_mults >= 0 and real_adds >= 0,
                    'negative operation count')
        self.real_mults = real_mults
        self.real_adds = real_adds

    def __repr__(self) -> str:
        return ('OpCount(real_mults=%d, real_adds=%d)'
                % (self.real_mults, self.real_adds))

    def __eq__(self, other) -> bool:
        if not isinstance(other, OpCount):
            return NotImplemented
        return (self.real_mults, self.real_adds) == (other.real_mults,
                                                     other.real_adds)

    def __add__(self, other: OpCount) -> OpCount:
        return OpCount(self.real_mults + other.real_mults,
                       self.real_adds + other.real_adds)

    def mults(self, nr: int) -> None:
        self.real_mults += nr

    def adds(self, nr: int) -> None:
        self.real_adds += nr

    def as_dict(self) -> dict:
        return { 'real_mults': self.real_mults, 'real_adds': self.real_adds }


class Signs(Enum):
    """Segment weights for aggregation: C (uniform) or C-bar (alternating)."""
    Uniform = 0
    Alternating = 1


class HasBPowers(Protocol):
    @property
    def n(self) -> int:
        ...
    @property
    def b_powers(self) -> npt.NDArray[np.float64]:
        ...


@dataclass(frozen=True, eq=False)
class TransformPlan:
    n: int
    alpha: float
    b_powers: npt.NDArray[np.float64]
    permutation: permute.IndexPermutation
    spectral_diag: ComplexSignal

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def workspace_len(self) -> int:
        """Complex elements held by a Workspace for this plan."""
        return 2 * ((self.n + 1) << self.n)

    def __str__(self) -> str:
        return 'DFRHT plan: N=%d (n=%d), a=%s' % (self.size, self.n,
                                                  self.alpha)


def exponent_from_angle(angle: float) -> float:
    """Fractional order a for a rotation angle alpha (radians): a = alpha/pi."""
    return angle / np.pi


def make_plan(n: int, alpha: float) -> TransformPlan:
    error.check_exponent(n, MAX_EXPONENT)
    alpha = float(alpha)
    consts = eigen.constants(n)
    p = permute.column_permutation(n)
    diag = eigen.fractional_eigenvalues(p.forward, alpha) / consts.c_n
    diag.setflags(write=False)
    return TransformPlan(n, alpha, consts.b_powers, p, diag)


class Workspace:
    """Scratch memory for one apply at a time: a single complex buffer
    holding two ping-pong regions of (n+1).N elements. Real passes run
    in a float64 view of the same memory.
    """

    def __init__(self, n: int) -> None:
        error.check_exponent(n, MAX_EXPONENT)
        self.n = n
        self.region_len = (n + 1) << n
        self.buf = np.empty(2 * self.region_len, dtype=np.complex128)

    def regions(self, dtype) -> Tuple[np.ndarray, np.ndarray]:
        l = self.region_len
        buf = self.buf if dtype == np.complex128 else self.buf.view(np.float64)
        return buf[:l], buf[l:2*l]


def _workspace(n: int, ws: Optional[Workspace]) -> Workspace:
    if ws is None:
        return Workspace(n)
    error.check(ws.n == n, 'workspace built for n=%d used with n=%d'
                % (ws.n, n), error.ShapeError)
    return ws


def _check_exponent(n: int) -> None:
    error.check_exponent(n, MAX_EXPONENT)


## Component matrices and stage matrices: dense fixtures

A2_0 = np.array([[1, 0], [0, 1]], dtype=np.int8)
A2_1 = np.array([[0, -1], [1, 0]], dtype=np.int8)

@dataclass(frozen=True, eq=False)
class ComponentMatrices:
    n: int
    A: List[npt.NDArray[np.int8]] # A_N^(0) ... A_N^(n)

    def stacked(self) -> npt.NDArray[np.int8]:
        return np.vstack(self.A)


def component_matrices(n: int) -> ComponentMatrices:
    """The 0/+-1 matrices with V-bar_N = sum_k b^k A_N^(k)."""
    error.check_exponent(n, DENSE_MAX_EXPONENT)
    a = [A2_0, A2_1]
    for j in range(1, n):
        size = 1 << j
        zero = np.zeros((size, size), dtype=np.int8)
        prev = [zero] + a + [zero] # prev[k+1] == A_half^(k), zero off range
        a = [np.block([[prev[k+1], -prev[k]], [prev[k], prev[k+1]]])
             for k in range(j + 2)]
    return ComponentMatrices(n, a)


@dataclass(frozen=True, eq=False)
class StageMatrix:
    """A_{(k+1)N x kN}: `repeats` copies of `block` along the diagonal."""
    n: int
    k: int
    repeats: int
    block: npt.NDArray[np.int8]

    @property
    def shape(self) -> Tuple[int, int]:
        r, c = self.block.shape
        return r * self.repeats, c * self.repeats

    def dense(self) -> npt.NDArray[np.int8]:
        return np.kron(np.eye(self.repeats, dtype=np.int8), self.block)


def stage_matrix(n: int, k: int) -> StageMatrix:
    error.check_exponent(n, DENSE_MAX_EXPONENT)
    error.check(1 <= k <= n, 'stage %d out of range (1..%d)' % (k, n),
                error.SizeError)
    h = 1 << (k - 1)
    first = np.zeros((1, k), dtype=np.int8)
    first[0, 0] = 1
    last = np.zeros((1, k), dtype=np.int8)
    last[0, -1] = 1
    ident = np.eye(h, dtype=np.int8)
    top = np.kron(np.kron(A2_0, first), ident)
    bottom = np.kron(np.kron(A2_1, last), ident)
    # Middle rows: columns circularly shifted m.h right and (k-m).h left.
    rows = [top]
    for m in range(1, k):
        rows.append(np.roll(top, m * h, axis=1)
                    + np.roll(bottom, -(k - m) * h, axis=1))
    rows.append(bottom)
    return StageMatrix(n, k, (1 << n) >> k, np.vstack(rows))


## The A cascade, B scaling and C aggregation

def _stage(k: int, size: int, src: np.ndarray, dst: np.ndarray,
           counter: Optional[OpCount] = None) -> None:
    """Stage k: pairs of input blocks of k segments (length h) become one
    output block of k+1 segments (length 2h):
      seg m = [ I_m - II_(m-1) ; I_(m-1) + II_m ]
    with out-of-range segments taken as zero. All middle segments go
    through a single subtract and a single add.
    """
    h = 1 << (k - 1)
    blocks = size >> k
    s = src.reshape(blocks, 2, k, h)
    lo, hi = s[:, 0], s[:, 1]
    o = dst.reshape(blocks, k + 1, 2, h)
    o[:, 0, 0] = lo[:, 0]
    o[:, 0, 1] = hi[:, 0]
    if k > 1:
        diff, summ = o[:, 1:k, 0], o[:, 1:k, 1]
        np.subtract(lo[:, 1:], hi[:, :-1], out=diff)
        np.add(lo[:, :-1], hi[:, 1:], out=summ)
        if counter is not None:
            counter.adds(width(src) * (diff.size + summ.size))
    np.negative(hi[:, k-1], out=o[:, k, 0])
    o[:, k, 1] = lo[:, k-1]


def a_cascade_apply(n: int, x: npt.ArrayLike,
                    counter: Optional[OpCount] = None,
                    workspace: Optional[Workspace] = None) -> Signal:
    """Returns [A^(0)x ; A^(1)x ; ... ; A^(n)x] of length (n+1).N.
    The result is a view into the workspace.
    """
    _check_exponent(n)
    x = as_signal(x, n)
    size = 1 << n
    regions = _workspace(n, workspace).regions(x.dtype)
    src = regions[0][:size]
    src[:] = x
    for k in range(1, n + 1):
        dst = regions[k & 1][:(k + 1) * size]
        _stage(k, size, src, dst, counter)
        src = dst
    return src


def _check_stacked(n: int, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v)
    if not np.iscomplexobj(v):
        v = v.astype(np.float64, copy=False)
    error.check(v.shape == ((n + 1) << n,),
                'stacked vector of shape %s, expected (%d,)'
                % (v.shape, (n + 1) << n), error.ShapeError)
    return v


def _scale(b: HasBPowers, v: np.ndarray, counter: Optional[OpCount]) -> None:
    seg = v.reshape(b.n + 1, 1 << b.n)
    scaled = seg[1:]
    scaled *= b.b_powers[1:, np.newaxis]
    if counter is not None:
        counter.mults(width(v) * scaled.size)


def b_scale_apply(plan: HasBPowers, v: npt.ArrayLike,
                  counter: Optional[OpCount] = None) -> Signal:
    """Multiplies segment k by b^k; segment 0 is left untouched."""
    v = _check_stacked(plan.n, np.array(v, copy=True))
    _scale(plan, v, counter)
    return v


def aggregate_apply(n: int, v: npt.ArrayLike, signs: Signs = Signs.Uniform,
                    counter: Optional[OpCount] = None) -> Signal:
    """C (sum of segments) or C-bar (segment k weighted (-1)^k)."""
    v = _check_stacked(n, v)
    seg = v.reshape(n + 1, 1 << n)
    size = seg.shape[1]
    if signs is Signs.Uniform:
        y = seg.sum(axis=0)
        nr = seg.shape[0] - 1
    else:
        even, odd = seg[0::2], seg[1::2]
        y = even.sum(axis=0) - odd.sum(axis=0)
        nr = (even.shape[0] - 1) + (odd.shape[0] - 1) + 1
    if counter is not None:
        counter.adds(width(v) * nr * size)
    return y


def _vbar(n: int, x: npt.ArrayLike, signs: Signs,
          counter: Optional[OpCount], workspace: Optional[Workspace],
          b: Optional[HasBPowers] = None) -> Signal:
    if b is None:
        b = eigen.constants(n)
    # The cascade output is workspace scratch: scale it in place.
    v = a_cascade_apply(n, x, counter, workspace)
    _scale(b, v, counter)
    return aggregate_apply(n, v, signs, counter)


def vbar_apply(n: int, x: npt.ArrayLike, counter: Optional[OpCount] = None,
               workspace: Optional[Workspace] = None) -> Signal:
    """V-bar_N . x = C . B . A . x"""
    return _vbar(n, x, Signs.Uniform, counter, workspace)


def vbar_transpose_apply(n: int, x: npt.ArrayLike,
                         counter: Optional[OpCount] = None,
                         workspace: Optional[Workspace] = None) -> Signal:
    """V-bar_N^T . x = C-bar . B . A . x, since A^(k) is symmetric for
    even k and antisymmetric for odd k.
    """
    return _vbar(n, x, Signs.Alternating, counter, workspace)


def vbar_apply_by_components(n: int, x: npt.ArrayLike,
                             counter: Optional[OpCount] = None) -> Signal:
    """V-bar_N . x as sum_k b^k (A^(k) x), each product taken densely.
    Every nonzero beyond the first in a row of A^(k) costs one addition.
    """
    x = as_signal(x, n)
    comps = component_matrices(n)
    b = eigen.constants(n).b_powers
    w = width(x)
    def product(a: np.ndarray) -> Signal:
        if counter is not None:
            nz = np.count_nonzero(a, axis=1)
            counter.adds(w * int(np.sum(np.maximum(nz - 1, 0))))
        return a @ x
    y = product(comps.A[0])
    for k in range(1, n + 1):
        ax = product(comps.A[k]) * b[k]
        y = y + ax
        if counter is not None:
            counter.mults(w * ax.size)
            counter.adds(w * y.size)
    return y


## The transform

def _spectral(plan: TransformPlan, u: Signal, counter: OpCount,
              diag: ComplexSignal) -> ComplexSignal:
    size = plan.size
    if np.iscomplexobj(u):
        counter.mults(4 * size)
        counter.adds(2 * size)
    else:
        counter.mults(2 * size)
    return diag * u


def _apply(plan: TransformPlan, x: npt.ArrayLike, diag: ComplexSignal,
           workspace: Optional[Workspace]) -> Tuple[ComplexSignal, OpCount]:
    n = plan.n
    x = as_signal(x, n)
    ws = _workspace(n, workspace)
    counter = OpCount()
    u = _vbar(n, x, Signs.Alternating, counter, ws, plan)
    w = _spectral(plan, u, counter, diag)
    y = _vbar(n, w, Signs.Uniform, counter, ws, plan)
    return y, counter


def dfrht_apply(plan: TransformPlan, x: npt.ArrayLike,
                workspace: Optional[Workspace] = None
) -> Tuple[ComplexSignal, OpCount]:
    """y = H_N^a . x through the factorised stages, with the real
    operations it consumed. A Workspace is allocated per call unless one
    is passed in.
    """
    return _apply(plan, x, plan.spectral_diag, workspace)


def dfrht_inverse_apply(plan: TransformPlan, x: npt.ArrayLike,
                        workspace: Optional[Workspace] = None
) -> Tuple[ComplexSignal, OpCount]:
    """x = H_N^(-a) . y using the same plan: the inverse of a unitary
    matrix with real eigenvectors conjugates its spectrum.
    """
    return _apply(plan, x, np.conj(plan.spectral_diag), workspace)


## Operation counts

def predicted_op_counts(n: int, complex_input: bool = False) -> OpCount:
    error.check(n >= 1, 'exponent %d out of range' % n, error.SizeError)
    size = 1 << n
    if complex_input:
        return OpCount(size * (4 * n + 4),
                       2 * size * n * (n + 1) + 2 * size)
    return OpCount(size * (3 * n + 2), 3 * size * n * (n + 1) // 2)


def direct_op_counts(n: int) -> OpCount:
    """Dense complex matrix times real vector."""
    error.check(n >= 1, 'exponent %d out of range' % n, error.SizeError)
    return OpCount(1 << (2 * n + 1), (1 << (n + 1)) * ((1 << n) - 1))


def vbar_op_counts(n: int) -> OpCount:
    """One factorised V-bar (or V-bar^T) product with a real vector."""
    error.check(n >= 1, 'exponent %d out of range' % n, error.SizeError)
    size = 1 << n
    return OpCount(n * size, size * n * (n + 1) // 2)

# Local variables:
# python-indent: 4
# End:
