# scripts/tests/test_oracle.py
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

import numpy as np
import pytest
from numpy.testing import assert_allclose

from dfrht import error, kernel, oracle
from dfrht.hadamard import MAX_EXPONENT, hadamard_apply, hadamard_matrix

def test_a1_is_hadamard():
    m = oracle.dfrht_dense_matrix(1, 1.0)
    assert_allclose(m.entries.real, hadamard_matrix(1).entries,
                    rtol=0, atol=1e-13)
    assert np.max(np.abs(m.entries.imag)) <= 1e-13

def test_a0_is_identity():
    m = oracle.dfrht_dense_matrix(2, 0.0)
    assert m.size == 4
    assert_allclose(m.entries, np.eye(4), rtol=0, atol=1e-13)

def test_half_power_squares_to_hadamard():
    m = oracle.dfrht_dense_matrix(3, 0.5).entries
    assert_allclose(m @ m, hadamard_matrix(3).entries, rtol=0, atol=1e-10)

@pytest.mark.parametrize('n', [1, 4, 7])
@pytest.mark.parametrize('a', [0.2, 0.5, 1.3])
def test_unitary(n, a):
    m = oracle.dfrht_dense_matrix(n, a).entries
    assert_allclose(m @ m.conj().T, np.eye(1 << n), rtol=0, atol=1e-10)

@pytest.mark.parametrize('n', [1, 4, 7])
def test_boundaries(n):
    assert_allclose(oracle.dfrht_dense_matrix(n, 0.0).entries,
                    np.eye(1 << n), rtol=0, atol=1e-12)
    assert_allclose(oracle.dfrht_dense_matrix(n, 1.0).entries,
                    hadamard_matrix(n).entries, rtol=0, atol=1e-12)

@pytest.mark.parametrize('n', range(1, 8))
@pytest.mark.parametrize('a, b', [(0.3, 0.45), (1.2, -0.7), (0.5, 1.5)])
def test_semigroup(n, a, b):
    m = lambda t: oracle.dfrht_dense_matrix(n, t).entries
    assert_allclose(m(a) @ m(b), m(a + b), rtol=0, atol=1e-9)

@pytest.mark.parametrize('n', range(1, 8))
def test_period_two(n):
    assert_allclose(oracle.dfrht_dense_matrix(n, 2.0).entries,
                    np.eye(1 << n), rtol=0, atol=1e-10)
    assert_allclose(oracle.dfrht_dense_matrix(n, 2.3).entries,
                    oracle.dfrht_dense_matrix(n, 0.3).entries,
                    rtol=0, atol=1e-10)


def test_dense_apply():
    rng = np.random.default_rng(1)
    x = rng.standard_normal(8)
    assert_allclose(oracle.dense_apply(oracle.dfrht_dense_matrix(3, 0.0), x),
                    x, atol=1e-13)
    assert_allclose(oracle.dense_apply(oracle.dfrht_dense_matrix(1, 1.0),
                                       [1, 1]), [np.sqrt(2), 0], atol=1e-13)
    assert_allclose(oracle.dense_apply(oracle.dfrht_dense_matrix(3, 1.0), x),
                    hadamard_apply(3, x), atol=1e-12)

def test_dense_apply_fast_agree():
    rng = np.random.default_rng(2)
    x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    y, _ = kernel.dfrht_apply(kernel.make_plan(3, 0.7), x)
    assert_allclose(oracle.dense_apply(oracle.dfrht_dense_matrix(3, 0.7), x),
                    y, rtol=0, atol=1e-10)

def test_dense_apply_shape():
    with pytest.raises(error.ShapeError):
        oracle.dense_apply(oracle.dfrht_dense_matrix(2, 0.5), np.ones(8))

def test_dense_range():
    with pytest.raises(error.SizeError):
        oracle.dfrht_dense_matrix(MAX_EXPONENT + 1, 0.5)

@pytest.mark.parametrize('n', [1, 3, 6])
def test_normalized_eigenbasis(n):
    z = oracle.normalized_eigenbasis(n)
    assert_allclose(z.T @ z, np.eye(1 << n), rtol=0, atol=1e-12)
    assert_allclose(oracle.hadamard_from_eigenbasis(n),
                    hadamard_matrix(n).entries, rtol=0, atol=1e-12)

# Local variables:
# python-indent: 4
# End:
