# scripts/tests/test_signal.py
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

import numpy as np
import pytest

from dfrht import error
from dfrht.signal import as_signal, exponent_of_length, width

def test_as_signal():
    x = as_signal([1, 2], 1)
    assert x.dtype == np.float64 and width(x) == 1
    z = as_signal([1, 2j], 1)
    assert z.dtype == np.complex128 and width(z) == 2
    with pytest.raises(error.ShapeError):
        as_signal([1, 2, 3], 1)

@pytest.mark.parametrize('length, n', [(2, 1), (8, 3), (1024, 10)])
def test_exponent_of_length(length, n):
    assert exponent_of_length(length, 10) == n

@pytest.mark.parametrize('length', [0, 1, 3, 12, 2048])
def test_exponent_of_length_bad(length):
    with pytest.raises(error.SizeError):
        exponent_of_length(length, 10)

def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        exponent_of_length(3, 10)

# Local variables:
# python-indent: 4
# End:
