import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from infodisturb import model
from infodisturb.errors import InvalidArgumentError, InvalidCoefficientsError
from infodisturb.model import ProbeParams

angles = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)
params = st.builds(ProbeParams, angles, angles, angles, angles)


def test_signal_pair_overlap():
    for alpha in (0.0, 0.3, math.pi / 5, math.pi / 4):
        sp = model.SignalPair(alpha)
        v0, v1 = sp.vectors
        assert abs(v0 @ v1 - math.sin(2 * alpha)) < 1e-14
        assert sp.overlap == pytest.approx(math.sin(2 * alpha), abs=1e-15)
        assert sp.priors == (0.5, 0.5)


@pytest.mark.parametrize("alpha", [-0.1, math.pi / 4 + 0.01])
def test_signal_pair_range(alpha):
    with pytest.raises(InvalidArgumentError):
        model.SignalPair(alpha)


def test_coefficients_zero_angles():
    x = model.build_coefficients(ProbeParams(0, 0, 0, 0))
    np.testing.assert_array_equal(x, [0, 1, 0, 0, 0, 0, 0, 0])


def test_coefficients_identity():
    x = model.build_coefficients(ProbeParams(0, 0, 0, math.pi / 4))
    expect = np.zeros(8)
    expect[1] = expect[2] = 1 / math.sqrt(2)
    np.testing.assert_allclose(x, expect, atol=1e-16)


@given(params)
def test_coefficients_satisfy_unitarity(p):
    x = model.build_coefficients(p)
    assert x[4] == 0 and x[7] == 0
    norm_res, orth_res = model.unitarity_residuals(x)
    assert norm_res < 1e-12 and orth_res < 1e-12
    assert abs(x[1] * x[6] + x[2] * x[5]) < 1e-12


def explicit_tensor(x):
    """A[m, n, r, s] filled by the complement rule, indexed by nested loops."""
    a = np.zeros((2, 2, 2, 2))
    for m in range(2):
        for n in range(2):
            for r in range(2):
                for s in range(2):
                    k = 8 * m + 4 * n + 2 * r + s
                    a[m, n, r, s] = x[k] if k < 8 else x[15 - k]
    return a


@given(params)
def test_expand_tensor_symmetry_and_rows(p):
    x = model.build_coefficients(p)
    a = model.expand_tensor(x)
    for k in range(16):
        assert a[k] == a[15 - k]
    np.testing.assert_array_equal(a.blocks.reshape(2, 2, 2, 2), explicit_tensor(x))
    np.testing.assert_allclose(model.row_gram(a), np.eye(2), atol=1e-12)
    v = model.isometry(a)
    np.testing.assert_allclose(v.T @ v, np.eye(2), atol=1e-12)


def test_expand_tensor_examples():
    a = model.interaction(ProbeParams(0, 0, 0, 0))
    assert sorted(np.flatnonzero(a.flat)) == [1, 14]
    assert a[1] == a[14] == 1.0
    a = model.interaction(ProbeParams(0, 0, 0, math.pi / 4))
    assert sorted(np.flatnonzero(np.abs(a.flat) > 1e-15)) == [1, 2, 13, 14]
    np.testing.assert_allclose(a.flat[[1, 2, 13, 14]], 1 / math.sqrt(2), atol=1e-16)


def test_expand_tensor_rejects_invalid():
    with pytest.raises(InvalidCoefficientsError):
        model.expand_tensor(np.array([1.0, 1, 0, 0, 0, 0, 0, 0]))
    with pytest.raises(InvalidCoefficientsError):   # unit norm but X_K X_{7-K} != 0
        model.expand_tensor(np.array([0.6, 0, 0, 0, 0, 0, 0, 0.8]))
    with pytest.raises(InvalidArgumentError):
        model.expand_tensor(np.ones(7))


def test_index_map():
    assert model.index_map(0, 0, 0, 0) == 0
    assert model.index_map(1, 1, 1, 1) == 15
    assert model.index_map(0, 1, 0, 1) == 5
    assert model.index_map(1, 0, 1, 0) == 10
    seen = {model.index_map(m, n, r, s)
            for m in (0, 1) for n in (0, 1) for r in (0, 1) for s in (0, 1)}
    assert seen == set(range(16))
    with pytest.raises(InvalidArgumentError):
        model.index_map(0, 2, 0, 0)
