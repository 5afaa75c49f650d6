import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaline._roots import refine_brackets
from zetaline.errors import UnresolvedInterval


def test_cubic_roots():
    f = lambda x, idx: x**3 - 2.0
    r = refine_brackets(f, [0.0], [2.0], [-2.0], [6.0], 1e-12)
    assert r[0] == pytest.approx(2 ** (1 / 3), abs=1e-12)


def test_many_brackets_at_once():
    k = np.arange(1, 50)
    lo, hi = k * math.pi - 1.0, k * math.pi + 1.0
    r = refine_brackets(lambda x, idx: np.sin(x), lo, hi, np.sin(lo), np.sin(hi), 1e-11)
    assert np.allclose(r, k * math.pi, atol=1e-11)


def test_endpoint_root_returned_directly():
    r = refine_brackets(lambda x, idx: x - 1.0, [1.0], [3.0], [0.0], [2.0], 1e-9)
    assert r[0] == 1.0


def test_same_sign_rejected():
    with pytest.raises(ValueError):
        refine_brackets(lambda x, idx: x, [1.0], [2.0], [1.0], [2.0], 1e-9)


def test_unresolved_after_budget():
    # a discontinuous sign change that bisection must chase to an absurd tolerance
    f = lambda x, idx: np.where(x < 0.3, -1.0, 1.0)
    with pytest.raises(UnresolvedInterval):
        refine_brackets(f, [0.0], [1.0], [-1.0], [1.0], 1e-300, max_iter=20)


@given(st.floats(-10, 10), st.floats(0.1, 5))
def test_linear_root_anywhere(root, slope):
    f = lambda x, idx: slope * (x - root)
    lo, hi = root - 3.0, root + 7.0
    r = refine_brackets(f, [lo], [hi], [f(lo, 0)], [f(hi, 0)], 1e-10)
    assert abs(r[0] - root) <= 1e-10
