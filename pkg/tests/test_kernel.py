import pytest
from hypothesis import given, strategies as st

from crystal_fold.cartan import build_cartan
from crystal_fold.kernel import BACKEND, CKernel, PyKernel

pytestmark = pytest.mark.skipif(CKernel is None, reason="compiled kernel not built")

TYPES = ["A3", "B3", "C2", "G2", "D4"]


def _pair(tag, period=None):
    c = build_cartan(tag)
    period = list(range(c.rank)) if period is None else period
    return c, PyKernel(c.matrix, period), CKernel(c.matrix, period)


def test_backend_flag():
    assert BACKEND in ("compiled", "python")


@given(st.sampled_from(TYPES), st.data())
def test_parity_on_random_fstrings(tag, data):
    c, py, cc = _pair(tag)
    fs = data.draw(st.lists(st.integers(0, c.rank - 1), max_size=10))
    x = py.replay(fs)
    assert cc.replay(fs) == x
    assert cc.extract_fstring(x) == py.extract_fstring(x)
    for i in range(c.rank):
        assert cc.signature(x, i) == py.signature(x, i)
        assert cc.f(x, i) == py.f(x, i)
        assert cc.e(x, i) == py.e(x, i)
        assert cc.eps_star(py.extract_fstring(x), i) == py.eps_star(py.extract_fstring(x), i)
    word = data.draw(st.lists(st.integers(0, c.rank - 1), max_size=6))
    assert cc.string_extract(x, word) == py.string_extract(x, word)


@pytest.mark.parametrize("tag", TYPES)
def test_parity_on_steps(tag):
    c, py, cc = _pair(tag)
    layer_py = layer_c = [()]
    for i in list(range(c.rank)) * 2:
        layer_py = py.demazure_step(layer_py, i, 1)
        layer_c = cc.demazure_step(layer_c, i, 1)
        assert layer_py == layer_c
    assert py.depth_step([(), (1,)], 0, 3) == cc.depth_step([(), (1,)], 0, 3)


def test_parity_with_custom_period():
    c, py, cc = _pair("A3", [2, 0, 1])
    fs = [0, 1, 2, 1, 0, 2, 2]
    assert py.replay(fs) == cc.replay(fs)


def test_compiled_kernel_pickles():
    import pickle

    c, _, cc = _pair("B2")
    again = pickle.loads(pickle.dumps(cc))
    assert again.replay([0, 1, 1]) == cc.replay([0, 1, 1])
