import cmath
import math
import pickle

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghpkerr import jets as J
from ghpkerr.errors import DomainError, UsageError
from ghpkerr.jets import _jetpy

import exprgen

try:
    from ghpkerr.jets import _jet2
except ImportError:  # pragma: no cover - compiled core not built
    _jet2 = None

BACKENDS = [_jetpy] + ([_jet2] if _jet2 is not None else [])
coord = st.floats(-2.0, 2.0, allow_nan=False)


def arr(x):
    return np.array(x, dtype=complex)


@pytest.mark.parametrize("B", BACKENDS, ids=lambda b: b.BACKEND)
class TestSeedAndConstants:
    def test_lift(self, B):
        x = B.lift(1, 3.0)
        assert x.value == 3.0
        assert arr(x.grad).tolist() == [0, 1, 0, 0]
        assert not arr(x.hess).any()

    def test_constant(self, B):
        c = B.constant(2.5)
        assert not arr(c.grad).any() and not arr(c.hess).any()

    def test_product_rule(self, B):
        t, r = 1.5, -0.75
        p = B.lift(0, t) * B.lift(1, r)
        assert np.allclose(arr(p.grad), [r, t, 0, 0])
        H = arr(p.hess)
        assert H[0, 1] == H[1, 0] == 1

    @pytest.mark.parametrize("idx", [-1, 4, 7])
    def test_lift_index_out_of_range(self, B, idx):
        with pytest.raises(UsageError):
            B.lift(idx, 1.0)

    def test_sin_at_zero(self, B):
        s = B.sin(B.lift(2, 0.0))
        assert s.value == 0
        assert np.allclose(arr(s.grad), [0, 0, 1, 0])

    def test_recip_constant(self, B):
        r = B.recip(B.constant(2.0))
        assert r.value == 0.5 and not arr(r.grad).any()

    def test_sqrt_example(self, B):
        s = B.sqrt(B.lift(1, 4.0))
        assert s.value == pytest.approx(2.0)
        assert s.grad[1] == pytest.approx(0.25)
        assert s.hess[1][1] == pytest.approx(-1.0 / 32.0)

    def test_division_by_zero(self, B):
        with pytest.raises(DomainError):
            B.recip(B.lift(0, 0.0))
        with pytest.raises(DomainError):
            B.lift(1, 1.0) / B.constant(0.0)

    def test_hessian_symmetric_exactly(self, B):
        x = B.lift(0, 0.3) * B.sin(B.lift(3, 1.1)) + B.exp(B.lift(1, 0.2) * B.lift(3, -0.4))
        H = arr(x.hess)
        assert np.array_equal(H, H.T)


def test_sqrt_example_matches_central_differences():
    # oracle for the frozen sqrt example: step 1e-5 central differences of sqrt(r) at r = 4
    h, r = 1e-5, 4.0
    d1 = (math.sqrt(r + h) - math.sqrt(r - h)) / (2 * h)
    d2 = (math.sqrt(r + h) - 2 * math.sqrt(r) + math.sqrt(r - h)) / h ** 2
    assert d1 == pytest.approx(0.25, abs=1e-9)
    assert d2 == pytest.approx(-1.0 / 32.0, abs=1e-5)


def test_elementary_dispatch():
    x = J.lift(0, 0.7)
    assert J.elementary("neg", x).value == -0.7
    assert J.elementary("add", x, 1.0).value == pytest.approx(1.7)
    assert J.elementary("div", 1.0, x).value == pytest.approx(1 / 0.7)
    with pytest.raises(UsageError):
        J.elementary("tan", x)
    with pytest.raises(UsageError):
        J.elementary("mul", x)


def test_lift_point_requires_four():
    with pytest.raises(UsageError):
        J.lift_point((1.0, 2.0))
    assert [j.value for j in J.lift_point((1, 2, 3, 4))] == [1, 2, 3, 4]


def test_partial_tracks_order():
    x = J.lift(0, 0.5) ** 3 * J.lift(1, 2.0)
    dx = x.partial(0)
    assert dx.order == 1
    assert dx.value == pytest.approx(3 * 0.25 * 2.0)
    assert dx.grad[0] == pytest.approx(6 * 0.5 * 2.0)
    ddx = dx.partial(1)
    assert ddx.order == 0 and ddx.value == pytest.approx(3 * 0.25)
    with pytest.raises(UsageError):
        ddx.grad
    with pytest.raises(UsageError):
        ddx.partial(0)
    # mixed orders combine to the lower one
    assert (dx + x).order == 1


def test_pickle_roundtrip():
    x = J.sin(J.lift(2, 0.4)) * J.lift(1, 3.0)
    y = pickle.loads(pickle.dumps(x))
    assert y.value == x.value and arr(y.hess).tolist() == arr(x.hess).tolist()


@given(coord, coord, coord, coord)
def test_conjugation_rule(t, r, th, ph):
    x = J.exp(1j * J.lift(0, t) * J.lift(2, th)) * (J.lift(1, r) + 2j * J.lift(3, ph))
    c = J.conj(x)
    assert np.allclose(arr(c.grad), arr(x.grad).conj(), rtol=0, atol=0)
    assert np.allclose(arr(c.hess), arr(x.hess).conj(), rtol=0, atol=0)


@given(coord, coord)
def test_abs2_is_real(a, b):
    z = (J.lift(0, a) + 1j * J.lift(1, b)) * J.cos(J.lift(0, a))
    w = J.abs2(z)
    assert abs(w.value.imag) < 1e-14
    assert np.abs(arr(w.grad).imag).max() < 1e-13


@given(st.integers(0, 2 ** 32 - 1))
def test_random_expressions_match_finite_differences(seed):
    rng = np.random.default_rng(seed)
    e = exprgen.random_expr(rng, 6)
    x0 = rng.uniform(-1.5, 1.5, 4)
    assert exprgen.compare(e, x0) < 1e-6


@pytest.mark.skipif(_jet2 is None, reason="compiled core not built")
@given(st.integers(0, 2 ** 32 - 1))
def test_backends_agree(seed):
    rng = np.random.default_rng(seed)
    e = exprgen.random_expr(rng, 5)
    x0 = rng.uniform(-1.5, 1.5, 4)

    def run(B):
        J_backup = exprgen.J
        try:
            exprgen.J = _BackendShim(B)
            out = exprgen.jet_eval(e, tuple(B.lift(i, float(c)) for i, c in enumerate(x0)))
        finally:
            exprgen.J = J_backup
        return complex(out.value), arr(out.grad), arr(out.hess)

    vp, gp, hp = run(_jetpy)
    vc, gc, hc = run(_jet2)
    scale = max(1.0, abs(vp), np.abs(gp).max(), np.abs(hp).max())
    assert abs(vp - vc) <= 1e-12 * scale
    assert np.abs(gp - gc).max() <= 1e-12 * scale
    assert np.abs(hp - hc).max() <= 1e-12 * scale


class _BackendShim:
    """Expose a backend module through the jets package interface."""

    def __init__(self, B):
        self.B = B
        self.constant, self.sin, self.exp = B.constant, B.sin, B.exp

    def elementary(self, tag, *args):
        B = self.B
        args = [a if isinstance(a, B.Jet2) else B.constant(a) for a in args]
        unary = {"neg": lambda x: -x, "sin": B.sin, "cos": B.cos, "sqrt": B.sqrt,
                 "recip": B.recip, "conj": B.conj, "abs2": B.abs2}
        if tag in unary:
            return unary[tag](*args)
        x, y = args
        return {"add": x + y, "sub": x - y, "mul": x * y}[tag] if tag != "div" else x / y


def test_complex_sqrt_branch():
    # principal branch; derivative consistent with cmath
    z = J.constant(-4.0) + J.lift(0, 0.0) * 1j
    s = J.sqrt(z)
    assert s.value == pytest.approx(cmath.sqrt(-4.0))
    assert s.grad[0] == pytest.approx(1j * 0.5 / cmath.sqrt(-4.0))
