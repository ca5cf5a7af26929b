import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghpkerr.geometry import Chart, KerrParams, SpacetimePoint, convert_point
from ghpkerr.newman_penrose import (WEYL_CONVENTION, frame_data, np_table, one_forms_abc,
                                    weyl_scalars)
from ghpkerr.suites import sample_points
from ghpkerr.tetrad import act_tetrad, kinnersley_at, tetrad_for

import oracles

BL = Chart.BL_ANGULAR


def P(*coords, chart=BL):
    return SpacetimePoint(chart, coords)


def vals(T):
    return T.values()


def test_b_of_l_and_c_of_n_vanish(kerr):
    for p in sample_points(kerr, 20, 1):
        T = kinnersley_at(kerr, p)
        l, n = vals(T)[0], vals(T)[1]
        assert abs(one_forms_abc(kerr, p, T, l)[1]) < 1e-8
        assert abs(one_forms_abc(kerr, p, T, n)[2]) < 1e-8


def test_schwarzschild_b_of_mbar():
    # 0.25 frozen from the finite-difference covariant-derivative oracle
    params = KerrParams(1.0, 0.0)
    x = (0.0, 4.0, 1.0, 0.5)
    _, _, m = oracles.kinnersley(1.0, 0.0, x)
    b_oracle = oracles.fd_one_forms(1.0, 0.0, x, m.conj())[1]
    assert b_oracle == pytest.approx(0.25, abs=1e-9)
    p = P(*x)
    T = kinnersley_at(params, p)
    assert one_forms_abc(params, p, T, vals(T)[3])[1] == pytest.approx(0.25, abs=1e-13)


def test_one_forms_match_oracle(kerr):
    for p in sample_points(kerr, 5, 2):
        T = kinnersley_at(kerr, p)
        for X in vals(T):
            got = np.array(one_forms_abc(kerr, p, T, X))
            ref = np.array(oracles.fd_one_forms(1.0, 0.5, p.coords, X))
            assert np.abs(got - ref).max() < 1e-7


def test_schwarzschild_epsilon_vanishes():
    params = KerrParams(1.0, 0.0)
    for p in sample_points(params, 10, 3):
        x = p.coords
        l, _, _ = oracles.kinnersley(1.0, 0.0, x)
        assert abs(oracles.fd_one_forms(1.0, 0.0, x, l)[0]) < 1e-8
        assert abs(np_table(params, p, kinnersley_at(params, p)).epsilon) < 1e-8


def test_np_table_assembly(kerr, eq_point):
    T = kinnersley_at(kerr, eq_point)
    c = np_table(kerr, eq_point, T)
    l, n, m, mb = vals(T)
    abc = {k: one_forms_abc(kerr, eq_point, T, X) for k, X in zip("lnMB", (l, n, m, mb))}
    expect = dict(kappa=-abc["l"][1], tau=-abc["n"][1], sigma=-abc["M"][1], rho=-abc["B"][1],
                  pi=abc["l"][2], nu=abc["n"][2], mu=abc["M"][2], lam=abc["B"][2],
                  epsilon=abc["l"][0], gamma=abc["n"][0], beta=abc["M"][0], alpha=abc["B"][0])
    for k, v in expect.items():
        assert getattr(c, k) == pytest.approx(v, abs=1e-13)


def test_rho_closed_form(kerr):
    for p in sample_points(kerr, 10, 4):
        _, r, th, _ = p.coords
        rho = np_table(kerr, p, kinnersley_at(kerr, p)).rho
        assert rho == pytest.approx(-1.0 / complex(r, -0.5 * math.cos(th)), rel=1e-10)


@pytest.mark.parametrize("chart", [BL, Chart.BL_STEREO_N, Chart.BL_STEREO_S])
def test_principal_coefficients_vanish(kerr, chart):
    for p in sample_points(kerr, 30, 5, chart=chart):
        c = np_table(kerr, p, tetrad_for(kerr, p, "M"))
        assert max(abs(c.kappa), abs(c.sigma), abs(c.lam), abs(c.nu)) < 1e-8


def test_vanishing_survives_action(kerr, eq_point):
    T = act_tetrad(kinnersley_at(kerr, eq_point), 2.0)
    c = np_table(kerr, eq_point, T)
    assert max(abs(c.kappa), abs(c.sigma), abs(c.lam), abs(c.nu)) < 1e-8


@given(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
       st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                min_size=8, max_size=8))
def test_one_forms_complex_linear(alpha, comps):
    params = KerrParams(1.0, 0.5)
    p = P(0.0, 3.5, 1.1, 2.0)
    T = kinnersley_at(params, p)
    X, Y = np.array(comps[:4]), np.array(comps[4:])
    lhs = np.array(one_forms_abc(params, p, T, alpha * X + Y))
    rhs = alpha * np.array(one_forms_abc(params, p, T, X)) + np.array(one_forms_abc(params, p, T, Y))
    assert np.abs(lhs - rhs).max() < 1e-12 * (1 + abs(alpha)) * 10


def test_frame_data_values_match_one_forms(kerr, eq_point):
    T = kinnersley_at(kerr, eq_point)
    fd = frame_data(kerr, eq_point, T)
    for A, X in enumerate(vals(T)):
        a, b, c = one_forms_abc(kerr, eq_point, T, X)
        assert fd.a.val[A] == pytest.approx(a) and fd.b.val[A] == pytest.approx(b)
        assert fd.c.val[A] == pytest.approx(c)


def test_chart_independence_of_table(kerr):
    """Same tetrad in two charts gives the same scalars; N vs M follow the phase law."""
    for p in sample_points(kerr, 10, 6):
        phi = p.coords[3]
        q = convert_point(kerr, p, Chart.BL_STEREO_N)
        cM_ang = np_table(kerr, p, tetrad_for(kerr, p, "M")).as_dict()
        cM_st = np_table(kerr, q, tetrad_for(kerr, q, "M")).as_dict()
        for k in cM_ang:
            assert cM_st[k] == pytest.approx(cM_ang[k], abs=1e-8)
        cN = np_table(kerr, q, tetrad_for(kerr, q, "N")).as_dict()
        # m_M = e^{i phi} m_N; directional derivatives of phi along the N tetrad
        l, n, m_M = oracles.kinnersley(1.0, 0.5, p.coords)
        m_N = cmath.exp(-1j * phi) * m_M
        dl, dn, dm = l[3], n[3], m_N[3]
        e = cmath.exp(1j * phi)
        expect = dict(kappa=e * cN["kappa"], tau=e * cN["tau"], sigma=e * e * cN["sigma"],
                      rho=cN["rho"], pi=cN["pi"] / e, nu=cN["nu"] / e, mu=cN["mu"],
                      lam=cN["lam"] / (e * e), epsilon=cN["epsilon"] + 0.5j * dl,
                      gamma=cN["gamma"] + 0.5j * dn, beta=e * (cN["beta"] + 0.5j * dm),
                      alpha=(cN["alpha"] + 0.5j * np.conj(dm)) / e)
        for k, v in expect.items():
            assert cM_ang[k] == pytest.approx(v, abs=1e-8), k


# -- Weyl scalars -------------------------------------------------------------

def test_only_psi2_survives(kerr):
    for chart in (BL, Chart.BL_STEREO_N, Chart.BL_STEREO_S):
        for p in sample_points(kerr, 20, 7, chart=chart):
            w = weyl_scalars(kerr, p, tetrad_for(kerr, p, "M"))
            assert max(abs(w.psi0), abs(w.psi1), abs(w.psi3), abs(w.psi4)) < 1e-7


def test_psi2_schwarzschild_magnitude():
    params = KerrParams(1.0, 0.0)
    x = (0.0, 2.5, 1.0, 0.5)
    # magnitude M/r^3 from the finite-difference Riemann oracle
    assert abs(oracles.fd_psi2(1.0, 0.0, x)) == pytest.approx(1 / 2.5 ** 3, rel=1e-7)
    w = weyl_scalars(params, P(*x), kinnersley_at(params, P(*x)))
    assert abs(w.psi2) == pytest.approx(1 / 2.5 ** 3, rel=1e-10)


def test_psi2_schwarzschild_r2_value():
    # r = 2M is the horizon itself; approach it through a Kerr-star-free limit
    params = KerrParams(1.0, 0.0)
    x = (0.0, 2.0 + 1e-9, 1.0, 0.5)
    w = weyl_scalars(params, P(*x), kinnersley_at(params, P(*x)))
    assert abs(w.psi2) == pytest.approx(0.125, rel=1e-7)


def test_psi2_kerr_equator(kerr):
    x = (0.0, 3.0, math.pi / 2, 1.0)
    assert abs(oracles.fd_psi2(1.0, 0.5, x)) == pytest.approx(1 / 27, rel=1e-7)
    w = weyl_scalars(kerr, P(*x), kinnersley_at(kerr, P(*x)))
    assert abs(w.psi2) == pytest.approx(1 / 27, rel=1e-10)


def test_psi2_slot_and_sign(kerr):
    """W(l, m, mbar, n) = +M / (r - i a cos theta)^3 under the recorded convention."""
    assert WEYL_CONVENTION == "penrose-rindler"
    for p in sample_points(kerr, 10, 8):
        _, r, th, _ = p.coords
        w = weyl_scalars(kerr, p, kinnersley_at(kerr, p))
        assert w.psi2 == pytest.approx(1.0 / complex(r, -0.5 * math.cos(th)) ** 3, rel=1e-9)
        assert w.convention == WEYL_CONVENTION


def test_psi2_invariant_under_action(kerr, eq_point):
    T = kinnersley_at(kerr, eq_point)
    w0 = weyl_scalars(kerr, eq_point, T)
    w1 = weyl_scalars(kerr, eq_point, act_tetrad(T, 1.7 * cmath.exp(0.4j)))
    assert w1.psi2 == pytest.approx(w0.psi2, abs=1e-9)
    assert max(abs(w1.psi0), abs(w1.psi1), abs(w1.psi3), abs(w1.psi4)) < 1e-7
