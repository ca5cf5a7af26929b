"""Verification suites shared by the command line and the acceptance tests.

Every suite returns an :class:`~ghpkerr.teukolsky.OperatorReport`.
"""

import math

import numpy as np

from .geometry import Chart, SpacetimePoint, convert_point, curvature_at
from .hopf import (Quaternion, act_frame, composite_residual, embed_tetrad_m, frame_map,
                   frame_of, hopf_map, m_normalization, random_unit_quaternion,
                   rotate_tangent_columns)
from .newman_penrose import np_table, weyl_scalars
from .swfield import SpinWeight, TestField, chart_transition, ghp_apply, transition_jet
from .teukolsky import (OperatorReport, SuiteConfig, factorization_report, magical_report,
                        stationarity_report, teukolsky_report)
from .tetrad import extended_tetrad_at, kinnersley_at, tetrad_residuals


def sample_points(params, n, seed, r_max=20.0, chart=Chart.BL_ANGULAR):
    """Seeded BL-angular points with r in (r0 + 0.1, r_max), theta and phi off the axis/cut."""
    rng = np.random.default_rng([int(seed), 7])
    r = rng.uniform(params.r0 + 0.1, r_max, n)
    th = rng.uniform(0.1, math.pi - 0.1, n)
    ph = rng.uniform(0.1, 2 * math.pi - 0.1, n)
    t = rng.uniform(-5.0, 5.0, n)
    pts = [SpacetimePoint(Chart.BL_ANGULAR, c) for c in zip(t, r, th, ph)]
    if chart is not Chart.BL_ANGULAR:
        pts = [convert_point(params, p, chart) for p in pts]
    return pts


def _zero(name, tol, two_s=0):
    return OperatorReport(name, two_s, "sample", tol_abs=tol, mode="abs")


def ricci_suite(params, points, tol=1e-8):
    rep = _zero("ricci", tol)
    for p in points:
        rep.add_zero(p.coords, np.abs(curvature_at(params, p).ricci).max())
    return rep


def tetrad_suite(params, points, tol=1e-10):
    rep = _zero("tetrad-normalization", tol)
    for p in points:
        res = tetrad_residuals(params, p, kinnersley_at(params, p))
        rep.add_zero(p.coords, max(abs(v) for v in res.values()))
    return rep


def np_vanishing_suite(params, points, tol=1e-8):
    rep = _zero("np-vanishing", tol)
    for p in points:
        c = np_table(params, p, kinnersley_at(params, p))
        rep.add_zero(p.coords, max(abs(c.kappa), abs(c.sigma), abs(c.lam), abs(c.nu)))
    return rep


def weyl_vanishing_suite(params, points, tol=1e-7):
    rep = _zero("weyl-vanishing", tol)
    for p in points:
        w = weyl_scalars(params, p, kinnersley_at(params, p))
        rep.add_zero(p.coords, max(abs(w.psi0), abs(w.psi1), abs(w.psi3), abs(w.psi4)))
    return rep


def psi2_suite(params, points, tol_rel=1e-6):
    """|Psi2| against M / |r + i a cos(theta)|^3."""
    rep = OperatorReport("psi2-magnitude", 0, "sample", tol_rel=tol_rel, mode="rel")
    for p in points:
        w = weyl_scalars(params, p, kinnersley_at(params, p))
        _, r, th, _ = p.coords
        rep.add(p.coords, abs(w.psi2), params.mass / abs(complex(r, params.spin * math.cos(th))) ** 3)
    return rep


def horizon_suite(params, tol=1e-9, thetas=(0.3, 1.0, math.pi / 2, 2.2, 2.9), phis=(0.5, 3.0)):
    """Extended tetrad at r = r0 in Kerr-star coordinates: finite and normalized."""
    rep = _zero("horizon-regularity", tol)
    for th in thetas:
        for ph in phis:
            p = SpacetimePoint(Chart.KERR_STAR, (0.0, params.r0, th, ph))
            T = extended_tetrad_at(params, p)
            vals = T.values()
            if not np.all(np.isfinite(vals)):
                rep.add_zero(p.coords, math.inf)
                continue
            res = tetrad_residuals(params, p, T)
            rep.add_zero(p.coords, max(abs(v) for v in res.values()))
    return rep


def chart_consistency_suite(params, points, seed, tol=1e-8):
    """GHP outputs in the M and N trivializations agree after the transition."""
    rep = _zero("chart-consistency", tol)
    weights = (SpinWeight(1, -3), SpinWeight(-2, 2), SpinWeight(3, 1))
    for k, wgt in enumerate(weights):
        u = TestField(wgt, seed, 400 + k, native="N")
        for op in ("thorn", "thorn_prime", "eth", "eth_prime"):
            v = ghp_apply(op, u, params)
            for p in points:
                phi = p.coords[3]
                vm = v.value("M", p)
                vn = v.value("N", p)
                rep.add_zero(p.coords, vm - chart_transition(vn, v.weight, phi, "N", "M"))
    return rep


def transition_stationarity_suite(params, seed, tol=1e-14, npairs=20):
    """Transition factors at a fixed sphere point over varying (t, r)."""
    rep = _zero("transition-stationarity", tol)
    rng = np.random.default_rng([int(seed), 11])
    th, ph = 1.1, 2.3
    for wgt in (SpinWeight(1, 0), SpinWeight(3, -1), SpinWeight(-4, 2)):
        for frm, to in (("N", "S"), ("N", "M"), ("M", "S")):
            ref = None
            for _ in range(npairs):
                t, r = rng.uniform(-10, 10), rng.uniform(params.r0 + 0.1, 30)
                p = SpacetimePoint(Chart.BL_ANGULAR, (t, r, th, ph))
                val = complex(transition_jet(p, wgt, frm, to).value)
                ref = val if ref is None else ref
                rep.add_zero(p.coords, val - ref)
    return rep


def operator_suites(two_s, params, config=SuiteConfig()):
    """Magical relation (n0 = |2s|), T_s equivalence, factorization (s >= 1/2), stationarity."""
    out = []
    if two_s != 0:
        out.append(magical_report(abs(two_s), params, config))
    out.append(teukolsky_report(two_s / 2, params, config))
    if two_s >= 1:
        out.append(factorization_report(two_s, params, config))
    out.append(stationarity_report(two_s / 2, params, config=config))
    return out


def hopf_suites(params, seed, nsamples=50, tol=1e-10):
    """Homomorphism, fibre invariance, right action, equivariance and the composite law."""
    rng = np.random.default_rng([int(seed), 13])
    names = ("hopf-homomorphism", "hopf-fiber-invariance", "hopf-right-action",
             "embed-equivariance", "embed-null", "embed-normalization",
             "composite-double-cover")
    reps = {n: _zero(n, tol) for n in names}
    for k in range(nsamples):
        h1, h2 = random_unit_quaternion(rng), random_unit_quaternion(rng)
        rho = rng.uniform(-math.pi, math.pi)
        g = Quaternion.unit_complex(rho)
        tag = (float(k), rho)
        reps["hopf-homomorphism"].add_zero(tag, np.abs(frame_map(h1 * h2) - frame_map(h1) @ frame_map(h2)).max())
        reps["hopf-fiber-invariance"].add_zero(tag, np.abs(hopf_map(h1 * g) - hopf_map(h1)).max())
        reps["hopf-right-action"].add_zero(
            tag, np.abs(frame_map(h1 * Quaternion.unit_complex(rho / 2))
                        - rotate_tangent_columns(frame_map(h1), rho)).max())
        fr = frame_of(frame_map(h1))
        if math.sqrt(fr[0][0] ** 2 + fr[0][1] ** 2) < 0.05:
            continue  # base point near the axis; BL-angular components degenerate
        t, r = rng.uniform(-5, 5), rng.uniform(params.r0 + 0.1, 20)
        z = complex(math.cos(rho), math.sin(rho))
        m1 = embed_tetrad_m(params, t, r, act_frame(fr, z))
        m0 = embed_tetrad_m(params, t, r, fr)
        reps["embed-equivariance"].add_zero(tag, np.abs(m1 - z * m0).max())
        gmm, gmmb = m_normalization(params, t, r, fr)
        reps["embed-null"].add_zero(tag, gmm)
        reps["embed-normalization"].add_zero(tag, gmmb + 1.0)
        reps["composite-double-cover"].add_zero(tag, composite_residual(params, t, r, h1, rho, power=2))
    return [reps[n] for n in names]
