"""The operators G_s and T_s built from GHP operators, the closed-form
Teukolsky operator in Boyer-Lindquist coordinates, and residual reports for
the operator identities.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import jets as J
from .errors import UsageError
from .geometry import Chart, SpacetimePoint, check_point
from .newman_penrose import weyl_scalars
from .swfield import SpinWeight, SpinWeightedField, TestField, ghp_apply, multiplier_field
from .tetrad import tetrad_for

R_GRID_FAR = (3.0, 5.0, 10.0)
THETA_GRID = tuple(k * math.pi / 6 for k in (1, 2, 3, 4, 5))
PHI_GRID = (math.pi / 4, math.pi, 7 * math.pi / 4)


def comparison_grid(params):
    """Tensor grid t = 0, r in {r0+0.5, 3, 5, 10}, theta in {k pi/6}, phi in {pi/4, pi, 7pi/4}."""
    rs = (params.r0 + 0.5,) + R_GRID_FAR
    return [SpacetimePoint(Chart.BL_ANGULAR, (0.0, r, th, ph))
            for r in rs for th in THETA_GRID for ph in PHI_GRID]


def _doubled_s(s):
    f = Fraction(s).limit_denominator(1000) if isinstance(s, float) else Fraction(s)
    if (2 * f).denominator != 1:
        raise UsageError("s must be a half-integer")
    return int(2 * f)


def _check_weight(s, fld):
    two_s = _doubled_s(s)
    if fld.weight != SpinWeight(two_s, two_s):
        raise UsageError("the operator acts on weight (s, s) = (%s, %s); field has weight %s"
                         % (Fraction(two_s, 2), Fraction(two_s, 2), fld.weight))
    return two_s / 2


def apply_G(s, fld, params):
    """G_s u = (thorn + 2s b(mbar) + conj b(mbar))(thorn' + c(m)) u
             - (eth + conj c(l) + 2s b(n))(eth' + c(l)) u."""
    s = _check_weight(s, fld)
    bm = multiplier_field("b_mbar", params)
    bn = multiplier_field("b_n", params)
    cl = multiplier_field("c_l", params)
    cm = multiplier_field("c_m", params)
    v1 = ghp_apply("thorn_prime", fld, params) + cm * fld
    t1 = ghp_apply("thorn", v1, params) + (2 * s * bm + bm.conj()) * v1
    v2 = ghp_apply("eth_prime", fld, params) + cl * fld
    t2 = ghp_apply("eth", v2, params) + (cl.conj() + 2 * s * bn) * v2
    out = t1 - t2
    out.name = "G_%s(%s)" % (Fraction(s), fld.name)
    return out


def psi2_field(params):
    """Psi_2 of the trivialization's tetrad as a weight-(0,0) field (values only)."""

    def ev(triv, point):
        psi2 = weyl_scalars(params, point, tetrad_for(params, point, triv)).psi2
        return J.Jet2(psi2, order=0)

    return SpinWeightedField(SpinWeight(0, 0), evaluator=ev, name="Psi2")


def apply_T(s, fld, params):
    """T_s u = 2 G_s u + 4 (s-1)(s-1/2) Psi_2 u."""
    s = _check_weight(s, fld)
    out = 2.0 * apply_G(s, fld, params)
    k = 4.0 * (s - 1.0) * (s - 0.5)
    if k != 0:
        out = out + k * (psi2_field(params) * fld)
    out.name = "T_%s(%s)" % (Fraction(s), fld.name)
    return out


def apply_T_closed_form(s, component, params):
    """Closed-form T_s in BL-angular coordinates on the M-trivialization component.

    ``component`` maps a BL-angular point to a Jet2 of order 2. Returns a
    function of the point giving the complex value of T_s u.
    """
    two_s = _doubled_s(s)
    s = two_s / 2
    M, a = params.mass, params.spin

    def apply(point):
        if point.chart is not Chart.BL_ANGULAR:
            raise UsageError("the closed form is written in BL-angular coordinates")
        check_point(params, point)
        _, r, th, _ = point.coords
        u = component(point)
        st, ct = math.sin(th), math.cos(th)
        delta = r * r - 2 * M * r + a * a
        rho2 = r * r + a * a * ct * ct
        val = (((r * r + a * a) ** 2 / delta - a * a * st * st) * u.dd(0, 0)
               + 4 * M * a * r / delta * u.dd(0, 3)
               + (a * a / delta - 1.0 / (st * st)) * u.dd(3, 3)
               # Delta^{-s} d_r(Delta^{s+1} d_r u)
               - (delta * u.dd(1, 1) + (s + 1) * (2 * r - 2 * M) * u.d(1))
               # (1/sin) d_theta(sin d_theta u)
               - (u.dd(2, 2) + ct / st * u.d(2))
               - 2 * s * (a * (r - M) / delta + 1j * ct / (st * st)) * u.d(3)
               - 2 * s * (M * (r * r - a * a) / delta - r - 1j * a * ct) * u.d(0)
               + (s * s * ct * ct / (st * st) - s) * u.value)
        return complex(val) / rho2

    return apply


def magical_operator(n0, fld, params):
    """(thorn + n0 b(mbar) + conj b(mbar))(eth + n0 b(n)) u
       - (eth + conj c(l) + n0 b(n))(thorn + n0 b(mbar)) u."""
    bm = multiplier_field("b_mbar", params)
    bn = multiplier_field("b_n", params)
    cl = multiplier_field("c_l", params)
    e1 = ghp_apply("eth", fld, params) + n0 * (bn * fld)
    left = ghp_apply("thorn", e1, params) + (n0 * bm + bm.conj()) * e1
    t1 = ghp_apply("thorn", fld, params) + n0 * (bm * fld)
    right = ghp_apply("eth", t1, params) + (cl.conj() + n0 * bn) * t1
    return left - right


def dirac_combination(n0, phi0, phi1, params):
    """(thorn + n0 b(mbar) + conj b(mbar)) D2 - (eth + conj c(l) + n0 b(n)) D1 with

    D1 = (eth' + c(l)) phi0 - (thorn + n0 b(mbar)) phi1,
    D2 = (thorn' + c(m)) phi0 - (eth + n0 b(n)) phi1.
    """
    bm = multiplier_field("b_mbar", params)
    bn = multiplier_field("b_n", params)
    cl = multiplier_field("c_l", params)
    cm = multiplier_field("c_m", params)
    D1 = (ghp_apply("eth_prime", phi0, params) + cl * phi0
          - (ghp_apply("thorn", phi1, params) + n0 * (bm * phi1)))
    D2 = (ghp_apply("thorn_prime", phi0, params) + cm * phi0
          - (ghp_apply("eth", phi1, params) + n0 * (bn * phi1)))
    left = ghp_apply("thorn", D2, params) + (n0 * bm + bm.conj()) * D2
    right = ghp_apply("eth", D1, params) + (cl.conj() + n0 * bn) * D1
    return left - right


# -- reports -----------------------------------------------------------------

@dataclass
class OperatorReport:
    """Residual summary of one identity over a grid of points."""

    name: str
    two_s: int
    grid: str
    max_abs_residual: float = 0.0
    max_rel_residual: float = 0.0
    worst_point: tuple = None
    worst_values: tuple = None
    npoints: int = 0
    tol_abs: float = 1e-8
    tol_rel: float = 1e-6
    mode: str = "rel"  # which residual decides pass/fail: "abs", "rel" or "either"
    zero_check: bool = False  # residuals are magnitudes of quantities that should vanish

    def add_zero(self, coords, value):
        """Record a quantity whose target is exactly zero (absolute residual only)."""
        self.zero_check = True
        err = abs(complex(value))
        self.npoints += 1
        if (self.worst_point is None or err > self.max_abs_residual
                or (err == self.max_abs_residual and tuple(coords) < tuple(self.worst_point))):
            self.worst_point = tuple(coords)
            self.worst_values = (complex(value), 0j)
        self.max_abs_residual = max(self.max_abs_residual, err)

    def add(self, coords, lhs, rhs):
        lhs, rhs = complex(lhs), complex(rhs)
        err = abs(lhs - rhs)
        rel = err / max(abs(lhs), abs(rhs), 1e-30)
        self.npoints += 1
        key = rel if self.mode == "rel" else err
        worst = self.max_rel_residual if self.mode == "rel" else self.max_abs_residual
        if (self.worst_point is None or key > worst
                or (key == worst and tuple(coords) < tuple(self.worst_point))):
            self.worst_point = tuple(coords)
            self.worst_values = (lhs, rhs)
        self.max_abs_residual = max(self.max_abs_residual, err)
        self.max_rel_residual = max(self.max_rel_residual, rel)

    def merge(self, other):
        """Associative combination of two partial reports over disjoint points."""
        out = OperatorReport(self.name, self.two_s, self.grid, tol_abs=self.tol_abs,
                             tol_rel=self.tol_rel, mode=self.mode)
        for rep in (self, other):
            if rep.worst_point is not None:
                if rep.zero_check:
                    out.add_zero(rep.worst_point, rep.worst_values[0])
                else:
                    out.add(rep.worst_point, *rep.worst_values)
            out.npoints += rep.npoints - (1 if rep.worst_point is not None else 0)
            out.max_abs_residual = max(out.max_abs_residual, rep.max_abs_residual)
            out.max_rel_residual = max(out.max_rel_residual, rep.max_rel_residual)
        return out

    @property
    def passed(self):
        if self.mode == "abs":
            return self.max_abs_residual <= self.tol_abs
        if self.mode == "rel":
            return self.max_rel_residual <= self.tol_rel
        return self.max_abs_residual <= self.tol_abs or self.max_rel_residual <= self.tol_rel


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0xC0FFEE
    nfields: int = 2
    tol_abs: float = 1e-8
    tol_rel: float = 1e-6
    points: tuple = None  # defaults to the comparison grid


def _points(params, config):
    return list(config.points) if config.points is not None else comparison_grid(params)


def teukolsky_report(s, params, config=SuiteConfig()):
    """GHP-composed T_s against the closed form, on the M-trivialization."""
    two_s = _doubled_s(s)
    rep = OperatorReport("teukolsky", two_s, "comparison", tol_abs=config.tol_abs,
                         tol_rel=config.tol_rel, mode="rel")
    for k in range(config.nfields):
        u = TestField(SpinWeight(two_s, two_s), config.seed, k, native="M")
        T = apply_T(two_s / 2, u, params)
        cf = apply_T_closed_form(two_s / 2, lambda p: u.component("M", p), params)
        for p in _points(params, config):
            rep.add(p.coords, T.value("M", p), cf(p))
    return rep


def magical_report(n0, params, config=SuiteConfig(), shift=0):
    """The relation on weight (n0/2 - shift, n0/2 - shift) test fields; residual vs 0."""
    two = n0 - 2 * shift
    rep = OperatorReport("magical", n0, "comparison", tol_abs=config.tol_abs,
                         tol_rel=config.tol_rel, mode="abs")
    for k in range(config.nfields):
        u = TestField(SpinWeight(two, two), config.seed, 100 + k, native="M")
        out = magical_operator(n0, u, params)
        for p in _points(params, config):
            rep.add_zero(p.coords, out.value("M", p))
    return rep


def factorization_report(n0, params, config=SuiteConfig()):
    """Dirac-component combination against G_{n0/2} phi0 (requires n0 >= 1)."""
    if n0 < 1:
        raise UsageError("the factorization identity is stated for n0 >= 1")
    rep = OperatorReport("factorization", n0, "comparison", tol_abs=config.tol_abs,
                         tol_rel=config.tol_rel, mode="rel")
    for k in range(config.nfields):
        phi0 = TestField(SpinWeight(n0, n0), config.seed, 200 + k, native="M")
        phi1 = TestField(SpinWeight(n0 - 2, n0 - 2), config.seed, 300 + k, native="M")
        lhs = dirac_combination(n0, phi0, phi1, params)
        rhs = apply_G(n0 / 2, phi0, params)
        for p in _points(params, config):
            rep.add(p.coords, lhs.value("M", p), rhs.value("M", p))
    return rep


def identity_residuals(s, params, config=SuiteConfig()):
    """Reports for (i) the magical relation with n0 = 2s, (ii) T_s GHP vs closed
    form, (iii) the Dirac factorization of G_s (s >= 1/2 only)."""
    two_s = _doubled_s(s)
    out = {"teukolsky": teukolsky_report(two_s / 2, params, config)}
    if two_s != 0:
        n0 = abs(two_s)
        out["magical"] = magical_report(n0, params, config)
    if two_s >= 1:
        out["factorization"] = factorization_report(two_s, params, config)
    return out


def stationarity_report(s, params, tau=0.7, chi=0.5, config=SuiteConfig()):
    """T_s applied to u(t + tau, phi + chi) against (T_s u) at the shifted point.

    ``chi`` must keep the shifted grid inside the M-trivialization domain.
    """
    two_s = _doubled_s(s)
    rep = OperatorReport("stationarity", two_s, "comparison", tol_abs=config.tol_abs,
                         tol_rel=config.tol_rel, mode="abs")
    u = TestField(SpinWeight(two_s, two_s), config.seed, 0, native="M")
    Tu = apply_T(two_s / 2, u, params)
    Tv = apply_T(two_s / 2, u.shifted(tau, chi), params)
    for p in _points(params, config):
        t, r, th, ph = p.coords
        q = SpacetimePoint(Chart.BL_ANGULAR, (t + tau, r, th, ph + chi))
        rep.add(p.coords, Tv.value("M", p), Tu.value("M", q))
    return rep
