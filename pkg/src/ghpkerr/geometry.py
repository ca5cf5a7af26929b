"""Kerr metric in four charts, Levi-Civita connection and curvature.

Charts
------
``BL-angular``        (t, r, theta, phi), Boyer-Lindquist.
``BL-stereoN``        (t, r, x, y), stereographic projection from the north
                      pole: x + iy = cot(theta/2) e^{i phi}; covers S^2 minus N.
``BL-stereoS``        (t, r, x, y), projection from the south pole:
                      x + iy = tan(theta/2) e^{i phi}; covers S^2 minus S.
``KerrStar-angular``  (t*, r, theta, phi*) with t* = t + T(r), phi* = phi + A(r).

All metric components are closed forms built from jets in the chart's own
coordinates, so first and second partial derivatives are exact. Signature is
(+, -, -, -).
"""

import enum
import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import jets as J
from .errors import DomainError, UsageError
from .jets.arrays import ArrayJet, jeinsum, pack


class Chart(str, enum.Enum):
    BL_ANGULAR = "BL-angular"
    BL_STEREO_N = "BL-stereoN"
    BL_STEREO_S = "BL-stereoS"
    KERR_STAR = "KerrStar-angular"

    @property
    def is_bl(self):
        return self is not Chart.KERR_STAR

    @property
    def is_angular(self):
        return self in (Chart.BL_ANGULAR, Chart.KERR_STAR)


@dataclass(frozen=True)
class KerrParams:
    """Mass ``mass`` and spin ``spin`` (angular momentum per unit mass).

    ``spin = 0`` (Schwarzschild) is accepted as a limiting case for checks;
    the CLI only accepts ``0 < spin < mass``.
    """

    mass: float = 1.0
    spin: float = 0.5
    r1: float = None
    axis_delta: float = 1e-3
    horizon_eps: float = None

    def __post_init__(self):
        M, a = float(self.mass), float(self.spin)
        if not M > 0:
            raise UsageError("mass must be positive")
        if not 0 <= a < M:
            raise UsageError("spin must satisfy 0 <= a < M (got a=%r, M=%r)" % (a, M))
        object.__setattr__(self, "mass", M)
        object.__setattr__(self, "spin", a)
        r1 = 3.0 * M if self.r1 is None else float(self.r1)
        if not r1 > self.r0:
            raise UsageError("r1 must exceed the horizon radius r0=%r" % self.r0)
        object.__setattr__(self, "r1", r1)
        eps = 0.5 * (self.r0 - self.r_inner) if self.horizon_eps is None else float(self.horizon_eps)
        if not 0 < eps < self.r0:
            raise UsageError("horizon_eps must lie in (0, r0)")
        object.__setattr__(self, "horizon_eps", eps)

    @property
    def r0(self):
        M, a = self.mass, self.spin
        return M + math.sqrt(M * M - a * a)

    @property
    def r_inner(self):
        M, a = self.mass, self.spin
        return M - math.sqrt(M * M - a * a)

    def delta(self, r):
        return r * r - 2.0 * self.mass * r + self.spin ** 2

    def rho2(self, r, theta):
        return r * r + (self.spin * math.cos(theta)) ** 2


@dataclass(frozen=True)
class SpacetimePoint:
    chart: Chart
    coords: tuple = field(default=(0.0, 0.0, 0.0, 0.0))

    def __post_init__(self):
        object.__setattr__(self, "chart", Chart(self.chart))
        c = tuple(float(x) for x in self.coords)
        if len(c) != 4:
            raise UsageError("a spacetime point has 4 coordinates")
        object.__setattr__(self, "coords", c)

    @property
    def t(self):
        return self.coords[0]

    @property
    def r(self):
        return self.coords[1]

    def __iter__(self):
        return iter(self.coords)


def check_point(params, point):
    """Raise DomainError unless ``point`` lies in its chart's domain."""
    t, r, u, v = point.coords
    if point.chart.is_bl:
        if not r > params.r0:
            raise DomainError("r must exceed r0=%.17g in Boyer-Lindquist charts" % params.r0,
                              point.coords)
    elif not r > params.r0 - params.horizon_eps:
        raise DomainError("r below the Kerr-star extension floor", point.coords)
    if point.chart.is_angular:
        d = params.axis_delta
        if not d <= u <= math.pi - d:
            raise DomainError("theta too close to the axis for an angular chart; "
                              "use a stereographic chart", point.coords)


# -- coordinate changes ---------------------------------------------------

def kerr_star_shifts(params, r):
    """T(r) and A(r): integrals from r1 of (r^2+a^2)/Delta and a/Delta."""
    M, a = params.mass, params.spin
    rp, rm = params.r0, params.r_inner
    if a == 0:
        def T(x):
            return x + 2 * M * math.log(abs(x - 2 * M))

        return T(r) - T(params.r1), 0.0
    w = rp - rm

    def T(x):
        return (x + 2 * M * rp / w * math.log(abs(x - rp))
                - 2 * M * rm / w * math.log(abs(x - rm)))

    def A(x):
        return a / w * math.log(abs((x - rp) / (x - rm)))

    return T(r) - T(params.r1), A(r) - A(params.r1)


def angular_to_stereo(theta, phi, pole):
    """Stereographic coordinates (x, y) of the sphere point (theta, phi)."""
    if pole == "N":
        R = 1.0 / math.tan(theta / 2.0)
    elif pole == "S":
        R = math.tan(theta / 2.0)
    else:
        raise UsageError("pole must be 'N' or 'S'")
    return R * math.cos(phi), R * math.sin(phi)


def stereo_to_angular(x, y, pole):
    R = math.hypot(x, y)
    if pole == "N":
        theta = 2.0 * math.atan2(1.0, R)
    elif pole == "S":
        theta = 2.0 * math.atan(R)
    else:
        raise UsageError("pole must be 'N' or 'S'")
    return theta, math.atan2(y, x) % (2.0 * math.pi)


def convert_point(params, point, chart):
    """Express the same event in another chart."""
    chart = Chart(chart)
    t, r, u, v = point.coords
    if point.chart is chart:
        return point
    # to BL-angular first
    if point.chart is Chart.BL_ANGULAR:
        theta, phi = u, v
    elif point.chart is Chart.KERR_STAR:
        if not r > params.r0:
            raise DomainError("Kerr-star point inside the horizon has no BL image", point.coords)
        T, A = kerr_star_shifts(params, r)
        t, theta, phi = t - T, u, v - A
    else:
        theta, phi = stereo_to_angular(u, v, "N" if point.chart is Chart.BL_STEREO_N else "S")
    if chart is Chart.BL_ANGULAR:
        return SpacetimePoint(chart, (t, r, theta, phi))
    if chart is Chart.KERR_STAR:
        T, A = kerr_star_shifts(params, r)
        return SpacetimePoint(chart, (t + T, r, theta, phi + A))
    x, y = angular_to_stereo(theta, phi, "N" if chart is Chart.BL_STEREO_N else "S")
    return SpacetimePoint(chart, (t, r, x, y))


# -- sphere primitives ----------------------------------------------------

@dataclass(frozen=True)
class ChartJets:
    """Lifted coordinates of a point plus sphere primitives as jets.

    ``eihalf`` is e^{i phi/2} on the branch phi in (0, 2 pi), i.e. cut along
    phi = 0. In Kerr-star coordinates phi stands for phi*.
    """

    t: object
    r: object
    cos_theta: object
    sin_theta: object
    eiphi: object
    eihalf: object
    coords: tuple


def chart_jets(point):
    t, r, u, v = J.lift_point(point.coords)
    if point.chart.is_angular:
        ct, st = J.cos(u), J.sin(u)
        # shift phi to [0, 2 pi) without touching its derivatives
        shift = point.coords[3] - (point.coords[3] % (2.0 * math.pi))
        ph = v - shift
        eiphi = J.cos(ph) + 1j * J.sin(ph)
        eihalf = J.cos(ph * 0.5) + 1j * J.sin(ph * 0.5)
    else:
        R2 = u * u + v * v
        if R2.value == 0:
            raise DomainError("the azimuth is undefined at the pole", point.coords)
        q = 1.0 + R2
        R = J.sqrt(R2)
        sgn = 1.0 if point.chart is Chart.BL_STEREO_N else -1.0
        ct = sgn * (R2 - 1.0) / q
        st = 2.0 * R / q
        eiphi = (u + 1j * v) / R
        eihalf = 1j * J.sqrt(-eiphi)
    return ChartJets(t, r, ct, st, eiphi, eihalf, point.coords)


# -- metric ---------------------------------------------------------------

def _metric_components(params, point):
    """4x4 nested list of metric component jets in the point's chart."""
    M, a = params.mass, params.spin
    t, r, u, v = J.lift_point(point.coords)
    z = J.constant(0.0)
    g = [[z] * 4 for _ in range(4)]
    if point.chart.is_angular:
        ct, st = J.cos(u), J.sin(u)
        s2 = st * st
        rho2 = r * r + a * a * ct * ct
        delta = r * r - 2.0 * M * r + a * a
        f = 2.0 * M * r / rho2
        g[0][0] = 1.0 - f
        g[0][3] = g[3][0] = a * f * s2
        g[2][2] = -rho2
        g[3][3] = -s2 * (r * r + a * a + a * a * f * s2)
        if point.chart is Chart.KERR_STAR:
            g[0][1] = g[1][0] = J.constant(-1.0)
            g[1][3] = g[3][1] = a * s2
        else:
            g[1][1] = -rho2 / delta
        return g
    x, y = u, v
    q = 1.0 + x * x + y * y
    sgn = 1.0 if point.chart is Chart.BL_STEREO_N else -1.0
    ct = sgn * (x * x + y * y - 1.0) / q
    rho2 = r * r + a * a * ct * ct
    delta = r * r - 2.0 * M * r + a * a
    f = 2.0 * M * r / rho2
    q2 = q * q
    zeta = (-4.0 * y / q2, 4.0 * x / q2)  # sin^2(theta) dphi = zeta_x dx + zeta_y dy
    h = 4.0 / q2  # round metric factor
    c_tz = a * f  # coefficient of dt (x) zeta, symmetrised
    c_zz = a * a * (1.0 + f)
    g[0][0] = 1.0 - f
    g[1][1] = -rho2 / delta
    g[0][2] = g[2][0] = c_tz * zeta[0]
    g[0][3] = g[3][0] = c_tz * zeta[1]
    g[2][2] = -rho2 * h - c_zz * zeta[0] * zeta[0]
    g[3][3] = -rho2 * h - c_zz * zeta[1] * zeta[1]
    g[2][3] = g[3][2] = -c_zz * zeta[0] * zeta[1]
    return g


@dataclass(frozen=True, eq=False)
class MetricValue:
    """Metric and inverse metric with first and second partial derivatives.

    ``g[m, n]``, ``dg[m, n, k]`` = d_k g_mn, ``ddg[m, n, k, l]``; likewise for
    the inverse.
    """

    g: np.ndarray
    dg: np.ndarray
    ddg: np.ndarray
    ginv: np.ndarray
    dginv: np.ndarray
    ddginv: np.ndarray

    def component(self, i, j):
        return J.Jet2(self.g[i, j], self.dg[i, j], self.ddg[i, j])

    def inverse_component(self, i, j):
        return J.Jet2(self.ginv[i, j], self.dginv[i, j], self.ddginv[i, j])

    @property
    def inverse_jet(self):
        return ArrayJet(self.ginv, self.dginv)


def _with_coords(fn):
    """Attach the point's coordinates to DomainErrors raised inside ``fn``."""

    @functools.wraps(fn)
    def wrapper(params, point, *args, **kwargs):
        try:
            return fn(params, point, *args, **kwargs)
        except DomainError as exc:
            if exc.coords is None:
                raise DomainError(str(exc), point.coords) from exc
            raise

    return wrapper


@functools.lru_cache(maxsize=4096)
def _metric_cached(params, point):
    check_point(params, point)
    g, dg, ddg = pack(_metric_components(params, point))
    g, dg, ddg = g.real, dg.real, ddg.real
    gi = np.linalg.inv(g)
    dgi = -np.einsum("ab,bck,cd->adk", gi, dg, gi)
    # d_l d_k ginv = -gi ddg_kl gi + gi dg_k gi dg_l gi + gi dg_l gi dg_k gi
    A = np.einsum("ab,bck->ack", gi, dg)  # gi . dg_k
    ddgi = (-np.einsum("ab,bckl,cd->adkl", gi, ddg, gi)
            + np.einsum("abk,bcl,cd->adkl", A, A, gi)
            + np.einsum("abl,bck,cd->adkl", A, A, gi))
    for arr in (g, dg, ddg, gi, dgi, ddgi):
        arr.setflags(write=False)
    return MetricValue(g, dg, ddg, gi, dgi, ddgi)


@_with_coords
def metric_at(params, point):
    """Kerr metric components (with jets) in the chart of ``point``."""
    return _metric_cached(params, point)


@dataclass(frozen=True, eq=False)
class Connection:
    """Christoffel symbols Gamma^m_{n r} with derivatives (last axis)."""

    gamma: ArrayJet


@functools.lru_cache(maxsize=4096)
def _christoffel_cached(params, point):
    mv = _metric_cached(params, point)
    # D[s, r, n] = d_n g_sr as a first-order array jet
    D = ArrayJet(mv.dg, mv.ddg)
    C = D + D.transpose(0, 2, 1) - D.transpose(2, 1, 0)  # C[s, n, r]
    gam = jeinsum("ms,snr->mnr", mv.inverse_jet, C) * 0.5
    return Connection(gam)


@_with_coords
def christoffel_jet(params, point):
    return _christoffel_cached(params, point).gamma


@_with_coords
def christoffel_at(params, point):
    """Gamma^mu_{nu rho} (real 4x4x4 array) in the chart of ``point``."""
    return _christoffel_cached(params, point).gamma.val.real.copy()


@dataclass(frozen=True, eq=False)
class Curvature:
    riemann: np.ndarray  # R^m_{n r s}
    riemann_lower: np.ndarray  # R_{m n r s}
    ricci: np.ndarray  # R_{n s}

    def kretschmann(self, ginv):
        up = np.einsum("ae,bf,cg,dh,efgh->abcd", ginv, ginv, ginv, ginv, self.riemann_lower,
                       optimize=True)
        return float(np.einsum("abcd,abcd->", self.riemann_lower, up).real)


@functools.lru_cache(maxsize=4096)
def _curvature_cached(params, point):
    gam = _christoffel_cached(params, point).gamma
    G, dG = gam.val.real, gam.grad.real  # dG[r, n, s, m] = d_m Gamma^r_{ns}
    # R^r_{s m n} = d_m G^r_{ns} - d_n G^r_{ms} + G^r_{ml} G^l_{ns} - G^r_{nl} G^l_{ms}
    dterm = np.einsum("rnsm->rsmn", dG)
    R = (dterm - dterm.transpose(0, 1, 3, 2)
         + np.einsum("rml,lns->rsmn", G, G) - np.einsum("rnl,lms->rsmn", G, G))
    ric = np.einsum("rsrn->sn", R)
    g = _metric_cached(params, point).g
    Rl = np.einsum("ar,rsmn->asmn", g, R)
    return Curvature(R, Rl, ric)


@_with_coords
def curvature_at(params, point):
    """Riemann tensor R^m_{nrs}, its lowered form and the Ricci tensor."""
    return _curvature_cached(params, point)


@_with_coords
def kretschmann_at(params, point):
    return _curvature_cached(params, point).kretschmann(_metric_cached(params, point).ginv)


def covariant_derivative_at(params, point, X, Y):
    """(nabla_X Y)^mu = X^nu d_nu Y^mu + Gamma^mu_{nu rho} X^nu Y^rho.

    ``X`` is a complex 4-vector, ``Y`` a sequence of four jets (components of
    a vector field around the point, in the point's chart).
    """
    X = np.asarray(X, dtype=complex)
    if X.shape != (4,) or len(Y) != 4:
        raise UsageError("X and Y must have 4 components")
    G = christoffel_at(params, point)
    Yv = np.array([complex(y.value) if isinstance(y, J.Jet2) else complex(y) for y in Y])
    dY = np.array([y.grad if isinstance(y, J.Jet2) else (0, 0, 0, 0) for y in Y], dtype=complex)
    return dY @ X + np.einsum("mnr,n,r->m", G, X, Yv)


def inner(g, u, v):
    """Complex-bilinear metric pairing g(u, v)."""
    return np.einsum("ab,a,b->", g, u, v)
