"""Kinnersley principal null tetrad, its horizon-regular rescaling and the
C* x| Z/2 action on null tetrads.

Tetrad components are jets in the chart of the point, so frame derivatives
(spin coefficients, GHP operators) are exact.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import jets as J
from .errors import DomainError, UsageError
from .geometry import Chart, chart_jets, check_point, metric_at
from .jets.arrays import pack

SQRT2 = math.sqrt(2.0)


class Trivialization(str, enum.Enum):
    """Local trivializations of the spin frame over the sphere.

    ``N`` and ``S`` are regular on S^2 minus the north (resp. south) pole;
    ``M`` uses the Kinnersley m and is cut along phi = 0.
    """

    N = "N"
    S = "S"
    M = "M"

    @property
    def phase_exponent(self):
        """k such that the trivialization's m equals e^{i k phi} m_Kinnersley."""
        return {"N": -1, "S": 1, "M": 0}[self.value]


@dataclass(frozen=True, eq=False)
class Tetrad:
    """Null tetrad (l, n, m); each vector is a tuple of 4 jets or numbers."""

    l: tuple
    n: tuple
    m: tuple
    chart: Chart = Chart.BL_ANGULAR

    @property
    def mbar(self):
        return tuple(J.conj(c) if isinstance(c, J.Jet2) else complex(c).conjugate()
                     for c in self.m)

    def vectors(self):
        return (self.l, self.n, self.m, self.mbar)

    def values(self):
        """4x4 complex array, rows l, n, m, mbar."""
        return pack(self.vectors(), order=0)[0]

    def arrays(self):
        """(value, grad, hess) arrays with shapes (4,4), (4,4,4), (4,4,4,4)."""
        return pack(self.vectors())


def _vec(*comps):
    return tuple(comps)


def _angular_tetrad(params, point):
    M, a = params.mass, params.spin
    t, r, th, ph = J.lift_point(point.coords)
    ct, st = J.cos(th), J.sin(th)
    rho2 = r * r + a * a * ct * ct
    delta = r * r - 2.0 * M * r + a * a
    p = r + 1j * a * ct
    z = J.constant(0.0)
    mfac = 1.0 / (SQRT2 * p)
    m = _vec(1j * a * st * mfac, z, mfac, 1j * mfac / st)
    if point.chart is Chart.KERR_STAR:
        l = _vec(2.0 * (r * r + a * a), delta, z, J.constant(2.0 * a))
        n = _vec(z, -0.5 / rho2, z, z)
    else:
        l = _vec((r * r + a * a) / delta, J.constant(1.0), z, a / delta)
        n2 = 2.0 * rho2
        n = _vec((r * r + a * a) / n2, -delta / n2, z, a / n2)
    return l, n, m


def _stereo_tetrad(params, point):
    """Tetrad with the chart's native m (the Psi_N or Psi_S form)."""
    M, a = params.mass, params.spin
    t, r, x, y = J.lift_point(point.coords)
    north = point.chart is Chart.BL_STEREO_N
    R2 = x * x + y * y
    q = 1.0 + R2
    ct = (R2 - 1.0) / q if north else (1.0 - R2) / q
    rho2 = r * r + a * a * ct * ct
    delta = r * r - 2.0 * M * r + a * a
    p = r + 1j * a * ct
    z = J.constant(0.0)
    one = J.constant(1.0)
    # d_phi = -y d_x + x d_y in both charts
    l = _vec((r * r + a * a) / delta, one, -a * y / delta, a * x / delta)
    n2 = 2.0 * rho2
    n = _vec((r * r + a * a) / n2, -delta / n2, -a * y / n2, a * x / n2)
    mfac = 1.0 / (SQRT2 * p)
    if north:
        w = x - 1j * y
        m = _vec(2j * a * w / q * mfac, z, -0.5 * q * mfac, 0.5j * q * mfac)
    else:
        w = x + 1j * y
        m = _vec(2j * a * w / q * mfac, z, 0.5 * q * mfac, 0.5j * q * mfac)
    return l, n, m


def _native_exponent(chart):
    if chart is Chart.BL_STEREO_N:
        return -1
    if chart is Chart.BL_STEREO_S:
        return 1
    return 0


def _check(params, point):
    try:
        check_point(params, point)
    except DomainError as exc:
        if point.chart.is_angular and "axis" in str(exc):
            raise DomainError("point too close to the axis for the angular chart; the m vector "
                              "degenerates there, use BL-stereoN or BL-stereoS", point.coords)
        raise


def kinnersley_at(params, point):
    """Kinnersley tetrad in the point's chart.

    In the stereographic charts m is the chart-regular form (e^{-i phi} m in
    BL-stereoN, e^{i phi} m in BL-stereoS); use :func:`tetrad_for` to pick a
    trivialization explicitly.
    """
    if point.chart is Chart.KERR_STAR:
        raise UsageError("the Kinnersley tetrad is singular at the horizon; "
                         "use extended_tetrad_at in Kerr-star coordinates")
    _check(params, point)
    if point.chart is Chart.BL_ANGULAR:
        l, n, m = _angular_tetrad(params, point)
    else:
        l, n, m = _stereo_tetrad(params, point)
    return Tetrad(l, n, m, point.chart)


def extended_tetrad_at(params, point):
    """Horizon-regular tetrad (Delta l, n / Delta, m) in Kerr-star coordinates."""
    if point.chart is not Chart.KERR_STAR:
        raise UsageError("extended_tetrad_at expects a KerrStar-angular point")
    _check(params, point)
    l, n, m = _angular_tetrad(params, point)
    return Tetrad(l, n, m, point.chart)


def tetrad_for(params, point, triv):
    """Tetrad of trivialization ``triv`` (N, S or M), expressed in the point's chart."""
    triv = Trivialization(triv)
    if point.chart is Chart.KERR_STAR:
        base = extended_tetrad_at(params, point)
    else:
        base = kinnersley_at(params, point)
    k = triv.phase_exponent - _native_exponent(point.chart)
    if k == 0:
        return base
    phase = chart_jets(point).eiphi ** k
    return Tetrad(base.l, base.n, tuple(phase * c for c in base.m), point.chart)


def act_tetrad(tetrad, z, swap=0):
    """(l, n, m) -> (|z| l, |z|^-1 n, z/|z| m), then (l, n, m) -> (n, l, mbar) if swap."""
    z = complex(z)
    if z == 0:
        raise UsageError("the C* action needs z != 0")
    if swap not in (0, 1, False, True):
        raise UsageError("swap must be 0 or 1")
    az = abs(z)
    ph = z / az
    l = tuple(az * c for c in tetrad.l)
    n = tuple(c / az for c in tetrad.n)
    m = tuple(ph * c for c in tetrad.m)
    out = Tetrad(l, n, m, tetrad.chart)
    if swap:
        out = Tetrad(out.n, out.l, out.mbar, tetrad.chart)
    return out


RESIDUAL_LABELS = ("g(l,l)", "g(l,n)-1", "g(l,m)", "g(l,mbar)", "g(n,n)", "g(n,m)",
                   "g(n,mbar)", "g(m,m)", "g(m,mbar)+1", "g(mbar,mbar)")
_PAIRS = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))
_TARGET = {(0, 1): 1.0, (2, 3): -1.0}


def gram(params, point, tetrad):
    """4x4 matrix of complex-bilinear products of (l, n, m, mbar)."""
    E = tetrad.values()
    g = metric_at(params, point).g
    return E @ g @ E.T


def tetrad_residuals(params, point, tetrad):
    """The ten null-tetrad inner-product conditions, as label -> complex residual."""
    G = gram(params, point, tetrad)
    return {lab: complex(G[i, j] - _TARGET.get((i, j), 0.0))
            for lab, (i, j) in zip(RESIDUAL_LABELS, _PAIRS)}


def max_residual(residuals):
    return max(abs(v) for v in residuals.values())


def orientation_sign(tetrad):
    """Sign of det((n+l)/sqrt2, Re m, -Im m, (l-n)/sqrt2) in chart components."""
    E = tetrad.values()
    l, n, m = E[0].real, E[1].real, E[2]
    F = np.array([(n + l) / SQRT2, m.real, -m.imag, (l - n) / SQRT2])
    return int(np.sign(np.linalg.det(F)))


def future_directed(tetrad):
    """True when l and n have positive time components."""
    E = tetrad.values()
    return bool(E[0, 0].real > 0 and E[1, 0].real > 0)
