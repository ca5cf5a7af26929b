"""Unit quaternions, the Hopf map S^3 -> S^2, the frame double cover
S^3 -> SO(3) and the map f from oriented orthonormal sphere frames to the m
vector of a null tetrad.

Frames are triples (omega, X, Y) of unit vectors in R^3 with omega the base
point and (X, Y) an orthonormal tangent pair, (omega, X, Y) positively
oriented. The sphere is embedded in the standard way with theta measured from
e_3.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError
from .geometry import SpacetimePoint, metric_at

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k."""

    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __post_init__(self):
        for k in ("a", "b", "c", "d"):
            object.__setattr__(self, k, float(getattr(self, k)))

    @classmethod
    def from_array(cls, v):
        a, b, c, d = (float(x) for x in v)
        return cls(a, b, c, d)

    @classmethod
    def unit_complex(cls, angle):
        """cos(angle) + i sin(angle), an element of the U(1) fibre group."""
        return cls(math.cos(angle), math.sin(angle), 0.0, 0.0)

    def as_array(self):
        return np.array([self.a, self.b, self.c, self.d])

    def __mul__(self, o):
        if not isinstance(o, Quaternion):
            return Quaternion(self.a * o, self.b * o, self.c * o, self.d * o)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def conj(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return math.sqrt(self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2)

    def normalized(self):
        n = self.norm()
        if n == 0:
            raise UsageError("cannot normalize the zero quaternion")
        return self * (1.0 / n)

    def imag(self):
        return np.array([self.b, self.c, self.d])


I = Quaternion(0, 1, 0, 0)
J_ = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def quat_ops(tag, *args):
    """'mul' (any number of factors), 'conj' or 'norm'."""
    if tag == "mul":
        if not args:
            raise UsageError("mul needs at least one quaternion")
        out = args[0]
        for q in args[1:]:
            out = out * q
        return out
    if tag == "conj":
        (q,) = args
        return q.conj()
    if tag == "norm":
        (q,) = args
        return q.norm()
    raise UsageError("unknown quaternion operation %r" % (tag,))


def _check_unit(h, tol):
    if abs(h.norm() - 1.0) > tol:
        raise UsageError("expected a unit quaternion (|h| = %.17g)" % h.norm())


def _conjugate_by(h, q):
    return (h * q * h.conj()).imag()


def hopf_map(h, tol=1e-10):
    """Coordinates of h i h* in the (i, j, k) basis."""
    _check_unit(h, tol)
    return _conjugate_by(h, I)


def frame_map(h, tol=1e-10):
    """Rotation matrix with columns h i h*, h j h*, h k h*."""
    _check_unit(h, tol)
    return np.column_stack([_conjugate_by(h, q) for q in (I, J_, K)])


def rotate_tangent_columns(R, angle):
    """Columns (C1, cos C2 + sin C3, -sin C2 + cos C3)."""
    c, s = math.cos(angle), math.sin(angle)
    C1, C2, C3 = R[:, 0], R[:, 1], R[:, 2]
    return np.column_stack([C1, c * C2 + s * C3, -s * C2 + c * C3])


def frame_of(R):
    """(omega, X, Y) from a rotation matrix's columns."""
    R = np.asarray(R, dtype=float)
    return R[:, 0].copy(), R[:, 1].copy(), R[:, 2].copy()


def act_frame(frame, z):
    """(omega, X, Y) . z = (omega, Re(z (X + iY)), Im(z (X + iY))) for |z| = 1."""
    z = complex(z)
    if abs(abs(z) - 1.0) > 1e-12:
        raise UsageError("the frame action needs |z| = 1")
    w, X, Y = (np.asarray(v, dtype=float) for v in frame)
    Z = z * (X + 1j * Y)
    return w, Z.real, Z.imag


def check_frame(frame, tol=1e-10):
    w, X, Y = (np.asarray(v, dtype=float) for v in frame)
    G = np.array([w, X, Y])
    if np.abs(G @ G.T - np.eye(3)).max() > tol:
        raise UsageError("frame vectors must be orthonormal")
    if np.linalg.det(G) < 0:
        raise UsageError("frame (omega, X, Y) must be positively oriented")


def angles_of(omega):
    x, y, z = omega
    theta = math.acos(max(-1.0, min(1.0, z)))
    return theta, math.atan2(y, x) % (2.0 * math.pi)


def embed_tetrad_m(params, t, r, frame, tol=1e-10):
    """m = (-i a <X+iY, e3> d_t + X + i Y) / (sqrt2 p), p = r + i a cos(theta),

    returned as BL-angular components (t, r, theta, phi).
    """
    check_frame(frame, tol)
    w, X, Y = (np.asarray(v, dtype=float) for v in frame)
    theta, phi = angles_of(w)
    st, ct = math.sin(theta), math.cos(theta)
    if st < params.axis_delta:
        raise DomainError("frame base point too close to the axis for BL-angular components",
                          (t, r, theta, phi))
    a = params.spin
    p = r + 1j * a * ct
    Z = X + 1j * Y
    d_theta = np.array([ct * math.cos(phi), ct * math.sin(phi), -st])
    d_phi = np.array([-st * math.sin(phi), st * math.cos(phi), 0.0])
    e3 = np.array([0.0, 0.0, 1.0])
    vt = -1j * a * (Z @ e3)
    vth = Z @ d_theta
    vph = (Z @ d_phi) / (st * st)
    return np.array([vt, 0.0, vth, vph]) / (SQRT2 * p)


def frame_point(t, r, frame):
    theta, phi = angles_of(np.asarray(frame[0], dtype=float))
    return SpacetimePoint("BL-angular", (t, r, theta, phi))


def double_cover(params, t, r, h):
    """f(Psi(h)): the m vector attached to the unit quaternion h."""
    return embed_tetrad_m(params, t, r, frame_of(frame_map(h)))


def m_normalization(params, t, r, frame):
    """(g(m, m), g(m, mbar)) for the embedded m."""
    m = embed_tetrad_m(params, t, r, frame)
    g = metric_at(params, frame_point(t, r, frame)).g
    return complex(m @ g @ m), complex(m @ g @ m.conj())


def composite_residual(params, t, r, h, rho, power=2):
    """|f(Psi(h g)) - g^power f(Psi(h))| for g = e^{i rho}."""
    g = Quaternion.unit_complex(rho)
    lhs = double_cover(params, t, r, h * g)
    rhs = cmath.exp(1j * power * rho) * double_cover(params, t, r, h)
    return float(np.abs(lhs - rhs).max())


def random_unit_quaternion(rng):
    v = rng.normal(size=4)
    return Quaternion.from_array(v / np.linalg.norm(v))
