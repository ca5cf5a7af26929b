"""Spin-weighted fields on the Kerr exterior.

A field of weight (s, w) is described by its components in the three local
trivializations N, S and M. The trivializations' tetrads share l and n and
differ in m:

    m_N = e^{-i phi} m,   m_S = e^{i phi} m,   m_M = m  (Kinnersley)

which corresponds to spin frames differing by the half-angle phases
e^{i phi/2}. A component of spin weight s therefore changes as

    u_M = e^{i s phi} u_N,   u_S = e^{i s phi} u_M = e^{2 i s phi} u_N,

independently of t, r and of the boost weight w. The M trivialization is cut
along phi = 0 (phi is taken in (0, 2 pi) there).
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import jets as J
from .errors import DomainError, UsageError
from .geometry import chart_jets
from .newman_penrose import L, MB, MV, N, frame_data_for
from .tetrad import Trivialization

TRIVS = (Trivialization.N, Trivialization.S, Trivialization.M)
_ORDER = {Trivialization.N: 0, Trivialization.M: 1, Trivialization.S: 2}


def _doubled(x):
    f = Fraction(x).limit_denominator(1000) if isinstance(x, float) else Fraction(x)
    if (2 * f).denominator != 1:
        raise UsageError("weights must be half-integers, got %r" % (x,))
    return int(2 * f)


@dataclass(frozen=True, order=True)
class SpinWeight:
    """Spin and boost weight stored doubled, so half-integers are exact."""

    two_s: int
    two_w: int

    def __post_init__(self):
        if not (isinstance(self.two_s, (int, np.integer)) and isinstance(self.two_w, (int, np.integer))):
            raise UsageError("doubled weights must be integers")
        object.__setattr__(self, "two_s", int(self.two_s))
        object.__setattr__(self, "two_w", int(self.two_w))

    @classmethod
    def of(cls, s, w):
        """Weight (s, w) from half-integers (ints, floats or Fractions)."""
        return cls(_doubled(s), _doubled(w))

    @property
    def s(self):
        return self.two_s / 2

    @property
    def w(self):
        return self.two_w / 2

    def __add__(self, other):
        return SpinWeight(self.two_s + other.two_s, self.two_w + other.two_w)

    def conj(self):
        return SpinWeight(-self.two_s, self.two_w)

    def __str__(self):
        return "(%s, %s)" % (Fraction(self.two_s, 2), Fraction(self.two_w, 2))


# -- transitions ------------------------------------------------------------

def transition_exponent(weight, frm, to):
    """Doubled exponent e such that u_to = e^{i e phi / 2} u_from."""
    return weight.two_s * (_ORDER[Trivialization(to)] - _ORDER[Trivialization(frm)])


def chart_transition(value, weight, phi, frm, to, theta=None, delta=1e-3):
    """Component of a weight-(s, w) field in trivialization ``to``, from ``frm``."""
    frm, to = Trivialization(frm), Trivialization(to)
    if phi is None or not math.isfinite(phi):
        raise DomainError("the azimuth is undefined (pole point)", (theta, phi))
    if theta is not None and math.sin(theta) == 0.0:
        raise DomainError("the azimuth is undefined at the poles", (theta, phi))
    e = transition_exponent(weight, frm, to)
    ph = phi % (2.0 * math.pi)
    if Trivialization.M in (frm, to) and not delta < ph < 2.0 * math.pi - delta:
        raise DomainError("the M trivialization is cut along phi = 0", (theta, phi))
    return complex(value) * cmath.exp(0.5j * e * ph)


def transition_jet(point, weight, frm, to):
    """The transition factor as a jet in the point's chart."""
    e = transition_exponent(weight, frm, to)
    if e == 0:
        return J.constant(1.0)
    cj = chart_jets(point)
    if e % 2 == 0:
        return cj.eiphi ** (e // 2)
    return cj.eihalf ** e


def _check_m_domain(point, delta=1e-3):
    if not point.chart.is_angular:
        x, y = point.coords[2], point.coords[3]
        if x == 0.0 and y == 0.0:
            raise DomainError("the M trivialization is undefined at the poles", point.coords)
        phi = math.atan2(y, x) % (2.0 * math.pi)
    else:
        phi = point.coords[3] % (2.0 * math.pi)
    if not delta < phi < 2.0 * math.pi - delta:
        raise DomainError("point on the M-trivialization cut phi = 0", point.coords)


# -- fields -----------------------------------------------------------------

class SpinWeightedField:
    """Section of the weight-(s, w) bundle, given by component functions.

    ``components`` maps trivializations to callables ``point -> Jet2`` (jets
    in the point's chart). Missing trivializations are derived through the
    transition factors. Alternatively ``evaluator(triv, point)`` computes any
    component directly (used for operator outputs).
    """

    def __init__(self, weight, components=None, evaluator=None, name="field"):
        if not isinstance(weight, SpinWeight):
            raise UsageError("weight must be a SpinWeight")
        if (components is None) == (evaluator is None):
            raise UsageError("give exactly one of components or evaluator")
        self.weight = weight
        self.name = name
        self._components = {Trivialization(k): v for k, v in (components or {}).items()}
        self._evaluator = evaluator

    def component(self, triv, point):
        triv = Trivialization(triv)
        if triv is Trivialization.M:
            _check_m_domain(point)
        if self._evaluator is not None:
            return self._evaluator(triv, point)
        if triv in self._components:
            return self._components[triv](point)
        src = next(t for t in TRIVS if t in self._components)
        return transition_jet(point, self.weight, src, triv) * self._components[src](point)

    def value(self, triv, point):
        return complex(self.component(triv, point).value)

    # algebra; weights must match for sums and add for products
    def __add__(self, other):
        if not isinstance(other, SpinWeightedField):
            return NotImplemented
        if other.weight != self.weight:
            raise UsageError("cannot add fields of weights %s and %s" % (self.weight, other.weight))
        return SpinWeightedField(self.weight, evaluator=lambda t, p: self.component(t, p)
                                 + other.component(t, p), name="(%s+%s)" % (self.name, other.name))

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, SpinWeightedField):
            return SpinWeightedField(self.weight + other.weight,
                                     evaluator=lambda t, p: self.component(t, p) * other.component(t, p),
                                     name="%s*%s" % (self.name, other.name))
        c = complex(other)
        return SpinWeightedField(self.weight, evaluator=lambda t, p: self.component(t, p) * c,
                                 name="%r*%s" % (other, self.name))

    __rmul__ = __mul__

    def conj(self):
        # the conjugate of a weight-(s, w) section has weight (-s, w)
        def ev(t, p):
            return J.conj(self.component(t, p))

        return SpinWeightedField(self.weight.conj(), evaluator=ev, name="conj(%s)" % self.name)

    def __repr__(self):
        return "SpinWeightedField(%s, weight=%s)" % (self.name, self.weight)


# -- GHP operators -----------------------------------------------------------

# op -> (direction index, index whose a() enters conjugated, doubled weight shift)
_OPS = {
    "thorn": (L, L, (0, 2)),
    "thorn_prime": (N, N, (0, -2)),
    "eth": (MV, MB, (2, 0)),
    "eth_prime": (MB, MV, (-2, 0)),
}


def ghp_component(op, weight, u, params, point, triv):
    """One GHP operator applied to the component jet ``u`` in trivialization ``triv``.

    (-(w+s) a(E) - (w-s) conj(a(E'))) u + E(u), with (E, E') = (l, l), (n, n),
    (m, mbar), (mbar, m) for thorn, thorn', eth, eth'.
    """
    try:
        A, B, _ = _OPS[op]
    except KeyError:
        raise UsageError("unknown GHP operator %r" % (op,)) from None
    fd = frame_data_for(params, point, Trivialization(triv))
    s, w = weight.s, weight.w
    coef = -(w + s) * fd.a.jet(A) - (w - s) * J.conj(fd.a.jet(B))
    vec = fd.tetrad.vectors()[A]
    out = coef * u
    for mu in range(4):
        out = out + vec[mu] * u.partial(mu)
    return out


def ghp_apply(op, field, params):
    """Apply thorn, thorn_prime, eth or eth_prime; returns a new field."""
    if op not in _OPS:
        raise UsageError("unknown GHP operator %r" % (op,))
    ds, dw = _OPS[op][2]

    def ev(triv, point):
        return ghp_component(op, field.weight, field.component(triv, point), params, point, triv)

    return SpinWeightedField(field.weight + SpinWeight(ds, dw), evaluator=ev,
                             name="%s(%s)" % (op, field.name))


MULTIPLIER_WEIGHTS = {
    "b_mbar": SpinWeight(0, 2),
    "b_n": SpinWeight(2, 0),
    "c_l": SpinWeight(-2, 0),
    "c_m": SpinWeight(0, -2),
}


def _multiplier_jet(name, params, point, triv):
    fd = frame_data_for(params, point, Trivialization(triv))
    if name == "b_mbar":
        return fd.b.jet(MB)
    if name == "b_n":
        return fd.b.jet(N)
    if name == "c_l":
        return fd.c.jet(L)
    if name == "c_m":
        return fd.c.jet(MV)
    raise UsageError("unknown multiplier %r" % (name,))


def weighted_multipliers(params, point, trivialization):
    """{name: (value, weight)} for b(mbar), b(n), c(l), c(m) in a trivialization."""
    return {k: (complex(_multiplier_jet(k, params, point, trivialization).value), w)
            for k, w in MULTIPLIER_WEIGHTS.items()}


def multiplier_field(name, params):
    """b(mbar), b(n), c(l) or c(m) as a weighted field (order-1 jets)."""
    if name not in MULTIPLIER_WEIGHTS:
        raise UsageError("unknown multiplier %r" % (name,))
    return SpinWeightedField(MULTIPLIER_WEIGHTS[name],
                             evaluator=lambda t, p: _multiplier_jet(name, params, p, t), name=name)


# -- seeded test fields ------------------------------------------------------

DEFAULT_SEED = 0xC0FFEE
_P_MONOMIALS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))  # powers of (t, r)
_T_MODES = tuple((j, k) for j in range(-3, 4) for k in range(-3, 4) if abs(j) + abs(k) <= 3)


class TestField(SpinWeightedField):
    """u = P(t, r) * sum_{jk} c_jk e^{i j theta} e^{i k phi} in one trivialization.

    P has degree <= 2; coefficients are drawn from ``numpy.random.default_rng``
    with the given seed and stream index. ``tau``/``chi`` shift the field in t
    and phi.
    """

    __test__ = False  # not a pytest class

    def __init__(self, weight, seed=DEFAULT_SEED, index=0, native="M", tau=0.0, chi=0.0):
        rng = np.random.default_rng([int(seed), int(index)])
        self.seed, self.index, self.tau, self.chi = seed, index, float(tau), float(chi)
        self.pc = rng.normal(size=len(_P_MONOMIALS)) + 1j * rng.normal(size=len(_P_MONOMIALS))
        self.pc /= np.array([1.0, 1.0, 3.0, 1.0, 3.0, 9.0])  # keep terms comparable for r ~ 3
        self.tc = (rng.normal(size=len(_T_MODES)) + 1j * rng.normal(size=len(_T_MODES))) / 4.0
        self.native = Trivialization(native)
        super().__init__(weight, components={self.native: self._evaluate},
                         name="test[%d]" % index)

    def shifted(self, tau=0.0, chi=0.0):
        return TestField(self.weight, self.seed, self.index, self.native,
                         self.tau + tau, self.chi + chi)

    def _evaluate(self, point):
        cj = chart_jets(point)
        t = cj.t + self.tau
        r = cj.r
        P = J.constant(0.0)
        for c, (i, k) in zip(self.pc, _P_MONOMIALS):
            P = P + c * (t ** i) * (r ** k) if i or k else P + c
        eith = cj.cos_theta + 1j * cj.sin_theta
        eiphi = cj.eiphi * cmath.exp(1j * self.chi)
        T = J.constant(0.0)
        for c, (j, k) in zip(self.tc, _T_MODES):
            T = T + c * (eith ** j) * (eiphi ** k)
        return P * T


def test_field(s, w, seed=DEFAULT_SEED, index=0, native="M"):
    return TestField(SpinWeight.of(s, w), seed, index, native)


test_field.__test__ = False
