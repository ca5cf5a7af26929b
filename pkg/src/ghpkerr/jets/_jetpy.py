"""Pure-Python second-order jets.

This is the fallback used when the compiled ``_jet2`` extension is not
available (or when ``GHPKERR_PURE_PYTHON=1``). Both backends expose the
same class and functions and are tested against each other.

The Hessian is stored packed (upper triangle, 10 entries) so that it is
symmetric by construction.
"""

import cmath

from ..errors import DomainError, UsageError

NDIM = 4
# packed index of (i, j), i <= j
_PAIRS = tuple((i, j) for i in range(NDIM) for j in range(i, NDIM))
_PIDX = [[0] * NDIM for _ in range(NDIM)]
for _k, (_i, _j) in enumerate(_PAIRS):
    _PIDX[_i][_j] = _PIDX[_j][_i] = _k
_PIDX = tuple(tuple(row) for row in _PIDX)
_ZG = (0j, 0j, 0j, 0j)
_ZH = (0j,) * len(_PAIRS)

BACKEND = "python"


def _new(v, g, h, order):
    j = Jet2.__new__(Jet2)
    j.value = v
    j._g = g
    j._h = h
    j.order = order
    return j


def _chain(x, f0, f1, f2):
    """Jet of f(x) given f(x0), f'(x0), f''(x0)."""
    order = x.order
    g = h = None
    if order >= 1:
        xg = x._g
        g = tuple(f1 * gi for gi in xg)
        if order >= 2:
            xh = x._h
            h = tuple(f1 * xh[k] + f2 * xg[i] * xg[j]
                      for k, (i, j) in enumerate(_PAIRS))
    return _new(f0, g, h, order)


class Jet2:
    """Complex scalar with first and second partial derivatives in 4 coordinates.

    ``order`` is 2 for a full jet; it drops to 1 (resp. 0) after one (resp. two)
    calls to :meth:`partial`, and binary operations take the minimum order of
    their operands. Derivative data beyond ``order`` is not available.
    """

    __slots__ = ("value", "_g", "_h", "order")

    def __init__(self, value, grad=None, hess=None, order=2):
        order = int(order)
        if order not in (0, 1, 2):
            raise UsageError("jet order must be 0, 1 or 2")
        self.value = complex(value)
        self.order = order
        self._g = self._h = None
        if order >= 1:
            if grad is None:
                self._g = _ZG
            else:
                g = tuple(complex(c) for c in grad)
                if len(g) != NDIM:
                    raise UsageError("grad must have 4 components")
                self._g = g
        if order >= 2:
            if hess is None:
                self._h = _ZH
            else:
                rows = [[complex(c) for c in row] for row in hess]
                if len(rows) != NDIM or any(len(r) != NDIM for r in rows):
                    raise UsageError("hess must be 4x4")
                for i, j in _PAIRS:
                    if rows[i][j] != rows[j][i]:
                        raise UsageError("hess must be symmetric")
                self._h = tuple(rows[i][j] for i, j in _PAIRS)

    # -- accessors -----------------------------------------------------
    @property
    def grad(self):
        if self.order < 1:
            raise UsageError("gradient not available on an order-0 jet")
        return self._g

    @property
    def hess(self):
        if self.order < 2:
            raise UsageError("hessian not available on a jet of order < 2")
        h = self._h
        return tuple(tuple(h[_PIDX[i][j]] for j in range(NDIM)) for i in range(NDIM))

    def d(self, i):
        """First partial derivative along coordinate ``i`` (a number)."""
        return self.grad[i]

    def dd(self, i, j):
        """Second partial derivative along coordinates ``i``, ``j``."""
        if self.order < 2:
            raise UsageError("hessian not available on a jet of order < 2")
        return self._h[_PIDX[i][j]]

    def partial(self, k):
        """The jet of the partial derivative along coordinate ``k``."""
        if self.order < 1:
            raise UsageError("cannot differentiate an order-0 jet")
        if not 0 <= k < NDIM:
            raise UsageError("coordinate index out of range: %r" % (k,))
        if self.order == 2:
            h = self._h
            return _new(self._g[k], tuple(h[_PIDX[k][j]] for j in range(NDIM)), None, 1)
        return _new(self._g[k], None, None, 0)

    def truncate(self, order):
        order = min(order, self.order)
        return _new(self.value, self._g if order >= 1 else None,
                    self._h if order >= 2 else None, order)

    def __repr__(self):
        return "Jet2(value=%r, order=%d)" % (self.value, self.order)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Jet2):
            try:
                c = complex(other)
            except TypeError:
                return NotImplemented
            return _new(self.value + c, self._g, self._h, self.order)
        order = min(self.order, other.order)
        g = h = None
        if order >= 1:
            g = tuple(a + b for a, b in zip(self._g, other._g))
            if order >= 2:
                h = tuple(a + b for a, b in zip(self._h, other._h))
        return _new(self.value + other.value, g, h, order)

    __radd__ = __add__

    def __neg__(self):
        order = self.order
        g = tuple(-a for a in self._g) if order >= 1 else None
        h = tuple(-a for a in self._h) if order >= 2 else None
        return _new(-self.value, g, h, order)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Jet2):
            try:
                c = complex(other)
            except TypeError:
                return NotImplemented
            return _new(self.value - c, self._g, self._h, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, c):
        order = self.order
        g = tuple(c * a for a in self._g) if order >= 1 else None
        h = tuple(c * a for a in self._h) if order >= 2 else None
        return _new(c * self.value, g, h, order)

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            try:
                c = complex(other)
            except TypeError:
                return NotImplemented
            return self._scale(c)
        a, b = self.value, other.value
        order = min(self.order, other.order)
        g = h = None
        if order >= 1:
            ga, gb = self._g, other._g
            g = tuple(a * y + b * x for x, y in zip(ga, gb))
            if order >= 2:
                ha, hb = self._h, other._h
                h = tuple(a * hb[k] + b * ha[k] + ga[i] * gb[j] + ga[j] * gb[i]
                          for k, (i, j) in enumerate(_PAIRS))
        return _new(a * b, g, h, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet2):
            try:
                c = complex(other)
            except TypeError:
                return NotImplemented
            if c == 0:
                raise DomainError("division by zero")
            return self._scale(1.0 / c)
        return self * recip(other)

    def __rtruediv__(self, other):
        return recip(self) * other

    def __pow__(self, n):
        if not isinstance(n, int):
            raise UsageError("only integer powers are supported")
        x = self.value
        if n == 0:
            return constant(1.0)
        if n < 0 and x == 0:
            raise DomainError("negative power of a zero-valued jet")
        return _chain(self, x ** n, n * x ** (n - 1), n * (n - 1) * x ** (n - 2) if n != 1 else 0j)

    def conj(self):
        order = self.order
        g = tuple(a.conjugate() for a in self._g) if order >= 1 else None
        h = tuple(a.conjugate() for a in self._h) if order >= 2 else None
        return _new(self.value.conjugate(), g, h, order)

    def abs2(self):
        return self * self.conj()


def constant(value):
    return _new(complex(value), _ZG, _ZH, 2)


def lift(index, value):
    """Seed coordinate ``index`` at ``value``: grad is the indicator, hess zero."""
    if not isinstance(index, int) or not 0 <= index < NDIM:
        raise UsageError("coordinate index out of range: %r" % (index,))
    g = [0j] * NDIM
    g[index] = 1 + 0j
    return _new(complex(value), tuple(g), _ZH, 2)


def _as_jet(x):
    return x if isinstance(x, Jet2) else constant(x)


def recip(x):
    x = _as_jet(x)
    v = x.value
    if v == 0:
        raise DomainError("reciprocal of a zero-valued jet")
    r = 1.0 / v
    return _chain(x, r, -r * r, 2.0 * r * r * r)


def sqrt(x):
    x = _as_jet(x)
    v = x.value
    if v == 0:
        raise DomainError("sqrt of a zero-valued jet is not differentiable")
    s = cmath.sqrt(v)
    return _chain(x, s, 0.5 / s, -0.25 / (s * v))


def sin(x):
    x = _as_jet(x)
    s, c = cmath.sin(x.value), cmath.cos(x.value)
    return _chain(x, s, c, -s)


def cos(x):
    x = _as_jet(x)
    s, c = cmath.sin(x.value), cmath.cos(x.value)
    return _chain(x, c, -s, -c)


def exp(x):
    x = _as_jet(x)
    e = cmath.exp(x.value)
    return _chain(x, e, e, e)


def conj(x):
    return _as_jet(x).conj()


def abs2(x):
    return _as_jet(x).abs2()
