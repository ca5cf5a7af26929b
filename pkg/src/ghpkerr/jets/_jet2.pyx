# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled second-order jets; same interface as ``_jetpy``."""

import cmath

from ..errors import DomainError, UsageError

cdef enum:
    NDIM = 4
    NPACK = 10

BACKEND = "cython"

cdef int _PI[4][4]
cdef int _PA[10]
cdef int _PB[10]


cdef void _init_tables():
    cdef int i, j, k = 0
    for i in range(NDIM):
        for j in range(i, NDIM):
            _PI[i][j] = k
            _PI[j][i] = k
            _PA[k] = i
            _PB[k] = j
            k += 1


_init_tables()


cdef inline Jet2 _new(double complex v, int order):
    cdef Jet2 r = Jet2.__new__(Jet2)
    r.value = v
    r.order = order
    return r


cdef Jet2 _chain(Jet2 x, double complex f0, double complex f1, double complex f2):
    cdef Jet2 r = _new(f0, x.order)
    cdef int k
    if x.order >= 1:
        for k in range(NDIM):
            r.g[k] = f1 * x.g[k]
        if x.order >= 2:
            for k in range(NPACK):
                r.h[k] = f1 * x.h[k] + f2 * x.g[_PA[k]] * x.g[_PB[k]]
    return r


cdef Jet2 _scale(Jet2 x, double complex c):
    cdef Jet2 r = _new(c * x.value, x.order)
    cdef int k
    if x.order >= 1:
        for k in range(NDIM):
            r.g[k] = c * x.g[k]
        if x.order >= 2:
            for k in range(NPACK):
                r.h[k] = c * x.h[k]
    return r


cdef Jet2 _shift(Jet2 x, double complex c):
    cdef Jet2 r = _new(x.value + c, x.order)
    r.g = x.g
    r.h = x.h
    return r


cdef Jet2 _add(Jet2 a, Jet2 b, double complex sb):
    cdef int order = a.order if a.order < b.order else b.order
    cdef Jet2 r = _new(a.value + sb * b.value, order)
    cdef int k
    if order >= 1:
        for k in range(NDIM):
            r.g[k] = a.g[k] + sb * b.g[k]
        if order >= 2:
            for k in range(NPACK):
                r.h[k] = a.h[k] + sb * b.h[k]
    return r


cdef Jet2 _mul(Jet2 a, Jet2 b):
    cdef int order = a.order if a.order < b.order else b.order
    cdef double complex av = a.value, bv = b.value
    cdef Jet2 r = _new(av * bv, order)
    cdef int k, i, j
    if order >= 1:
        for k in range(NDIM):
            r.g[k] = av * b.g[k] + bv * a.g[k]
        if order >= 2:
            for k in range(NPACK):
                i = _PA[k]
                j = _PB[k]
                r.h[k] = av * b.h[k] + bv * a.h[k] + a.g[i] * b.g[j] + a.g[j] * b.g[i]
    return r


cdef Jet2 _recip(Jet2 x):
    cdef double complex v = x.value
    if v == 0:
        raise DomainError("reciprocal of a zero-valued jet")
    cdef double complex r = 1.0 / v
    return _chain(x, r, -r * r, 2.0 * r * r * r)


cdef Jet2 _as_jet(object x):
    if isinstance(x, Jet2):
        return <Jet2> x
    return constant(x)


cdef class Jet2:
    """Complex scalar with first and second partial derivatives in 4 coordinates.

    ``order`` is 2 for a full jet; it drops to 1 (resp. 0) after one (resp. two)
    calls to :meth:`partial`, and binary operations take the minimum order of
    their operands. Derivative data beyond ``order`` is not available.
    """

    cdef public double complex value
    cdef double complex g[4]
    cdef double complex h[10]
    cdef readonly int order

    def __init__(self, value, grad=None, hess=None, order=2):
        cdef int i, j, k
        order = int(order)
        if order not in (0, 1, 2):
            raise UsageError("jet order must be 0, 1 or 2")
        self.value = complex(value)
        self.order = order
        for k in range(NDIM):
            self.g[k] = 0
        for k in range(NPACK):
            self.h[k] = 0
        if order >= 1 and grad is not None:
            gl = [complex(c) for c in grad]
            if len(gl) != NDIM:
                raise UsageError("grad must have 4 components")
            for k in range(NDIM):
                self.g[k] = gl[k]
        if order >= 2 and hess is not None:
            rows = [[complex(c) for c in row] for row in hess]
            if len(rows) != NDIM or any(len(r) != NDIM for r in rows):
                raise UsageError("hess must be 4x4")
            for k in range(NPACK):
                i = _PA[k]
                j = _PB[k]
                if rows[i][j] != rows[j][i]:
                    raise UsageError("hess must be symmetric")
                self.h[k] = rows[i][j]

    @property
    def grad(self):
        if self.order < 1:
            raise UsageError("gradient not available on an order-0 jet")
        return (self.g[0], self.g[1], self.g[2], self.g[3])

    @property
    def hess(self):
        if self.order < 2:
            raise UsageError("hessian not available on a jet of order < 2")
        return tuple(tuple(self.h[_PI[i][j]] for j in range(NDIM)) for i in range(NDIM))

    def d(self, int i):
        """First partial derivative along coordinate ``i`` (a number)."""
        if self.order < 1:
            raise UsageError("gradient not available on an order-0 jet")
        if not 0 <= i < NDIM:
            raise UsageError("coordinate index out of range: %r" % (i,))
        return self.g[i]

    def dd(self, int i, int j):
        """Second partial derivative along coordinates ``i``, ``j``."""
        if self.order < 2:
            raise UsageError("hessian not available on a jet of order < 2")
        if not (0 <= i < NDIM and 0 <= j < NDIM):
            raise UsageError("coordinate index out of range")
        return self.h[_PI[i][j]]

    def partial(self, int k):
        """The jet of the partial derivative along coordinate ``k``."""
        cdef Jet2 r
        cdef int j
        if self.order < 1:
            raise UsageError("cannot differentiate an order-0 jet")
        if not 0 <= k < NDIM:
            raise UsageError("coordinate index out of range: %r" % (k,))
        r = _new(self.g[k], self.order - 1)
        if self.order == 2:
            for j in range(NDIM):
                r.g[j] = self.h[_PI[k][j]]
        return r

    def truncate(self, int order):
        if order > self.order:
            order = self.order
        cdef Jet2 r = _new(self.value, order)
        r.g = self.g
        r.h = self.h
        return r

    def __repr__(self):
        return "Jet2(value=%r, order=%d)" % (self.value, self.order)

    def __reduce__(self):
        grad = self.grad if self.order >= 1 else None
        hess = self.hess if self.order >= 2 else None
        return (Jet2, (self.value, grad, hess, self.order))

    def __add__(self, other):
        if isinstance(other, Jet2):
            return _add(self, <Jet2> other, 1.0)
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        return _shift(self, c)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return _add(self, <Jet2> other, -1.0)
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        return _shift(self, -c)

    def __rsub__(self, other):
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        return _shift(_scale(self, -1.0), c)

    def __neg__(self):
        return _scale(self, -1.0)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Jet2):
            return _mul(self, <Jet2> other)
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        return _scale(self, c)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return _mul(self, _recip(<Jet2> other))
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        if c == 0:
            raise DomainError("division by zero")
        return _scale(self, 1.0 / c)

    def __rtruediv__(self, other):
        try:
            c = complex(other)
        except TypeError:
            return NotImplemented
        return _scale(_recip(self), c)

    def __pow__(self, n, mod):
        if not isinstance(n, int):
            raise UsageError("only integer powers are supported")
        x = self.value
        if n == 0:
            return constant(1.0)
        if n < 0 and x == 0:
            raise DomainError("negative power of a zero-valued jet")
        return _chain(self, x ** n, n * x ** (n - 1),
                      n * (n - 1) * x ** (n - 2) if n != 1 else 0j)

    def conj(self):
        cdef Jet2 r = _new(self.value.conjugate(), self.order)
        cdef int k
        for k in range(NDIM):
            r.g[k] = self.g[k].conjugate()
        for k in range(NPACK):
            r.h[k] = self.h[k].conjugate()
        return r

    def abs2(self):
        return _mul(self, self.conj())


cpdef Jet2 constant(value):
    cdef Jet2 r = _new(complex(value), 2)
    cdef int k
    for k in range(NDIM):
        r.g[k] = 0
    for k in range(NPACK):
        r.h[k] = 0
    return r


def lift(index, value):
    """Seed coordinate ``index`` at ``value``: grad is the indicator, hess zero."""
    if not isinstance(index, int) or not 0 <= index < NDIM:
        raise UsageError("coordinate index out of range: %r" % (index,))
    cdef Jet2 r = constant(value)
    r.g[<int> index] = 1.0
    return r


def recip(x):
    return _recip(_as_jet(x))


def sqrt(x):
    cdef Jet2 j = _as_jet(x)
    cdef double complex v = j.value
    if v == 0:
        raise DomainError("sqrt of a zero-valued jet is not differentiable")
    cdef double complex s = cmath.sqrt(v)
    return _chain(j, s, 0.5 / s, -0.25 / (s * v))


def sin(x):
    cdef Jet2 j = _as_jet(x)
    s = cmath.sin(j.value)
    c = cmath.cos(j.value)
    return _chain(j, s, c, -s)


def cos(x):
    cdef Jet2 j = _as_jet(x)
    s = cmath.sin(j.value)
    c = cmath.cos(j.value)
    return _chain(j, c, -s, -c)


def exp(x):
    cdef Jet2 j = _as_jet(x)
    e = cmath.exp(j.value)
    return _chain(j, e, e, e)


def conj(x):
    return _as_jet(x).conj()


def abs2(x):
    return _as_jet(x).abs2()
