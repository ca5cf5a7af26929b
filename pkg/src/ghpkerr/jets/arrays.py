"""Tensor-valued first-order jets for contractions with numpy.

Scalar :class:`Jet2` objects build closed-form components; tensor algebra
(Christoffel symbols, curvature, covariant derivatives of frames) is done on
packed arrays. :class:`ArrayJet` holds a value array and its gradient, with
the derivative index as the trailing axis.
"""

import string

import numpy as np

from . import Jet2

_LETTERS = set(string.ascii_letters)


def pack(jets, order=2):
    """Pack a nested sequence of jets into (value, grad, hess) arrays.

    ``hess`` is None when ``order`` < 2.
    """
    arr = np.asarray(jets, dtype=object)
    shape = arr.shape
    flat = arr.ravel()
    val = np.empty(flat.size, dtype=complex)
    grad = np.empty((flat.size, 4), dtype=complex)
    hess = np.empty((flat.size, 4, 4), dtype=complex) if order >= 2 else None
    for k, j in enumerate(flat):
        if isinstance(j, Jet2):
            val[k] = j.value
            grad[k] = j.grad
            if hess is not None:
                hess[k] = j.hess
        else:
            val[k] = complex(j)
            grad[k] = 0.0
            if hess is not None:
                hess[k] = 0.0
    val = val.reshape(shape)
    grad = grad.reshape(shape + (4,))
    if hess is not None:
        hess = hess.reshape(shape + (4, 4))
    return val, grad, hess


class ArrayJet:
    """Array of values with first derivatives (last axis of ``grad``)."""

    __slots__ = ("val", "grad")

    def __init__(self, val, grad=None):
        self.val = np.asarray(val)
        if grad is None:
            grad = np.zeros(self.val.shape + (4,), dtype=self.val.dtype)
        self.grad = np.asarray(grad)
        if self.grad.shape != self.val.shape + (4,):
            raise ValueError("grad shape %r does not match value shape %r"
                             % (self.grad.shape, self.val.shape))

    @property
    def shape(self):
        return self.val.shape

    def __getitem__(self, idx):
        return ArrayJet(self.val[idx], self.grad[idx])

    def __add__(self, other):
        if isinstance(other, ArrayJet):
            return ArrayJet(self.val + other.val, self.grad + other.grad)
        return ArrayJet(self.val + other, self.grad)

    __radd__ = __add__

    def __neg__(self):
        return ArrayJet(-self.val, -self.grad)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if isinstance(c, ArrayJet):
            return ArrayJet(self.val * c.val,
                            self.val[..., None] * c.grad + c.val[..., None] * self.grad)
        return ArrayJet(self.val * c, self.grad * c)

    __rmul__ = __mul__

    def conj(self):
        return ArrayJet(np.conj(self.val), np.conj(self.grad))

    def transpose(self, *axes):
        n = self.val.ndim
        return ArrayJet(self.val.transpose(axes), self.grad.transpose(tuple(axes) + (n,)))

    def to_jets(self):
        """Scalar :class:`Jet2` objects of order 1, in an object array."""
        out = np.empty(self.val.shape, dtype=object)
        for idx in np.ndindex(*self.val.shape):
            out[idx] = Jet2(self.val[idx], self.grad[idx], None, order=1)
        return out

    def jet(self, *idx):
        return Jet2(self.val[idx], self.grad[idx], None, order=1)


def jeinsum(subscripts, *operands):
    """``np.einsum`` with the product rule applied to :class:`ArrayJet` operands.

    Plain arrays are treated as constants.
    """
    inputs, output = subscripts.replace(" ", "").split("->")
    inputs = inputs.split(",")
    if len(inputs) != len(operands):
        raise ValueError("subscripts do not match number of operands")
    used = set(subscripts)
    d = sorted(_LETTERS - used)[0]
    vals = [op.val if isinstance(op, ArrayJet) else np.asarray(op) for op in operands]
    val = np.einsum(subscripts, *vals, optimize=True)
    grad = None
    for k, op in enumerate(operands):
        if not isinstance(op, ArrayJet):
            continue
        args = list(vals)
        args[k] = op.grad
        ins = list(inputs)
        ins[k] = ins[k] + d
        term = np.einsum(",".join(ins) + "->" + output + d, *args, optimize=True)
        grad = term if grad is None else grad + term
    if grad is None:
        grad = np.zeros(np.shape(val) + (4,), dtype=np.result_type(val))
    return ArrayJet(val, grad)
