"""Order-2 forward-mode jets over the four spacetime coordinates.

The compiled backend (``_jet2``, built from Cython) is used when it is
importable; otherwise the pure-Python ``_jetpy`` backend is selected. Set
``GHPKERR_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ..errors import UsageError

if os.environ.get("GHPKERR_PURE_PYTHON", "") not in ("", "0"):
    from . import _jetpy as _impl
else:
    try:
        from . import _jet2 as _impl
    except ImportError:  # extension not built
        from . import _jetpy as _impl

BACKEND = _impl.BACKEND
Jet2 = _impl.Jet2
constant = _impl.constant
lift = _impl.lift
recip = _impl.recip
sqrt = _impl.sqrt
sin = _impl.sin
cos = _impl.cos
exp = _impl.exp
conj = _impl.conj
abs2 = _impl.abs2

_UNARY = {"neg": lambda x: -x, "sin": sin, "cos": cos, "sqrt": sqrt,
          "recip": recip, "conj": conj, "abs2": abs2, "exp": exp}
_BINARY = {"add": lambda x, y: x + y, "mul": lambda x, y: x * y,
           "div": lambda x, y: x / y, "sub": lambda x, y: x - y}


def jet_lift(index, value):
    return lift(index, value)


def elementary(tag, *args):
    """Apply the elementary operation ``tag`` to jet (or number) arguments."""
    if tag in _UNARY:
        if len(args) != 1:
            raise UsageError("%s takes one argument" % tag)
        x = args[0] if isinstance(args[0], Jet2) else constant(args[0])
        return _UNARY[tag](x)
    if tag in _BINARY:
        if len(args) != 2:
            raise UsageError("%s takes two arguments" % tag)
        x, y = (a if isinstance(a, Jet2) else constant(a) for a in args)
        return _BINARY[tag](x, y)
    raise UsageError("unknown elementary operation %r" % (tag,))


def lift_point(coords):
    """Lift four coordinate values into four seeded jets."""
    if len(coords) != 4:
        raise UsageError("expected 4 coordinates")
    return tuple(lift(i, float(c)) for i, c in enumerate(coords))


__all__ = ["BACKEND", "Jet2", "constant", "lift", "jet_lift", "lift_point",
           "elementary", "recip", "sqrt", "sin", "cos", "exp", "conj", "abs2"]
