"""Connection one-forms a, b, c of a null tetrad, spin coefficients and
Weyl scalars, all computed from the Levi-Civita connection.

For a tetrad (l, n, m, mbar) and a complex vector X (g extended
complex-bilinearly):

    b(X) = -g(nabla_X l, m)
    c(X) = -g(nabla_X n, mbar)
    a(X) = (g(nabla_X l, n) - g(nabla_X m, mbar)) / 2
"""

import functools
from dataclasses import dataclass, fields

import numpy as np

from .errors import UsageError
from .geometry import christoffel_jet, curvature_at, metric_at
from .jets.arrays import ArrayJet, jeinsum
from .tetrad import Trivialization, tetrad_for

# index of each tetrad vector in the frame arrays
L, N, MV, MB = 0, 1, 2, 3

# Weyl-scalar sign relative to the Chandrasekhar/Teukolsky convention
WEYL_CONVENTION = "penrose-rindler"


@dataclass(frozen=True, eq=False)
class FrameData:
    """a, b, c evaluated on the tetrad vectors (l, n, m, mbar), as order-1 jets.

    ``a.val[A]`` is a(E_A); ``a.grad[A, k]`` its k-th partial derivative.
    ``tetrad`` is the tetrad used.
    """

    a: ArrayJet
    b: ArrayJet
    c: ArrayJet
    tetrad: object


def _frame_derivatives(params, point, tetrad):
    """G[A, B, C] = g(nabla_{E_A} E_B, E_C) as an order-1 array jet."""
    val, grad, hess = tetrad.arrays()
    if hess is None:
        raise UsageError("frame derivatives need a tetrad with order-2 jets")
    E = ArrayJet(val, grad)  # E[A, mu], d_k
    dE = ArrayJet(grad, hess)  # dE[A, mu, nu] = d_nu E_A^mu
    gam = christoffel_jet(params, point)
    mv = metric_at(params, point)
    g = ArrayJet(mv.g, mv.dg)
    D = jeinsum("an,bmn->abm", E, dE) + jeinsum("mnr,an,br->abm", gam, E, E)
    return jeinsum("abm,mc,dc->abd", D, g, E)


def frame_data(params, point, tetrad):
    Gf = _frame_derivatives(params, point, tetrad)
    b = -Gf[:, L, MV]
    c = -Gf[:, N, MB]
    a = (Gf[:, L, N] - Gf[:, MV, MB]) * 0.5
    return FrameData(a, b, c, tetrad)


@functools.lru_cache(maxsize=8192)
def frame_data_for(params, point, triv):
    """Cached :func:`frame_data` for one of the standard trivialization tetrads."""
    return frame_data(params, point, tetrad_for(params, point, Trivialization(triv)))


def one_forms_abc(params, point, tetrad, X):
    """(a(X), b(X), c(X)) for a complex 4-vector X (values only)."""
    X = np.asarray(X, dtype=complex)
    if X.shape != (4,):
        raise UsageError("X must be a complex 4-vector")
    val, grad, _ = tetrad.arrays()
    G = christoffel_jet(params, point).val
    g = metric_at(params, point).g
    # nabla_X E_B for each tetrad vector B
    D = np.einsum("n,bmn->bm", X, grad) + np.einsum("mnr,n,br->bm", G, X, val)
    gp = D @ g @ val.T  # gp[B, C] = g(nabla_X E_B, E_C)
    b = -gp[L, MV]
    c = -gp[N, MB]
    a = 0.5 * (gp[L, N] - gp[MV, MB])
    return complex(a), complex(b), complex(c)


@dataclass(frozen=True)
class NPCoefficients:
    kappa: complex
    tau: complex
    sigma: complex
    rho: complex
    pi: complex
    nu: complex
    mu: complex
    lam: complex
    epsilon: complex
    gamma: complex
    beta: complex
    alpha: complex

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def np_table(params, point, tetrad):
    """The twelve spin coefficients of ``tetrad`` at ``point``."""
    fd = frame_data(params, point, tetrad)
    a, b, c = fd.a.val, fd.b.val, fd.c.val
    return NPCoefficients(
        kappa=complex(-b[L]), tau=complex(-b[N]), sigma=complex(-b[MV]), rho=complex(-b[MB]),
        pi=complex(c[L]), nu=complex(c[N]), mu=complex(c[MV]), lam=complex(c[MB]),
        epsilon=complex(a[L]), gamma=complex(a[N]), beta=complex(a[MV]), alpha=complex(a[MB]),
    )


@dataclass(frozen=True)
class WeylScalars:
    """Psi_0..Psi_4 with the sign convention used (see WEYL_CONVENTION)."""

    psi0: complex
    psi1: complex
    psi2: complex
    psi3: complex
    psi4: complex
    convention: str = WEYL_CONVENTION

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def weyl_scalars(params, point, tetrad):
    """Contractions of the lowered Weyl tensor (= Riemann, as Ricci vanishes).

    Psi0 = W(l,m,l,m), Psi1 = W(l,m,l,n), Psi2 = W(l,m,mbar,n),
    Psi3 = W(l,n,mbar,n), Psi4 = W(mbar,n,mbar,n).
    """
    W = curvature_at(params, point).riemann_lower
    l, n, m, mb = tetrad.values()

    def w(u, v, x, y):
        return complex(np.einsum("abcd,a,b,c,d->", W, u, v, x, y))

    return WeylScalars(w(l, m, l, m), w(l, m, l, n), w(l, m, mb, n), w(l, n, mb, n),
                       w(mb, n, mb, n))

