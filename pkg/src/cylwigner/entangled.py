"""EPR-type entangled-basis representation of two-mode Fock states.

The continuous basis |xi> diagonalizes the commuting quadrature
combinations x+ + x- and p+ - p-; its Fock overlaps are bivariate Hermite
polynomials under a Gaussian envelope.  A state's wavefunction in this
representation, Psi(xi, phi) = <xi e^{-i phi}|Psi>, is the object the
cylindrical Wigner transform integrates.
"""

from dataclasses import dataclass
from math import lgamma, pi

import numpy as np

from .specfun import hermite2, hermite2_general, laguerre


@dataclass(frozen=True)
class EntangledArg:
    """Evaluation point: complex basis eigenvalue xi and azimuth phi."""

    xi: complex
    phi: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.xi) and np.isfinite(self.phi)):
            raise ValueError("entangled-basis arguments must be finite")
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * pi))


def xi_fock_overlap(xi, n_plus, n_minus):
    """Overlap <xi|n_plus, n_minus>.

    The bra side requires the index-swapped polynomial H_{n-, n+} through
    the conjugation symmetry H_{m,n}* = H_{n,m}; the ordering is pinned by
    the closed-form OAM eigenstate check in the test suite, since this is
    the single most error-prone sign convention in the package.
    """
    norm = np.exp(-0.5 * (lgamma(n_plus + 1) + lgamma(n_minus + 1)))
    return np.exp(-np.abs(xi) ** 2 / 2.0) * norm * hermite2(n_minus, n_plus, xi)


def amplitude_polynomial(s, lam, lam_bar, conjugated=False):
    """Polynomial part of the entangled wavefunction, envelope stripped.

    With ``lam = xi e^{-i phi}`` and ``lam_bar = conj(lam)`` this is
    Psi(xi, phi) / exp(-|xi|^2 / 2).  The two arguments are independent so
    the same code serves the analytically continued integrand of the
    cylindrical transform; ``conjugated`` selects the bra-side variant
    (conjugate coefficients, swapped Hermite indices).
    """
    out = 0.0 + 0.0j
    for np_, nm, c in s.support():
        norm = np.exp(-0.5 * (lgamma(np_ + 1) + lgamma(nm + 1)))
        if conjugated:
            out = out + np.conj(c) * norm * hermite2_general(np_, nm, lam, lam_bar)
        else:
            out = out + c * norm * hermite2_general(nm, np_, lam, lam_bar)
    return out


def psi_entangled(s, at):
    """Entangled-representation wavefunction Psi(xi, phi) = <xi e^{-i phi}|s>."""
    if not s.is_normalized:
        raise ValueError("state must be normalized")
    z = at.xi * np.exp(-1j * at.phi)
    return complex(np.exp(-abs(at.xi) ** 2 / 2.0) * amplitude_polynomial(s, z, np.conj(z)))


def laguerre_gauss_profile(N, l0, xi, phi=0.0):
    """Closed-form (unnormalized) entangled wavefunction of |N, l0>.

    A Laguerre-Gauss shape: chi^|l0| L_p^|l0|(|xi|^2) exp(-|xi|^2/2) with
    p = (N - |l0|)/2 and chi the azimuthally rotated radial coordinate
    (conjugated for l0 > 0 -- the orientation the Fock expansion produces).
    Proportional to psi_entangled of the corresponding eigenstate, with one
    xi-independent constant per (N, l0).
    """
    if abs(l0) > N or (N - abs(l0)) % 2 != 0:
        raise ValueError("need |l0| <= N with N - |l0| even")
    z = np.asarray(xi, dtype=complex) * np.exp(-1j * phi)
    chi = np.conj(z) if l0 > 0 else z
    mag2 = np.abs(np.asarray(xi)) ** 2
    p = (N - abs(l0)) // 2
    return np.exp(-mag2 / 2.0) * chi ** abs(l0) * laguerre(p, abs(l0), mag2)
