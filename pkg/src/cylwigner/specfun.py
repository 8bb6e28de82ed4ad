"""Polynomial special functions used by the entangled-basis machinery.

Two families are needed: the bivariate (two-variable) Hermite polynomials
H_{m,n}, which carry the Fock-basis expansion of the EPR-type eigenstates,
and the generalized Laguerre polynomials L_p^alpha, which show up both in
the closed-form OAM eigenstate profiles and in displaced-Fock overlaps.
"""

from math import lgamma

import numpy as np

from .errors import OrderBoundError

#: Largest supported m + n for the bivariate Hermite sum.  Log-factorial
#: accumulation keeps every term finite well past this, but we have not
#: validated accuracy beyond it.
MAX_TOTAL_ORDER = 60


def _check_indices(m, n):
    if m < 0 or n < 0:
        raise ValueError(f"Hermite orders must be non-negative, got ({m}, {n})")
    if m + n > MAX_TOTAL_ORDER:
        raise OrderBoundError(
            f"total Hermite order {m + n} exceeds supported bound {MAX_TOTAL_ORDER}"
        )


def hermite2_general(m, n, lam, lam_bar):
    """Bivariate Hermite polynomial H_{m,n}(lam, lam_bar).

    The two arguments are treated as independent complex variables, which
    is what analytic continuation off the real integration axis requires.
    For ``lam_bar == conj(lam)`` this coincides with :func:`hermite2`.

    Accepts scalars or numpy arrays (broadcast together).
    """
    _check_indices(m, n)
    lam = np.asarray(lam, dtype=complex)
    lam_bar = np.asarray(lam_bar, dtype=complex)
    terms = []
    for k in range(min(m, n) + 1):
        logc = (lgamma(m + 1) + lgamma(n + 1)
                - lgamma(k + 1) - lgamma(m - k + 1) - lgamma(n - k + 1))
        terms.append((-1.0) ** k * np.exp(logc) * lam ** (m - k) * lam_bar ** (n - k))
    # np.sum over the stacked term axis uses pairwise accumulation
    total = np.sum(np.stack(np.broadcast_arrays(*terms)), axis=0)
    if total.ndim == 0:
        return complex(total)
    return total


def hermite2(m, n, lam):
    """H_{m,n}(lam, lam*) evaluated at a point or array of points."""
    return hermite2_general(m, n, lam, np.conjugate(lam))


def laguerre(p, alpha, x):
    """Generalized Laguerre polynomial L_p^alpha(x) by three-term recurrence.

    The upward recurrence in the degree p is backward stable on the
    non-negative real axis, which is the only region used here.
    """
    if p < 0 or alpha < 0:
        raise ValueError(f"Laguerre indices must be non-negative, got ({p}, {alpha})")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if p == 0:
        return float(prev) if prev.ndim == 0 else prev
    cur = 1.0 + alpha - x
    for k in range(2, p + 1):
        prev, cur = cur, ((2 * k - 1 + alpha - x) * cur - (k - 1 + alpha) * prev) / k
    if cur.ndim == 0:
        return float(cur)
    return cur
