"""Two-mode Fock states in the chirality basis, and the 4D Wigner oracle.

States are stored as coefficient tables over (n_plus, n_minus), the photon
numbers of the circular (chirality) mode pair in which both the total
number N = n+ + n- and the OAM L = n+ - n- act diagonally.  The Cartesian
x/y mode basis enters only through explicit basis rotations.
"""

import warnings
from dataclasses import dataclass
from math import comb, exp, lgamma, pi, sqrt

import numpy as np

from .errors import QuadratureResidueError, TruncationWarning
from .specfun import laguerre

_NORM_TOL = 1e-10


@dataclass(frozen=True)
class TwoModeFock:
    """Complex coefficient table c[n_plus, n_minus], 0 <= n <= cutoff."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("coefficient table must be a square 2D array")
        object.__setattr__(self, "coeffs", c)
        c.setflags(write=False)

    @property
    def cutoff(self):
        return self.coeffs.shape[0] - 1

    @property
    def norm(self):
        return float(np.linalg.norm(self.coeffs))

    @property
    def is_normalized(self):
        return abs(self.norm - 1.0) <= _NORM_TOL

    @property
    def max_total_quanta(self):
        """Largest n+ + n- with a nonzero coefficient."""
        idx = np.argwhere(np.abs(self.coeffs) > 0)
        if len(idx) == 0:
            return 0
        return int(np.max(idx.sum(axis=1)))

    def support(self):
        """Iterate over (n_plus, n_minus, coefficient) for nonzero entries."""
        for (np_, nm), c in np.ndenumerate(self.coeffs):
            if c != 0:
                yield np_, nm, c


@dataclass(frozen=True)
class CartesianPoint4:
    x: float
    p_x: float
    y: float
    p_y: float

    def __post_init__(self):
        for v in (self.x, self.p_x, self.y, self.p_y):
            if not np.isfinite(v):
                raise ValueError("phase-space coordinates must be finite")


def make_N_l_eigenstate(N, l0):
    """Joint eigenstate |N, l0> of total number and OAM.

    A single basis vector at n+ = (N + l0)/2, n- = (N - l0)/2.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if abs(l0) > N:
        raise ValueError(f"range: |l0| = {abs(l0)} exceeds N = {N}")
    if (N - abs(l0)) % 2 != 0:
        raise ValueError(f"parity: N - |l0| = {N - abs(l0)} must be even")
    np_, nm = (N + l0) // 2, (N - l0) // 2
    cut = max(np_, nm)
    table = np.zeros((cut + 1, cut + 1), dtype=complex)
    table[np_, nm] = 1.0
    return TwoModeFock(table)


def make_summed_oam(l0, Nmax):
    """OAM eigenstate as a 1/sqrt(N+1)-weighted sum over N, renormalized.

    The untruncated sum is not normalizable, so the truncation Nmax is an
    explicit, mandatory parameter.
    """
    if Nmax < abs(l0):
        raise ValueError(f"range: Nmax = {Nmax} is below |l0| = {abs(l0)}")
    cut = (Nmax + abs(l0)) // 2
    table = np.zeros((cut + 1, cut + 1), dtype=complex)
    for N in range(abs(l0), Nmax + 1, 2):
        table[(N + l0) // 2, (N - l0) // 2] = 1.0 / sqrt(N + 1)
    return TwoModeFock(table / np.linalg.norm(table))


def make_superposition(l1, l2, phi0, Nmax):
    """Equal-weight superposition of two summed-OAM states with relative phase."""
    a = make_summed_oam(l1, Nmax)
    b = make_summed_oam(l2, Nmax)
    dim = max(a.coeffs.shape[0], b.coeffs.shape[0])
    table = np.zeros((dim, dim), dtype=complex)
    table[: a.coeffs.shape[0], : a.coeffs.shape[1]] += a.coeffs
    table[: b.coeffs.shape[0], : b.coeffs.shape[1]] += np.exp(1j * phi0) * b.coeffs
    return TwoModeFock(table / np.linalg.norm(table))


def rotate_state(s, phi0):
    """Apply exp(i phi0 L): multiplies c[n+, n-] by exp(i phi0 (n+ - n-))."""
    dim = s.coeffs.shape[0]
    ell = np.subtract.outer(np.arange(dim), np.arange(dim))
    return TwoModeFock(s.coeffs * np.exp(1j * phi0 * ell))


def expectation_N_L(s):
    """Diagonal expectations (<N>, <L>) of a normalized state."""
    prob = np.abs(s.coeffs) ** 2
    dim = s.coeffs.shape[0]
    n = np.arange(dim)
    mean_n = float(np.sum(prob * np.add.outer(n, n)))
    mean_l = float(np.sum(prob * np.subtract.outer(n, n)))
    return mean_n, mean_l


def _basis_rotation(table, m11, m12, m21, m22):
    """Re-express a two-mode table under A+ -> m11 B1+ + m12 B2+, etc.

    The substitution acts on creation operators; coefficients follow by
    binomial expansion with exact factorial normalization.  Output is a
    square table large enough to hold all quanta.
    """
    table = np.asarray(table, dtype=complex)
    dim = table.shape[0] + table.shape[1] - 1
    out = np.zeros((dim, dim), dtype=complex)
    for (na, nb), c in np.ndenumerate(table):
        if c == 0:
            continue
        base = lgamma(na + 1) + lgamma(nb + 1)
        for j in range(na + 1):
            for k in range(nb + 1):
                n1 = j + k
                n2 = na + nb - n1
                coef = (comb(na, j) * comb(nb, k)
                        * m11 ** j * m12 ** (na - j) * m21 ** k * m22 ** (nb - k))
                fac = exp(0.5 * (lgamma(n1 + 1) + lgamma(n2 + 1) - base))
                out[n1, n2] += c * coef * fac
    return out


def mode_rotate_xy_to_pm(coeffs_xy):
    """Convert a Fock table over (n_x, n_y) into the chirality basis.

    Uses a_x+ = (a_+^dag + a_-^dag)/sqrt(2) and
    a_y+ = -i (a_+^dag - a_-^dag)/sqrt(2); exact at the given cutoff.
    """
    s = 1.0 / sqrt(2.0)
    return TwoModeFock(_basis_rotation(coeffs_xy, s, s, -1j * s, 1j * s))


def _to_xy(s):
    """Chirality table -> (n_x, n_y) table (inverse of mode_rotate_xy_to_pm)."""
    q = 1.0 / sqrt(2.0)
    return _basis_rotation(s.coeffs, q, 1j * q, q, -1j * q)


def _xy_coeffs(s):
    # cached per immutable state; the 4D evaluator is called in grid loops
    cached = getattr(s, "_xy_cache", None)
    if cached is None:
        cached = _to_xy(s)
        object.__setattr__(s, "_xy_cache", cached)
    return cached


def displaced_fock_matrix(alpha, dim):
    """Matrix elements <m|D(alpha)|n> for m, n < dim.

    Closed form in terms of associated Laguerre polynomials; exact up to
    roundoff, no truncated sums involved.
    """
    aa = abs(alpha) ** 2
    env = np.exp(-aa / 2.0)
    d = np.zeros((dim, dim), dtype=complex)
    for m in range(dim):
        for n in range(dim):
            if m >= n:
                d[m, n] = (exp(0.5 * (lgamma(n + 1) - lgamma(m + 1)))
                           * alpha ** (m - n) * env * laguerre(n, m - n, aa))
            else:
                d[m, n] = (exp(0.5 * (lgamma(m + 1) - lgamma(n + 1)))
                           * (-np.conj(alpha)) ** (n - m) * env * laguerre(m, n - m, aa))
    return d


def wigner_4d(s, at):
    """Two-mode Cartesian Wigner function via displaced parity.

    W(x, p_x, y, p_y) = <D_x D_y (-1)^N D_y+ D_x+> / pi^2, evaluated exactly
    in the truncated basis through D(a) P D+(a) = D(2a) P per mode.  The
    vacuum gives exp(-(x^2 + p_x^2 + y^2 + p_y^2)) / pi^2.
    """
    if not s.is_normalized:
        raise ValueError("state must be normalized")
    cxy = _xy_coeffs(s)
    dim = cxy.shape[0]
    ax = (at.x + 1j * at.p_x) / sqrt(2.0)
    ay = (at.y + 1j * at.p_y) / sqrt(2.0)
    if abs(ax) ** 2 + abs(ay) ** 2 > s.cutoff / 2.0 + 0.5:
        warnings.warn(
            "displacement amplitude^2 exceeds cutoff/2; the truncated table "
            "is a poor stand-in for any untruncated state this far out",
            TruncationWarning, stacklevel=2)
    dx = displaced_fock_matrix(2.0 * ax, dim)
    dy = displaced_fock_matrix(2.0 * ay, dim)
    parity = (-1.0) ** np.add.outer(np.arange(dim), np.arange(dim))
    val = np.sum(np.conj(cxy) * (dx @ (cxy * parity) @ dy.T)) / pi ** 2
    if abs(val.imag) > 1e-10 * max(abs(val), 1e-300):
        raise QuadratureResidueError("4D Wigner value has a non-negligible imaginary part")
    return float(val.real)
