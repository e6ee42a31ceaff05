"""State constructors: Schmidt-form pairs, white-noise mixtures, X states, Bloch data."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tensor import check_density, check_unit_vector, kron, singular_values

SQRT2 = np.sqrt(2.0)

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)

BELL_LABELS = ("Phi+", "Phi-", "Psi+", "Psi-")
BELL_STATES = {
    "Phi+": np.array([1, 0, 0, 1], dtype=complex) / SQRT2,
    "Phi-": np.array([1, 0, 0, -1], dtype=complex) / SQRT2,
    "Psi+": np.array([0, 1, 1, 0], dtype=complex) / SQRT2,
    "Psi-": np.array([0, 1, -1, 0], dtype=complex) / SQRT2,
}

_SCHMIDT_TOL = 1e-12


def ghz_basis() -> dict[str, np.ndarray]:
    """The eight three-qubit GHZ vectors ``G0..G7``.

    ``G_{2k}`` and ``G_{2k+1}`` are ``(|xyz> +/- |not xyz>)/sqrt(2)`` where
    ``xyz`` is the binary form of ``k`` with a leading zero.
    """
    out = {}
    for k in range(4):
        lo, hi = k, 7 - k
        for sign, idx in ((1, 2 * k), (-1, 2 * k + 1)):
            v = np.zeros(8, dtype=complex)
            v[lo] = 1 / SQRT2
            v[hi] = sign / SQRT2
            out[f"G{idx}"] = v
    return out


@dataclass(frozen=True)
class SchmidtPair:
    """Biqubit pure state ``sqrt(p0)|00> + sqrt(p1)|11>``."""

    p0: float
    p1: float | None = None
    labels: tuple[str, str] = ("A", "B")

    def __post_init__(self):
        p1 = 1.0 - self.p0 if self.p1 is None else self.p1
        object.__setattr__(self, "p1", float(p1))
        object.__setattr__(self, "p0", float(self.p0))
        if self.p0 < -_SCHMIDT_TOL or p1 < -_SCHMIDT_TOL:
            raise ValueError(f"Schmidt weights must be non-negative, got ({self.p0}, {p1})")
        if abs(self.p0 + p1 - 1) > _SCHMIDT_TOL:
            raise ValueError(f"Schmidt weights must sum to 1, got {self.p0 + p1}")
        if len(self.labels) != 2 or self.labels[0] == self.labels[1]:
            raise ValueError("a Schmidt pair needs two distinct labels")
        # absorb tolerated negative rounding
        object.__setattr__(self, "p0", max(self.p0, 0.0))
        object.__setattr__(self, "p1", max(p1, 0.0))


@dataclass(frozen=True)
class NoisyPairParams:
    schmidt: SchmidtPair
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"visibility must lie in [0, 1], got {self.alpha}")

    @classmethod
    def of(cls, alpha: float, p0: float) -> "NoisyPairParams":
        return cls(SchmidtPair(p0), alpha)


@dataclass(frozen=True)
class XStateSpectralParts:
    u_plus: float
    u_minus: float
    r_plus: float
    r_minus: float


@dataclass(frozen=True)
class XState:
    """Two-qubit density matrix with support on the diagonal and anti-diagonal only.

    Entries are indexed 1..4 in the computational basis ``|00>,|01>,|10>,|11>``;
    ``e14`` is the ``(1,4)`` entry and ``e23`` the ``(2,3)`` entry.
    """

    d11: float
    d22: float
    d33: float
    d44: float
    e14: complex = 0.0
    e23: complex = 0.0

    def __post_init__(self):
        d = (self.d11, self.d22, self.d33, self.d44)
        if min(d) < -_SCHMIDT_TOL:
            raise ValueError(f"X-state diagonal must be non-negative, got {d}")
        if abs(sum(d) - 1) > _SCHMIDT_TOL:
            raise ValueError(f"X-state trace must be 1, got {sum(d)}")
        if abs(self.e14) > np.sqrt(max(self.d11 * self.d44, 0.0)) + _SCHMIDT_TOL:
            raise ValueError("|e14| exceeds sqrt(d11*d44); matrix is not positive")
        if abs(self.e23) > np.sqrt(max(self.d22 * self.d33, 0.0)) + _SCHMIDT_TOL:
            raise ValueError("|e23| exceeds sqrt(d22*d33); matrix is not positive")

    @classmethod
    def from_matrix(cls, m: np.ndarray, tol: float = 1e-12) -> "XState":
        m = check_density(m, 4)
        mask = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], dtype=bool)
        if np.max(np.abs(m[~mask])) > tol:
            raise ValueError("matrix has entries outside the diagonal and anti-diagonal")
        return cls(*(float(m[i, i].real) for i in range(4)), complex(m[0, 3]), complex(m[1, 2]))

    def matrix(self) -> np.ndarray:
        m = np.diag([self.d11, self.d22, self.d33, self.d44]).astype(complex)
        m[0, 3] = self.e14
        m[3, 0] = np.conj(self.e14)
        m[1, 2] = self.e23
        m[2, 1] = np.conj(self.e23)
        return m

    def spectral_parts(self) -> XStateSpectralParts:
        return XStateSpectralParts(
            u_plus=(self.d11 + self.d44) / 2,
            u_minus=(self.d11 - self.d44) / 2,
            r_plus=(self.d22 + self.d33) / 2,
            r_minus=(self.d22 - self.d33) / 2,
        )


@dataclass(frozen=True)
class BlochMatrix:
    """Bloch data under the ``sigma/sqrt(2)`` normalisation.

    ``r_vec[mu] = Tr(rho (sigma_mu/sqrt2) x (I/2))``, ``s_vec`` likewise on the
    second qubit, ``T[mu, nu] = Tr(rho (sigma_mu/sqrt2) x (sigma_nu/sqrt2))``.
    """

    c: float
    r_vec: np.ndarray = field(repr=False)
    s_vec: np.ndarray = field(repr=False)
    T: np.ndarray = field(repr=False)

    def matrix(self) -> np.ndarray:
        """The 4x4 block matrix ``[[c, s^T], [r, T]]``."""
        out = np.empty((4, 4))
        out[0, 0] = self.c
        out[0, 1:] = self.s_vec
        out[1:, 0] = self.r_vec
        out[1:, 1:] = self.T
        return out


def schmidt_pair_state(sp: SchmidtPair) -> np.ndarray:
    """Amplitudes ``(sqrt p0, 0, 0, sqrt p1)``."""
    return np.array([np.sqrt(sp.p0), 0, 0, np.sqrt(sp.p1)], dtype=complex)


def schmidt_decompose(v: np.ndarray, labels: tuple[str, str] = ("A", "B")) -> SchmidtPair:
    """Schmidt weights of a two-qubit pure state, larger weight first."""
    v = check_unit_vector(v, 4)
    s = singular_values(v.reshape(2, 2))
    w = s**2
    w = w / w.sum()
    return SchmidtPair(float(w[0]), float(w[1]), labels)


def depolarize(sp: SchmidtPair, alpha: float) -> XState:
    """Mix the Schmidt pair with white noise: ``alpha*|phi><phi| + (1-alpha)*I/4``."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"visibility must lie in [0, 1], got {alpha}")
    noise = (1 - alpha) / 4
    return XState(
        d11=noise + alpha * sp.p0,
        d22=noise,
        d33=noise,
        d44=noise + alpha * sp.p1,
        e14=alpha * np.sqrt(sp.p0 * sp.p1),
        e23=0.0,
    )


def bloch_decompose(rho: np.ndarray, c: float) -> BlochMatrix:
    rho = check_density(rho, 4)
    half_id = I2 / 2
    gens = [p / SQRT2 for p in PAULIS]
    r = np.array([np.trace(rho @ kron(g, half_id)).real for g in gens])
    s = np.array([np.trace(rho @ kron(half_id, g)).real for g in gens])
    t = np.array([[np.trace(rho @ kron(gm, gn)).real for gn in gens] for gm in gens])
    return BlochMatrix(float(c), r, s, t)


def combo_criterion(rho: np.ndarray, c: float | None = None) -> float:
    """Combo separability functional; a positive value certifies entanglement.

    The Bloch data is rescaled to Pauli expectation values (``t = <s_mu s_nu>``,
    ``r = <s_mu x I>``, ``s = <I x s_nu>``) and assembled into
    ``M = [[c, sqrt(c) s^T], [sqrt(c) r, t]]``. For any separable state the Ky Fan
    norm of ``M`` is at most ``1 + c``, so ``f = ||M||_KF / (1 + c) - 1 > 0``
    is a witness. ``c`` defaults to ``|rho_14|``, which equals
    ``alpha*sqrt(p0*p1)`` for white-noise Schmidt mixtures. ``c = 0`` gives the
    plain correlation-matrix criterion ``||t||_KF - 1``.
    """
    rho = check_density(rho, 4)
    if c is None:
        c = abs(rho[0, 3])
    if c < 0:
        raise ValueError("c must be non-negative")
    bm = bloch_decompose(rho, c)
    t = 2.0 * bm.T
    r = 2.0 * SQRT2 * bm.r_vec
    s = 2.0 * SQRT2 * bm.s_vec
    root_c = np.sqrt(c)
    m = np.empty((4, 4))
    m[0, 0] = c
    m[0, 1:] = root_c * s
    m[1:, 0] = root_c * r
    m[1:, 1:] = t
    return float(singular_values(m).sum() / (1 + c) - 1)


def random_xstate(rng: np.random.Generator) -> XState:
    """A random valid X state: Dirichlet diagonal, coherences uniform inside the positivity disc."""
    d = rng.dirichlet(np.ones(4))
    r14 = np.sqrt(d[0] * d[3]) * rng.uniform()
    r23 = np.sqrt(d[1] * d[2]) * rng.uniform()
    ph14, ph23 = rng.uniform(0, 2 * np.pi, size=2)
    return XState(*d, r14 * np.exp(1j * ph14), r23 * np.exp(1j * ph23))
