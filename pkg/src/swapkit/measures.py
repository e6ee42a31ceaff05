"""Entanglement quantifiers.

Negativity uses the doubled convention ``N = ||rho^T||_1 - 1`` so that Bell
states score 1. Concurrence of pure states uses the factor-2 purity form
``sqrt(2 (1 - Tr rho_X^2))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import SIGMA_Y, SchmidtPair, XState
from .tensor import (
    QubitRegister,
    as_register,
    check_density,
    check_unit_vector,
    hermitian_eigenvalues,
    ket_to_density,
    kron,
    partial_trace,
    partial_transpose,
)

# eigenvalues of rho below this are treated as exact zeros in the Wootters oracle
_RANK_TOL = 1e-14

_YY = kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class BipartiteCut:
    side_a: tuple[str, ...]
    side_b: tuple[str, ...]

    def __post_init__(self):
        a, b = tuple(self.side_a), tuple(self.side_b)
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)
        if not a or not b:
            raise ValueError("both sides of a cut must be non-empty")
        if set(a) & set(b):
            raise ValueError(f"cut sides overlap: {set(a) & set(b)}")

    @classmethod
    def one_vs_rest(cls, label: str, reg: QubitRegister) -> "BipartiteCut":
        return cls((label,), tuple(x for x in reg.labels if x != label))

    def validate(self, reg: QubitRegister) -> None:
        if set(self.side_a) | set(self.side_b) != set(reg.labels):
            raise ValueError(f"cut {self} does not cover register {reg.labels}")
        reg.indices(self.side_a + self.side_b)


def _register_for(dim: int, register) -> QubitRegister:
    n = int(round(np.log2(dim)))
    if 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    reg = QubitRegister.of_size(n) if register is None else as_register(register)
    if reg.dim != dim:
        raise ValueError(f"register {reg.labels} does not match dimension {dim}")
    return reg


def _default_cut(reg: QubitRegister, cut: BipartiteCut | None) -> BipartiteCut:
    if cut is None:
        cut = BipartiteCut.one_vs_rest(reg.labels[0], reg)
    cut.validate(reg)
    return cut


def concurrence_pure(v: np.ndarray, cut: BipartiteCut | None = None, register=None) -> float:
    """Pure-state concurrence ``sqrt(2 (1 - Tr rho_X^2))`` across ``cut``.

    ``rho_X`` is the marginal on ``cut.side_a``. Without a cut the first qubit is
    split from the rest.
    """
    v = np.asarray(v, dtype=complex).ravel()
    reg = _register_for(v.size, register)
    v = check_unit_vector(v)
    cut = _default_cut(reg, cut)
    rho_x = partial_trace(ket_to_density(v), reg, cut.side_a)
    return float(np.sqrt(max(2.0 * _linear_entropy(rho_x), 0.0)))


def _linear_entropy(rho: np.ndarray) -> float:
    """``(Tr rho)^2 - Tr rho^2`` as twice the sum of 2x2 principal minors.

    Same value as ``1 - Tr rho^2`` for unit trace, without the cancellation
    that costs ~1e-8 in the square root near product states.
    """
    diag = np.real(np.diag(rho))
    i, j = np.triu_indices(rho.shape[0], k=1)
    return float(2.0 * np.sum(diag[i] * diag[j] - np.abs(rho[i, j]) ** 2))


def concurrence_schmidt(sp: SchmidtPair) -> float:
    return float(2.0 * np.sqrt(sp.p0 * sp.p1))


def concurrence_xstate(x: XState) -> float:
    return float(
        max(
            0.0,
            2.0 * (abs(x.e14) - np.sqrt(x.d22 * x.d33)),
            2.0 * (abs(x.e23) - np.sqrt(x.d11 * x.d44)),
        )
    )


def concurrence_wootters_oracle(rho: np.ndarray) -> float:
    """Mixed-state two-qubit concurrence from the spin-flipped spectrum.

    The decreasing square roots ``l1..l4`` of the eigenvalues of
    ``rho (Y x Y) rho* (Y x Y)`` are obtained as the singular values of
    ``W^T (Y x Y) W`` with ``rho = W W^dagger``; this avoids square roots of
    round-off eigenvalues of a non-normal matrix.
    """
    rho = check_density(rho, 4)
    w, v = np.linalg.eigh((rho + rho.conj().T) / 2)
    keep = w > _RANK_TOL
    factor = v[:, keep] * np.sqrt(w[keep])
    lam = np.linalg.svd(factor.T @ _YY @ factor, compute_uv=False)
    lam = np.concatenate([lam, np.zeros(4 - lam.size)])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(rho: np.ndarray, cut: BipartiteCut | None = None, register=None) -> float:
    """``-2 * (sum of negative eigenvalues of rho^{T_B})`` with ``B = cut.side_b``.

    Accepts a density matrix or a pure state vector.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim == 1:
        rho = ket_to_density(check_unit_vector(rho))
    reg = _register_for(rho.shape[0], register)
    rho = check_density(rho)
    cut = _default_cut(reg, cut)
    ev = hermitian_eigenvalues(partial_transpose(rho, reg, cut.side_b))
    return float(max(0.0, -2.0 * ev[ev < 0].sum()))


def negativity_schmidt(sp: SchmidtPair) -> float:
    return float(2.0 * np.sqrt(sp.p0) * np.sqrt(sp.p1))


def negativity_xstate(x: XState) -> float:
    parts = x.spectral_parts()
    worst = min(
        0.0,
        parts.r_plus - np.sqrt(parts.r_minus**2 + abs(x.e14) ** 2),
        parts.u_plus - np.sqrt(parts.u_minus**2 + abs(x.e23) ** 2),
    )
    return float(max(0.0, -2.0 * worst))


def _three_cut_values(state: np.ndarray, measure: str, register) -> list[float]:
    state = np.asarray(state, dtype=complex)
    reg = _register_for(state.shape[0], register)
    if reg.qubit_count != 3:
        raise ValueError("tripartite measures need a three-qubit state")
    if measure == "concurrence":
        if state.ndim == 2:
            state = _pure_vector(state)
        return [concurrence_pure(state, BipartiteCut.one_vs_rest(q, reg), reg) for q in reg.labels]
    if measure == "negativity":
        # one-vs-rest negativity is symmetric under which side is transposed
        return [negativity(state, BipartiteCut(tuple(x for x in reg.labels if x != q), (q,)), reg) for q in reg.labels]
    raise ValueError(f"unknown measure {measure!r}; use 'concurrence' or 'negativity'")


def _pure_vector(rho: np.ndarray) -> np.ndarray:
    rho = check_density(rho)
    w, v = np.linalg.eigh(rho)
    if abs(w[-1] - 1) > 1e-10:
        raise ValueError("tripartite concurrence is only defined here for pure states")
    return v[:, -1]


def tripartite_measure_geometric(state: np.ndarray, measure: str = "concurrence", register=None) -> float:
    """Geometric mean of the three one-vs-two bipartite values; vanishes on biseparable pure states."""
    vals = _three_cut_values(state, measure, register)
    return float(np.cbrt(np.prod(vals)))


def tripartite_measure_mean(state: np.ndarray, measure: str = "concurrence", register=None) -> float:
    vals = _three_cut_values(state, measure, register)
    return float(np.mean(vals))


def cut_values(state: np.ndarray, measure: str = "concurrence", register=None) -> list[float]:
    """The three one-vs-rest values in register order."""
    return _three_cut_values(state, measure, register)

