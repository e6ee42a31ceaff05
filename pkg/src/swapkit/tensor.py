"""Dense complex linear algebra on small qubit registers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Qubit ordering
follows ket notation: the leftmost label is the most significant bit, so
``|q_A q_B q_C q_D>`` has index ``8*q_A + 4*q_B + 2*q_C + q_D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
EIGEN_NEG_TOL = 1e-12
DENSITY_TOL = 1e-10
MAX_QUBITS = 6

_DEFAULT_LABELS = "ABCDEF"


class LabelError(KeyError):
    """A qubit label is not part of the register."""


class NotHermitianError(ValueError):
    """Input to a Hermitian-only routine is not Hermitian."""


class NotDensityError(ValueError):
    """Matrix is not a valid density matrix."""


@dataclass(frozen=True)
class QubitRegister:
    """Ordered qubit labels; ``labels[0]`` is the most significant qubit."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_QUBITS:
            raise ValueError(f"register must hold 1..{MAX_QUBITS} qubits, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate qubit labels in {labels}")

    @classmethod
    def of_size(cls, n: int) -> "QubitRegister":
        if not 1 <= n <= MAX_QUBITS:
            raise ValueError(f"register must hold 1..{MAX_QUBITS} qubits, got {n}")
        return cls(tuple(_DEFAULT_LABELS[:n]))

    @property
    def qubit_count(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return 2 ** len(self.labels)

    def indices(self, labels: Iterable[str]) -> list[int]:
        out = []
        for lab in labels:
            try:
                out.append(self.labels.index(lab))
            except ValueError:
                raise LabelError(f"unknown qubit label {lab!r}; register is {self.labels}") from None
        return out


def as_register(reg: QubitRegister | Sequence[str] | str) -> QubitRegister:
    if isinstance(reg, QubitRegister):
        return reg
    return QubitRegister(tuple(reg))


def _check_square(m: np.ndarray, reg: QubitRegister) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (reg.dim, reg.dim):
        raise ValueError(f"expected a {reg.dim}x{reg.dim} matrix for {reg.labels}, got {m.shape}")
    return m


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices or vectors, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def ket_to_density(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    return np.outer(v, v.conj())


def partial_trace(m: np.ndarray, reg, keep: Iterable[str]) -> np.ndarray:
    """Trace out every qubit of ``reg`` not listed in ``keep``.

    The kept qubits stay in register order regardless of the order of ``keep``.
    """
    reg = as_register(reg)
    m = _check_square(m, reg)
    keep_idx = sorted(set(reg.indices(keep)))
    n = reg.qubit_count
    t = m.reshape((2,) * (2 * n))
    # einsum subscripts: row axes 0..n-1, column axes n..2n-1; traced qubits share a letter
    row = list(range(n))
    col = [i + n if i in keep_idx else i for i in range(n)]
    out_axes = keep_idx + [i + n for i in keep_idx]
    reduced = np.einsum(t, row + col, out_axes)
    d = 2 ** len(keep_idx)
    return reduced.reshape(d, d)


def partial_transpose(m: np.ndarray, reg, on: Iterable[str]) -> np.ndarray:
    """Transpose the row and column indices of the qubits in ``on``."""
    reg = as_register(reg)
    m = _check_square(m, reg)
    n = reg.qubit_count
    t = m.reshape((2,) * (2 * n))
    perm = list(range(2 * n))
    for i in set(reg.indices(on)):
        perm[i], perm[i + n] = perm[i + n], perm[i]
    return t.transpose(perm).reshape(reg.dim, reg.dim)


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.max(np.abs(m - m.conj().T), initial=0.0) <= tol


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m):
        raise NotHermitianError("matrix is not Hermitian within %g" % HERMITICITY_TOL)
    # symmetrise so tiny anti-Hermitian noise cannot leak into the spectrum
    return np.linalg.eigvalsh((m + m.conj().T) / 2)


def singular_values(m: np.ndarray) -> np.ndarray:
    """Singular values, descending."""
    return np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False)


def trace_norm(m: np.ndarray) -> float:
    return float(np.sum(singular_values(m)))


def is_density(m: np.ndarray, tol: float = DENSITY_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        return False
    if abs(np.trace(m) - 1) > tol:
        return False
    return hermitian_eigenvalues(m)[0] >= -max(tol, EIGEN_NEG_TOL)


def check_density(m: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Return ``m`` as a complex array, raising :class:`NotDensityError` if invalid."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotDensityError(f"density matrix must be square, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise NotDensityError(f"expected dimension {dim}, got {m.shape[0]}")
    if not is_density(m):
        raise NotDensityError("matrix is not Hermitian, unit-trace and positive semidefinite")
    return m


def check_unit_vector(v: np.ndarray, dim: int | None = None, tol: float = 1e-10) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    if dim is not None and v.size != dim:
        raise ValueError(f"expected a state vector of length {dim}, got {v.size}")
    if abs(np.linalg.norm(v) - 1) > tol:
        raise ValueError(f"state vector is not normalised (norm {np.linalg.norm(v):.3g})")
    return v
