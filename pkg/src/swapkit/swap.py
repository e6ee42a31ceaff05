"""Entanglement swapping: two pure pairs, three pure pairs (GHZ), two noisy pairs.

Each analytic routine has a brute-force counterpart (``project_*``) that builds
the full register, applies the measurement projector with
:func:`~swapkit.tensor.kron` and reduces with
:func:`~swapkit.tensor.partial_trace` or a direct bra contraction. The two are
kept independent so they can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .measures import (
    concurrence_pure,
    concurrence_schmidt,
    negativity,
    negativity_schmidt,
    tripartite_measure_geometric,
)
from .states import (
    BELL_LABELS,
    I2,
    SQRT2,
    NoisyPairParams,
    SchmidtPair,
    XState,
    depolarize,
    ghz_basis,
    schmidt_pair_state,
)
from .tensor import QubitRegister, check_density, kron, partial_trace

ZERO_PROBABILITY = 1e-15

GHZ_LABELS = tuple(f"G{k}" for k in range(8))

_ABCD = QubitRegister(("A", "B", "C", "D"))
_ABCDEF = QubitRegister(("A", "B", "C", "D", "E", "F"))


@dataclass(frozen=True)
class MeasurementBasis:
    """Generalised Bell basis on ``BC`` with real non-negative amplitudes.

    ``Phi+ = a0|00> + b0|11>``, ``Phi- = b0|00> - a0|11>``,
    ``Psi+ = a1|01> + b1|10>``, ``Psi- = b1|01> - a1|10>``.
    """

    a0: float
    b0: float
    a1: float
    b1: float

    def __post_init__(self):
        amps = (self.a0, self.b0, self.a1, self.b1)
        if min(amps) < 0:
            raise ValueError(f"basis amplitudes must be non-negative, got {amps}")
        for a, b in ((self.a0, self.b0), (self.a1, self.b1)):
            if abs(a * a + b * b - 1) > 1e-12:
                raise ValueError(f"basis amplitudes not normalised: {a}^2 + {b}^2 != 1")

    @classmethod
    def bell(cls) -> "MeasurementBasis":
        h = 1 / SQRT2
        return cls(h, h, h, h)

    @classmethod
    def from_angles(cls, theta0: float, theta1: float) -> "MeasurementBasis":
        """``a_i = cos(theta_i)``, ``b_i = sin(theta_i)`` with ``theta_i`` in ``[0, pi/2]``."""
        return cls(np.cos(theta0), np.sin(theta0), np.cos(theta1), np.sin(theta1))

    def vectors(self) -> dict[str, np.ndarray]:
        a0, b0, a1, b1 = self.a0, self.b0, self.a1, self.b1
        return {
            "Phi+": np.array([a0, 0, 0, b0], dtype=complex),
            "Phi-": np.array([b0, 0, 0, -a0], dtype=complex),
            "Psi+": np.array([0, a1, b1, 0], dtype=complex),
            "Psi-": np.array([0, b1, -a1, 0], dtype=complex),
        }

    def gram(self) -> np.ndarray:
        m = np.array(list(self.vectors().values()))
        return m.conj() @ m.T


@dataclass(frozen=True)
class SwapOutcome:
    """One measurement branch.

    ``state`` is a normalised vector (pure inputs) or density matrix (noisy
    inputs) over the unmeasured qubits, or ``None`` when the branch has zero
    probability.
    """

    label: str
    probability: float
    state: np.ndarray | None


def _outcome(label: str, prob: float, unnormalised: np.ndarray) -> SwapOutcome:
    if prob <= ZERO_PROBABILITY:
        return SwapOutcome(label, max(float(prob), 0.0), None)
    if unnormalised.ndim == 1:
        return SwapOutcome(label, float(prob), unnormalised / np.sqrt(prob))
    return SwapOutcome(label, float(prob), unnormalised / prob)


# -- two pure pairs ----------------------------------------------------------


def swap_pure_pairs(ab: SchmidtPair, cd: SchmidtPair, basis: MeasurementBasis | None = None) -> list[SwapOutcome]:
    """Closed-form outcomes on ``AD`` after measuring ``BC`` in ``basis``.

    Defaults to the Bell basis. Outcome order is ``Phi+, Phi-, Psi+, Psi-``.
    """
    basis = basis or MeasurementBasis.bell()
    a0, b0, a1, b1 = basis.a0, basis.b0, basis.a1, basis.b1
    p0, p1, q0, q1 = ab.p0, ab.p1, cd.p0, cd.p1
    s00, s11 = np.sqrt(p0 * q0), np.sqrt(p1 * q1)
    s01, s10 = np.sqrt(p0 * q1), np.sqrt(q0 * p1)
    branches = {
        "Phi+": (p0 * q0 * a0**2 + p1 * q1 * b0**2, [s00 * a0, 0, 0, s11 * b0]),
        "Phi-": (p0 * q0 * b0**2 + p1 * q1 * a0**2, [s00 * b0, 0, 0, -s11 * a0]),
        "Psi+": (p0 * q1 * a1**2 + q0 * p1 * b1**2, [0, s01 * a1, s10 * b1, 0]),
        "Psi-": (p0 * q1 * b1**2 + q0 * p1 * a1**2, [0, s01 * b1, -s10 * a1, 0]),
    }
    return [_outcome(lab, prob, np.array(amps, dtype=complex)) for lab, (prob, amps) in branches.items()]


def project_pure_pairs(ab: SchmidtPair, cd: SchmidtPair, basis: MeasurementBasis | None = None) -> list[SwapOutcome]:
    """Oracle: apply ``I_A x <w|_BC x I_D`` to the full four-qubit vector."""
    basis = basis or MeasurementBasis.bell()
    psi = kron(schmidt_pair_state(ab), schmidt_pair_state(cd))
    out = []
    for lab, w in basis.vectors().items():
        amps = kron(I2, w.conj()[None, :], I2) @ psi
        out.append(_outcome(lab, float(np.vdot(amps, amps).real), amps))
    return out


def average_swapped_concurrence_pure(ab: SchmidtPair, cd: SchmidtPair, basis: MeasurementBasis | None = None) -> float:
    """``4 sqrt(p0 p0' p1 p1') (a0 b0 + a1 b1)``; the Bell basis gives ``C_AB * C_CD``."""
    basis = basis or MeasurementBasis.bell()
    return float(4 * np.sqrt(ab.p0 * cd.p0 * ab.p1 * cd.p1) * (abs(basis.a0 * basis.b0) + abs(basis.a1 * basis.b1)))


def average_swapped_negativity_pure(ab: SchmidtPair, cd: SchmidtPair) -> float:
    """Bell-basis average negativity, ``N_AB * N_CD``."""
    return negativity_schmidt(ab) * negativity_schmidt(cd)


def weighted_average(outcomes: Sequence[SwapOutcome], measure: Callable[[np.ndarray], float]) -> float:
    """``sum_k p_k * measure(state_k)``, skipping zero-probability branches."""
    return float(sum(o.probability * measure(o.state) for o in outcomes if o.state is not None))


# -- three pure pairs, GHZ measurement ---------------------------------------


def _bits(k: int) -> tuple[int, int, int]:
    return (k >> 2) & 1, (k >> 1) & 1, k & 1


def swap_three_pairs_ghz(ab: SchmidtPair, cd: SchmidtPair, ef: SchmidtPair) -> list[SwapOutcome]:
    """Closed-form outcomes on ``ACE`` after a GHZ measurement of ``BDF``."""
    lam, mu, nu = (ab.p0, ab.p1), (cd.p0, cd.p1), (ef.p0, ef.p1)
    out = []
    for k in range(4):
        lo, hi = k, 7 - k
        x, y, z = _bits(lo)
        head = np.sqrt(lam[x] * mu[y] * nu[z])
        tail = np.sqrt(lam[1 - x] * mu[1 - y] * nu[1 - z])
        prob = (head**2 + tail**2) / 2
        for sign, idx in ((1, 2 * k), (-1, 2 * k + 1)):
            v = np.zeros(8, dtype=complex)
            v[lo] = head / SQRT2
            v[hi] = sign * tail / SQRT2
            out.append(_outcome(f"G{idx}", prob, v))
    return out


def project_three_pairs_ghz(ab: SchmidtPair, cd: SchmidtPair, ef: SchmidtPair) -> list[SwapOutcome]:
    """Oracle: contract ``<G_k|`` on ``BDF`` of the full six-qubit vector."""
    psi = kron(schmidt_pair_state(ab), schmidt_pair_state(cd), schmidt_pair_state(ef))
    # reorder ABCDEF -> ACE BDF
    t = psi.reshape((2,) * 6).transpose(0, 2, 4, 1, 3, 5).reshape(8, 8)
    out = []
    for lab, g in ghz_basis().items():
        amps = t @ g.conj()
        out.append(_outcome(lab, float(np.vdot(amps, amps).real), amps))
    return out


def average_tripartite_concurrence(ab: SchmidtPair, cd: SchmidtPair, ef: SchmidtPair) -> float:
    return concurrence_schmidt(ab) * concurrence_schmidt(cd) * concurrence_schmidt(ef)


def average_tripartite_negativity(ab: SchmidtPair, cd: SchmidtPair, ef: SchmidtPair) -> float:
    return negativity_schmidt(ab) * negativity_schmidt(cd) * negativity_schmidt(ef)


def weighted_tripartite(outcomes: Sequence[SwapOutcome], measure: str = "concurrence") -> float:
    return weighted_average(outcomes, lambda s: tripartite_measure_geometric(s, measure))


# -- two noisy pairs, Bell measurement ---------------------------------------


def branch_probabilities(params: NoisyPairParams) -> tuple[float, float]:
    """``(P_Phi, P_Psi)``: probability of each ``Phi``-type and each ``Psi``-type outcome."""
    a, p0, p1 = params.alpha, params.schmidt.p0, params.schmidt.p1
    p_phi = a * a / 2 * (p0 * p0 + p1 * p1) + (1 - a * a) / 4
    p_psi = a * a * p0 * p1 + (1 - a * a) / 4
    return p_phi, p_psi


def _unnormalised_branch(params: NoisyPairParams, label: str) -> tuple[float, float, float, float, float, float]:
    a, p0, p1 = params.alpha, params.schmidt.p0, params.schmidt.p1
    cross = a * (1 - a) / 8
    flat = (1 - a) ** 2 / 16
    coherence = a * a * p0 * p1 / 2
    sign = 1.0 if label.endswith("+") else -1.0
    if label.startswith("Phi"):
        d11 = a * a * p0 * p0 / 2 + 2 * cross * p0 + flat
        d44 = a * a * p1 * p1 / 2 + 2 * cross * p1 + flat
        d22 = d33 = cross + flat
        return d11, d22, d33, d44, sign * coherence, 0.0
    d11 = 2 * cross * p0 + flat
    d44 = 2 * cross * p1 + flat
    d22 = d33 = coherence + cross + flat
    return d11, d22, d33, d44, 0.0, sign * coherence


def _check_label(label: str) -> None:
    if label not in BELL_LABELS:
        raise ValueError(f"unknown outcome label {label!r}; expected one of {BELL_LABELS}")


def noisy_outcome_xstate(params: NoisyPairParams, label: str) -> XState | None:
    """Normalised ``rho_AD`` for one Bell outcome, or ``None`` if the outcome cannot occur."""
    _check_label(label)
    p_phi, p_psi = branch_probabilities(params)
    prob = p_phi if label.startswith("Phi") else p_psi
    if prob <= ZERO_PROBABILITY:
        return None
    d11, d22, d33, d44, e14, e23 = _unnormalised_branch(params, label)
    return XState(d11 / prob, d22 / prob, d33 / prob, d44 / prob, e14 / prob, e23 / prob)


def swap_noisy_pairs(
    params: NoisyPairParams,
    params2: NoisyPairParams | None = None,
    method: str = "analytic",
) -> list[SwapOutcome]:
    """Swap two white-noise Schmidt mixtures with a Bell measurement on ``BC``.

    ``method="analytic"`` uses the closed-form X states and requires identical
    pairs. ``method="numeric"`` projects the full four-qubit density matrix and
    accepts different pairs.
    """
    params2 = params if params2 is None else params2
    if method == "numeric":
        return project_density_pairs(depolarize(params.schmidt, params.alpha).matrix(),
                                     depolarize(params2.schmidt, params2.alpha).matrix())
    if method != "analytic":
        raise ValueError(f"unknown method {method!r}")
    if params2 != params:
        raise ValueError("the analytic noisy swap requires identical input pairs; use method='numeric'")
    p_phi, p_psi = branch_probabilities(params)
    out = []
    for lab in BELL_LABELS:
        x = noisy_outcome_xstate(params, lab)
        prob = p_phi if lab.startswith("Phi") else p_psi
        out.append(SwapOutcome(lab, float(prob), None if x is None else x.matrix()))
    return out


def project_density_pairs(
    rho_ab: np.ndarray,
    rho_cd: np.ndarray,
    basis: MeasurementBasis | None = None,
) -> list[SwapOutcome]:
    """Oracle: ``Tr_BC[(I x P_w x I) (rho_AB x rho_CD)]`` for each basis vector ``w``."""
    rho_ab = check_density(rho_ab, 4)
    rho_cd = check_density(rho_cd, 4)
    basis = basis or MeasurementBasis.bell()
    full = kron(rho_ab, rho_cd)
    out = []
    for lab, w in basis.vectors().items():
        proj = kron(I2, np.outer(w, w.conj()), I2)
        reduced = partial_trace(proj @ full @ proj, _ABCD, ("A", "D"))
        out.append(_outcome(lab, float(np.trace(reduced).real), reduced))
    return out


def noisy_outcome_concurrence(params: NoisyPairParams, label: str) -> float:
    """Closed-form concurrence of ``rho_AD`` for the given Bell outcome (0 if impossible)."""
    _check_label(label)
    a, p0, p1 = params.alpha, params.schmidt.p0, params.schmidt.p1
    p_phi, p_psi = branch_probabilities(params)
    if label.startswith("Phi"):
        if p_phi <= ZERO_PROBABILITY:
            return 0.0
        return float(max(0.0, a * a * p0 * p1 - (1 - a * a) / 8) / p_phi)
    if p_psi <= ZERO_PROBABILITY:
        return 0.0
    root = np.sqrt(max(1 + 2 * a - 3 * a * a + 16 * a * a * p0 * p1, 0.0))
    return float(max(0.0, a * a * p0 * p1 - (1 - a) / 8 * root) / p_psi)


def noisy_outcome_negativity(params: NoisyPairParams, label: str) -> float:
    """Closed-form negativity of ``rho_AD`` for the given Bell outcome (0 if impossible)."""
    _check_label(label)
    a, p0, p1 = params.alpha, params.schmidt.p0, params.schmidt.p1
    p_phi, p_psi = branch_probabilities(params)
    if label.startswith("Phi"):
        if p_phi <= ZERO_PROBABILITY:
            return 0.0
        return float(max(0.0, -2 / p_phi * min(0.0, (1 - a * a) / 16 - a * a * p0 * p1 / 2)))
    if p_psi <= ZERO_PROBABILITY:
        return 0.0
    root = np.sqrt(a**4 * p0 * p0 * p1 * p1 / 4 + (1 - a) ** 2 * a * a * (p0 - p1) ** 2 / 64)
    return float(max(0.0, -2 / p_psi * min(0.0, (1 - a * a) / 16 - root)))


def average_noisy_concurrence(params: NoisyPairParams) -> float:
    p_phi, p_psi = branch_probabilities(params)
    return 2 * p_phi * noisy_outcome_concurrence(params, "Phi+") + 2 * p_psi * noisy_outcome_concurrence(params, "Psi+")


def average_noisy_negativity(params: NoisyPairParams) -> float:
    p_phi, p_psi = branch_probabilities(params)
    return 2 * p_phi * noisy_outcome_negativity(params, "Phi+") + 2 * p_psi * noisy_outcome_negativity(params, "Psi+")


def concurrence_of_outcome(o: SwapOutcome) -> float:
    """Pure-state concurrence of a two-qubit outcome vector, 0 for an absent branch."""
    return 0.0 if o.state is None else concurrence_pure(o.state)


def negativity_of_outcome(o: SwapOutcome) -> float:
    return 0.0 if o.state is None else negativity(o.state)
