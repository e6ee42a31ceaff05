"""Teleporting one qubit through a swapped channel.

Qubit order is ``(T, A, D)``: the qubit to teleport, Alice's half of the
channel, Danny's half. The probabilistic step appends an ancilla to the right
of ``D``.

The standard and probabilistic protocols run as state-vector simulations. The
noisy-channel protocol runs the density-matrix chain
``rho_T x rho_AD -> Bell projection -> Tr_TA -> U (. x |0><0|) U^dagger ->
ancilla |0> -> Pauli correction``. The two implementations share no code
path, so one can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import BELL_LABELS, BELL_STATES, I2, KET0, SIGMA_X, SIGMA_Z, NoisyPairParams
from .swap import noisy_outcome_xstate
from .tensor import QubitRegister, check_density, ket_to_density, kron, partial_trace

_AMP_TOL = 1e-12
_TAD = QubitRegister(("T", "A", "D"))
_DX = QubitRegister(("D", "X"))

# channel (I x S)(a|00> + b|11>) for each Bell-like channel type
_CHANNEL_PAULI = {"Phi+": I2, "Phi-": SIGMA_Z, "Psi+": SIGMA_X, "Psi-": SIGMA_X @ SIGMA_Z}
# Danny's correction for a Phi+-type channel, keyed by Alice's outcome
_OUTCOME_PAULI = {"Phi+": I2, "Phi-": SIGMA_Z, "Psi+": SIGMA_X, "Psi-": SIGMA_X @ SIGMA_Z}


@dataclass(frozen=True)
class UnknownQubit:
    """``alpha|0> + beta|1>``."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1) > _AMP_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm}, expected 1")

    @classmethod
    def random(cls, rng: np.random.Generator) -> "UnknownQubit":
        """Haar-random pure qubit."""
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        return cls(complex(v[0]), complex(v[1]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)

    @property
    def density(self) -> np.ndarray:
        return ket_to_density(self.vector)


@dataclass(frozen=True)
class ChannelState:
    """Shared Alice-Danny channel.

    A ``pure`` channel is ``a|00> + b|11>`` for ``bell_type="Phi+"``, and
    its Pauli-rotated relatives for the other Bell types
    (``Phi-: a|00> - b|11>``, ``Psi+: a|01> + b|10>``, ``Psi-: a|01> - b|10>``).
    A ``density`` channel carries an arbitrary two-qubit matrix plus the
    amplitudes ``(a, b)`` of its noiseless counterpart, which set the
    ancilla unitary of the probabilistic step.
    """

    kind: str
    a: float
    b: float
    matrix: np.ndarray
    bell_type: str = "Phi+"

    def __post_init__(self):
        if self.kind not in ("pure", "density"):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.bell_type not in BELL_LABELS:
            raise ValueError(f"unknown channel type {self.bell_type!r}")
        if self.a < 0 or self.b < 0 or abs(self.a**2 + self.b**2 - 1) > _AMP_TOL:
            raise ValueError(f"channel amplitudes must be non-negative with a^2 + b^2 = 1, got ({self.a}, {self.b})")
        check_density(self.matrix, 4)

    @classmethod
    def pure(cls, a: float, b: float | None = None, bell_type: str = "Phi+") -> "ChannelState":
        if bell_type not in BELL_LABELS:
            raise ValueError(f"unknown channel type {bell_type!r}")
        b = np.sqrt(max(1 - a * a, 0.0)) if b is None else b
        v = kron(I2, _CHANNEL_PAULI[bell_type]) @ np.array([a, 0, 0, b], dtype=complex)
        return cls("pure", float(a), float(b), ket_to_density(v), bell_type)

    @classmethod
    def density(cls, m: np.ndarray, a: float = 1 / np.sqrt(2), b: float | None = None, bell_type: str = "Phi+") -> "ChannelState":
        b = np.sqrt(max(1 - a * a, 0.0)) if b is None else b
        return cls("density", float(a), float(b), np.asarray(m, dtype=complex), bell_type)

    def vector(self) -> np.ndarray:
        if self.kind != "pure":
            raise ValueError("a density channel has no state vector")
        return kron(I2, _CHANNEL_PAULI[self.bell_type]) @ np.array([self.a, 0, 0, self.b], dtype=complex)

    @property
    def is_maximal(self) -> bool:
        return abs(self.a - self.b) <= _AMP_TOL


@dataclass(frozen=True)
class TeleportResult:
    """One of Alice's Bell outcomes.

    ``success_probability`` is the probability that Danny's ancilla reads
    ``|0>`` given this outcome; ``outcome_probability`` is the probability of
    the outcome itself. ``fidelity`` is ``<chi|output_state|chi>`` and is NaN
    when the ancilla can never succeed. The failure branch (state, fidelity
    and probability) is kept for diagnostics.
    """

    chi: UnknownQubit
    outcome_label: str
    outcome_probability: float
    success: bool
    success_probability: float
    output_state: np.ndarray | None
    fidelity: float
    failure_state: np.ndarray | None = None
    failure_fidelity: float = float("nan")
    failure_probability: float = 0.0

    @property
    def joint_success_probability(self) -> float:
        return self.outcome_probability * self.success_probability


def fidelity(chi: UnknownQubit, rho: np.ndarray) -> float:
    """``<chi|rho|chi>`` for a one-qubit density matrix."""
    rho = check_density(rho, 2)
    v = chi.vector
    return float(np.vdot(v, rho @ v).real)


def correction_unitary(alice_outcome: str, bell_type: str = "Phi+") -> np.ndarray:
    """Pauli Danny applies after Alice reports ``alice_outcome``.

    For a ``Phi+`` channel the map is ``Phi+ -> I, Phi- -> Z, Psi+ -> X,
    Psi- -> XZ``; other channel types first undo their own Pauli.
    """
    if alice_outcome not in BELL_LABELS:
        raise ValueError(f"unknown outcome {alice_outcome!r}")
    return _OUTCOME_PAULI[alice_outcome] @ _CHANNEL_PAULI[bell_type].conj().T


def ancilla_unitary(a: float, b: float, bell_type: str = "Phi+") -> np.ndarray:
    """Two-qubit unitary on ``(D, ancilla)`` that equalises Danny's amplitudes.

    With ``a >= b`` and the larger amplitude on Danny's ``|0>`` this is
    ``[[b/a, s, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0], [s, -b/a, 0, 0]]`` with
    ``s = sqrt(1 - b^2/a^2)``. When the larger amplitude sits on ``|1>``
    (``b > a``, or a ``Psi``-type channel) it is conjugated by ``X`` on ``D``.
    """
    big, small = (a, b) if a >= b else (b, a)
    if big <= 0:
        raise ValueError("channel amplitudes are both zero")
    ratio = small / big
    s = np.sqrt(max(1 - ratio * ratio, 0.0))
    u0 = np.array(
        [
            [ratio, s, 0, 0],
            [0, 0, 0, -1],
            [0, 0, 1, 0],
            [s, -ratio, 0, 0],
        ],
        dtype=complex,
    )
    # basis state of D that carries amplitude ``a``
    a_on_one = bell_type.startswith("Psi")
    big_on_one = a_on_one if a >= b else not a_on_one
    if big_on_one:
        flip = kron(SIGMA_X, I2)
        u0 = flip @ u0 @ flip
    return u0


def _bell_bra_on_ta() -> dict[str, np.ndarray]:
    return {lab: kron(BELL_STATES[lab].conj()[None, :], I2) for lab in BELL_LABELS}


def _as_density(v: np.ndarray) -> np.ndarray:
    return ket_to_density(v / np.linalg.norm(v))


def teleport_standard(chi: UnknownQubit, channel: ChannelState) -> list[TeleportResult]:
    """Textbook teleportation through a maximally entangled pure channel."""
    if channel.kind != "pure" or not channel.is_maximal:
        raise ValueError("standard teleportation needs a maximally entangled pure channel (a = b)")
    psi = kron(chi.vector, channel.vector())
    out = []
    for lab, bra in _bell_bra_on_ta().items():
        d = bra @ psi
        prob = float(np.vdot(d, d).real)
        d = correction_unitary(lab, channel.bell_type) @ (d / np.sqrt(prob))
        rho = ket_to_density(d)
        out.append(TeleportResult(chi, lab, prob, True, 1.0, rho, fidelity(chi, rho)))
    return out


def teleport_probabilistic(chi: UnknownQubit, channel: ChannelState) -> list[TeleportResult]:
    """Probabilistic teleportation through a non-maximally entangled pure channel.

    Returns one result per Alice outcome. On the successful ancilla branch the
    output equals ``|chi>``; the total success probability is ``2 * min(a, b)^2``.
    """
    if channel.kind != "pure":
        raise ValueError("probabilistic teleportation needs a pure channel; use teleport_noisy")
    psi = kron(chi.vector, channel.vector())
    u_anc = ancilla_unitary(channel.a, channel.b, channel.bell_type)
    out = []
    for lab, bra in _bell_bra_on_ta().items():
        d = bra @ psi
        prob = float(np.vdot(d, d).real)
        d = d / np.sqrt(prob)
        u = correction_unitary(lab, channel.bell_type)
        joint = (u_anc @ kron(d, KET0)).reshape(2, 2)
        ok, bad = joint[:, 0], joint[:, 1]
        p_ok = float(np.vdot(ok, ok).real)
        p_bad = float(np.vdot(bad, bad).real)
        rho_ok = _as_density(u @ ok) if p_ok > _AMP_TOL**2 else None
        rho_bad = _as_density(u @ bad) if p_bad > _AMP_TOL**2 else None
        out.append(
            TeleportResult(
                chi,
                lab,
                prob,
                rho_ok is not None,
                p_ok,
                rho_ok,
                fidelity(chi, rho_ok) if rho_ok is not None else float("nan"),
                rho_bad,
                fidelity(chi, rho_bad) if rho_bad is not None else float("nan"),
                p_bad,
            )
        )
    return out


def teleport_noisy(chi: UnknownQubit, channel: ChannelState, alice_outcome: str) -> TeleportResult:
    """Density-matrix teleportation chain for one of Alice's outcomes.

    Works for any channel; the ancilla unitary is built from the channel's
    noiseless amplitudes ``(a, b)``.
    """
    if alice_outcome not in BELL_LABELS:
        raise ValueError(f"unknown outcome {alice_outcome!r}")
    rho1 = kron(chi.density, channel.matrix)
    bell = BELL_STATES[alice_outcome]
    proj = kron(np.outer(bell, bell.conj()), I2)
    p_alice = float(np.trace(proj @ rho1).real)
    if p_alice <= _AMP_TOL:
        raise ValueError(f"Alice outcome {alice_outcome} has zero probability on this channel")
    post = proj @ rho1 @ proj / p_alice
    rho_d = partial_trace(post, _TAD, ("D",))

    u_anc = ancilla_unitary(channel.a, channel.b, channel.bell_type)
    joint = u_anc @ kron(rho_d, ket_to_density(KET0)) @ u_anc.conj().T
    u = correction_unitary(alice_outcome, channel.bell_type)

    def branch(k: int) -> tuple[float, np.ndarray | None]:
        anc = np.zeros((2, 2), dtype=complex)
        anc[k, k] = 1
        p = kron(I2, anc)
        sub = partial_trace(p @ joint @ p, _DX, ("D",))
        prob = float(np.trace(sub).real)
        if prob <= _AMP_TOL**2:
            return max(prob, 0.0), None
        return prob, u @ (sub / prob) @ u.conj().T

    p_ok, rho_ok = branch(0)
    p_bad, rho_bad = branch(1)
    return TeleportResult(
        chi,
        alice_outcome,
        p_alice,
        rho_ok is not None,
        p_ok,
        rho_ok,
        fidelity(chi, rho_ok) if rho_ok is not None else float("nan"),
        rho_bad,
        fidelity(chi, rho_bad) if rho_bad is not None else float("nan"),
        p_bad,
    )


def teleport_noisy_all(chi: UnknownQubit, channel: ChannelState) -> list[TeleportResult]:
    """:func:`teleport_noisy` for every outcome Alice can actually obtain."""
    out = []
    for lab in BELL_LABELS:
        try:
            out.append(teleport_noisy(chi, channel, lab))
        except ValueError:
            continue
    return out


def total_success_probability(results: list[TeleportResult]) -> float:
    return float(sum(r.joint_success_probability for r in results))


def average_fidelity(results: list[TeleportResult]) -> float:
    """Fidelity averaged over successful branches, weighted by their joint probability."""
    weight = total_success_probability(results)
    if weight <= 0:
        return float("nan")
    return float(sum(r.joint_success_probability * r.fidelity for r in results if r.success) / weight)


def swap_channel(params: NoisyPairParams, label: str = "Phi+") -> ChannelState:
    """Channel left on ``AD`` by a noisy swap with outcome ``label``.

    The noiseless amplitudes are ``(p0, p1)/sqrt(p0^2 + p1^2)`` for ``Phi``
    outcomes and equal for ``Psi`` outcomes.
    """
    x = noisy_outcome_xstate(params, label)
    if x is None:
        raise ValueError(f"swap outcome {label} has zero probability")
    if label.startswith("Phi"):
        p0, p1 = params.schmidt.p0, params.schmidt.p1
        norm = np.hypot(p0, p1)
        return ChannelState.density(x.matrix(), p0 / norm, p1 / norm, label)
    return ChannelState.density(x.matrix(), 1 / np.sqrt(2), 1 / np.sqrt(2), label)
