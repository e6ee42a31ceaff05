"""Entanglement swapping, entanglement measures and teleportation on a few qubits."""

from .measures import (
    BipartiteCut,
    concurrence_pure,
    concurrence_schmidt,
    concurrence_wootters_oracle,
    concurrence_xstate,
    negativity,
    negativity_schmidt,
    negativity_xstate,
    tripartite_measure_geometric,
    tripartite_measure_mean,
)
from .states import (
    BELL_LABELS,
    BELL_STATES,
    BlochMatrix,
    NoisyPairParams,
    SchmidtPair,
    XState,
    XStateSpectralParts,
    bloch_decompose,
    combo_criterion,
    depolarize,
    ghz_basis,
    random_xstate,
    schmidt_decompose,
    schmidt_pair_state,
)
from .swap import (
    MeasurementBasis,
    SwapOutcome,
    average_noisy_concurrence,
    average_noisy_negativity,
    average_swapped_concurrence_pure,
    average_swapped_negativity_pure,
    average_tripartite_concurrence,
    average_tripartite_negativity,
    noisy_outcome_concurrence,
    noisy_outcome_negativity,
    noisy_outcome_xstate,
    swap_noisy_pairs,
    swap_pure_pairs,
    swap_three_pairs_ghz,
)
from .teleport import (
    ChannelState,
    TeleportResult,
    UnknownQubit,
    fidelity,
    teleport_noisy,
    teleport_probabilistic,
    teleport_standard,
)
from .tensor import (
    QubitRegister,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    partial_transpose,
    singular_values,
    trace_norm,
)

__version__ = "0.1.0"
