import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapkit.states import BELL_LABELS, NoisyPairParams
from swapkit.teleport import (
    ChannelState,
    UnknownQubit,
    ancilla_unitary,
    average_fidelity,
    correction_unitary,
    fidelity,
    swap_channel,
    teleport_noisy,
    teleport_noisy_all,
    teleport_probabilistic,
    teleport_standard,
    total_success_probability,
)
from swapkit.tensor import is_density

PLUS = UnknownQubit(1 / np.sqrt(2), 1 / np.sqrt(2))


def test_unknown_qubit_validation():
    with pytest.raises(ValueError):
        UnknownQubit(1.0, 1.0)
    chi = UnknownQubit.random(np.random.default_rng(0))
    assert np.linalg.norm(chi.vector) == pytest.approx(1.0)


def test_channel_validation():
    with pytest.raises(ValueError):
        ChannelState.pure(0.6, 0.6)
    with pytest.raises(ValueError):
        ChannelState.pure(0.6, bell_type="Chi")
    with pytest.raises(ValueError):
        ChannelState.density(np.eye(4))
    with pytest.raises(ValueError):
        ChannelState.density(np.eye(4) / 4).vector()


def test_fidelity_examples(rng):
    chi = UnknownQubit.random(rng)
    perp = np.array([-np.conj(chi.beta), np.conj(chi.alpha)])
    assert fidelity(chi, chi.density) == pytest.approx(1.0, abs=1e-15)
    assert fidelity(chi, np.outer(perp, perp.conj())) == pytest.approx(0.0, abs=1e-15)
    assert fidelity(chi, np.eye(2) / 2) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        fidelity(chi, np.eye(2))


@pytest.mark.parametrize("bell_type", BELL_LABELS)
def test_standard_teleportation(bell_type, rng):
    channel = ChannelState.pure(1 / np.sqrt(2), bell_type=bell_type)
    for chi in [UnknownQubit(1, 0), PLUS] + [UnknownQubit.random(rng) for _ in range(100)]:
        results = teleport_standard(chi, channel)
        assert [r.outcome_label for r in results] == list(BELL_LABELS)
        for r in results:
            assert r.outcome_probability == pytest.approx(0.25, abs=1e-12)
            assert r.fidelity == pytest.approx(1.0, abs=1e-12)


def test_standard_rejects_partial_channel():
    with pytest.raises(ValueError):
        teleport_standard(PLUS, ChannelState.pure(np.sqrt(0.8)))


def test_correction_table():
    z = np.diag([1, -1])
    x = np.array([[0, 1], [1, 0]])
    np.testing.assert_array_equal(correction_unitary("Phi+"), np.eye(2))
    np.testing.assert_array_equal(correction_unitary("Phi-"), z)
    np.testing.assert_array_equal(correction_unitary("Psi+"), x)
    np.testing.assert_array_equal(correction_unitary("Psi-"), x @ z)
    with pytest.raises(ValueError):
        correction_unitary("G0")


@settings(max_examples=200, deadline=None)
@given(a=st.floats(0.0, 1.0), bell_type=st.sampled_from(BELL_LABELS))
def test_ancilla_unitary_is_unitary(a, bell_type):
    b = np.sqrt(1 - a * a)
    u = ancilla_unitary(a, b, bell_type)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-12)


def test_probabilistic_examples(rng):
    maximal = ChannelState.pure(1 / np.sqrt(2))
    res = teleport_probabilistic(PLUS, maximal)
    assert total_success_probability(res) == pytest.approx(1.0, abs=1e-12)
    assert all(r.fidelity == pytest.approx(1.0, abs=1e-12) for r in res)

    channel = ChannelState.pure(np.sqrt(0.8), np.sqrt(0.2))
    chi = UnknownQubit.random(rng)
    res = teleport_probabilistic(chi, channel)
    assert total_success_probability(res) == pytest.approx(0.4, abs=1e-12)
    assert all(r.fidelity == pytest.approx(1.0, abs=1e-12) for r in res if r.success)
    assert sum(r.outcome_probability for r in res) == pytest.approx(1.0, abs=1e-12)

    res = teleport_probabilistic(chi, ChannelState.pure(1.0, 0.0))
    assert total_success_probability(res) == 0.0
    assert not any(r.success for r in res)
    assert all(np.isnan(r.fidelity) for r in res)


def test_probabilistic_failure_branch_is_reported(rng):
    chi = UnknownQubit.random(rng)
    for r in teleport_probabilistic(chi, ChannelState.pure(np.sqrt(0.9))):
        assert r.failure_state is not None
        assert is_density(r.failure_state)
        assert 0 <= r.failure_fidelity <= 1


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), a=st.floats(0.05, 0.999), bell_type=st.sampled_from(BELL_LABELS))
def test_probabilistic_trades_probability_not_fidelity(seed, a, bell_type):
    rng = np.random.default_rng(seed)
    chi = UnknownQubit.random(rng)
    b = np.sqrt(1 - a * a)
    res = teleport_probabilistic(chi, ChannelState.pure(a, b, bell_type))
    small = min(a, b)
    assert total_success_probability(res) == pytest.approx(2 * small * small, abs=1e-12)
    for r in res:
        assert 0 <= r.success_probability <= 1 + 1e-12
        assert r.success_probability + r.failure_probability == pytest.approx(1.0, abs=1e-12)
        if r.success:
            assert r.fidelity == pytest.approx(1.0, abs=1e-12)
            assert fidelity(chi, r.output_state) == pytest.approx(r.fidelity, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), a=st.floats(0.05, 0.999), bell_type=st.sampled_from(BELL_LABELS))
def test_density_chain_reproduces_state_vector(seed, a, bell_type):
    rng = np.random.default_rng(seed)
    chi = UnknownQubit.random(rng)
    pure = ChannelState.pure(a, bell_type=bell_type)
    embedded = ChannelState.density(pure.matrix, pure.a, pure.b, bell_type)
    for r in teleport_probabilistic(chi, pure):
        n = teleport_noisy(chi, embedded, r.outcome_label)
        assert n.outcome_probability == pytest.approx(r.outcome_probability, abs=1e-10)
        assert n.success_probability == pytest.approx(r.success_probability, abs=1e-10)
        if r.success:
            assert n.fidelity == pytest.approx(r.fidelity, abs=1e-10)


@pytest.mark.parametrize("label", BELL_LABELS)
def test_noisy_noiseless_channel(label, rng):
    channel = swap_channel(NoisyPairParams.of(1.0, 0.5), label)
    for _ in range(50):
        chi = UnknownQubit.random(rng)
        for r in teleport_noisy_all(chi, channel):
            assert r.success_probability == pytest.approx(1.0, abs=1e-12)
            assert r.fidelity == pytest.approx(1.0, abs=1e-12)


def test_noisy_fully_mixed_channel_averages_one_half(rng):
    channel = ChannelState.density(np.eye(4) / 4)
    fids = []
    for _ in range(2000):
        chi = UnknownQubit.random(rng)
        r = teleport_noisy(chi, channel, BELL_LABELS[rng.integers(4)])
        fids.append(r.fidelity)
        np.testing.assert_allclose(r.output_state, np.eye(2) / 2, atol=1e-12)
    assert np.mean(fids) == pytest.approx(0.5, abs=1e-12)


def test_noisy_fidelity_nondecreasing_in_visibility():
    fids = []
    for alpha in np.linspace(0, 1, 41):
        channel = swap_channel(NoisyPairParams.of(alpha, 0.5), "Phi+")
        fids.append(teleport_noisy(PLUS, channel, "Phi+").fidelity)
    assert np.all(np.diff(fids) >= -1e-12)
    assert fids[-1] == pytest.approx(1.0, abs=1e-12)
    assert 0.5 < fids[int(0.8 * 40)] < 1.0


def test_noisy_zero_probability_outcome():
    channel = ChannelState.density(np.diag([1.0, 0, 0, 0]), a=1.0, b=0.0)
    chi = UnknownQubit(1, 0)
    with pytest.raises(ValueError):
        teleport_noisy(chi, channel, "Psi+")
    with pytest.raises(ValueError):
        teleport_noisy(chi, channel, "Bell")
    assert {r.outcome_label for r in teleport_noisy_all(chi, channel)} == {"Phi+", "Phi-"}


@settings(max_examples=100, deadline=None)
@given(alpha=st.floats(0.0, 1.0), p0=st.floats(0.0, 1.0), seed=st.integers(0, 2**32 - 1))
def test_noisy_results_are_consistent(alpha, p0, seed):
    rng = np.random.default_rng(seed)
    chi = UnknownQubit.random(rng)
    params = NoisyPairParams.of(alpha, p0)
    for label in BELL_LABELS:
        try:
            channel = swap_channel(params, label)
        except ValueError:
            continue
        results = teleport_noisy_all(chi, channel)
        assert sum(r.outcome_probability for r in results) == pytest.approx(1.0, abs=1e-12)
        for r in results:
            assert 0 <= r.success_probability <= 1 + 1e-12
            assert r.success_probability + r.failure_probability == pytest.approx(1.0, abs=1e-12)
            if r.success:
                assert is_density(r.output_state)
                assert -1e-12 <= r.fidelity <= 1 + 1e-12
                assert fidelity(chi, r.output_state) == pytest.approx(r.fidelity, abs=1e-12)
        f = average_fidelity(results)
        assert np.isnan(f) or -1e-12 <= f <= 1 + 1e-12
