import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapkit.measures import (
    concurrence_pure,
    concurrence_schmidt,
    concurrence_wootters_oracle,
    concurrence_xstate,
    negativity,
    negativity_xstate,
    tripartite_measure_geometric,
)
from swapkit.states import BELL_LABELS, BELL_STATES, NoisyPairParams, SchmidtPair, depolarize
from swapkit.swap import (
    MeasurementBasis,
    average_noisy_concurrence,
    average_noisy_negativity,
    average_swapped_concurrence_pure,
    average_swapped_negativity_pure,
    average_tripartite_concurrence,
    average_tripartite_negativity,
    branch_probabilities,
    noisy_outcome_concurrence,
    noisy_outcome_negativity,
    project_density_pairs,
    project_pure_pairs,
    project_three_pairs_ghz,
    swap_noisy_pairs,
    swap_pure_pairs,
    swap_three_pairs_ghz,
    weighted_average,
    weighted_tripartite,
)
from swapkit.tensor import is_density, ket_to_density

unit = st.floats(0.0, 1.0, allow_nan=False)
angle = st.floats(0.0, np.pi / 2, allow_nan=False)


def assert_outcomes_match(ana, ora, atol=1e-10):
    assert [o.label for o in ana] == [o.label for o in ora]
    for a, o in zip(ana, ora):
        assert a.probability == pytest.approx(o.probability, abs=1e-12)
        assert (a.state is None) == (o.state is None)
        if a.state is not None:
            np.testing.assert_allclose(a.state, o.state, atol=atol)


def test_basis_is_orthonormal():
    for basis in (MeasurementBasis.bell(), MeasurementBasis.from_angles(0.3, 1.1)):
        np.testing.assert_allclose(basis.gram(), np.eye(4), atol=1e-15)
    with pytest.raises(ValueError):
        MeasurementBasis(0.5, 0.5, 1.0, 0.0)
    with pytest.raises(ValueError):
        MeasurementBasis(-1.0, 0.0, 1.0, 0.0)


def test_bell_inputs_give_bell_outcomes():
    bell = SchmidtPair(0.5)
    outs = swap_pure_pairs(bell, bell)
    for o in outs:
        assert o.probability == pytest.approx(0.25)
        assert concurrence_pure(o.state) == pytest.approx(1.0, abs=1e-12)
        assert abs(np.vdot(BELL_STATES[o.label], o.state)) == pytest.approx(1.0, abs=1e-12)


def test_product_input_gives_product_outcomes():
    outs = swap_pure_pairs(SchmidtPair(1.0), SchmidtPair(0.37))
    assert weighted_average(outs, concurrence_pure) == pytest.approx(0.0, abs=1e-12)
    assert sum(o.probability for o in outs) == pytest.approx(1.0, abs=1e-12)


def test_worked_probabilities():
    outs = swap_pure_pairs(SchmidtPair(0.3), SchmidtPair(0.4))
    np.testing.assert_allclose([o.probability for o in outs], [0.27, 0.27, 0.23, 0.23], atol=1e-15)
    assert_outcomes_match(outs, project_pure_pairs(SchmidtPair(0.3), SchmidtPair(0.4)))


def test_zero_probability_branch_is_absent():
    # product basis with p0 = 1 on both pairs leaves Phi- impossible
    basis = MeasurementBasis(1.0, 0.0, 1.0, 0.0)
    outs = swap_pure_pairs(SchmidtPair(1.0), SchmidtPair(1.0), basis)
    absent = {o.label for o in outs if o.state is None}
    assert "Phi-" in absent
    assert all(o.probability == 0 for o in outs if o.state is None)
    assert weighted_average(outs, concurrence_pure) == 0.0


def test_average_concurrence_examples():
    bell = SchmidtPair(0.5)
    assert average_swapped_concurrence_pure(bell, bell) == pytest.approx(1.0)
    assert average_swapped_concurrence_pure(SchmidtPair(0.1), SchmidtPair(0.2)) == pytest.approx(0.48, abs=1e-12)
    product_basis = MeasurementBasis(1.0, 0.0, 1.0, 0.0)
    assert average_swapped_concurrence_pure(bell, bell, product_basis) == 0.0


def test_average_negativity_examples():
    assert average_swapped_negativity_pure(SchmidtPair(0.5), SchmidtPair(0.5)) == pytest.approx(1.0)
    ab, cd = SchmidtPair(0.1), SchmidtPair(0.2)
    assert average_swapped_negativity_pure(ab, cd) == pytest.approx(0.48, abs=1e-12)
    assert average_swapped_negativity_pure(ab, cd) == pytest.approx(average_swapped_concurrence_pure(ab, cd), abs=1e-12)
    assert weighted_average(swap_pure_pairs(ab, cd), negativity) == pytest.approx(0.48, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(p0=unit, q0=unit, t0=angle, t1=angle)
def test_pure_swap_matches_projection(p0, q0, t0, t1):
    ab, cd = SchmidtPair(p0), SchmidtPair(q0)
    basis = MeasurementBasis.from_angles(t0, t1)
    outs = swap_pure_pairs(ab, cd, basis)
    assert_outcomes_match(outs, project_pure_pairs(ab, cd, basis))
    assert sum(o.probability for o in outs) == pytest.approx(1.0, abs=1e-12)
    for o in outs:
        if o.state is not None:
            assert np.linalg.norm(o.state) == pytest.approx(1.0, abs=1e-12)
    assert weighted_average(outs, concurrence_pure) == pytest.approx(average_swapped_concurrence_pure(ab, cd, basis), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(p0=st.floats(0.01, 0.99), q0=st.floats(0.01, 0.99), t0=angle, t1=angle)
def test_non_bell_basis_never_beats_bell(p0, q0, t0, t1):
    ab, cd = SchmidtPair(p0), SchmidtPair(q0)
    basis = MeasurementBasis.from_angles(t0, t1)
    bell_value = average_swapped_concurrence_pure(ab, cd)
    assert bell_value == pytest.approx(concurrence_schmidt(ab) * concurrence_schmidt(cd), abs=1e-12)
    assert average_swapped_concurrence_pure(ab, cd, basis) <= bell_value + 1e-15


def test_ghz_examples():
    bell = SchmidtPair(0.5)
    outs = swap_three_pairs_ghz(bell, bell, bell)
    for o in outs:
        assert o.probability == pytest.approx(1 / 8)
        assert tripartite_measure_geometric(o.state) == pytest.approx(1.0, abs=1e-12)
    outs = swap_three_pairs_ghz(SchmidtPair(1.0), SchmidtPair(0.3), SchmidtPair(0.6))
    assert weighted_tripartite(outs) == pytest.approx(0.0, abs=1e-12)
    outs = swap_three_pairs_ghz(SchmidtPair(0.3), SchmidtPair(0.4), SchmidtPair(0.5))
    assert outs[0].label == "G0"
    assert outs[0].probability == pytest.approx(0.135, abs=1e-15)
    expected_g0 = np.zeros(8)
    expected_g0[0], expected_g0[7] = np.sqrt(0.3 * 0.4 * 0.5), np.sqrt(0.7 * 0.6 * 0.5)
    np.testing.assert_allclose(outs[0].state, expected_g0 / np.sqrt(2 * 0.135), atol=1e-15)


def test_ghz_product_law_examples():
    bell = SchmidtPair(0.5)
    assert average_tripartite_concurrence(bell, bell, bell) == pytest.approx(1.0)
    triple = (SchmidtPair(0.1), SchmidtPair(0.2), SchmidtPair(0.5))
    assert average_tripartite_concurrence(*triple) == pytest.approx(0.48, abs=1e-12)
    assert average_tripartite_negativity(*triple) == pytest.approx(0.48, abs=1e-12)
    assert average_tripartite_negativity(SchmidtPair(0.0), bell, bell) == 0.0


@settings(max_examples=100, deadline=None)
@given(l0=unit, m0=unit, n0=unit)
def test_ghz_swap_matches_projection(l0, m0, n0):
    pairs = (SchmidtPair(l0), SchmidtPair(m0), SchmidtPair(n0))
    outs = swap_three_pairs_ghz(*pairs)
    assert_outcomes_match(outs, project_three_pairs_ghz(*pairs))
    assert sum(o.probability for o in outs) == pytest.approx(1.0, abs=1e-12)
    assert weighted_tripartite(outs, "concurrence") == pytest.approx(average_tripartite_concurrence(*pairs), abs=1e-10)
    assert weighted_tripartite(outs, "negativity") == pytest.approx(average_tripartite_negativity(*pairs), abs=1e-10)


def test_noisy_limits():
    outs = swap_noisy_pairs(NoisyPairParams.of(1.0, 0.5))
    for o in outs:
        assert o.probability == pytest.approx(0.25)
        np.testing.assert_allclose(o.state, ket_to_density(BELL_STATES[o.label]), atol=1e-15)
    for o in swap_noisy_pairs(NoisyPairParams.of(0.0, 0.3)):
        assert o.probability == pytest.approx(0.25)
        np.testing.assert_allclose(o.state, np.eye(4) / 4, atol=1e-15)


def test_noisy_worked_example():
    params = NoisyPairParams.of(0.8, 0.5)
    assert branch_probabilities(params) == pytest.approx((0.25, 0.25))
    assert noisy_outcome_concurrence(params, "Phi+") == pytest.approx(0.46, abs=1e-15)
    phi = swap_noisy_pairs(params, method="numeric")[0]
    assert concurrence_wootters_oracle(phi.state) == pytest.approx(0.46, abs=1e-12)


def test_noisy_concurrence_limits():
    for p0 in (0.1, 0.3, 0.5, 0.8):
        params = NoisyPairParams.of(1.0, p0)
        p1 = 1 - p0
        expected = 2 * p0 * p1 / (p0**2 + p1**2)
        assert noisy_outcome_concurrence(params, "Phi-") == pytest.approx(expected, abs=1e-15)
    for alpha in np.linspace(0, 1 / 3, 7):
        for lab in BELL_LABELS:
            assert noisy_outcome_concurrence(NoisyPairParams.of(alpha, 0.5), lab) == pytest.approx(0.0, abs=1e-15)


def test_noisy_negativity_limits():
    for lab in BELL_LABELS:
        assert noisy_outcome_negativity(NoisyPairParams.of(1.0, 0.5), lab) == pytest.approx(1.0, abs=1e-15)
        assert noisy_outcome_negativity(NoisyPairParams.of(0.0, 0.2), lab) == 0.0


def test_noisy_averages():
    assert average_noisy_concurrence(NoisyPairParams.of(1.0, 0.5)) == pytest.approx(1.0)
    assert average_noisy_negativity(NoisyPairParams.of(1.0, 0.5)) == pytest.approx(1.0)


def test_noisy_impossible_branch():
    # alpha = 1 with a product pair: Psi outcomes cannot happen
    params = NoisyPairParams.of(1.0, 1.0)
    outs = swap_noisy_pairs(params)
    assert [o.state is None for o in outs] == [False, False, True, True]
    assert noisy_outcome_concurrence(params, "Psi+") == 0.0
    assert noisy_outcome_negativity(params, "Psi-") == 0.0
    assert_outcomes_match(outs, swap_noisy_pairs(params, method="numeric"))


def test_noisy_errors():
    p, q = NoisyPairParams.of(0.5, 0.5), NoisyPairParams.of(0.6, 0.5)
    with pytest.raises(ValueError):
        swap_noisy_pairs(p, q)
    with pytest.raises(ValueError):
        swap_noisy_pairs(p, method="guess")
    with pytest.raises(ValueError):
        noisy_outcome_concurrence(p, "Phi0")
    assert len(swap_noisy_pairs(p, q, method="numeric")) == 4


@settings(max_examples=200, deadline=None)
@given(alpha=unit, p0=unit)
def test_noisy_swap_matches_projection(alpha, p0):
    params = NoisyPairParams.of(alpha, p0)
    ana = swap_noisy_pairs(params)
    num = swap_noisy_pairs(params, method="numeric")
    assert_outcomes_match(ana, num)
    assert sum(o.probability for o in ana) == pytest.approx(1.0, abs=1e-12)
    for o in num:
        if o.state is None:
            continue
        assert is_density(o.state)
        assert noisy_outcome_concurrence(params, o.label) == pytest.approx(concurrence_wootters_oracle(o.state), abs=1e-10)
        assert noisy_outcome_negativity(params, o.label) == pytest.approx(negativity(o.state), abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(alpha=unit, p0=unit)
def test_noisy_averages_bounded_by_input_products(alpha, p0):
    params = NoisyPairParams.of(alpha, p0)
    x = depolarize(params.schmidt, alpha)
    c_av, n_av = average_noisy_concurrence(params), average_noisy_negativity(params)
    assert c_av <= concurrence_xstate(x) ** 2 + 1e-12
    assert n_av <= negativity_xstate(x) ** 2 + 1e-12
    assert n_av <= c_av + 1e-12


def test_density_projection_handles_distinct_pairs(rng):
    def rand_rho():
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        r = g @ g.conj().T
        return r / np.trace(r)

    for _ in range(20):
        outs = project_density_pairs(rand_rho(), rand_rho(), MeasurementBasis.from_angles(*rng.uniform(0, 1.5, 2)))
        assert sum(o.probability for o in outs) == pytest.approx(1.0, abs=1e-12)
        assert all(is_density(o.state) for o in outs)


def test_density_projection_reduces_to_pure(rng):
    ab, cd = SchmidtPair(0.3), SchmidtPair(0.85)
    basis = MeasurementBasis.from_angles(0.4, 1.2)
    rho_ab = depolarize(ab, 1.0).matrix()
    rho_cd = depolarize(cd, 1.0).matrix()
    for d, p in zip(project_density_pairs(rho_ab, rho_cd, basis), swap_pure_pairs(ab, cd, basis)):
        assert d.probability == pytest.approx(p.probability, abs=1e-12)
        np.testing.assert_allclose(d.state, ket_to_density(p.state), atol=1e-12)
