import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from twomode import (
    Engine,
    FixedTotalState,
    MomentSpec,
    NGBSParams,
    binomial_state,
    compare_engines,
    cross_moment,
    expectation,
    literal_moment,
    mode1_moment,
    mode2_moment,
    moment_oracle,
    ngbs,
)
from twomode.moments import mode1_sum_empty, mode2_sum_empty

from conftest import random_fixed_total


def one_photon_mode1():
    return FixedTotalState(1, np.array([0.0, 1.0]))


def one_photon_mode2():
    return FixedTotalState(1, np.array([1.0, 0.0]))


# --- frozen single-point values ---------------------------------------------

def test_mode1_number_of_single_photon():
    assert mode1_moment(one_photon_mode1(), 1, 1) == pytest.approx(1.0)


def test_mode2_number_of_single_photon():
    assert mode2_moment(one_photon_mode2(), 1, 1) == pytest.approx(1.0)


def test_mode1_mean_photon_number_binomial():
    state = binomial_state(2, 0.5)
    assert mode1_moment(state, 1, 1).real == pytest.approx(1.0, abs=1e-12)


def test_mode2_mean_photon_number_binomial():
    state = binomial_state(2, 0.5)
    assert mode2_moment(state, 1, 1).real == pytest.approx(1.0, abs=1e-12)


def test_mode1_offdiagonal_literal_value():
    # series value for <a1> on binomial(2, 0.5); the oracle gives 0 for the
    # same spec, which is the documented engine disagreement
    state = binomial_state(2, 0.5)
    value = mode1_moment(state, 0, 1).real
    expected = 0.5 / np.sqrt(2) + 0.5 / np.sqrt(2) * np.sqrt(2)
    assert value == pytest.approx(expected, abs=1e-12)
    assert value == pytest.approx(0.8535533905932737, abs=1e-12)
    assert abs(moment_oracle(state, MomentSpec(0, 1, 0, 0))) <= 1e-12


def test_mode2_second_factorial_moment():
    state = binomial_state(2, 0.5)
    assert mode2_moment(state, 2, 2).real == pytest.approx(0.5, abs=1e-12)


def test_cross_moment_number_changing_is_zero():
    state = binomial_state(3, 0.4)
    assert cross_moment(state, MomentSpec(0, 1, 0, 1)) == 0.0


def test_cross_moment_orthogonal_example():
    state = FixedTotalState(2, np.array([0.0, 1.0, 0.0]))
    val = cross_moment(state, MomentSpec(0, 1, 1, 0))
    assert abs(val) <= 1e-12
    assert abs(moment_oracle(state, MomentSpec(0, 1, 1, 0)) - val) <= 1e-12


def test_cross_moment_hand_value():
    state = binomial_state(1, 0.5)
    val = cross_moment(state, MomentSpec(0, 1, 1, 0))
    assert val.real == pytest.approx(0.5, abs=1e-12)


# --- engine relations ---------------------------------------------------------

def test_diagonal_agreement_sample_grid():
    for total in (5, 10):
        for p in (0.2, 0.5, 0.8):
            state = ngbs(NGBSParams(total, p, 0.005))
            for order in range(0, min(10, total) + 1):
                lit = mode1_moment(state, order, order)
                ora = moment_oracle(state, MomentSpec(order, order, 0, 0))
                assert abs(lit - ora) <= 1e-9 * max(1.0, abs(ora))
                lit2 = mode2_moment(state, order, order)
                ora2 = moment_oracle(state, MomentSpec(0, 0, order, order))
                assert abs(lit2 - ora2) <= 1e-9 * max(1.0, abs(ora2))


@given(
    st.integers(0, 20),
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 2**32 - 1),
)
def test_cross_moment_matches_oracle_on_conserving_specs(total, k, r, s, seed):
    j = k + s - r
    assume(0 <= j <= 6)
    spec = MomentSpec(j, k, r, s)
    assert spec.conserving
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal(total + 1) + 1j * rng.standard_normal(total + 1)
    state = FixedTotalState(total, vec / np.linalg.norm(vec))
    closed = cross_moment(state, spec)
    oracle = moment_oracle(state, spec)
    assert abs(closed - oracle) <= 1e-12 * max(1.0, abs(oracle))


def test_cross_moment_matches_oracle_on_ngbs(rng):
    for _ in range(30):
        total = int(rng.integers(1, 21))
        p = float(rng.uniform(0.05, 0.95))
        state = ngbs(NGBSParams(total, p, 0.0))
        k, r = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        s = int(rng.integers(0, 4))
        j = k + s - r
        if not 0 <= j <= 10:
            continue
        spec = MomentSpec(j, k, r, s)
        closed = cross_moment(state, spec)
        oracle = moment_oracle(state, spec)
        assert abs(closed - oracle) <= 1e-12 * max(1.0, abs(oracle))


def test_literal_hermiticity_on_complex_states(rng):
    for _ in range(30):
        state = random_fixed_total(rng, int(rng.integers(1, 12)))
        k, l = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        assert abs(mode1_moment(state, k, l) - mode1_moment(state, l, k).conjugate()) <= 1e-12
        assert abs(mode2_moment(state, k, l) - mode2_moment(state, l, k).conjugate()) <= 1e-12


def test_literal_moment_dispatch():
    state = binomial_state(4, 0.3)
    # pure single-mode goes through the series
    assert literal_moment(state, MomentSpec(0, 1, 0, 0)) == mode1_moment(state, 0, 1)
    # mixed conserving goes through the joint closed form
    spec = MomentSpec(0, 1, 1, 0)
    assert literal_moment(state, spec) == cross_moment(state, spec)
    # mixed number-changing factorizes
    spec = MomentSpec(0, 1, 0, 1)
    prod = mode1_moment(state, 0, 1) * mode2_moment(state, 0, 1)
    assert literal_moment(state, spec) == prod


def test_literal_moment_requires_fixed_total():
    from twomode import fock_pair

    with pytest.raises(TypeError):
        literal_moment(fock_pair(1, 1), MomentSpec(1, 1, 0, 0))


def test_expectation_engine_switch():
    state = binomial_state(2, 0.5)
    spec = MomentSpec(0, 1, 0, 0)
    assert abs(expectation(state, spec, Engine.ORACLE)) <= 1e-12
    assert expectation(state, spec, Engine.LITERAL).real > 0.5


# --- empty sums and reports ---------------------------------------------------

def test_empty_sum_returns_zero_with_flag():
    state = binomial_state(2, 0.5)
    assert mode1_moment(state, 3, 3) == 0.0
    assert mode1_sum_empty(2, 3, 3)
    assert mode2_moment(state, 3, 3) == 0.0
    assert mode2_sum_empty(2, 3, 3)
    assert not mode1_sum_empty(2, 2, 2)
    assert not mode2_sum_empty(2, 0, 1)


def test_compare_engines_empty_list():
    assert compare_engines(binomial_state(2, 0.5), []) == []


def test_compare_engines_rejects_mixed_specs():
    with pytest.raises(ValueError):
        compare_engines(binomial_state(2, 0.5), [MomentSpec(1, 1, 1, 1)])


def test_compare_engines_diagonal_and_offdiagonal():
    state = ngbs(NGBSParams(10, 0.5, -0.01))
    diag = [MomentSpec(k, k, 0, 0) for k in range(6)]
    diag += [MomentSpec(0, 0, k, k) for k in range(6)]
    for report in compare_engines(state, diag):
        assert report.abs_discrepancy <= 1e-9
        assert not report.degenerate

    offdiag = compare_engines(binomial_state(2, 0.5), [MomentSpec(0, 1, 0, 0)])[0]
    assert offdiag.literal_value.real == pytest.approx(0.8535533905932737, abs=1e-12)
    assert abs(offdiag.oracle_value) <= 1e-12
    assert offdiag.abs_discrepancy == pytest.approx(0.8535533905932737, abs=1e-12)


def test_compare_engines_flags_degenerate_orders():
    report = compare_engines(binomial_state(2, 0.5), [MomentSpec(4, 4, 0, 0)])[0]
    assert report.degenerate
    assert report.literal_value == 0.0


def test_engine_parse():
    assert Engine.parse("oracle") is Engine.ORACLE
    assert Engine.parse("LITERAL") is Engine.LITERAL
    with pytest.raises(ValueError):
        Engine.parse("magic")
