from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ptmc.analysis import generate_hadamard_code
from ptmc.code_core import CodeSpec, generate_ptmc
from ptmc.simulator import (
    SimConfig,
    SimReport,
    correlate,
    detect_direct,
    encode,
    run_exhaustive,
    run_monte_carlo,
)


@pytest.fixture
def ptmc43():
    return generate_ptmc(CodeSpec(4, 3))


def brute_force_errors(matrix):
    """Plain-Python exhaustive decode; returns (errors, max interference)."""
    rows = matrix.tolist()
    n, length = len(rows), len(rows[0])
    errors = worst = 0
    for bits in product((0, 1), repeat=n):
        power = [sum(bits[u] * rows[u][t] for u in range(n)) for t in range(length)]
        for u in range(n):
            w = sum(rows[u])
            s = sum(power[t] * rows[u][t] for t in range(length))
            errors += int((2 * s >= w) != bits[u])
            worst = max(worst, s - bits[u] * w)
    return errors, worst


# --- encode / detect -------------------------------------------------------

def test_encode_single_user(ptmc43):
    np.testing.assert_array_equal(encode(ptmc43, [1, 0, 0, 0]), ptmc43[0])


def test_encode_all_active(ptmc43):
    assert encode(ptmc43, [1, 1, 1, 1]).tolist() == [1] * 12
    assert encode(ptmc43, [0, 0, 0, 0]).tolist() == [0] * 12


def test_encode_length_mismatch(ptmc43):
    with pytest.raises(ValueError):
        encode(ptmc43, [1, 0, 1])


@given(st.lists(st.integers(0, 1), min_size=6, max_size=6),
       st.lists(st.integers(0, 1), min_size=6, max_size=6))
def test_encode_additive_on_disjoint_sets(a, b):
    m = generate_ptmc(CodeSpec(6, 4))
    b = [y if not x else 0 for x, y in zip(a, b)]
    either = [x | y for x, y in zip(a, b)]
    np.testing.assert_array_equal(encode(m, a) + encode(m, b), encode(m, either))


def test_detect_all_active(ptmc43):
    spectrum = encode(ptmc43, [1, 1, 1, 1])
    assert correlate(ptmc43, spectrum, 2) == 3
    assert detect_direct(ptmc43, spectrum, 2) == 1


def test_detect_silence(ptmc43):
    spectrum = encode(ptmc43, [0, 0, 0, 0])
    for user in range(1, 5):
        assert correlate(ptmc43, spectrum, user) == 0
        assert detect_direct(ptmc43, spectrum, user) == 0


def test_detect_hadamard_false_positive():
    h = generate_hadamard_code(3)
    bits = [1, 1] + [0] * 5
    spectrum = encode(h, bits)
    assert correlate(h, spectrum, 3) == 4
    assert detect_direct(h, spectrum, 3) == 1


def test_detect_threshold_tie_rounds_up():
    m = np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8)
    assert detect_direct(m, np.array([1, 0, 0, 0]), 1) == 1
    assert detect_direct(m, np.array([0, 0, 0, 0.99]), 2) == 0


def test_detect_rejects(ptmc43):
    with pytest.raises(ValueError):
        detect_direct(ptmc43, np.zeros(12), 5)
    with pytest.raises(ValueError):
        detect_direct(ptmc43, np.zeros(11), 1)


@pytest.mark.parametrize("M", [2, 3])
def test_hadamard_interference_is_linear_in_active_count(M):
    h = generate_hadamard_code(M)
    lam = 2 ** (M - 2)
    n = h.shape[0]
    for bits in product((0, 1), repeat=n):
        spectrum = encode(h, bits)
        for u in range(n):
            if not bits[u]:
                assert correlate(h, spectrum, u + 1) == sum(bits) * lam


# --- exhaustive ------------------------------------------------------------

@pytest.mark.parametrize("users, weight", [(4, 3), (6, 3)])
def test_exhaustive_ptmc_clean(users, weight):
    m = generate_ptmc(CodeSpec(users, weight))
    rep = run_exhaustive(m)
    assert rep.trials == 2 ** users
    assert rep.bits_total == users * 2 ** users
    assert rep.bit_errors == 0
    assert rep.max_interference_observed == 0
    assert brute_force_errors(m) == (0, 0)


def test_exhaustive_hadamard_m2_fails():
    h = generate_hadamard_code(2)
    rep = run_exhaustive(h)
    assert rep.bit_errors > 0
    assert (rep.bit_errors, rep.max_interference_observed) == brute_force_errors(h)


@given(st.integers(2, 10), st.integers(2, 6))
@settings(max_examples=25, deadline=None)
def test_exhaustive_ptmc_property(users, weight):
    rep = run_exhaustive(generate_ptmc(CodeSpec(users, weight)))
    assert rep.bit_errors == 0 and rep.max_interference_observed == 0


def test_exhaustive_size_limit():
    with pytest.raises(ValueError, match="at most 20"):
        run_exhaustive(generate_ptmc(CodeSpec(21, 2)))


# --- Monte Carlo -----------------------------------------------------------

def test_monte_carlo_noiseless_ptmc():
    rep = run_monte_carlo(generate_ptmc(CodeSpec(8, 4)), SimConfig(trials=10000, seed=1))
    assert rep.bit_errors == 0
    assert rep.bits_total == 80000
    assert rep.max_interference_observed == 0


def test_monte_carlo_heavy_noise(ptmc43):
    rep = run_monte_carlo(ptmc43, SimConfig(trials=10000, seed=3, noise_sigma=3.0))
    assert rep.error_rate > 0.3


def test_monte_carlo_deterministic(ptmc43):
    cfg = SimConfig(trials=2000, seed=42, noise_sigma=1.0, activity=0.3)
    assert run_monte_carlo(ptmc43, cfg) == run_monte_carlo(ptmc43, cfg)
    other = run_monte_carlo(ptmc43, SimConfig(trials=2000, seed=43, noise_sigma=1.0, activity=0.3))
    assert other.bits_total == 8000


def test_monte_carlo_hadamard_interference():
    rep = run_monte_carlo(generate_hadamard_code(3), SimConfig(trials=500, seed=0))
    assert rep.bit_errors > 0
    assert rep.max_interference_observed % 2 == 0 and rep.max_interference_observed > 0


@pytest.mark.parametrize(
    "kwargs",
    [dict(trials=0, seed=1), dict(trials=5, seed=1, activity=1.5),
     dict(trials=5, seed=1, noise_sigma=-1.0), dict(trials=5, seed=2 ** 64)],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SimConfig(**kwargs)


def test_report_json_layout():
    rep = SimReport(trials=4, bit_errors=1, bits_total=12, max_interference_observed=2)
    assert rep.to_json() == (
        "{\n"
        '  "trials": 4,\n'
        '  "bit_errors": 1,\n'
        '  "bits_total": 12,\n'
        '  "error_rate": 0.083333,\n'
        '  "max_interference_observed": 2\n'
        "}\n"
    )
    assert SimReport.from_json(rep.to_json()) == rep
