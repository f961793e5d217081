import numpy as np
import pytest

from numrad import (power_check, radius_oracle, radius_sweep, spectral_norm,
                    splitmix64)

from conftest import EXAMPLE1, JORDAN2, ginibre, random_unitary


def test_sweep_jordan_half():
    est = radius_sweep(JORDAN2)
    assert est.value == pytest.approx(0.5, abs=1e-10)


def test_sweep_normal_diagonal():
    a = np.diag([1.0, -2.0, 1.5j])
    assert radius_sweep(a).value == pytest.approx(2.0, abs=1e-9)


def test_sweep_hermitian_equals_norm(rng):
    g = ginibre(rng, 5)
    h = (g + g.conj().T) / 2
    assert radius_sweep(h).value == pytest.approx(spectral_norm(h), abs=1e-9)


def test_sweep_zero():
    assert radius_sweep(np.zeros((3, 3))).value == pytest.approx(0.0, abs=1e-12)


def test_sweep_example1():
    assert radius_sweep(EXAMPLE1).value == pytest.approx(3.0373, abs=1e-3)


def test_sweep_scaling_and_unitary_invariance(rng):
    a = ginibre(rng, 6)
    w = radius_sweep(a).value
    assert radius_sweep(2.5j * a).value == pytest.approx(2.5 * w, rel=1e-9)
    q = random_unitary(rng, 6)
    assert radius_sweep(q @ a @ q.conj().T).value == pytest.approx(w, rel=1e-8)


def test_sweep_norm_envelope(rng):
    for n in (2, 4, 8):
        a = ginibre(rng, n)
        w = radius_sweep(a).value
        na = spectral_norm(a)
        assert na / 2 - 1e-9 <= w <= na + 1e-9


def test_sweep_rejects_tiny_grid():
    with pytest.raises(ValueError):
        radius_sweep(JORDAN2, grid_points=4)


def test_sweep_refinement_beats_coarse_grid():
    coarse = radius_sweep(EXAMPLE1, grid_points=8).value
    fine = radius_sweep(EXAMPLE1, grid_points=1440).value
    assert coarse == pytest.approx(fine, rel=1e-6)


def test_power_inequality(rng):
    for n in (2, 3, 5):
        a = ginibre(rng, n)
        for k in (2, 3, 4):
            lhs, rhs = power_check(a, k)
            assert lhs <= rhs + 1e-8 * max(1.0, rhs)


def test_power_check_rejects_nonpositive():
    with pytest.raises(ValueError):
        power_check(JORDAN2, 0)


def test_oracle_matches_sweep(rng):
    for n in (2, 4, 6):
        a = ginibre(rng, n)
        sweep = radius_sweep(a).value
        oracle = radius_oracle(a, trials=200, seed=7).value
        assert oracle <= sweep + 1e-6
        assert oracle == pytest.approx(sweep, rel=1e-3)


def test_oracle_deterministic():
    a = EXAMPLE1
    first = radius_oracle(a, trials=64, seed=123)
    second = radius_oracle(a, trials=64, seed=123)
    assert first.value == second.value


def test_oracle_rejects_zero_trials():
    with pytest.raises(ValueError):
        radius_oracle(JORDAN2, trials=0, seed=1)


def test_splitmix64_stream():
    vals = [splitmix64(42, i) for i in range(100)]
    assert len(set(vals)) == 100
    assert all(0 <= v < 2**64 for v in vals)
    assert vals == [splitmix64(42, i) for i in range(100)]
    assert splitmix64(43, 0) != splitmix64(42, 0)
