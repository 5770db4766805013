import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mimolab.beamforming import (
    ANALOG,
    DIGITAL,
    HYBRID,
    Beamformer,
    DegenerateEntryWarning,
    SquintCurve,
    analog_weights,
    efficiency,
    hybrid_weights,
    mrt_weights,
    squint_sweep,
)
from mimolab.geometry import Direction, MultipathChannel, Path, PlanarArray, channel_vector
from mimolab.scenarios import SIXPATH_CENTER_HZ, sixpath_array, sixpath_channel


def _random_channel(seed, m=16):
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.normal(size=m) + 1j * rng.normal(size=m)


# ---------------------------------------------------------------------------
# MRT
# ---------------------------------------------------------------------------

def test_mrt_single_entry_channel():
    w = mrt_weights(np.array([1.0, 0.0, 0.0, 0.0], dtype=complex))
    assert w.kind == DIGITAL
    assert np.allclose(w.weights, [1.0, 0.0, 0.0, 0.0])


@settings(max_examples=100)
@given(seed=st.integers(0, 2**32 - 1))
def test_mrt_attains_unit_efficiency(seed):
    h = _random_channel(seed)
    assert efficiency(mrt_weights(h), h) == pytest.approx(1.0, abs=1e-12)


def test_mrt_rejects_zero_channel():
    with pytest.raises(ValueError):
        mrt_weights(np.zeros(4, dtype=complex))


def test_digital_gain_is_full_at_every_frequency():
    arr = sixpath_array(32)
    chan = sixpath_channel(42)
    for f in np.linspace(59e9, 61e9, 7):
        h = channel_vector(arr, chan, f)
        assert efficiency(mrt_weights(h), h) == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------------------
# analog weights
# ---------------------------------------------------------------------------

def test_analog_matches_pure_steering_vector():
    arr = PlanarArray.half_wavelength_at(8, 8, 60e9)
    chan = MultipathChannel((Path(1.0 + 0.0j, Direction(0.6, -0.3)),))
    h = channel_vector(arr, chan, 60e9)
    w = analog_weights(h)
    assert w.kind == ANALOG
    assert efficiency(w, h) == pytest.approx(1.0, abs=1e-12)


def test_analog_center_efficiency_on_sixpath_64():
    arr = sixpath_array(64)
    h = channel_vector(arr, sixpath_channel(42), SIXPATH_CENTER_HZ)
    eff = efficiency(analog_weights(h), h)
    assert 0.85 <= eff <= 0.95  # about 90% with reflections present


def test_analog_equal_magnitude_channel_gets_full_gain():
    rng = np.random.Generator(np.random.PCG64(5))
    h = 2.7 * np.exp(1j * rng.uniform(0, 2 * np.pi, 64))
    assert efficiency(analog_weights(h), h) == pytest.approx(1.0, abs=1e-12)


def test_analog_zero_entries_warn_and_get_phase_zero():
    h = np.array([1.0 + 1.0j, 0.0, 2.0], dtype=complex)
    with pytest.warns(DegenerateEntryWarning):
        w = analog_weights(h)
    assert w.weights[1] == pytest.approx(1.0 / math.sqrt(3))


def test_analog_rejects_zero_vector():
    with pytest.raises(ValueError):
        analog_weights(np.zeros(3, dtype=complex))


def test_analog_is_unit_modulus_optimum():
    h = _random_channel(99, m=32)
    w = analog_weights(h)
    best = abs(np.dot(w.weights, h))
    rng = np.random.Generator(np.random.PCG64(100))
    for _ in range(1000):
        perturbed = np.exp(1j * rng.uniform(0, 2 * np.pi, h.size)) / math.sqrt(h.size)
        assert abs(np.dot(perturbed, h)) <= best * (1 + 1e-12)


# ---------------------------------------------------------------------------
# hybrid weights
# ---------------------------------------------------------------------------

def test_hybrid_full_chains_reduce_to_digital():
    h = _random_channel(3, m=16)
    (w,) = hybrid_weights([h], n_rf=16)
    assert w.kind == HYBRID and w.n_rf == 16
    assert efficiency(w, h) == pytest.approx(1.0, abs=1e-9)


def test_hybrid_single_chain_equals_analog():
    h = _random_channel(4, m=16)
    (w,) = hybrid_weights([h], n_rf=1)
    assert np.allclose(w.weights, analog_weights(h).weights, atol=1e-12)


def test_hybrid_two_separated_los_users():
    arr = PlanarArray.half_wavelength_at(16, 16, 60e9)
    h1 = channel_vector(arr, MultipathChannel((Path(1, Direction(math.pi / 4, 0.0)),)), 60e9)
    h2 = channel_vector(arr, MultipathChannel((Path(1, Direction(-math.pi / 4, 0.0)),)), 60e9)
    w1, w2 = hybrid_weights([h1, h2], n_rf=2)
    assert efficiency(w1, h1) >= 0.95
    assert efficiency(w2, h2) >= 0.95
    assert abs(np.dot(w1.weights, h2)) ** 2 / np.vdot(h2, h2).real <= 1e-2
    assert abs(np.dot(w2.weights, h1)) ** 2 / np.vdot(h1, h1).real <= 1e-2


def test_hybrid_weights_lie_in_bank_span():
    h1 = _random_channel(11, m=25)
    h2 = _random_channel(12, m=25)
    bank = np.stack([analog_weights(h).weights for h in (h1, h2)], axis=1)
    for w in hybrid_weights([h1, h2], n_rf=2):
        coeffs, *_ = np.linalg.lstsq(bank, w.weights, rcond=None)
        assert np.linalg.norm(bank @ coeffs - w.weights) < 1e-10


def test_hybrid_collinear_users_do_not_raise():
    h = _random_channel(8, m=16)
    w1, w2 = hybrid_weights([h, h * (1 + 1e-12)], n_rf=2)  # regularizer absorbs the rank drop
    assert np.isfinite(w1.weights).all() and np.isfinite(w2.weights).all()


def test_hybrid_rejects_too_few_chains():
    h1, h2 = _random_channel(1), _random_channel(2)
    with pytest.raises(ValueError):
        hybrid_weights([h1, h2], n_rf=1)
    with pytest.raises(ValueError):
        hybrid_weights([h1], n_rf=17)  # n_rf > M


# ---------------------------------------------------------------------------
# efficiency
# ---------------------------------------------------------------------------

def test_efficiency_orthogonal_is_zero():
    w = np.array([1.0, 0.0], dtype=complex)
    h = np.array([0.0, 1.0], dtype=complex)
    assert efficiency(w, h) == 0.0


def test_efficiency_rejects_zero_channel():
    with pytest.raises(ValueError):
        efficiency(np.ones(2, dtype=complex), np.zeros(2, dtype=complex))


@settings(max_examples=100)
@given(
    seed=st.integers(0, 2**32 - 1),
    re=st.floats(-5, 5),
    im=st.floats(-5, 5),
)
def test_efficiency_scale_invariant_and_bounded(seed, re, im):
    c = complex(re, im)
    if abs(c) < 1e-6:
        c = 1.0 + 1.0j
    h = _random_channel(seed, m=8)
    w = _random_channel(seed + 1, m=8)
    w = w / np.linalg.norm(w)
    base = efficiency(w, h)
    assert 0.0 <= base <= 1.0
    assert efficiency(w, c * h) == pytest.approx(base, rel=1e-9)


def test_efficiency_one_iff_conjugate_collinear():
    h = _random_channel(21, m=12)
    w = np.conj(h) * (0.3 - 0.9j)
    w /= np.linalg.norm(w)
    assert efficiency(w, h) == pytest.approx(1.0, abs=1e-12)
    w2 = h / np.linalg.norm(h)  # collinear with h itself, not its conjugate
    assert efficiency(w2, h) < 1.0


def test_sixpath_32_stays_above_three_quarters_at_band_edges():
    arr = sixpath_array(32)
    chan = sixpath_channel(42)
    w = analog_weights(channel_vector(arr, chan, SIXPATH_CENTER_HZ))
    for f in (SIXPATH_CENTER_HZ - 1e9, SIXPATH_CENTER_HZ + 1e9):
        assert efficiency(w, channel_vector(arr, chan, f)) >= 0.75


# ---------------------------------------------------------------------------
# squint sweep
# ---------------------------------------------------------------------------

def test_sweep_center_is_exact_for_single_path():
    arr = PlanarArray.half_wavelength_at(16, 16, 60e9)
    chan = MultipathChannel((Path(1.0, Direction(0.8, -0.5)),))
    curve = squint_sweep(arr, chan, 60e9, 2e9, 41)
    center = np.argmin(np.abs(curve.frequencies_hz - 60e9))
    assert curve.efficiency[center] == pytest.approx(1.0, abs=1e-12)
    # squint persists even in LoS: the band edges fall below the center
    assert curve.efficiency[0] < 1.0 and curve.efficiency[-1] < 1.0


@pytest.mark.parametrize("side", [32, 64, 128])
def test_sweep_400mhz_band_for_all_apertures(side):
    curve = squint_sweep(sixpath_array(side), sixpath_channel(42), SIXPATH_CENTER_HZ, 400e6, 41)
    assert np.all(curve.efficiency >= 0.80)
    assert np.all(curve.efficiency <= 0.95)


def test_sweep_larger_aperture_squints_harder():
    chan = sixpath_channel(42)
    small = squint_sweep(sixpath_array(32), chan, SIXPATH_CENTER_HZ, 2e9, 41)
    large = squint_sweep(sixpath_array(128), chan, SIXPATH_CENTER_HZ, 2e9, 41)
    assert large.efficiency.min() < small.efficiency.min()
    assert small.efficiency.min() >= 0.75


def test_digital_dominates_hybrid_dominates_analog_across_band():
    arr = sixpath_array(32)
    chan = sixpath_channel(42)
    h_center = channel_vector(arr, chan, SIXPATH_CENTER_HZ)
    analog = analog_weights(h_center)
    for f in np.linspace(59e9, 61e9, 9):
        h = channel_vector(arr, chan, f)
        digital_eff = efficiency(mrt_weights(h), h)
        (hybrid,) = hybrid_weights([h_center], n_rf=1)
        hybrid_eff = efficiency(hybrid, h)
        analog_eff = efficiency(analog, h)
        assert digital_eff == pytest.approx(1.0, abs=1e-12)
        assert digital_eff >= hybrid_eff - 1e-12
        assert hybrid_eff >= analog_eff - 1e-12


def test_sweep_argument_validation():
    arr = sixpath_array(32)
    chan = sixpath_channel(42)
    with pytest.raises(ValueError):
        squint_sweep(arr, chan, 60e9, 2e9, 1)
    with pytest.raises(ValueError):
        squint_sweep(arr, chan, 60e9, 0.0, 10)
    with pytest.raises(ValueError):
        squint_sweep(arr, chan, 1e9, 4e9, 10)  # band reaches nonpositive frequencies


def test_squint_curve_csv_roundtrip():
    curve = squint_sweep(sixpath_array(32), sixpath_channel(42), SIXPATH_CENTER_HZ, 400e6, 5)
    text = curve.csv_text()
    lines = text.strip().split("\n")
    assert lines[0] == "frequency_hz,efficiency"
    assert len(lines) == 6
    for row, f, e in zip(lines[1:], curve.frequencies_hz, curve.efficiency):
        fs, es = row.split(",")
        assert float(fs) == f and float(es) == e  # full double precision survives


def test_squint_curve_validation():
    with pytest.raises(ValueError):
        SquintCurve(np.array([1.0, 1.0]), np.array([0.5, 0.5]))
    with pytest.raises(ValueError):
        SquintCurve(np.array([1.0, 2.0]), np.array([0.5, 1.5]))


# ---------------------------------------------------------------------------
# Beamformer type invariants
# ---------------------------------------------------------------------------

def test_beamformer_requires_unit_norm():
    with pytest.raises(ValueError):
        Beamformer(np.array([1.0, 1.0], dtype=complex), DIGITAL)


def test_analog_kind_requires_equal_magnitudes():
    w = np.array([0.9, np.sqrt(1 - 0.81)], dtype=complex)
    with pytest.raises(ValueError):
        Beamformer(w, ANALOG)


def test_hybrid_kind_requires_n_rf():
    w = np.array([1.0, 0.0], dtype=complex)
    with pytest.raises(ValueError):
        Beamformer(w, HYBRID)
    with pytest.raises(ValueError):
        Beamformer(w, DIGITAL, n_rf=2)
