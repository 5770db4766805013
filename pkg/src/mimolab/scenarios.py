"""Reference scenarios shared by the bundled configs, scripts, and tests."""

from __future__ import annotations

import math

from .capacity import CapacityScenario, CoherenceBlock
from .geometry import Direction, MultipathChannel, Path, PlanarArray
from .rng import RandomStream

DEFAULT_SEED = 42

SIXPATH_CENTER_HZ = 60e9
SIXPATH_LOS_DIRECTION = Direction(math.pi / 4, -math.pi / 4)
SIXPATH_REFLECTION_DIRECTIONS = (
    Direction(math.pi / 6, -math.pi / 5),
    Direction(math.pi / 3, -math.pi / 5),
    Direction(math.pi / 4, -math.pi / 6),
    Direction(math.pi / 4, -math.pi / 12),
    Direction(math.pi / 12, -math.pi / 6),
)

# LoS amplitude equal to the summed reflection amplitudes, total power 1:
# |g_los| = 5 * |g_refl|, so |g_los|^2 = 5/6 and each reflection power 1/30.
SIXPATH_LOS_POWER = 5.0 / 6.0
SIXPATH_REFLECTION_POWER = SIXPATH_LOS_POWER / 25.0


def sixpath_channel(seed: int = DEFAULT_SEED) -> MultipathChannel:
    """60 GHz line-of-sight channel with five single-bounce reflections.

    Per-path phases are drawn once from the seeded stream, LoS first and the
    reflections in listed order, so the channel is reproducible from the
    seed alone.
    """
    phases = RandomStream(seed).phases(6)
    paths = [
        Path(math.sqrt(SIXPATH_LOS_POWER) * complex(math.cos(phases[0]), math.sin(phases[0])),
             SIXPATH_LOS_DIRECTION)
    ]
    for phase, direction in zip(phases[1:], SIXPATH_REFLECTION_DIRECTIONS):
        gain = math.sqrt(SIXPATH_REFLECTION_POWER) * complex(math.cos(phase), math.sin(phase))
        paths.append(Path(gain, direction))
    return MultipathChannel(tuple(paths))


def sixpath_array(side: int) -> PlanarArray:
    """side x side aperture spaced at half a wavelength of the 60 GHz center."""
    return PlanarArray.half_wavelength_at(side, side, SIXPATH_CENTER_HZ)


# Extreme-multiplexing study: one large park served from surrounding rooftops.
CENTRALPARK_M_ANTENNAS = 100_000
CENTRALPARK_UL_SNR_REF = 100.0  # 20 dB per receive antenna at the 50 MHz reference
CENTRALPARK_REFERENCE_BANDWIDTH_HZ = 50e6
CENTRALPARK_DL_UL_RATIO = 100.0
CENTRALPARK_COHERENCE_BANDWIDTH_HZ = 400e3


def centralpark_3ghz() -> CapacityScenario:
    """3 GHz carrier, 50 MHz bandwidth, 100 ms coherence time (tau_c = 40000)."""
    return CapacityScenario(
        carrier_hz=3e9,
        bandwidth_hz=CENTRALPARK_REFERENCE_BANDWIDTH_HZ,
        m_antennas=CENTRALPARK_M_ANTENNAS,
        ul_pilot_snr_linear=CENTRALPARK_UL_SNR_REF,
        dl_ul_power_ratio=CENTRALPARK_DL_UL_RATIO,
        block=CoherenceBlock(0.1, CENTRALPARK_COHERENCE_BANDWIDTH_HZ),
    )


def centralpark_60ghz() -> CapacityScenario:
    """60 GHz carrier, 1 GHz bandwidth, 5 ms coherence time (tau_c = 2000).

    The uplink pilot SNR is scaled by the bandwidth ratio (100 -> 5) to keep
    the transmit power fixed while the noise bandwidth widens twentyfold;
    the coherence bandwidth is held at 400 kHz.
    """
    bandwidth_hz = 1e9
    scaling = CENTRALPARK_REFERENCE_BANDWIDTH_HZ / bandwidth_hz
    return CapacityScenario(
        carrier_hz=60e9,
        bandwidth_hz=bandwidth_hz,
        m_antennas=CENTRALPARK_M_ANTENNAS,
        ul_pilot_snr_linear=CENTRALPARK_UL_SNR_REF * scaling,
        dl_ul_power_ratio=CENTRALPARK_DL_UL_RATIO,
        block=CoherenceBlock(0.005, CENTRALPARK_COHERENCE_BANDWIDTH_HZ),
    )
