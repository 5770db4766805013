"""Coherence-block accounting and closed-form downlink rates under MRT.

Single cell, i.i.d. Rayleigh fading, K single-antenna users served with
maximum ratio transmission.  Channel knowledge comes from K orthogonal
uplink pilot samples per coherence block (tau_p = K), leaving a fraction
1 - K/tau_c of each block for data.  With MMSE estimation quality
gamma = tau_p*rho_ul / (1 + tau_p*rho_ul) and the downlink budget rho_dl
split equally over users, each user sees

    SINR = M * gamma * (rho_dl / K) / (1 + rho_dl)

where the denominator carries unit noise plus non-coherent interference
from all K streams.  Everything is deterministic arithmetic, so Tbit/s
scale sweeps run in milliseconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence


@dataclass(frozen=True)
class CoherenceBlock:
    """Time-frequency region over which the channel is treated as constant."""

    coherence_time_s: float
    coherence_bandwidth_hz: float

    def __post_init__(self):
        if self.coherence_time_s <= 0 or self.coherence_bandwidth_hz <= 0:
            raise ValueError("coherence time and bandwidth must be positive")
        if self.samples < 1:
            raise ValueError("a coherence block must contain at least one sample")

    @property
    def samples(self) -> int:
        """Number of usable samples tau_c = round(time * bandwidth)."""
        return round(self.coherence_time_s * self.coherence_bandwidth_hz)


@dataclass(frozen=True)
class CapacityScenario:
    carrier_hz: float
    bandwidth_hz: float
    m_antennas: int
    ul_pilot_snr_linear: float
    dl_ul_power_ratio: float
    block: CoherenceBlock

    def __post_init__(self):
        if self.carrier_hz <= 0 or self.bandwidth_hz <= 0:
            raise ValueError("carrier and bandwidth must be positive")
        if self.m_antennas < 1:
            raise ValueError(f"m_antennas must be at least 1, got {self.m_antennas}")
        if self.ul_pilot_snr_linear <= 0 or self.dl_ul_power_ratio <= 0:
            raise ValueError("SNR and power ratio must be positive")

    @property
    def dl_snr_linear(self) -> float:
        return self.dl_ul_power_ratio * self.ul_pilot_snr_linear


@dataclass(frozen=True)
class RatePoint:
    """Rates achieved with K users multiplexed in one scenario."""

    k_users: int
    tau_p: int
    pilot_fraction: float
    se_per_ue_bps_hz: float
    rate_per_ue_bps: float
    sum_rate_bps: float

    def to_record(self, m_antennas: int) -> dict:
        return {
            "m_antennas": m_antennas,
            "k_users": self.k_users,
            "pilot_fraction": self.pilot_fraction,
            "se_per_ue": self.se_per_ue_bps_hz,
            "rate_per_ue_bps": self.rate_per_ue_bps,
            "sum_rate_bps": self.sum_rate_bps,
        }


def estimation_quality(tau_p: int, rho_ul: float) -> float:
    """MMSE channel-estimate quality tau_p*rho / (1 + tau_p*rho), in [0, 1)."""
    if tau_p < 1:
        raise ValueError(f"tau_p must be at least 1, got {tau_p}")
    if rho_ul <= 0:
        raise ValueError(f"rho_ul must be positive, got {rho_ul}")
    x = tau_p * rho_ul
    return x / (1.0 + x)


def dl_sinr_mrt(scenario: CapacityScenario, k_users: int) -> float:
    """Per-user downlink SINR M*gamma*(rho_dl/K) / (1 + rho_dl)."""
    tau_c = scenario.block.samples
    if k_users < 1:
        raise ValueError(f"k_users must be at least 1, got {k_users}")
    if k_users > tau_c:
        raise ValueError(f"k_users {k_users} exceeds the coherence block of {tau_c} samples")
    gamma = estimation_quality(k_users, scenario.ul_pilot_snr_linear)
    rho_dl = scenario.dl_snr_linear
    return scenario.m_antennas * gamma * (rho_dl / k_users) / (1.0 + rho_dl)


def dl_se_mrt(scenario: CapacityScenario, k_users: int) -> float:
    """Downlink spectral efficiency per user in bit/s/Hz with K multiplexed users."""
    sinr = dl_sinr_mrt(scenario, k_users)
    return (1.0 - k_users / scenario.block.samples) * math.log2(1.0 + sinr)


def sum_rate(scenario: CapacityScenario, k_users: int) -> RatePoint:
    se = dl_se_mrt(scenario, k_users)
    rate_per_ue = se * scenario.bandwidth_hz
    return RatePoint(
        k_users=k_users,
        tau_p=k_users,
        pilot_fraction=k_users / scenario.block.samples,
        se_per_ue_bps_hz=se,
        rate_per_ue_bps=rate_per_ue,
        sum_rate_bps=k_users * rate_per_ue,
    )


def optimize_users(scenario: CapacityScenario, k_grid: Sequence[int]) -> RatePoint:
    """RatePoint maximizing the sum rate on the grid; ties go to smaller K."""
    if len(k_grid) == 0:
        raise ValueError("k_grid must be non-empty")
    best: RatePoint | None = None
    for k in k_grid:
        point = sum_rate(scenario, int(k))
        if best is None or point.sum_rate_bps > best.sum_rate_bps:
            best = point
    return best


def default_k_grid(tau_c: int, fine: bool = False) -> range:
    """1..tau_c with step max(1, tau_c // 1000); fine forces an exhaustive step of 1."""
    step = 1 if fine else max(1, tau_c // 1000)
    return range(1, tau_c + 1, step)


def antenna_sweep(
    scenario: CapacityScenario, m_grid: Sequence[int], k_grid: Sequence[int]
) -> list[tuple[int, RatePoint]]:
    """Best RatePoint over k_grid for each antenna count, ordered by M."""
    if len(m_grid) == 0 or len(k_grid) == 0:
        raise ValueError("m_grid and k_grid must be non-empty")
    out = []
    for m in sorted(int(m) for m in m_grid):
        out.append((m, optimize_users(replace(scenario, m_antennas=m), k_grid)))
    return out


SWEEP_CSV_HEADER = "m_antennas,k_users,pilot_fraction,se_per_ue,rate_per_ue_bps,sum_rate_bps"


def sweep_csv_text(rows: Sequence[tuple[int, RatePoint]]) -> str:
    """CSV with one row per (antenna count, rate point), full double precision."""
    lines = [SWEEP_CSV_HEADER]
    for m, point in rows:
        lines.append(
            ",".join(
                [
                    str(m),
                    str(point.k_users),
                    repr(float(point.pilot_fraction)),
                    repr(float(point.se_per_ue_bps_hz)),
                    repr(float(point.rate_per_ue_bps)),
                    repr(float(point.sum_rate_bps)),
                ]
            )
        )
    return "\n".join(lines) + "\n"
