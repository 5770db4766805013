"""ADC and power-amplifier power-budget arithmetic.

ADC power follows the energy-per-conversion-step figure of merit:
P = FoM * f_s * 2^ENOB, times an overhead factor covering regulators,
buffering, and calibration.  Dropping one bit of resolution halves the
power, which is why a wide low-resolution array can undercut a narrow
high-resolution one.

PA efficiency is treated as a single net output/DC ratio (the quoted
power-added efficiency at back-off), ignoring drive power.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AdcSpec:
    fom_j_per_cs: float
    enob: float
    sample_rate_hz: float
    overhead_factor: float = 1.0

    def __post_init__(self):
        if self.fom_j_per_cs <= 0:
            raise ValueError(f"fom_j_per_cs must be positive, got {self.fom_j_per_cs}")
        if self.enob < 1:
            raise ValueError(f"enob must be at least 1, got {self.enob}")
        if self.sample_rate_hz <= 0:
            raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        if not 1.0 <= self.overhead_factor <= 10.0:
            raise ValueError(f"overhead_factor must lie in [1, 10], got {self.overhead_factor}")


@dataclass(frozen=True)
class PaSpec:
    avg_output_power_w: float
    pae_fraction: float
    backoff_db: float = 0.0  # annotation only, not used in the arithmetic

    def __post_init__(self):
        if self.avg_output_power_w <= 0:
            raise ValueError(f"avg_output_power_w must be positive, got {self.avg_output_power_w}")
        if not 0.0 < self.pae_fraction < 1.0:
            raise ValueError(f"pae_fraction must lie in (0, 1), got {self.pae_fraction}")
        if self.backoff_db < 0:
            raise ValueError(f"backoff_db must be nonnegative, got {self.backoff_db}")


def adc_power(spec: AdcSpec) -> float:
    """DC power of one converter: FoM * f_s * 2^ENOB * overhead."""
    return spec.fom_j_per_cs * spec.sample_rate_hz * 2.0**spec.enob * spec.overhead_factor


def adc_array_budget(n_converters: int, spec: AdcSpec) -> float:
    if n_converters < 1:
        raise ValueError(f"n_converters must be at least 1, got {n_converters}")
    return n_converters * adc_power(spec)


def pa_dc_power(spec: PaSpec) -> float:
    """DC power drawn for the average output level, output / PAE."""
    return spec.avg_output_power_w / spec.pae_fraction


def array_pa_budget(n_antennas: int, total_radiated_power_w: float, pae_fraction: float) -> float:
    """Total PA DC power for n antennas sharing a fixed radiated-power budget.

    Per-antenna output is total/n, so the total DC power total/pae is
    invariant in n while the per-antenna requirement falls as 1/n.
    """
    if n_antennas < 1:
        raise ValueError(f"n_antennas must be at least 1, got {n_antennas}")
    if total_radiated_power_w <= 0:
        raise ValueError(f"total_radiated_power_w must be positive, got {total_radiated_power_w}")
    per_antenna = PaSpec(total_radiated_power_w / n_antennas, pae_fraction)
    return n_antennas * pa_dc_power(per_antenna)


def budget_record(component: str, count: int, unit_power_w: float) -> dict:
    """JSON-ready budget line: {component, count, unit_power_w, total_power_w}."""
    return {
        "component": component,
        "count": count,
        "unit_power_w": unit_power_w,
        "total_power_w": count * unit_power_w,
    }
