"""Command-line driver: named experiments from flat key=value configs.

A config file is plain text, one ``key = value`` per line, with ``#`` or
``;`` comments and optional cosmetic ``[section]`` headers.  Keys are flat
(no nesting) so any small hand-written reader can parse the format.  The
reserved keys ``experiment``, ``seed``, and ``output`` select the
experiment, the random seed, and the output path; every other key must
belong to the experiment's parameter schema, and unknown keys are a hard
error so typos cannot silently fall back to defaults.

Each run writes the experiment's CSV or JSON output atomically (temp file
plus rename) along with a ``<output>.manifest.json`` echoing the resolved
parameters, the seed, and the artifact version.  Outputs contain no
timestamps, so re-running a config reproduces its files byte for byte.

Exit codes: 0 success, 2 config parse error (with line/column),
3 validation error (naming the offending field), 4 runtime numeric failure.
"""

from __future__ import annotations

import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass, replace
from typing import Callable

from . import __version__
from .beamforming import squint_sweep
from .capacity import CapacityScenario, CoherenceBlock, optimize_users, sum_rate, sweep_csv_text
from .channels import (
    IidRayleigh,
    RandomChannelSpec,
    drift_bound_check,
    favorable_propagation_metric,
    hardening_metric,
    metric_record,
)
from .geometry import PlanarArray
from .hardware import AdcSpec, adc_array_budget, adc_power, array_pa_budget, budget_record
from .propagation import (
    EstimationLoadSpec,
    LinkGeometry,
    bandwidth_snr_delta,
    estimation_load,
    fresnel_radius,
    link_budget_ledger,
)
from .scenarios import DEFAULT_SEED, sixpath_channel

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RUNTIME = 4


class ConfigParseError(Exception):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(Exception):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# ----------------------------------------------------------------------------
# config text
# ----------------------------------------------------------------------------

_KEY_RE = re.compile(r"^[a-z][a-z0-9_]*$")


def parse_config_text(text: str) -> dict[str, str]:
    """Flat ordered key -> raw value mapping; positions reported on error."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            continue  # section headers carry no data in this flat format
        column = 1 + len(raw) - len(raw.lstrip())
        if "=" not in line:
            raise ConfigParseError(lineno, column, "expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if not _KEY_RE.match(key):
            raise ConfigParseError(lineno, column, f"invalid key {key!r}")
        if key in values:
            raise ConfigParseError(lineno, column, f"duplicate key {key!r}")
        values[key] = value.strip()
    return values


# ----------------------------------------------------------------------------
# parameter schemas
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # int | float | bool | str | choice | int_list | float_list
    default: object
    help: str
    choices: tuple[str, ...] = ()
    min_value: float | None = None
    max_value: float | None = None
    min_exclusive: bool = False


def _coerce_scalar(param: Param, field: str, text: str):
    if param.kind in ("int", "float"):
        try:
            value = float(text)
        except ValueError:
            raise ValidationError(field, f"expected a number, got {text!r}") from None
        if param.kind == "int":
            if not value.is_integer():
                raise ValidationError(field, f"expected an integer, got {text!r}")
            value = int(value)
        return value
    if param.kind == "bool":
        if text.lower() in ("true", "false"):
            return text.lower() == "true"
        raise ValidationError(field, f"expected true or false, got {text!r}")
    if param.kind == "choice":
        if text not in param.choices:
            raise ValidationError(field, f"expected one of {param.choices}, got {text!r}")
        return text
    return text  # str


def _check_range(param: Param, field: str, value) -> None:
    if param.kind not in ("int", "float", "int_list", "float_list"):
        return
    values = value if isinstance(value, list) else [value]
    for v in values:
        if param.min_value is not None:
            if param.min_exclusive and v <= param.min_value:
                raise ValidationError(field, f"must be > {param.min_value}, got {v}")
            if not param.min_exclusive and v < param.min_value:
                raise ValidationError(field, f"must be >= {param.min_value}, got {v}")
        if param.max_value is not None and v > param.max_value:
            raise ValidationError(field, f"must be <= {param.max_value}, got {v}")


def coerce_value(param: Param, field: str, text: str):
    if param.kind in ("int_list", "float_list"):
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValidationError(field, "expected a comma-separated list")
        element = replace(param, kind=param.kind.removesuffix("_list"))
        value = [_coerce_scalar(element, field, p) for p in parts]
    else:
        value = _coerce_scalar(param, field, text)
    _check_range(param, field, value)
    return value


# ----------------------------------------------------------------------------
# experiment runners: (params, seed) -> (output_text, extras, stdout_lines)
# ----------------------------------------------------------------------------

def _run_squint(params: dict, seed: int):
    array = PlanarArray.half_wavelength_at(
        params["rows"], params["cols"], params["center_frequency_hz"]
    )
    channel = sixpath_channel(seed)
    curve = squint_sweep(
        array, channel, params["center_frequency_hz"], params["span_hz"], params["n_points"]
    )
    center_idx = int(abs(curve.frequencies_hz - params["center_frequency_hz"]).argmin())
    extras = {
        "m_antennas": array.num_elements,
        "center_efficiency": float(curve.efficiency[center_idx]),
        "min_efficiency": float(curve.efficiency.min()),
        "max_efficiency": float(curve.efficiency.max()),
    }
    lines = [
        f"center efficiency {extras['center_efficiency']:.4f}, "
        f"band minimum {extras['min_efficiency']:.4f} over {params['n_points']} points"
    ]
    return curve.csv_text(), extras, lines


def _capacity_scenario(params: dict) -> tuple[CapacityScenario, dict]:
    ul_snr = params["ul_pilot_snr"]
    if params["snr_scaling"] == "bandwidth":
        ul_snr = ul_snr * params["reference_bandwidth_hz"] / params["bandwidth_hz"]
    scenario = CapacityScenario(
        carrier_hz=params["carrier_hz"],
        bandwidth_hz=params["bandwidth_hz"],
        m_antennas=params["m_antennas"],
        ul_pilot_snr_linear=ul_snr,
        dl_ul_power_ratio=params["dl_ul_power_ratio"],
        block=CoherenceBlock(params["coherence_time_s"], params["coherence_bandwidth_hz"]),
    )
    extras = {
        "snr_scaling": params["snr_scaling"],
        "ul_pilot_snr_effective": ul_snr,
        "tau_c": scenario.block.samples,
    }
    return scenario, extras


def _k_grid(params: dict, tau_c: int) -> range:
    k_max = params["k_max"] if params["k_max"] > 0 else tau_c
    if params["k_step"] > 0:
        step = params["k_step"]
    elif params["fine"]:
        step = 1
    else:
        step = max(1, tau_c // 1000)
    if not 1 <= params["k_min"] <= k_max <= tau_c:
        raise ValueError(
            f"need 1 <= k_min <= k_max <= tau_c, got k_min={params['k_min']}, "
            f"k_max={k_max}, tau_c={tau_c}"
        )
    return range(params["k_min"], k_max + 1, step)


def _run_capacity(params: dict, seed: int):
    scenario, extras = _capacity_scenario(params)
    grid = _k_grid(params, scenario.block.samples)
    rows = [(scenario.m_antennas, sum_rate(scenario, k)) for k in grid]
    best = max(rows, key=lambda item: item[1].sum_rate_bps)[1]
    # ties resolved toward smaller K: max() keeps the first of equal values
    extras["optimum"] = best.to_record(scenario.m_antennas)
    lines = [
        f"optimum: K={best.k_users}, pilot fraction {best.pilot_fraction:.4f}, "
        f"sum rate {best.sum_rate_bps / 1e12:.4f} Tbit/s"
    ]
    return sweep_csv_text(rows), extras, lines


def _run_antenna_sweep(params: dict, seed: int):
    scenario, extras = _capacity_scenario(params)
    grid = _k_grid(params, scenario.block.samples)
    rows = []
    for m in sorted(params["m_grid"]):
        rows.append((m, optimize_users(replace(scenario, m_antennas=m), grid)))
    lines = [
        f"M={m}: best sum rate {point.sum_rate_bps / 1e9:.3f} Gbit/s at K={point.k_users}"
        for m, point in rows
    ]
    return sweep_csv_text(rows), extras, lines


def _run_mobility(params: dict, seed: int):
    reports = []
    for mu in params["mu_list"]:
        report = drift_bound_check(params["m_antennas"], mu, params["n_draws"], seed)
        reports.append(report.to_record())
    lines = [
        f"mu={r['mu']}: min gain {r['min_observed_gain']:.6f} vs bound {r['bound_gain']:.6f}"
        for r in reports
    ]
    return _json_text({"reports": reports}), {"reports": reports}, lines


def _run_fresnel(params: dict, seed: int):
    geometry = LinkGeometry(params["d1"], params["d2"], params["freq_ghz"] * 1e9)
    radius = fresnel_radius(geometry)
    record = {
        "frequency_hz": geometry.frequency_hz,
        "d1_m": geometry.d1_m,
        "d2_m": geometry.d2_m,
        "radius_m": radius,
    }
    return _json_text(record), {"radius_m": radius}, [f"fresnel radius = {radius:.3f} m"]


def _run_linkbudget(params: dict, seed: int):
    entries = []
    if params["bandwidth_ratio"] > 1:
        entries.append(("wider_noise_bandwidth", bandwidth_snr_delta(params["bandwidth_ratio"])))
    entries += [(k.removeprefix("entry_"), v) for k, v in params.items() if k.startswith("entry_")]
    ledger = link_budget_ledger(entries)
    return (
        _json_text(ledger),
        {"total_db": ledger["total_db"]},
        [f"link budget total {ledger['total_db']:.2f} dB over {len(entries)} entries"],
    )


def _run_estload(params: dict, seed: int):
    spec = EstimationLoadSpec(
        m_antennas=params["m_antennas"],
        k_users=params["k_users"],
        n_subcarriers=params["n_subcarriers"],
        subcarriers_per_block=params["subcarriers_per_block"],
        coherence_time_s=params["coherence_time_s"],
    )
    report = estimation_load(spec)
    record = {
        "m_antennas": spec.m_antennas,
        "k_users": spec.k_users,
        "n_subcarriers": spec.n_subcarriers,
        "subcarriers_per_block": spec.subcarriers_per_block,
        "coherence_time_s": spec.coherence_time_s,
        "n_coefficients": report.n_coefficients,
        "estimates_per_second": report.estimates_per_second,
    }
    lines = [
        f"{report.n_coefficients} coefficients, "
        f"{report.estimates_per_second:.3e} estimates/second"
    ]
    return _json_text(record), {"n_coefficients": report.n_coefficients}, lines


def _run_hwbudget(params: dict, seed: int):
    spec_a = AdcSpec(
        params["fom_j_per_cs"], params["enob_a"], params["sample_rate_hz"],
        params["overhead_factor"],
    )
    spec_b = AdcSpec(
        params["fom_j_per_cs"], params["enob_b"], params["sample_rate_hz"],
        params["overhead_factor"],
    )
    adc_a = budget_record("adc_array_a", params["n_converters_a"], adc_power(spec_a))
    adc_b = budget_record("adc_array_b", params["n_converters_b"], adc_power(spec_b))
    ratio = adc_array_budget(params["n_converters_a"], spec_a) / adc_array_budget(
        params["n_converters_b"], spec_b
    )
    n_pa = params["pa_n_antennas"]
    pa_total_dc = array_pa_budget(n_pa, params["pa_total_radiated_w"], params["pa_pae"])
    pa = budget_record("pa_array", n_pa, pa_total_dc / n_pa)
    record = {
        "adc_a": adc_a,
        "adc_b": adc_b,
        "adc_power_ratio_a_over_b": ratio,
        "pa": pa,
        "pa_per_antenna_output_w": params["pa_total_radiated_w"] / n_pa,
    }
    lines = [
        f"ADC budget ratio (array A / array B) = {ratio}",
        f"PA DC total {pa['total_power_w']:.3f} W for {n_pa} antennas",
    ]
    return _json_text(record), {"adc_power_ratio_a_over_b": ratio}, lines


def _run_hardening(params: dict, seed: int):
    spec = RandomChannelSpec(IidRayleigh(), params["m_antennas"], seed)
    value = hardening_metric(spec, params["n_draws"])
    record = metric_record(spec, params["n_draws"], "hardening", value)
    return _json_text(record), {"value": value}, [f"hardening metric = {value:.6f}"]


def _run_favorable(params: dict, seed: int):
    spec = RandomChannelSpec(IidRayleigh(), params["m_antennas"], seed)
    value = favorable_propagation_metric(spec, params["n_pairs"])
    record = metric_record(spec, params["n_pairs"], "favorable_propagation", value)
    return _json_text(record), {"value": value}, [f"favorable-propagation metric = {value:.6f}"]


# ----------------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Experiment:
    name: str
    description: str
    output_ext: str
    params: tuple[Param, ...]
    runner: Callable
    allow_prefix: str | None = None


_CAPACITY_PARAMS = (
    Param("carrier_hz", "float", 3e9, "carrier frequency in Hz", min_value=0, min_exclusive=True),
    Param("bandwidth_hz", "float", 50e6, "signal bandwidth in Hz", min_value=0, min_exclusive=True),
    Param("m_antennas", "int", 100_000, "number of base-station antennas", min_value=1),
    Param("ul_pilot_snr", "float", 100.0, "uplink pilot SNR per receive antenna, linear, "
          "at the reference bandwidth", min_value=0, min_exclusive=True),
    Param("dl_ul_power_ratio", "float", 100.0, "downlink over uplink power ratio",
          min_value=0, min_exclusive=True),
    Param("coherence_time_s", "float", 0.1, "coherence time in seconds",
          min_value=0, min_exclusive=True),
    Param("coherence_bandwidth_hz", "float", 400e3, "coherence bandwidth in Hz",
          min_value=0, min_exclusive=True),
    Param("snr_scaling", "choice", "none", "uplink SNR scaling policy; 'bandwidth' divides the "
          "reference SNR by bandwidth_hz/reference_bandwidth_hz", choices=("none", "bandwidth")),
    Param("reference_bandwidth_hz", "float", 50e6, "bandwidth at which ul_pilot_snr was set",
          min_value=0, min_exclusive=True),
    Param("k_min", "int", 1, "smallest user count in the sweep", min_value=1),
    Param("k_max", "int", 0, "largest user count in the sweep; 0 means tau_c", min_value=0),
    Param("k_step", "int", 0, "sweep step; 0 picks max(1, tau_c/1000)", min_value=0),
    Param("fine", "bool", False, "force an exhaustive step-1 sweep"),
)

EXPERIMENTS: dict[str, Experiment] = {
    exp.name: exp
    for exp in (
        Experiment(
            "squint",
            "analog-beam efficiency across a band for the six-path 60 GHz scenario (CSV)",
            "csv",
            (
                Param("rows", "int", 64, "vertical element count", min_value=1),
                Param("cols", "int", 64, "horizontal element count", min_value=1),
                Param("center_frequency_hz", "float", 60e9, "beam alignment frequency in Hz",
                      min_value=0, min_exclusive=True),
                Param("span_hz", "float", 2e9, "total swept bandwidth in Hz",
                      min_value=0, min_exclusive=True),
                Param("n_points", "int", 201, "number of frequency samples", min_value=2),
            ),
            _run_squint,
        ),
        Experiment(
            "capacity",
            "closed-form MRT downlink sum-rate sweep over the user count (CSV)",
            "csv",
            _CAPACITY_PARAMS,
            _run_capacity,
        ),
        Experiment(
            "antenna-sweep",
            "best sum rate per antenna count (CSV)",
            "csv",
            _CAPACITY_PARAMS + (
                Param("m_grid", "int_list", [100, 1000, 10_000, 100_000],
                      "antenna counts to sweep", min_value=1),
            ),
            _run_antenna_sweep,
        ),
        Experiment(
            "mobility",
            "beamforming-gain lower bound under user drift (JSON)",
            "json",
            (
                Param("m_antennas", "int", 64, "number of antennas", min_value=1),
                Param("mu_list", "float_list", [0.125, 0.0625],
                      "drift amplitudes in wavelengths, each <= 1/8",
                      min_value=0, max_value=0.125),
                Param("n_draws", "int", 100_000, "random drift patterns per amplitude",
                      min_value=0),
            ),
            _run_mobility,
        ),
        Experiment(
            "fresnel",
            "first Fresnel-zone radius for a link geometry (JSON)",
            "json",
            (
                Param("freq_ghz", "float", 38.0, "carrier frequency in GHz",
                      min_value=0, min_exclusive=True),
                Param("d1", "float", 50.0, "distance to one link end in meters", min_value=0),
                Param("d2", "float", 50.0, "distance to the other link end in meters",
                      min_value=0),
            ),
            _run_fresnel,
        ),
        Experiment(
            "linkbudget",
            "sum of labelled dB ledger entries plus the bandwidth noise delta (JSON)",
            "json",
            (
                Param("bandwidth_ratio", "float", 20.0,
                      "noise-bandwidth widening factor; adds -10*log10(ratio) dB when > 1",
                      min_value=1),
            ),
            _run_linkbudget,
            allow_prefix="entry_",
        ),
        Experiment(
            "estload",
            "channel-estimation coefficient count and rate (JSON)",
            "json",
            (
                Param("m_antennas", "int", 200, "base-station antennas", min_value=1),
                Param("k_users", "int", 20, "multiplexed single-antenna users", min_value=1),
                Param("n_subcarriers", "int", 1024, "OFDM subcarriers", min_value=1),
                Param("subcarriers_per_block", "int", 12,
                      "subcarriers over which the channel is constant", min_value=1),
                Param("coherence_time_s", "float", 0.05, "channel coherence time in seconds",
                      min_value=0, min_exclusive=True),
            ),
            _run_estload,
        ),
        Experiment(
            "hwbudget",
            "ADC array power comparison and PA DC budget (JSON)",
            "json",
            (
                Param("fom_j_per_cs", "float", 30e-15,
                      "ADC energy per conversion step in joules",
                      min_value=0, min_exclusive=True),
                Param("sample_rate_hz", "float", 1e8, "ADC sample rate in Hz",
                      min_value=0, min_exclusive=True),
                Param("overhead_factor", "float", 1.0,
                      "integrated-implementation overhead, 1 to 10", min_value=1, max_value=10),
                Param("enob_a", "float", 5.0, "effective bits of array A converters", min_value=1),
                Param("n_converters_a", "int", 128, "converter count of array A", min_value=1),
                Param("enob_b", "float", 10.0, "effective bits of array B converters", min_value=1),
                Param("n_converters_b", "int", 8, "converter count of array B", min_value=1),
                Param("pa_total_radiated_w", "float", 1.0, "total radiated power in watts",
                      min_value=0, min_exclusive=True),
                Param("pa_pae", "float", 0.18, "power-added efficiency as a fraction",
                      min_value=0, min_exclusive=True, max_value=0.999999),
                Param("pa_n_antennas", "int", 64, "antennas sharing the radiated-power budget",
                      min_value=1),
            ),
            _run_hwbudget,
        ),
        Experiment(
            "hardening",
            "Monte-Carlo channel-hardening metric std/mean of ||h||^2 (JSON)",
            "json",
            (
                Param("model", "choice", "iid_rayleigh", "channel model",
                      choices=("iid_rayleigh",)),
                Param("m_antennas", "int", 100, "number of antennas", min_value=1),
                Param("n_draws", "int", 10_000, "Monte-Carlo draws", min_value=2),
            ),
            _run_hardening,
        ),
        Experiment(
            "favorable",
            "Monte-Carlo favorable-propagation metric, mean |h_i^H h_j|/(|h_i||h_j|) (JSON)",
            "json",
            (
                Param("model", "choice", "iid_rayleigh", "channel model",
                      choices=("iid_rayleigh",)),
                Param("m_antennas", "int", 100, "number of antennas", min_value=1),
                Param("n_pairs", "int", 1000, "independent channel pairs", min_value=1),
            ),
            _run_favorable,
        ),
    )
}

BUNDLED_CONFIGS = (
    "fig4_32x32",
    "fig4_64x64",
    "fig4_128x128",
    "centralpark_3ghz",
    "centralpark_60ghz",
    "mobility_bound",
    "estload_paper",
    "adc_128v8",
)


def bundled_config_text(name: str) -> str:
    from importlib.resources import files

    resource = files("mimolab") / "configs" / f"{name}.ini"
    return resource.read_text(encoding="utf-8")


# ----------------------------------------------------------------------------
# output plumbing
# ----------------------------------------------------------------------------

def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".mimolab-")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def list_experiments() -> str:
    lines = ["available experiments:", ""]
    for exp in EXPERIMENTS.values():
        lines.append(f"{exp.name} - {exp.description}")
        for param in exp.params:
            kind = f"{param.kind}, default {param.default}"
            if param.choices:
                kind += f", one of {'/'.join(param.choices)}"
            lines.append(f"    {param.name} ({kind}): {param.help}")
        if exp.allow_prefix:
            lines.append(
                f"    {exp.allow_prefix}LABEL (float, repeatable): "
                "extra ledger entry named LABEL, value in dB"
            )
        lines.append("")
    lines.append("bundled configs: " + ", ".join(BUNDLED_CONFIGS))
    return "\n".join(lines)


USAGE = """\
usage: mimolab [EXPERIMENT] [--config PATH|NAME] [--experiment NAME]
               [--output PATH] [--seed N] [--set key=value] [--KEY VALUE]
       mimolab list

Runs one deterministic experiment and writes its CSV/JSON output plus a
<output>.manifest.json echoing every resolved parameter and the seed.
'mimolab list' prints all experiments, parameters, and defaults.
Exit codes: 0 ok, 2 parse error, 3 validation error, 4 runtime failure.
"""


# ----------------------------------------------------------------------------
# main
# ----------------------------------------------------------------------------

def _resolve_params(exp: Experiment, raw: dict[str, str]) -> dict:
    schema = {param.name: param for param in exp.params}
    resolved = {param.name: param.default for param in exp.params}
    entry_param = Param("entry", "float", 0.0, "ledger entry in dB")
    for key, text in raw.items():
        if key in schema:
            resolved[key] = coerce_value(schema[key], key, text)
        elif exp.allow_prefix and key.startswith(exp.allow_prefix):
            resolved[key] = coerce_value(entry_param, key, text)
        else:
            raise ValidationError(key, f"unknown parameter for experiment {exp.name!r}")
    return resolved


def _load_config(source: str) -> dict[str, str]:
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as handle:
            return parse_config_text(handle.read())
    name = source.removesuffix(".ini")
    if name in BUNDLED_CONFIGS:
        return parse_config_text(bundled_config_text(name))
    raise ValidationError("config", f"no such file or bundled config: {source!r}")


def run(config: dict[str, str], output_override: str | None = None,
        seed_override: int | None = None) -> int:
    """Execute one resolved configuration; prints outcomes, returns exit code."""
    config = dict(config)
    experiment_name = config.pop("experiment", None)
    if experiment_name is None:
        raise ValidationError("experiment", "no experiment selected")
    if experiment_name not in EXPERIMENTS:
        print(f"unknown experiment {experiment_name!r}", file=sys.stderr)
        print(list_experiments(), file=sys.stderr)
        return EXIT_VALIDATION

    exp = EXPERIMENTS[experiment_name]
    seed_text = config.pop("seed", None)
    seed = DEFAULT_SEED
    if seed_text is not None:
        seed = coerce_value(Param("seed", "int", DEFAULT_SEED, "seed"), "seed", seed_text)
    if seed_override is not None:
        seed = seed_override
    output = config.pop("output", None)
    if output_override is not None:
        output = output_override
    if output is None:
        output = f"{exp.name}.{exp.output_ext}"

    params = _resolve_params(exp, config)

    try:
        text, extras, stdout_lines = exp.runner(params, seed)
    except (ValueError, ArithmeticError, ZeroDivisionError, OverflowError) as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return EXIT_RUNTIME

    manifest = {
        "artifact_version": __version__,
        "experiment": exp.name,
        "seed": seed,
        "parameters": params,
        "results": extras,
        "output": output,
    }
    _atomic_write(output, text)
    _atomic_write(output + ".manifest.json", _json_text(manifest))
    for line in stdout_lines:
        print(line)
    print(f"wrote {output}")
    print(f"wrote {output}.manifest.json")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args:
        print(USAGE)
        return EXIT_OK

    experiment = None
    config_source = None
    output = None
    seed = None
    overrides: list[tuple[str, str]] = []
    positionals: list[str] = []

    def take_value(flag: str, i: int) -> str:
        if i + 1 >= len(args):
            raise ConfigParseError(0, 0, f"flag {flag} needs a value")
        return args[i + 1]

    try:
        i = 0
        while i < len(args):
            arg = args[i]
            if arg in ("-h", "--help"):
                print(USAGE)
                return EXIT_OK
            if arg == "--list":
                print(list_experiments())
                return EXIT_OK
            if arg == "--config":
                config_source = take_value(arg, i)
                i += 2
            elif arg == "--experiment":
                experiment = take_value(arg, i)
                i += 2
            elif arg == "--output":
                output = take_value(arg, i)
                i += 2
            elif arg == "--seed":
                seed_param = Param("seed", "int", DEFAULT_SEED, "seed")
                seed = coerce_value(seed_param, "seed", take_value(arg, i))
                i += 2
            elif arg == "--set":
                pair = take_value(arg, i)
                if "=" not in pair:
                    raise ConfigParseError(0, 0, f"--set expects key=value, got {pair!r}")
                key, _, value = pair.partition("=")
                overrides.append((key.strip(), value.strip()))
                i += 2
            elif arg.startswith("--"):
                # convenience passthrough: --freq-ghz 38 == --set freq_ghz=38
                key = arg[2:].replace("-", "_")
                overrides.append((key, take_value(arg, i)))
                i += 2
            elif arg.startswith("-"):
                raise ConfigParseError(0, 0, f"unknown flag {arg!r}")
            else:
                positionals.append(arg)
                i += 1

        if positionals and positionals[0] == "list":
            print(list_experiments())
            return EXIT_OK
        if len(positionals) > 1:
            raise ConfigParseError(0, 0, f"unexpected arguments: {positionals[1:]}")
        if positionals:
            experiment = positionals[0]

        config = _load_config(config_source) if config_source else {}
        if experiment is not None:
            config["experiment"] = experiment
        for key, value in overrides:
            config[key] = value
        if "experiment" not in config:
            print(USAGE)
            print("error: no experiment selected", file=sys.stderr)
            return EXIT_VALIDATION
        return run(config, output_override=output, seed_override=seed)
    except ConfigParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
