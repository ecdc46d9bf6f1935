"""Scenario files, report tables, and the bundled reference datasets.

A scenario is a single strict-schema JSON document; unknown keys are
rejected so parameter typos fail loudly.  Reports are plain CSV with LF
line endings so identical inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Any, Sequence, TextIO

from . import carbon as carbon_mod
from .lifecycle import (
    Scenario,
    default_scenario,
    gamma_sweep,
    lifecycle_report,
)
from .mlp_cost import (
    DEFAULT_PROCESSING_UNIT,
    MlpArchitecture,
    ProcessingUnitProfile,
    forward_flops,
    training_forward_flops,
    uniform_architecture,
)
from .preprocessing import (
    StandardizationMethod,
    preprocessing_energy,
    preprocessing_energy_per_bit,
    preprocessing_flops,
)
from .storage import BUILTIN_STORAGE, StorageProfile
from .transmission import (
    BUILTIN_TECHNOLOGIES,
    PayloadSpec,
    TechnologyProfile,
    cumulative_transmission_energy,
    fixed_overhead_profile,
    packet_count,
    payload_bits,
    transmission_energy_per_bit,
    transmitted_bits,
)
from .units import BitCount, BitRate, Power

__all__ = [
    "ScenarioError",
    "UnknownTargetError",
    "Sweeps",
    "ScenarioDocument",
    "ReportTable",
    "parse_scenario",
    "serialize_scenario",
    "load_scenario",
    "write_report",
    "reproduce",
    "REPRODUCE_TARGETS",
]


class ScenarioError(ValueError):
    """A scenario document failed validation; the message names the field path."""


class UnknownTargetError(ValueError):
    """An unknown reproduce target was requested; the message lists valid ones."""


@dataclass(frozen=True)
class Sweeps:
    """Optional parameter sweeps attached to a scenario."""

    gamma: tuple[int, ...] = ()
    overhead_pct: tuple[float, ...] = ()
    invalid_samples: tuple[int, ...] = ()


@dataclass(frozen=True)
class ScenarioDocument:
    """A parsed scenario plus its sweep blocks."""

    scenario: Scenario
    sweeps: Sweeps = field(default_factory=Sweeps)


def _fail(path: str, message: str) -> ScenarioError:
    return ScenarioError(f"{path}: {message}")


def _require_mapping(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise _fail(path, f"expected an object, got {type(value).__name__}")
    return value


def _reject_unknown(mapping: dict, allowed: Sequence[str], path: str) -> None:
    unknown = [key for key in mapping if key not in allowed]
    if unknown:
        name = f"{path}.{unknown[0]}" if path else unknown[0]
        raise _fail(name, "unknown field")


def _get_int(mapping: dict, key: str, path: str, *, default: int | None = None,
             minimum: int | None = None, maximum: int | None = None) -> int:
    if key not in mapping:
        if default is None:
            raise _fail(path, "required field is missing")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise _fail(path, f"must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise _fail(path, f"must be <= {maximum}, got {value}")
    return value


def _get_real(mapping: dict, key: str, path: str, *, default: float | None = None,
              minimum: float | None = None, exclusive_minimum: bool = False,
              maximum: float | None = None) -> float:
    if key not in mapping:
        if default is None:
            raise _fail(path, "required field is missing")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise _fail(path, f"must be finite, got {value!r}")
    if minimum is not None:
        if exclusive_minimum and value <= minimum:
            raise _fail(path, f"must be > {minimum}, got {value}")
        if not exclusive_minimum and value < minimum:
            raise _fail(path, f"must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise _fail(path, f"must be <= {maximum}, got {value}")
    return value


def _parse_technology(value: Any, path: str) -> TechnologyProfile:
    if isinstance(value, str):
        profile = BUILTIN_TECHNOLOGIES.get(value)
        if profile is None:
            known = ", ".join(sorted(BUILTIN_TECHNOLOGIES))
            raise _fail(path, f"unknown technology {value!r}; built-ins: {known}")
        return profile
    mapping = _require_mapping(value, path)
    allowed = ["name", "f_u", "omega_u", "p_t_w", "r_t_bps", "packets_override"]
    _reject_unknown(mapping, allowed, path)
    name = mapping.get("name", "custom")
    if not isinstance(name, str):
        raise _fail(f"{path}.name", f"expected a string, got {name!r}")
    f_u = _get_int(mapping, "f_u", f"{path}.f_u", minimum=1)
    omega_u = _get_int(mapping, "omega_u", f"{path}.omega_u", minimum=0)
    p_t_w = _get_real(mapping, "p_t_w", f"{path}.p_t_w", minimum=0.0, exclusive_minimum=True)
    r_t_bps = _get_real(mapping, "r_t_bps", f"{path}.r_t_bps", minimum=0.0, exclusive_minimum=True)
    override: int | None = None
    if "packets_override" in mapping:
        override = _get_int(mapping, "packets_override", f"{path}.packets_override", minimum=1)
    return TechnologyProfile(
        name=name,
        packet_capacity=BitCount(f_u),
        packet_overhead=BitCount(omega_u),
        transmit_power=Power(p_t_w),
        transmit_rate=BitRate(r_t_bps),
        packets_override=override,
    )


def _parse_storage(value: Any, path: str) -> StorageProfile:
    if isinstance(value, str):
        profile = BUILTIN_STORAGE.get(value)
        if profile is None:
            known = ", ".join(sorted(BUILTIN_STORAGE))
            raise _fail(path, f"unknown storage medium {value!r}; built-ins: {known}")
        return profile
    mapping = _require_mapping(value, path)
    _reject_unknown(mapping, ["name", "wh_per_tb"], path)
    name = mapping.get("name", "custom")
    if not isinstance(name, str):
        raise _fail(f"{path}.name", f"expected a string, got {name!r}")
    wh_per_tb = _get_real(mapping, "wh_per_tb", f"{path}.wh_per_tb", minimum=0.0)
    return StorageProfile(name, wh_per_tb)


def _parse_processing_unit(value: Any, path: str) -> ProcessingUnitProfile:
    mapping = _require_mapping(value, path)
    allowed = ["preprocessing_power_w", "preprocessing_flops_per_s", "flops_per_joule"]
    _reject_unknown(mapping, allowed, path)
    defaults = DEFAULT_PROCESSING_UNIT
    power = _get_real(mapping, "preprocessing_power_w", f"{path}.preprocessing_power_w",
                      default=defaults.preprocessing_power.watts,
                      minimum=0.0, exclusive_minimum=True)
    throughput = _get_real(mapping, "preprocessing_flops_per_s",
                           f"{path}.preprocessing_flops_per_s",
                           default=defaults.preprocessing_flops_per_s,
                           minimum=0.0, exclusive_minimum=True)
    efficiency = _get_real(mapping, "flops_per_joule", f"{path}.flops_per_joule",
                           default=defaults.flops_per_joule,
                           minimum=0.0, exclusive_minimum=True)
    return ProcessingUnitProfile(Power(power), throughput, efficiency)


def _parse_mlp(value: Any, path: str) -> MlpArchitecture:
    mapping = _require_mapping(value, path)
    _reject_unknown(mapping, ["layers"], path)
    if "layers" not in mapping:
        raise _fail(f"{path}.layers", "required field is missing")
    layers = mapping["layers"]
    if not isinstance(layers, list) or len(layers) < 2:
        raise _fail(f"{path}.layers", "expected a list of at least two layer widths")
    sizes = []
    for index, width in enumerate(layers):
        if isinstance(width, bool) or not isinstance(width, int) or width < 1:
            raise _fail(f"{path}.layers[{index}]", f"expected an integer >= 1, got {width!r}")
        sizes.append(width)
    return MlpArchitecture(tuple(sizes))


def _parse_countries(value: Any, path: str) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise _fail(path, f"expected a list of country codes, got {value!r}")
    codes = []
    for index, code in enumerate(value):
        if not isinstance(code, str) or len(code) != 2 or not code.isalpha():
            raise _fail(f"{path}[{index}]", f"expected a two-letter country code, got {code!r}")
        codes.append(code.upper())
    return tuple(codes)


def _parse_sweeps(value: Any, path: str) -> Sweeps:
    mapping = _require_mapping(value, path)
    _reject_unknown(mapping, ["gamma", "overhead_pct", "invalid_samples"], path)

    def int_list(key: str, minimum: int) -> tuple[int, ...]:
        if key not in mapping:
            return ()
        raw = mapping[key]
        if not isinstance(raw, list):
            raise _fail(f"{path}.{key}", f"expected a list, got {raw!r}")
        out = []
        for index, item in enumerate(raw):
            if isinstance(item, bool) or not isinstance(item, int) or item < minimum:
                raise _fail(f"{path}.{key}[{index}]",
                            f"expected an integer >= {minimum}, got {item!r}")
            out.append(item)
        return tuple(out)

    overhead: tuple[float, ...] = ()
    if "overhead_pct" in mapping:
        raw = mapping["overhead_pct"]
        if not isinstance(raw, list):
            raise _fail(f"{path}.overhead_pct", f"expected a list, got {raw!r}")
        values = []
        for index, item in enumerate(raw):
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise _fail(f"{path}.overhead_pct[{index}]", f"expected a number, got {item!r}")
            item = float(item)
            if not 0.0 <= item <= 100.0:
                raise _fail(f"{path}.overhead_pct[{index}]",
                            f"must be in [0, 100], got {item}")
            values.append(item)
        overhead = tuple(values)

    return Sweeps(
        gamma=int_list("gamma", 1),
        overhead_pct=overhead,
        invalid_samples=int_list("invalid_samples", 0),
    )


_TOP_LEVEL_FIELDS = [
    "samples",
    "invalid_samples",
    "bit_precision",
    "technology",
    "storage",
    "preprocessing",
    "split_ratio",
    "epochs",
    "mlp",
    "inference_batch",
    "inference_invalid_samples",
    "gamma",
    "processing_unit",
    "countries",
    "sweeps",
]


def parse_scenario(text: str) -> ScenarioDocument:
    """Parse and validate a scenario JSON document.

    Unset optional fields take the documented defaults (double precision,
    BLE over HDD, normalization, a 70/30 split, the default processing
    unit).  Violations raise :class:`ScenarioError` naming the field path.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from None
    mapping = _require_mapping(raw, "scenario")
    _reject_unknown(mapping, _TOP_LEVEL_FIELDS, "")

    samples = _get_int(mapping, "samples", "samples", minimum=0)
    invalid = _get_int(mapping, "invalid_samples", "invalid_samples", default=0,
                       minimum=0, maximum=samples)
    precision = _get_int(mapping, "bit_precision", "bit_precision", default=64, minimum=1)
    technology = _parse_technology(mapping.get("technology", "ble5"), "technology")
    storage = _parse_storage(mapping.get("storage", "hdd"), "storage")

    method_name = mapping.get("preprocessing", "normalization")
    try:
        method = StandardizationMethod(method_name)
    except ValueError:
        options = ", ".join(m.value for m in StandardizationMethod)
        raise _fail("preprocessing", f"expected one of {options}, got {method_name!r}") from None

    split_ratio = _get_real(mapping, "split_ratio", "split_ratio", default=0.7,
                            minimum=0.0, exclusive_minimum=True, maximum=1.0)
    epochs = _get_int(mapping, "epochs", "epochs", minimum=1)
    arch = _parse_mlp(mapping.get("mlp"), "mlp") if "mlp" in mapping else None
    if arch is None:
        raise _fail("mlp", "required field is missing")
    inference_batch = _get_int(mapping, "inference_batch", "inference_batch", minimum=1)
    inference_invalid = _get_int(mapping, "inference_invalid_samples",
                                 "inference_invalid_samples", default=0,
                                 minimum=0, maximum=inference_batch)
    gamma = _get_int(mapping, "gamma", "gamma", minimum=1)
    pu = (_parse_processing_unit(mapping["processing_unit"], "processing_unit")
          if "processing_unit" in mapping else DEFAULT_PROCESSING_UNIT)
    countries = (_parse_countries(mapping["countries"], "countries")
                 if "countries" in mapping else ())
    sweeps = _parse_sweeps(mapping["sweeps"], "sweeps") if "sweeps" in mapping else Sweeps()

    scenario = Scenario(
        payload=PayloadSpec(bits_per_sample=precision, sample_count=samples),
        technology=technology,
        storage=storage,
        standardization=method,
        train_fraction=split_ratio,
        epochs=epochs,
        architecture=arch,
        inference_batch=inference_batch,
        gamma=gamma,
        processing_unit=pu,
        invalid_samples=invalid,
        inference_invalid_samples=inference_invalid,
        countries=countries,
    )
    return ScenarioDocument(scenario, sweeps)


def _technology_to_json(profile: TechnologyProfile) -> str | dict:
    if BUILTIN_TECHNOLOGIES.get(profile.name) == profile:
        return profile.name
    doc: dict[str, Any] = {
        "name": profile.name,
        "f_u": profile.packet_capacity.bits,
        "omega_u": profile.packet_overhead.bits,
        "p_t_w": profile.transmit_power.watts,
        "r_t_bps": profile.transmit_rate.bits_per_second,
    }
    if profile.packets_override is not None:
        doc["packets_override"] = profile.packets_override
    return doc


def _storage_to_json(profile: StorageProfile) -> str | dict:
    if BUILTIN_STORAGE.get(profile.name) == profile:
        return profile.name
    return {"name": profile.name, "wh_per_tb": profile.wh_per_terabyte}


def serialize_scenario(doc: ScenarioDocument) -> str:
    """Render a scenario document back to canonical JSON text.

    ``parse_scenario(serialize_scenario(doc))`` reproduces ``doc`` exactly.
    """
    s = doc.scenario
    out: dict[str, Any] = {
        "samples": s.payload.sample_count,
        "invalid_samples": s.invalid_samples,
        "bit_precision": s.payload.bits_per_sample,
        "technology": _technology_to_json(s.technology),
        "storage": _storage_to_json(s.storage),
        "preprocessing": s.standardization.value,
        "split_ratio": s.train_fraction,
        "epochs": s.epochs,
        "mlp": {"layers": list(s.architecture.layer_sizes)},
        "inference_batch": s.inference_batch,
        "inference_invalid_samples": s.inference_invalid_samples,
        "gamma": s.gamma,
        "processing_unit": {
            "preprocessing_power_w": s.processing_unit.preprocessing_power.watts,
            "preprocessing_flops_per_s": s.processing_unit.preprocessing_flops_per_s,
            "flops_per_joule": s.processing_unit.flops_per_joule,
        },
    }
    if s.countries:
        out["countries"] = list(s.countries)
    sweeps = doc.sweeps
    if sweeps.gamma or sweeps.overhead_pct or sweeps.invalid_samples:
        block: dict[str, Any] = {}
        if sweeps.gamma:
            block["gamma"] = list(sweeps.gamma)
        if sweeps.overhead_pct:
            block["overhead_pct"] = list(sweeps.overhead_pct)
        if sweeps.invalid_samples:
            block["invalid_samples"] = list(sweeps.invalid_samples)
        out["sweeps"] = block
    return json.dumps(out, indent=2) + "\n"


def load_scenario(path: str | os.PathLike) -> ScenarioDocument:
    """Read and parse a scenario file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_scenario(handle.read())


@dataclass(frozen=True)
class ReportTable:
    """A rectangular, CSV-renderable table of results."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row {row!r} has {len(row)} cells, expected {len(self.columns)}"
                )

    def to_csv(self) -> str:
        """Render as CSV: header first, LF endings, full-precision numbers."""
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_format_cell(cell) for cell in row))
        return "\n".join(lines) + "\n"


def _format_cell(cell: Any) -> str:
    if isinstance(cell, bool):
        raise TypeError("boolean cells are not supported in reports")
    if isinstance(cell, float):
        return repr(cell)
    if isinstance(cell, int):
        return str(cell)
    return str(cell)


def write_report(table: ReportTable, destination: str | os.PathLike | TextIO) -> int:
    """Write a table as UTF-8 CSV to a path or text stream; returns bytes written."""
    text = table.to_csv()
    data = text.encode("utf-8")
    if hasattr(destination, "write"):
        destination.write(text)
        return len(data)
    try:
        with open(destination, "wb") as handle:
            handle.write(data)
    except OSError as exc:
        raise OSError(f"cannot write report to {os.fspath(destination)!r}: {exc}") from exc
    return len(data)


# --- bundled reference datasets -------------------------------------------

_GAMMA_GRID = (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000, 20000, 50000, 100000)
_REFERENCE_TECHNOLOGIES = ("ble5", "zigbee", "lorawan")


def _technology_rows() -> list[TechnologyProfile]:
    return [BUILTIN_TECHNOLOGIES[name] for name in _REFERENCE_TECHNOLOGIES]


def _target_table1() -> ReportTable:
    spec = PayloadSpec(64, 256)
    rows = []
    for profile in _technology_rows():
        rows.append(
            (
                profile.name,
                profile.packet_capacity.bits,
                packet_count(profile, spec),
                profile.packet_overhead.bits,
                transmitted_bits(profile, spec).bits,
                100.0 * profile.packet_overhead.bits / profile.packet_capacity.bits,
            )
        )
    return ReportTable(
        ("technology", "packet_capacity_bits", "packets", "overhead_bits_per_packet",
         "b_t_bits", "overhead_pct"),
        rows,
    )


def _target_table2() -> ReportTable:
    rows = []
    for profile in _technology_rows():
        rows.append(
            (
                profile.name,
                profile.transmit_power.watts * 1e3,
                profile.transmit_rate.bits_per_second,
                transmission_energy_per_bit(profile).joules_per_bit,
            )
        )
    return ReportTable(("technology", "p_t_mw", "r_t_bps", "e_t_b_j"), rows)


def _target_fig2() -> ReportTable:
    rows = []
    for n_samples in range(16, 513, 16):
        spec = PayloadSpec(64, n_samples)
        for pct in (1.0, 30.0, 50.0, 70.0):
            profile = fixed_overhead_profile(pct)
            rows.append(
                (n_samples, pct, payload_bits(spec).bits, transmitted_bits(profile, spec).bits)
            )
    return ReportTable(("n_samples", "overhead_pct", "payload_bits", "b_t_bits"), rows)


def _target_fig4() -> ReportTable:
    rows = [
        (profile.name, transmission_energy_per_bit(profile).joules_per_bit)
        for profile in _technology_rows()
    ]
    return ReportTable(("technology", "e_t_b_j"), rows)


def _target_fig5() -> ReportTable:
    spec = PayloadSpec(64, 256)
    rows = []
    for profile in _technology_rows():
        for time_s, energy in cumulative_transmission_energy(profile, spec, 60.0, 86400.0):
            rows.append((profile.name, time_s, energy.joules))
    return ReportTable(("technology", "time_s", "e_t_cumulative_j"), rows)


def _target_fig6() -> ReportTable:
    pu = DEFAULT_PROCESSING_UNIT
    rows = []
    for method in StandardizationMethod:
        for n_samples in range(128, 1025, 128):
            for n_invalid in (0, 32, 64, 96):
                flops = preprocessing_flops(method, n_samples, n_invalid)
                t_pre, e_pre = preprocessing_energy(pu, flops)
                rows.append((method.value, n_samples, n_invalid, flops.flops, t_pre, e_pre.joules))
    return ReportTable(
        ("method", "n_samples", "n_invalid", "flops", "t_pre_s", "e_pre_j"), rows
    )


def _target_fig7() -> ReportTable:
    pu = DEFAULT_PROCESSING_UNIT
    spec = PayloadSpec(64, 256)
    rows = []
    for method in StandardizationMethod:
        flops = preprocessing_flops(method, spec.sample_count, 0)
        _, e_pre = preprocessing_energy(pu, flops)
        per_bit = preprocessing_energy_per_bit(e_pre, spec)
        rows.append((method.value, spec.sample_count, flops.flops, e_pre.joules,
                     per_bit.joules_per_bit))
    return ReportTable(("method", "n_samples", "flops", "e_pre_j", "e_pre_b_j"), rows)


def _target_fig8() -> ReportTable:
    report = lifecycle_report(default_scenario())
    rows = [
        ("transmission", report.transmission.joules),
        ("storage", report.storage.joules),
        ("preprocessing", report.preprocessing.joules),
        ("training", report.training.joules),
        ("evaluation", report.evaluation.joules),
        ("inference", report.inference.joules),
        ("development_total", report.development.joules),
        ("inference_phase_total", report.inference_phase.joules),
    ]
    return ReportTable(("component", "energy_j"), rows)


def _target_fig9ab() -> ReportTable:
    rows = []
    for width in range(1, 11):
        for hidden in range(1, 6):
            arch = uniform_architecture(6, width, hidden, 3)
            fwd = forward_flops(arch)
            rows.append(
                ("a", width, hidden, 10, 256, fwd.flops,
                 training_forward_flops(arch, 10, 256).flops)
            )
    reference = MlpArchitecture((6, 5, 5, 5, 3))
    fwd = forward_flops(reference)
    for epochs in (1, 5, 10, 15, 20):
        for n_train in (64, 128, 179, 256, 384, 512):
            rows.append(
                ("b", 5, 3, epochs, n_train, fwd.flops,
                 training_forward_flops(reference, epochs, n_train).flops)
            )
    return ReportTable(
        ("part", "hidden_width", "hidden_layers", "n_epochs", "n_train",
         "forward_flops", "training_forward_flops"),
        rows,
    )


def _target_fig11() -> ReportTable:
    scenario = default_scenario()
    rows = [
        (row.gamma, row.ecal_abs.joules, row.ecal_abs_mean.joules)
        for row in gamma_sweep(scenario, _GAMMA_GRID)
    ]
    return ReportTable(("gamma", "ecal_abs_j", "ecal_abs_mean_j"), rows)


def _target_fig12() -> ReportTable:
    scenario = default_scenario()
    rows = [(row.gamma, row.ecal.joules_per_bit) for row in gamma_sweep(scenario, _GAMMA_GRID)]
    return ReportTable(("gamma", "ecal_j_per_b"), rows)


def _target_table3() -> ReportTable:
    scenario = default_scenario()
    report = carbon_mod.cf_vs_gamma(scenario, carbon_mod.bundled_ci_table(), [scenario.gamma])
    rows = [
        (row.country_code, row.country_name, row.intensity.grams_co2e_per_kwh,
         row.cf_development_g, row.cf_inference_g)
        for row in report.rows
    ]
    return ReportTable(
        ("country_code", "country_name", "ci_g_per_kwh", "cf_development_g", "cf_inference_g"),
        rows,
    )


def _target_fig13() -> ReportTable:
    scenario = default_scenario()
    report = carbon_mod.cf_vs_gamma(scenario, carbon_mod.bundled_ci_table(), _GAMMA_GRID)
    rows = [
        (row.gamma, row.country_code, row.intensity.grams_co2e_per_kwh, row.cf_total_g)
        for row in report.rows
    ]
    return ReportTable(("gamma", "country_code", "ci_g_per_kwh", "cf_total_g"), rows)


_TARGETS = {
    "table1": _target_table1,
    "table2": _target_table2,
    "fig2": _target_fig2,
    "fig4": _target_fig4,
    "fig5": _target_fig5,
    "fig6": _target_fig6,
    "fig7": _target_fig7,
    "fig8": _target_fig8,
    "fig9ab": _target_fig9ab,
    "fig11": _target_fig11,
    "fig12": _target_fig12,
    "table3": _target_table3,
    "fig13": _target_fig13,
}

REPRODUCE_TARGETS = tuple(_TARGETS)


def reproduce(target: str) -> ReportTable:
    """Compute the named reference dataset from the model.

    Every value is produced by the library (the carbon-intensity inputs are
    the bundled snapshot); nothing is hard-coded.
    """
    try:
        builder = _TARGETS[target]
    except KeyError:
        known = ", ".join(REPRODUCE_TARGETS)
        raise UnknownTargetError(f"unknown target {target!r}; known targets: {known}") from None
    return builder()
