"""Carbon footprint of a scenario from per-country grid carbon intensity.

Footprint is energy in kWh times intensity in gCO2eq/kWh.  Energy is
country-independent in this model, so rankings across countries always
follow the intensity table.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence, TextIO

from .lifecycle import Scenario, development_energy, inference_phase_energy
from .units import CarbonIntensity, Energy, joules_to_kwh

__all__ = [
    "CiTableError",
    "DuplicateCountryError",
    "UnknownCountryError",
    "CarbonIntensityRecord",
    "CarbonReportRow",
    "CarbonReport",
    "carbon_footprint",
    "load_ci_table",
    "bundled_ci_table",
    "cf_vs_gamma",
]

_CI_HEADER = ["country_code", "country_name", "year", "ci_g_per_kwh"]


class CiTableError(ValueError):
    """A carbon-intensity table could not be parsed."""


class DuplicateCountryError(CiTableError):
    """Two rows share the same (country_code, year) key."""


class UnknownCountryError(LookupError):
    """A requested country is not present in the loaded intensity table."""


@dataclass(frozen=True)
class CarbonIntensityRecord:
    """Average grid carbon intensity of one country in one year."""

    country_code: str
    country_name: str
    year: int
    intensity: CarbonIntensity

    def __post_init__(self) -> None:
        if len(self.country_code) != 2 or not self.country_code.isalpha():
            raise ValueError(f"country_code must be two letters, got {self.country_code!r}")
        object.__setattr__(self, "country_code", self.country_code.upper())


def carbon_footprint(e: Energy, ci: CarbonIntensity) -> float:
    """Grams of CO2-equivalent emitted producing energy ``e`` at intensity ``ci``."""
    return joules_to_kwh(e) * ci.grams_co2e_per_kwh


def load_ci_table(source: str | os.PathLike | TextIO) -> tuple[CarbonIntensityRecord, ...]:
    """Load carbon-intensity records from CSV.

    Expects the header ``country_code,country_name,year,ci_g_per_kwh``.
    Raises :class:`CiTableError` naming the offending line on malformed
    rows and :class:`DuplicateCountryError` on repeated (code, year) keys.
    """
    if hasattr(source, "read"):
        return _parse_ci_rows(source)
    with open(source, "r", encoding="utf-8", newline="") as handle:
        return _parse_ci_rows(handle)


def _parse_ci_rows(stream: Iterable[str]) -> tuple[CarbonIntensityRecord, ...]:
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise CiTableError("carbon-intensity table is empty (missing header)") from None
    if header != _CI_HEADER:
        raise CiTableError(
            f"line 1: expected header {','.join(_CI_HEADER)!r}, got {','.join(header)!r}"
        )
    records: list[CarbonIntensityRecord] = []
    seen: set[tuple[str, int]] = set()
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(_CI_HEADER):
            raise CiTableError(f"line {lineno}: expected {len(_CI_HEADER)} fields, got {len(row)}")
        code, name, year_text, ci_text = row
        try:
            year = int(year_text)
            intensity = float(ci_text)
        except ValueError:
            raise CiTableError(f"line {lineno}: cannot parse {row!r}") from None
        if intensity < 0:
            raise CiTableError(f"line {lineno}: carbon intensity must be >= 0, got {intensity}")
        try:
            record = CarbonIntensityRecord(code, name, year, CarbonIntensity(intensity))
        except ValueError as exc:
            raise CiTableError(f"line {lineno}: {exc}") from None
        key = (record.country_code, record.year)
        if key in seen:
            raise DuplicateCountryError(f"line {lineno}: duplicate entry for {key}")
        seen.add(key)
        records.append(record)
    return tuple(records)


def bundled_ci_table() -> tuple[CarbonIntensityRecord, ...]:
    """The carbon-intensity snapshot shipped with the package (2023 averages)."""
    with resources.files(__package__).joinpath("data/ci_2023.csv").open(
        "r", encoding="utf-8"
    ) as handle:
        return _parse_ci_rows(handle)


@dataclass(frozen=True)
class CarbonReportRow:
    """Footprint of one country at one request count."""

    gamma: int
    country_code: str
    country_name: str
    intensity: CarbonIntensity
    cf_development_g: float
    cf_inference_g: float
    cf_total_g: float


@dataclass(frozen=True)
class CarbonReport:
    """Per-country carbon footprints, grouped by request count."""

    rows: tuple[CarbonReportRow, ...]


def cf_vs_gamma(
    s: Scenario,
    records: Sequence[CarbonIntensityRecord],
    gammas: Sequence[int],
) -> CarbonReport:
    """Carbon footprint per country at each request count in ``gammas``.

    Uses the scenario's country list, or every loaded record when the list
    is empty.  Within one gamma, rows are ordered by descending intensity.
    """
    by_code = {record.country_code: record for record in records}
    if s.countries:
        try:
            chosen = [by_code[code.upper()] for code in s.countries]
        except KeyError as exc:
            known = ", ".join(sorted(by_code))
            raise UnknownCountryError(
                f"country {exc.args[0]!r} not in the intensity table (has: {known})"
            ) from None
    else:
        chosen = list(records)
    chosen.sort(key=lambda r: (-r.intensity.grams_co2e_per_kwh, r.country_code))
    e_d, _ = development_energy(s)
    e_inf_p, _ = inference_phase_energy(s)
    rows = []
    for gamma in gammas:
        if isinstance(gamma, bool) or not isinstance(gamma, int) or gamma < 1:
            raise ValueError(f"gamma values must be integers >= 1, got {gamma!r}")
        total = Energy(e_d.joules + gamma * e_inf_p.joules)
        for record in chosen:
            rows.append(
                CarbonReportRow(
                    gamma=gamma,
                    country_code=record.country_code,
                    country_name=record.country_name,
                    intensity=record.intensity,
                    cf_development_g=carbon_footprint(e_d, record.intensity),
                    cf_inference_g=carbon_footprint(e_inf_p, record.intensity),
                    cf_total_g=carbon_footprint(total, record.intensity),
                )
            )
    return CarbonReport(tuple(rows))
