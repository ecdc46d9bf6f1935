"""Data cleaning and standardization, with an instrumented FLOP counter.

Counting convention: additions, subtractions, multiplications, divisions,
and square roots cost one FLOP each; comparisons and memory moves are free.
Under that convention cleaning costs nothing, min-max scaling costs two
FLOPs per valid sample plus the range subtraction, and normalization costs
six FLOPs per valid sample plus the mean/deviation finalization.

All energy accounting uses the closed-form counts from
:func:`preprocessing_flops`.  The per-call ledgers returned by the
executable transforms count the literal operations performed and sit within
a small constant of the closed forms; they exist to validate the counting,
not to price it.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .mlp_cost import ProcessingUnitProfile
from .transmission import PayloadSpec
from .units import Energy, EnergyPerBit, FlopCount

__all__ = [
    "DegenerateRangeError",
    "DegenerateDeviationError",
    "RawDataset",
    "StandardizationMethod",
    "FlopLedger",
    "load_raw_dataset",
    "clean",
    "minmax_scale",
    "normalize",
    "preprocessing_flops",
    "preprocessing_energy",
    "preprocessing_energy_per_bit",
]


class DegenerateRangeError(ValueError):
    """All samples are equal, so min-max scaling has a zero range."""


class DegenerateDeviationError(ValueError):
    """Samples have zero standard deviation, so normalization is undefined."""


class StandardizationMethod(enum.Enum):
    """Which standardization step the pipeline applies after cleaning."""

    MINMAX = "minmax"
    NORMALIZATION = "normalization"


@dataclass(frozen=True)
class RawDataset:
    """A collected sample sequence in which non-finite entries mark invalid data."""

    samples: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", tuple(float(x) for x in self.samples))

    @property
    def sample_count(self) -> int:
        return len(self.samples)

    @property
    def invalid_count(self) -> int:
        return sum(1 for x in self.samples if not math.isfinite(x))


@dataclass
class FlopLedger:
    """Operation-by-operation count of one transform call."""

    additions: int = 0
    subtractions: int = 0
    multiplications: int = 0
    divisions: int = 0
    square_roots: int = 0

    @property
    def total(self) -> FlopCount:
        return FlopCount(
            self.additions
            + self.subtractions
            + self.multiplications
            + self.divisions
            + self.square_roots
        )


def load_raw_dataset(source: str | os.PathLike | TextIO) -> RawDataset:
    """Read a raw dataset from CSV text with one value per line.

    A literal ``NaN`` (any case) or an empty line marks an invalid sample.
    ``source`` may be a path or an open text stream.
    """
    if hasattr(source, "read"):
        lines: Iterable[str] = source
        return _parse_lines(lines)
    with open(source, "r", encoding="utf-8") as handle:
        return _parse_lines(handle)


def _parse_lines(lines: Iterable[str]) -> RawDataset:
    values: list[float] = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if text == "":
            values.append(math.nan)
            continue
        try:
            values.append(float(text))
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {text!r} as a sample value") from None
    return RawDataset(tuple(values))


def clean(data: RawDataset) -> tuple[list[float], FlopCount]:
    """Drop invalid samples, preserving order.

    Pure comparison and memory work, so the FLOP cost is zero.
    """
    valid = [x for x in data.samples if math.isfinite(x)]
    return valid, FlopCount(0)


def minmax_scale(valid: Sequence[float]) -> tuple[list[float], FlopLedger]:
    """Scale samples into [0, 1] by (x - min) / (max - min).

    Returns the scaled samples and the ledger of operations performed: one
    subtraction for the range, then one subtraction and one division per
    sample.  The min/max search itself is comparisons only.
    """
    if len(valid) == 0:
        raise ValueError("minmax_scale needs at least one sample")
    ledger = FlopLedger()
    low = valid[0]
    high = valid[0]
    for x in valid[1:]:
        if x < low:
            low = x
        if x > high:
            high = x
    value_range = high - low
    ledger.subtractions += 1
    if value_range == 0.0:
        raise DegenerateRangeError(
            f"all {len(valid)} samples equal {low!r}; min-max range is zero"
        )
    scaled = []
    for x in valid:
        shifted = x - low
        ledger.subtractions += 1
        scaled.append(shifted / value_range)
        ledger.divisions += 1
    return scaled, ledger


def normalize(valid: Sequence[float]) -> tuple[list[float], FlopLedger]:
    """Shift and scale samples to zero mean and unit population deviation.

    Three passes: sum for the mean, accumulate squared deviations, then
    normalize each sample.  Both divisors use the valid-sample count.
    """
    n = len(valid)
    if n < 2:
        raise ValueError(f"normalize needs at least two samples, got {n}")
    ledger = FlopLedger()
    total = 0.0
    for x in valid:
        total += x
        ledger.additions += 1
    mean = total / n
    ledger.divisions += 1
    squared_deviations = 0.0
    for x in valid:
        deviation = x - mean
        ledger.subtractions += 1
        squared = deviation * deviation
        ledger.multiplications += 1
        squared_deviations += squared
        ledger.additions += 1
    std_dev = math.sqrt(squared_deviations / n)
    ledger.divisions += 1
    ledger.square_roots += 1
    if std_dev == 0.0:
        raise DegenerateDeviationError(
            f"all {n} samples equal {valid[0]!r}; standard deviation is zero"
        )
    normalized = []
    for x in valid:
        shifted = x - mean
        ledger.subtractions += 1
        normalized.append(shifted / std_dev)
        ledger.divisions += 1
    return normalized, ledger


def preprocessing_flops(method: StandardizationMethod, n_s: int, n_nan: int) -> FlopCount:
    """Closed-form FLOP count of preprocessing n_s samples with n_nan invalid.

    With v = n_s - n_nan valid samples, min-max scaling costs 2v - 1 FLOPs
    and normalization costs 6v - 3.  This is the count all energy figures
    are priced on.
    """
    for label, value in (("n_s", n_s), ("n_nan", n_nan)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{label} must be an integer")
        if value < 0:
            raise ValueError(f"{label} must be >= 0, got {value}")
    valid = n_s - n_nan
    if valid < 1:
        raise ValueError(
            f"need at least one valid sample, got n_s={n_s} with n_nan={n_nan}"
        )
    if method is StandardizationMethod.MINMAX:
        return FlopCount(2 * valid - 1)
    if method is StandardizationMethod.NORMALIZATION:
        return FlopCount(6 * valid - 3)
    raise TypeError(f"unknown standardization method: {method!r}")


def preprocessing_energy(
    pu: ProcessingUnitProfile, m_pre: FlopCount
) -> tuple[float, Energy]:
    """Execution time in seconds and energy of ``m_pre`` preprocessing FLOPs."""
    t_pre = m_pre.flops / pu.preprocessing_flops_per_s
    return t_pre, Energy(pu.preprocessing_power.watts * t_pre)


def preprocessing_energy_per_bit(e_pre: Energy, spec: PayloadSpec) -> EnergyPerBit:
    """Preprocessing energy divided by the payload bits it applies to."""
    denominator = spec.bits_per_sample * spec.sample_count
    if denominator == 0:
        raise ValueError("per-bit preprocessing energy is undefined for an empty payload")
    return EnergyPerBit(e_pre.joules / denominator)
