"""Energy cost of writing a collected dataset to persistent media.

A dataset is charged once, at write time, against the medium's Wh-per-TB
density; later reads for preprocessing or training are free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .units import BitCount, Energy, EnergyPerBit, wh_per_tb_to_j_per_bit

__all__ = [
    "StorageProfile",
    "HDD",
    "SSD",
    "BUILTIN_STORAGE",
    "storage_profile",
    "storage_energy",
    "storage_energy_per_bit",
]


@dataclass(frozen=True)
class StorageProfile:
    """A storage medium described by its write energy density in Wh/TB."""

    name: str
    wh_per_terabyte: float

    def __post_init__(self) -> None:
        if not self.wh_per_terabyte >= 0:
            raise ValueError(
                f"wh_per_terabyte must be non-negative, got {self.wh_per_terabyte!r}"
            )


HDD = StorageProfile("hdd", 0.65)
SSD = StorageProfile("ssd", 1.2)

BUILTIN_STORAGE = {p.name: p for p in (HDD, SSD)}


def storage_profile(name: str) -> StorageProfile:
    """Look up a built-in storage profile by name."""
    try:
        return BUILTIN_STORAGE[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_STORAGE))
        raise KeyError(f"unknown storage medium {name!r}; built-ins: {known}") from None


def storage_energy_per_bit(profile: StorageProfile) -> EnergyPerBit:
    """Write energy per stored bit for the medium."""
    return wh_per_tb_to_j_per_bit(profile.wh_per_terabyte)


def storage_energy(profile: StorageProfile, payload: BitCount) -> Energy:
    """Energy to write ``payload`` bits once to the medium."""
    return Energy(storage_energy_per_bit(profile).joules_per_bit * payload.bits)
