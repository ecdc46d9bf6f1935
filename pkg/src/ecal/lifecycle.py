"""Lifecycle aggregation: development cost, operational cost, and eCAL.

A scenario's lifecycle has two phases.  Development collects, stores, and
preprocesses the full training dataset, then trains and evaluates the
model; its energy is amortized over the transmitted bits plus the bits
touched by storage, preprocessing, training, and evaluation.  Operation
serves ``gamma`` inference requests, each of which collects, stores, and
preprocesses its own ``inference_batch`` samples before the forward pass;
each request's bits are the transmitted bits plus three passes over the
request payload (storage, preprocessing, inference).

eCAL is lifecycle energy over lifecycle bits:
``(E_dev + gamma * E_request) / (dev_bits + gamma * request_bits)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .mlp_cost import (
    DEFAULT_PROCESSING_UNIT,
    MlpArchitecture,
    ProcessingUnitProfile,
    inference_energy,
    make_split,
    training_energy,
    evaluation_energy,
)
from .preprocessing import (
    StandardizationMethod,
    preprocessing_energy,
    preprocessing_flops,
)
from .storage import HDD, StorageProfile, storage_energy
from .transmission import (
    BLE5,
    PayloadSpec,
    TechnologyProfile,
    payload_bits,
    transmission_energy,
    transmitted_bits,
)
from .units import BitCount, Energy, EnergyPerBit

__all__ = [
    "Scenario",
    "LifecycleReport",
    "GammaRow",
    "default_scenario",
    "development_energy",
    "inference_phase_energy",
    "ecal_abs",
    "ecal_abs_mean",
    "ecal",
    "gamma_sweep",
    "lifecycle_report",
]


@dataclass(frozen=True)
class Scenario:
    """A complete, self-contained lifecycle configuration."""

    payload: PayloadSpec
    technology: TechnologyProfile
    storage: StorageProfile
    standardization: StandardizationMethod
    train_fraction: float
    epochs: int
    architecture: MlpArchitecture
    inference_batch: int
    gamma: int
    processing_unit: ProcessingUnitProfile
    invalid_samples: int = 0
    inference_invalid_samples: int = 0
    countries: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction <= 1.0:
            raise ValueError(f"train_fraction must be in (0, 1], got {self.train_fraction!r}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.inference_batch < 1:
            raise ValueError(f"inference_batch must be >= 1, got {self.inference_batch}")
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if not 0 <= self.invalid_samples <= self.payload.sample_count:
            raise ValueError(
                f"invalid_samples must be in [0, {self.payload.sample_count}], "
                f"got {self.invalid_samples}"
            )
        if not 0 <= self.inference_invalid_samples <= self.inference_batch:
            raise ValueError(
                f"inference_invalid_samples must be in [0, {self.inference_batch}], "
                f"got {self.inference_invalid_samples}"
            )
        object.__setattr__(self, "countries", tuple(self.countries))


def default_scenario(gamma: int = 1000) -> Scenario:
    """The bundled reference configuration: 256 double-precision samples over
    BLE onto HDD, normalization, a 70/30 split, 10 epochs of a [6,5,5,5,3]
    MLP, and 77-sample inference requests."""
    return Scenario(
        payload=PayloadSpec(bits_per_sample=64, sample_count=256),
        technology=BLE5,
        storage=HDD,
        standardization=StandardizationMethod.NORMALIZATION,
        train_fraction=0.7,
        epochs=10,
        architecture=MlpArchitecture((6, 5, 5, 5, 3)),
        inference_batch=77,
        gamma=gamma,
        processing_unit=DEFAULT_PROCESSING_UNIT,
    )


class _CollectionCosts(NamedTuple):
    b_t: BitCount
    transmission: Energy
    storage: Energy
    preprocessing: Energy


def _collection_costs(s: Scenario, sample_count: int, invalid: int) -> _CollectionCosts:
    """Transmission, storage, and preprocessing cost of one dataset collection."""
    spec = PayloadSpec(s.payload.bits_per_sample, sample_count)
    b_t = transmitted_bits(s.technology, spec)
    e_transmission = transmission_energy(s.technology, b_t)
    e_storage = storage_energy(s.storage, payload_bits(spec))
    flops = preprocessing_flops(s.standardization, sample_count, invalid)
    _, e_preprocessing = preprocessing_energy(s.processing_unit, flops)
    return _CollectionCosts(b_t, e_transmission, e_storage, e_preprocessing)


class _DevelopmentBreakdown(NamedTuple):
    b_t: BitCount
    transmission: Energy
    storage: Energy
    preprocessing: Energy
    training: Energy
    training_per_bit: EnergyPerBit
    evaluation: Energy
    total: Energy
    denominator_bits: BitCount
    train_count: int
    eval_count: int


def _development(s: Scenario) -> _DevelopmentBreakdown:
    collection = _collection_costs(s, s.payload.sample_count, s.invalid_samples)
    split = make_split(s.payload.sample_count, s.train_fraction)
    e_train, e_train_b = training_energy(
        s.architecture, s.epochs, split.train_count, s.processing_unit, s.payload.bits_per_sample
    )
    e_eval, _ = evaluation_energy(
        s.architecture, split.eval_count, s.processing_unit, s.payload.bits_per_sample
    )
    total = (
        collection.transmission
        + collection.storage
        + collection.preprocessing
        + e_train
        + e_eval
    )
    denominator = BitCount(
        collection.b_t.bits
        + s.payload.bits_per_sample
        * (2 * s.payload.sample_count + split.train_count + split.eval_count)
    )
    return _DevelopmentBreakdown(
        collection.b_t,
        collection.transmission,
        collection.storage,
        collection.preprocessing,
        e_train,
        e_train_b,
        e_eval,
        total,
        denominator,
        split.train_count,
        split.eval_count,
    )


class _InferencePhaseBreakdown(NamedTuple):
    b_t: BitCount
    transmission: Energy
    storage: Energy
    preprocessing: Energy
    inference: Energy
    total: Energy
    denominator_bits: BitCount


def _inference_phase(s: Scenario) -> _InferencePhaseBreakdown:
    collection = _collection_costs(s, s.inference_batch, s.inference_invalid_samples)
    e_inf = inference_energy(s.architecture, s.inference_batch, s.processing_unit)
    total = collection.transmission + collection.storage + collection.preprocessing + e_inf
    denominator = BitCount(
        collection.b_t.bits + 3 * s.payload.bits_per_sample * s.inference_batch
    )
    return _InferencePhaseBreakdown(
        collection.b_t,
        collection.transmission,
        collection.storage,
        collection.preprocessing,
        e_inf,
        total,
        denominator,
    )


def development_energy(s: Scenario) -> tuple[Energy, EnergyPerBit]:
    """Total energy of developing the model and its per-bit figure.

    The per-bit denominator counts the transmitted bits once plus the
    payload bits handled by storage and preprocessing (twice the dataset)
    plus the training and evaluation samples.
    """
    dev = _development(s)
    if dev.denominator_bits.bits == 0:
        raise ValueError("per-bit development energy is undefined for an empty scenario")
    return dev.total, EnergyPerBit(dev.total.joules / dev.denominator_bits.bits)


def inference_phase_energy(s: Scenario) -> tuple[Energy, EnergyPerBit]:
    """Energy of one inference request and its per-bit figure.

    A request re-prices transmission, storage, and preprocessing for its
    own ``inference_batch`` samples, then adds the forward-pass energy.
    """
    phase = _inference_phase(s)
    return phase.total, EnergyPerBit(phase.total.joules / phase.denominator_bits.bits)


def ecal_abs(s: Scenario) -> Energy:
    """Absolute lifecycle energy: development plus gamma inference requests."""
    e_d, _ = development_energy(s)
    e_inf_p, _ = inference_phase_energy(s)
    return Energy(e_d.joules + s.gamma * e_inf_p.joules)


def ecal_abs_mean(s: Scenario) -> Energy:
    """Average lifecycle energy per inference request.

    Strictly decreasing in gamma, approaching the per-request energy as the
    development cost is spread over more requests.
    """
    return Energy(ecal_abs(s).joules / s.gamma)


def ecal(s: Scenario) -> EnergyPerBit:
    """Lifecycle energy per manipulated application-level bit."""
    dev = _development(s)
    phase = _inference_phase(s)
    total_j = dev.total.joules + s.gamma * phase.total.joules
    total_bits = dev.denominator_bits.bits + s.gamma * phase.denominator_bits.bits
    return EnergyPerBit(total_j / total_bits)


class GammaRow(NamedTuple):
    """One point of a gamma sweep."""

    gamma: int
    ecal_abs: Energy
    ecal_abs_mean: Energy
    ecal: EnergyPerBit


def gamma_sweep(s: Scenario, gammas: Sequence[int]) -> list[GammaRow]:
    """Evaluate the lifecycle metrics at each request count in ``gammas``.

    Rows are independent and returned in input order.
    """
    dev = _development(s)
    phase = _inference_phase(s)
    rows = []
    for gamma in gammas:
        if isinstance(gamma, bool) or not isinstance(gamma, int):
            raise TypeError(f"gamma values must be integers, got {gamma!r}")
        if gamma < 1:
            raise ValueError(f"gamma values must be >= 1, got {gamma}")
        abs_j = dev.total.joules + gamma * phase.total.joules
        bits = dev.denominator_bits.bits + gamma * phase.denominator_bits.bits
        rows.append(
            GammaRow(gamma, Energy(abs_j), Energy(abs_j / gamma), EnergyPerBit(abs_j / bits))
        )
    return rows


@dataclass(frozen=True)
class LifecycleReport:
    """Itemized energies, per-bit figures, and lifecycle metrics of a scenario."""

    gamma: int
    transmission: Energy
    storage: Energy
    preprocessing: Energy
    training: Energy
    evaluation: Energy
    inference: Energy
    development: Energy
    development_per_bit: EnergyPerBit
    training_per_bit: EnergyPerBit
    training_per_trained_bit: EnergyPerBit
    inference_phase: Energy
    inference_phase_per_bit: EnergyPerBit
    ecal_abs: Energy
    ecal_abs_mean: Energy
    ecal: EnergyPerBit
    transmitted_bits_development: BitCount
    development_denominator_bits: BitCount
    transmitted_bits_inference: BitCount
    inference_denominator_bits: BitCount


def lifecycle_report(s: Scenario) -> LifecycleReport:
    """Evaluate every lifecycle quantity of a scenario in one pass.

    ``training_per_bit`` is the single-sample closed-form figure;
    ``training_per_trained_bit`` divides the absolute training energy by the
    bits actually pushed through training, so it carries the epoch factor.
    """
    dev = _development(s)
    phase = _inference_phase(s)
    gamma = s.gamma
    abs_j = dev.total.joules + gamma * phase.total.joules
    lifecycle_bits = dev.denominator_bits.bits + gamma * phase.denominator_bits.bits
    trained_bits = s.payload.bits_per_sample * dev.train_count
    per_trained_bit = (
        EnergyPerBit(dev.training.joules / trained_bits) if trained_bits else EnergyPerBit(0.0)
    )
    return LifecycleReport(
        gamma=gamma,
        transmission=dev.transmission,
        storage=dev.storage,
        preprocessing=dev.preprocessing,
        training=dev.training,
        evaluation=dev.evaluation,
        inference=phase.inference,
        development=dev.total,
        development_per_bit=EnergyPerBit(dev.total.joules / dev.denominator_bits.bits),
        training_per_bit=dev.training_per_bit,
        training_per_trained_bit=per_trained_bit,
        inference_phase=phase.total,
        inference_phase_per_bit=EnergyPerBit(phase.total.joules / phase.denominator_bits.bits),
        ecal_abs=Energy(abs_j),
        ecal_abs_mean=Energy(abs_j / gamma),
        ecal=EnergyPerBit(abs_j / lifecycle_bits),
        transmitted_bits_development=dev.b_t,
        development_denominator_bits=dev.denominator_bits,
        transmitted_bits_inference=phase.b_t,
        inference_denominator_bits=phase.denominator_bits,
    )
