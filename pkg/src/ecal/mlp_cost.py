"""FLOP complexity of a fully connected MLP and the energy it implies.

One forward pass of one sample costs, per layer transition, two FLOPs per
edge (weight multiply + accumulate) and two FLOPs per destination node
(bias add + activation).  A backward pass is budgeted at twice a forward
pass, so training costs three forward passes per sample per epoch.
Evaluation and inference are forward passes only, which is why their
per-bit energies coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import Energy, EnergyPerBit, FlopCount, Power

__all__ = [
    "MlpArchitecture",
    "ProcessingUnitProfile",
    "TrainSplit",
    "DEFAULT_PROCESSING_UNIT",
    "DEFAULT_FLOPS_PER_JOULE",
    "uniform_architecture",
    "forward_flops",
    "make_split",
    "training_forward_flops",
    "training_total_flops",
    "training_energy",
    "evaluation_energy",
    "forward_pass_energy_per_bit",
    "inference_flops",
    "inference_energy",
]

# Training efficiency used when a scenario does not set its own value,
# calibrated so that training the default configuration (10 epochs, 179
# training samples, 226-FLOP forward pass) costs 141 times one BLE transfer
# of 256 double-precision samples.
DEFAULT_FLOPS_PER_JOULE = 1.5351e8


@dataclass(frozen=True)
class MlpArchitecture:
    """Layer widths of a fully connected MLP, input layer first."""

    layer_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(self.layer_sizes)
        object.__setattr__(self, "layer_sizes", sizes)
        if len(sizes) < 2:
            raise ValueError("an MLP needs at least an input and an output layer")
        for width in sizes:
            if isinstance(width, bool) or not isinstance(width, int):
                raise TypeError("layer widths must be integers")
            if width < 1:
                raise ValueError(f"layer widths must be >= 1, got {width}")

    @property
    def hidden_layers(self) -> int:
        return len(self.layer_sizes) - 2


@dataclass(frozen=True)
class ProcessingUnitProfile:
    """Compute-side parameters of the machine running the pipeline.

    Args:
        preprocessing_power: power drawn while preprocessing runs.
        preprocessing_flops_per_s: sustained preprocessing throughput.
        flops_per_joule: efficiency applied to training, evaluation, and
            inference FLOPs.
    """

    preprocessing_power: Power
    preprocessing_flops_per_s: float
    flops_per_joule: float

    def __post_init__(self) -> None:
        if not self.preprocessing_power.watts > 0:
            raise ValueError("preprocessing_power must be positive")
        if not self.preprocessing_flops_per_s > 0:
            raise ValueError("preprocessing_flops_per_s must be positive")
        if not self.flops_per_joule > 0:
            raise ValueError("flops_per_joule must be positive")


DEFAULT_PROCESSING_UNIT = ProcessingUnitProfile(
    preprocessing_power=Power(140.0),
    preprocessing_flops_per_s=1e10,
    flops_per_joule=DEFAULT_FLOPS_PER_JOULE,
)


@dataclass(frozen=True)
class TrainSplit:
    """A dataset split into training and evaluation parts.

    The training side takes floor(train_fraction * sample_count) samples;
    the evaluation side takes the remainder.
    """

    sample_count: int
    train_fraction: float
    train_count: int
    eval_count: int

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction <= 1.0:
            raise ValueError(f"train_fraction must be in (0, 1], got {self.train_fraction!r}")
        if self.train_count != math.floor(self.train_fraction * self.sample_count):
            raise ValueError("train_count must equal floor(train_fraction * sample_count)")
        if self.train_count + self.eval_count != self.sample_count:
            raise ValueError("train_count + eval_count must equal sample_count")


def make_split(sample_count: int, train_fraction: float) -> TrainSplit:
    """Split ``sample_count`` samples by ``train_fraction``, flooring the training side."""
    if isinstance(sample_count, bool) or not isinstance(sample_count, int):
        raise TypeError("sample_count must be an integer")
    if sample_count < 0:
        raise ValueError(f"sample_count must be >= 0, got {sample_count}")
    if not 0.0 < train_fraction <= 1.0:
        raise ValueError(f"train_fraction must be in (0, 1], got {train_fraction!r}")
    train_count = math.floor(train_fraction * sample_count)
    return TrainSplit(sample_count, train_fraction, train_count, sample_count - train_count)


def uniform_architecture(
    inputs: int, hidden_width: int, hidden_layers: int, outputs: int
) -> MlpArchitecture:
    """Architecture with ``hidden_layers`` hidden layers of equal width."""
    return MlpArchitecture((inputs, *([hidden_width] * hidden_layers), outputs))


def forward_flops(arch: MlpArchitecture) -> FlopCount:
    """FLOPs of one forward pass of a single sample.

    Sums 2 * (fan_in * width) + 2 * width over every non-input layer.
    """
    total = 0
    sizes = arch.layer_sizes
    for fan_in, width in zip(sizes, sizes[1:]):
        total += 2 * (fan_in * width) + 2 * width
    return FlopCount(total)


def training_forward_flops(arch: MlpArchitecture, n_epochs: int, n_train: int) -> FlopCount:
    """Forward-pass FLOPs over a whole training run: epochs * samples * per-pass cost."""
    if isinstance(n_epochs, bool) or not isinstance(n_epochs, int):
        raise TypeError("n_epochs must be an integer")
    if n_epochs < 1:
        raise ValueError(f"n_epochs must be >= 1, got {n_epochs}")
    if isinstance(n_train, bool) or not isinstance(n_train, int):
        raise TypeError("n_train must be an integer")
    if n_train < 0:
        raise ValueError(f"n_train must be >= 0, got {n_train}")
    return FlopCount(n_epochs * n_train * forward_flops(arch).flops)


def training_total_flops(m_forward: FlopCount) -> FlopCount:
    """Total training FLOPs: forward plus a backward pass costed at twice forward."""
    return FlopCount(3 * m_forward.flops)


def training_energy(
    arch: MlpArchitecture,
    n_epochs: int,
    n_train: int,
    pu: ProcessingUnitProfile,
    bits_per_sample: int,
) -> tuple[Energy, EnergyPerBit]:
    """Energy of a whole training run and the per-bit training figure.

    The per-bit figure is the single-sample quantity 3 * forward FLOPs /
    (bits_per_sample * flops_per_joule); it deliberately carries no epoch
    factor.  Reports that want training energy amortized over the trained
    bits divide the absolute energy instead.
    """
    total = training_total_flops(training_forward_flops(arch, n_epochs, n_train))
    energy = Energy(total.flops / pu.flops_per_joule)
    per_bit = EnergyPerBit(
        3 * forward_flops(arch).flops / (bits_per_sample * pu.flops_per_joule)
    )
    return energy, per_bit


def evaluation_energy(
    arch: MlpArchitecture,
    n_eval: int,
    pu: ProcessingUnitProfile,
    bits_per_sample: int,
) -> tuple[Energy, EnergyPerBit]:
    """Energy of evaluating ``n_eval`` samples (forward passes only) and its per-bit cost."""
    if isinstance(n_eval, bool) or not isinstance(n_eval, int):
        raise TypeError("n_eval must be an integer")
    if n_eval < 0:
        raise ValueError(f"n_eval must be >= 0, got {n_eval}")
    energy = Energy(forward_flops(arch).flops * n_eval / pu.flops_per_joule)
    return energy, forward_pass_energy_per_bit(arch, pu, bits_per_sample)


def forward_pass_energy_per_bit(
    arch: MlpArchitecture, pu: ProcessingUnitProfile, bits_per_sample: int
) -> EnergyPerBit:
    """Per-bit energy of pushing one sample through the network.

    Shared by evaluation and inference, which differ only in how many
    samples they process.
    """
    return EnergyPerBit(forward_flops(arch).flops / (bits_per_sample * pu.flops_per_joule))


def inference_flops(arch: MlpArchitecture, n_infer: int) -> FlopCount:
    """FLOPs of one inference request carrying ``n_infer`` input samples."""
    if isinstance(n_infer, bool) or not isinstance(n_infer, int):
        raise TypeError("n_infer must be an integer")
    if n_infer < 0:
        raise ValueError(f"n_infer must be >= 0, got {n_infer}")
    return FlopCount(forward_flops(arch).flops * n_infer)


def inference_energy(arch: MlpArchitecture, n_infer: int, pu: ProcessingUnitProfile) -> Energy:
    """Energy of one inference request carrying ``n_infer`` input samples."""
    return Energy(inference_flops(arch, n_infer).flops / pu.flops_per_joule)
