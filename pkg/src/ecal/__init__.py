"""Analytical energy and carbon cost model for AIoT data pipelines.

Models the full lifecycle of a sensor-fed MLP deployment — wireless data
collection, storage, preprocessing, training with evaluation, and repeated
inference — as deterministic closed-form energy accounting, and summarizes
it with eCAL, the lifecycle energy cost per manipulated application bit.
"""

from .units import (
    BitCount,
    BitRate,
    CarbonIntensity,
    Energy,
    EnergyPerBit,
    FlopCount,
    Power,
    joules_to_kwh,
    kwh_to_joules,
    wh_per_tb_to_j_per_bit,
)
from .transmission import (
    BLE5,
    BUILTIN_TECHNOLOGIES,
    LORAWAN,
    PayloadSpec,
    TechnologyProfile,
    ZIGBEE,
    cumulative_transmission_energy,
    fixed_overhead_profile,
    packet_count,
    payload_bits,
    technology_profile,
    transmission_energy,
    transmission_energy_per_bit,
    transmitted_bits,
    without_packet_override,
)
from .storage import (
    BUILTIN_STORAGE,
    HDD,
    SSD,
    StorageProfile,
    storage_energy,
    storage_energy_per_bit,
    storage_profile,
)
from .preprocessing import (
    DegenerateDeviationError,
    DegenerateRangeError,
    FlopLedger,
    RawDataset,
    StandardizationMethod,
    clean,
    load_raw_dataset,
    minmax_scale,
    normalize,
    preprocessing_energy,
    preprocessing_energy_per_bit,
    preprocessing_flops,
)
from .mlp_cost import (
    DEFAULT_FLOPS_PER_JOULE,
    DEFAULT_PROCESSING_UNIT,
    MlpArchitecture,
    ProcessingUnitProfile,
    TrainSplit,
    evaluation_energy,
    forward_flops,
    forward_pass_energy_per_bit,
    inference_energy,
    inference_flops,
    make_split,
    training_energy,
    training_forward_flops,
    training_total_flops,
    uniform_architecture,
)
from .lifecycle import (
    GammaRow,
    LifecycleReport,
    Scenario,
    default_scenario,
    development_energy,
    ecal,
    ecal_abs,
    ecal_abs_mean,
    gamma_sweep,
    inference_phase_energy,
    lifecycle_report,
)
from .carbon import (
    CarbonIntensityRecord,
    CarbonReport,
    CarbonReportRow,
    CiTableError,
    DuplicateCountryError,
    UnknownCountryError,
    bundled_ci_table,
    carbon_footprint,
    cf_vs_gamma,
    load_ci_table,
)
from .scenario_io import (
    REPRODUCE_TARGETS,
    ReportTable,
    ScenarioDocument,
    ScenarioError,
    Sweeps,
    UnknownTargetError,
    load_scenario,
    parse_scenario,
    reproduce,
    serialize_scenario,
    write_report,
)

__version__ = "0.1.0"
