"""Command-line interface: scenarios in, CSV (or JSON) reports out.

Every number the CLI prints comes straight from a library call; the CLI
adds no arithmetic of its own.  Exit codes: 0 success, 1 validation or
usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from typing import Sequence

from .lifecycle import gamma_sweep, lifecycle_report
from .mlp_cost import (
    ProcessingUnitProfile,
    forward_flops,
    inference_energy,
    inference_flops,
    make_split,
    training_energy,
    training_forward_flops,
    training_total_flops,
    evaluation_energy,
)
from .preprocessing import (
    StandardizationMethod,
    preprocessing_energy,
    preprocessing_energy_per_bit,
    preprocessing_flops,
)
from .scenario_io import (
    ReportTable,
    ScenarioDocument,
    load_scenario,
    reproduce,
    write_report,
    REPRODUCE_TARGETS,
)
from .storage import storage_energy, storage_energy_per_bit, storage_profile
from .transmission import (
    PayloadSpec,
    payload_bits,
    packet_count,
    technology_profile,
    transmission_energy,
    transmission_energy_per_bit,
    transmitted_bits,
    without_packet_override,
)
from .units import Power

__all__ = ["run", "main"]

CI_FILE_ENV_VAR = "ECAL_CI_FILE"


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits with code 1 on usage errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_code_on_error(message))

    def exit_code_on_error(self, message: str) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="ecal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    output.add_argument("--out", metavar="PATH", help="write the report to PATH instead of stdout")

    transmit = sub.add_parser("transmit", parents=[output],
                              help="packet accounting and radio energy")
    transmit.add_argument("--tech", default="ble5", help="technology name (ble5, zigbee, lorawan)")
    transmit.add_argument("--samples", type=int, required=True)
    transmit.add_argument("--precision", type=int, default=64, help="bits per sample")
    transmit.add_argument("--strict-eq2", action="store_true",
                          help="ignore per-profile packet-count overrides")

    storage = sub.add_parser("storage", parents=[output],
                             help="write energy of storing a dataset")
    storage.add_argument("--storage", default="hdd", dest="medium",
                         help="storage medium name (hdd, ssd)")
    storage.add_argument("--samples", type=int, required=True)
    storage.add_argument("--precision", type=int, default=64)

    preprocess = sub.add_parser("preprocess", parents=[output],
                                help="FLOPs, time, and energy of preprocessing")
    preprocess.add_argument("--method", required=True,
                            choices=[m.value for m in StandardizationMethod])
    preprocess.add_argument("--samples", type=int, required=True)
    preprocess.add_argument("--invalid", type=int, default=0)
    preprocess.add_argument("--precision", type=int, default=64)
    preprocess.add_argument("--power-w", type=float, default=140.0,
                            help="preprocessing power draw")
    preprocess.add_argument("--flops-per-s", type=float, default=1e10,
                            help="preprocessing throughput")

    train = sub.add_parser("train-cost", parents=[output],
                           help="training, evaluation, and inference cost")
    train.add_argument("--scenario", required=True, metavar="FILE")

    lifecycle = sub.add_parser("lifecycle", parents=[output],
                               help="full lifecycle report for a scenario")
    lifecycle.add_argument("--scenario", required=True, metavar="FILE")
    lifecycle.add_argument("--gamma-sweep", metavar="A,B,C",
                           help="comma-separated request counts to sweep")
    lifecycle.add_argument("--strict-eq2", action="store_true",
                           help="ignore per-profile packet-count overrides")

    carbon = sub.add_parser("carbon", parents=[output],
                            help="carbon footprint per country")
    carbon.add_argument("--scenario", required=True, metavar="FILE")
    carbon.add_argument("--ci-file", metavar="FILE",
                        help=f"carbon-intensity CSV (default: bundled table, "
                             f"or ${CI_FILE_ENV_VAR})")

    repro = sub.add_parser("reproduce", help="emit the bundled reference datasets")
    repro.add_argument("--target", required=True,
                       help=f"one of: {', '.join(REPRODUCE_TARGETS)}, or 'all'")
    repro.add_argument("--out", dest="out_dir", metavar="DIR",
                       help="directory to write <target>.csv files into")

    return parser


def _key_value_table(pairs: Sequence[tuple[str, object]]) -> ReportTable:
    return ReportTable(("metric", "value"), tuple(pairs))


def _cmd_transmit(args: argparse.Namespace) -> ReportTable:
    profile = technology_profile(args.tech)
    if args.strict_eq2:
        profile = without_packet_override(profile)
    spec = PayloadSpec(args.precision, args.samples)
    b_t = transmitted_bits(profile, spec)
    return _key_value_table(
        [
            ("payload_bits", payload_bits(spec).bits),
            ("packets", packet_count(profile, spec)),
            ("B_T", b_t.bits),
            ("E_T_J", transmission_energy(profile, b_t).joules),
            ("E_T_b_J_per_b", transmission_energy_per_bit(profile).joules_per_bit),
        ]
    )


def _cmd_storage(args: argparse.Namespace) -> ReportTable:
    profile = storage_profile(args.medium)
    payload = payload_bits(PayloadSpec(args.precision, args.samples))
    return _key_value_table(
        [
            ("payload_bits", payload.bits),
            ("E_storage_J", storage_energy(profile, payload).joules),
            ("E_storage_b_J_per_b", storage_energy_per_bit(profile).joules_per_bit),
        ]
    )


def _cmd_preprocess(args: argparse.Namespace) -> ReportTable:
    method = StandardizationMethod(args.method)
    pu = ProcessingUnitProfile(Power(args.power_w), args.flops_per_s, 1.0)
    flops = preprocessing_flops(method, args.samples, args.invalid)
    t_pre, e_pre = preprocessing_energy(pu, flops)
    per_bit = preprocessing_energy_per_bit(e_pre, PayloadSpec(args.precision, args.samples))
    return _key_value_table(
        [
            ("flops", flops.flops),
            ("T_pre_s", t_pre),
            ("E_pre_J", e_pre.joules),
            ("E_pre_b_J_per_b", per_bit.joules_per_bit),
        ]
    )


def _cmd_train_cost(args: argparse.Namespace) -> ReportTable:
    doc = load_scenario(args.scenario)
    s = doc.scenario
    split = make_split(s.payload.sample_count, s.train_fraction)
    fwd = forward_flops(s.architecture)
    m_mlp_fp = training_forward_flops(s.architecture, s.epochs, split.train_count)
    e_train, e_train_b = training_energy(
        s.architecture, s.epochs, split.train_count, s.processing_unit,
        s.payload.bits_per_sample,
    )
    e_eval, e_eval_b = evaluation_energy(
        s.architecture, split.eval_count, s.processing_unit, s.payload.bits_per_sample
    )
    return _key_value_table(
        [
            ("M_FP", fwd.flops),
            ("M_MLP_FP", m_mlp_fp.flops),
            ("M_MLP", training_total_flops(m_mlp_fp).flops),
            ("N_inf_flops", inference_flops(s.architecture, s.inference_batch).flops),
            ("E_train_J", e_train.joules),
            ("E_train_b_J_per_b", e_train_b.joules_per_bit),
            ("E_eval_J", e_eval.joules),
            ("E_eval_b_J_per_b", e_eval_b.joules_per_bit),
            ("E_inf_J", inference_energy(s.architecture, s.inference_batch,
                                         s.processing_unit).joules),
        ]
    )


def _strict_scenario(doc: ScenarioDocument) -> ScenarioDocument:
    scenario = replace(doc.scenario, technology=without_packet_override(doc.scenario.technology))
    return replace(doc, scenario=scenario)


def _cmd_lifecycle(args: argparse.Namespace) -> ReportTable:
    doc = load_scenario(args.scenario)
    if args.strict_eq2:
        doc = _strict_scenario(doc)
    gammas: tuple[int, ...] = ()
    if args.gamma_sweep:
        try:
            gammas = tuple(int(part) for part in args.gamma_sweep.split(","))
        except ValueError:
            raise ValueError(f"--gamma-sweep expects comma-separated integers, "
                             f"got {args.gamma_sweep!r}") from None
    elif doc.sweeps.gamma:
        gammas = doc.sweeps.gamma
    if gammas:
        rows = [
            (row.gamma, row.ecal_abs.joules, row.ecal_abs_mean.joules, row.ecal.joules_per_bit)
            for row in gamma_sweep(doc.scenario, gammas)
        ]
        return ReportTable(("gamma", "ecal_abs_J", "ecal_abs_mean_J", "eCAL_J_per_b"), rows)
    report = lifecycle_report(doc.scenario)
    return _key_value_table(
        [
            ("gamma", report.gamma),
            ("B_T_dev_bits", report.transmitted_bits_development.bits),
            ("dev_denominator_bits", report.development_denominator_bits.bits),
            ("B_T_inf_bits", report.transmitted_bits_inference.bits),
            ("inf_denominator_bits", report.inference_denominator_bits.bits),
            ("E_T_J", report.transmission.joules),
            ("E_storage_J", report.storage.joules),
            ("E_pre_J", report.preprocessing.joules),
            ("E_train_J", report.training.joules),
            ("E_eval_J", report.evaluation.joules),
            ("E_inf_J", report.inference.joules),
            ("E_D_J", report.development.joules),
            ("E_D_b_J_per_b", report.development_per_bit.joules_per_bit),
            ("E_train_b_J_per_b", report.training_per_bit.joules_per_bit),
            ("E_train_per_trained_bit_J_per_b",
             report.training_per_trained_bit.joules_per_bit),
            ("E_inf_p_J", report.inference_phase.joules),
            ("E_inf_p_b_J_per_b", report.inference_phase_per_bit.joules_per_bit),
            ("eCAL_abs_J", report.ecal_abs.joules),
            ("eCAL_abs_mean_J", report.ecal_abs_mean.joules),
            ("eCAL_J_per_b", report.ecal.joules_per_bit),
        ]
    )


def _cmd_carbon(args: argparse.Namespace) -> ReportTable:
    from . import carbon as carbon_mod

    doc = load_scenario(args.scenario)
    ci_path = args.ci_file or os.environ.get(CI_FILE_ENV_VAR)
    records = (carbon_mod.load_ci_table(ci_path) if ci_path
               else carbon_mod.bundled_ci_table())
    report = carbon_mod.cf_vs_gamma(doc.scenario, records, [doc.scenario.gamma])
    rows = [
        (row.gamma, row.country_code, row.intensity.grams_co2e_per_kwh,
         row.cf_development_g, row.cf_inference_g, row.cf_total_g)
        for row in report.rows
    ]
    return ReportTable(
        ("gamma", "country_code", "ci_g_per_kwh", "cf_development_g",
         "cf_inference_g", "cf_total_g"),
        rows,
    )


def _emit(table: ReportTable, args: argparse.Namespace) -> None:
    if args.json:
        payload = {"columns": list(table.columns), "rows": [list(row) for row in table.rows]}
        text = json.dumps(payload, indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return
    if args.out:
        write_report(table, args.out)
    else:
        sys.stdout.write(table.to_csv())


def _cmd_reproduce(args: argparse.Namespace) -> int:
    targets = list(REPRODUCE_TARGETS) if args.target == "all" else [args.target]
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for target in targets:
            write_report(reproduce(target), os.path.join(args.out_dir, f"{target}.csv"))
        return 0
    if len(targets) > 1:
        raise ValueError("writing multiple targets requires --out DIR")
    sys.stdout.write(reproduce(targets[0]).to_csv())
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one CLI invocation and return its exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "reproduce":
            return _cmd_reproduce(args)
        handlers = {
            "transmit": _cmd_transmit,
            "storage": _cmd_storage,
            "preprocess": _cmd_preprocess,
            "train-cost": _cmd_train_cost,
            "lifecycle": _cmd_lifecycle,
            "carbon": _cmd_carbon,
        }
        table = handlers[args.command](args)
        _emit(table, args)
        return 0
    except (ValueError, LookupError) as exc:
        print(f"ecal: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ecal: i/o error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
