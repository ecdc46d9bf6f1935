#!/usr/bin/env python3
"""The whole lifecycle in one place: development cost, request cost, eCAL.

Development (collect, store, preprocess, train, evaluate) is paid once;
every inference request then pays its own collection plus a forward pass.
eCAL divides all of that energy by all the bits it touched, so it falls as
the model answers more requests.
"""

from dataclasses import replace

from ecal import default_scenario, gamma_sweep, lifecycle_report

scenario = default_scenario(gamma=1000)
report = lifecycle_report(scenario)

print("development phase (256 BLE samples, HDD, normalization, 10 epochs):")
for label, energy in (
    ("transmission", report.transmission),
    ("storage", report.storage),
    ("preprocessing", report.preprocessing),
    ("training", report.training),
    ("evaluation", report.evaluation),
):
    share = 100 * energy.joules / report.development.joules
    print(f"  {label:>13}: {energy.joules:>10.4g} J  ({share:5.2f}%)")
print(f"  {'total':>13}: {report.development.joules:>10.4g} J over "
      f"{report.development_denominator_bits.bits} bits "
      f"-> {report.development_per_bit.joules_per_bit:.4g} J/b")

print(f"\none inference request ({scenario.inference_batch} samples):")
print(f"  {report.inference_phase.joules:.4g} J over "
      f"{report.inference_denominator_bits.bits} bits "
      f"-> {report.inference_phase_per_bit.joules_per_bit:.4g} J/b "
      f"(forward pass alone: {report.inference.joules:.4g} J)")

print(f"\nlifecycle at gamma={scenario.gamma} requests:")
print(f"  eCAL_abs  = {report.ecal_abs.joules:.4g} J")
print(f"  mean/req  = {report.ecal_abs_mean.joules:.4g} J")
print(f"  eCAL      = {report.ecal.joules_per_bit:.4g} J/b")

print("\namortization over the request count:")
print(f"{'gamma':>8} {'mean J/request':>15} {'eCAL J/b':>12}")
for row in gamma_sweep(scenario, [1, 10, 100, 1000, 10000, 100000]):
    print(f"{row.gamma:>8} {row.ecal_abs_mean.joules:>15.4g} "
          f"{row.ecal.joules_per_bit:>12.4g}")

low = replace(scenario, gamma=100)
high = replace(scenario, gamma=1000)
ratio = (lifecycle_report(low).ecal.joules_per_bit
         / lifecycle_report(high).ecal.joules_per_bit)
print(f"\nserving 1000 requests instead of 100 improves eCAL by {ratio:.2f}x:")
print("the better a model is and the more it is used, the cheaper each answer gets.")
