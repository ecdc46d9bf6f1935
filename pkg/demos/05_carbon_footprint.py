#!/usr/bin/env python3
"""Turn lifecycle energy into CO2-equivalent emissions per country.

Footprint is kWh times grid carbon intensity, so for a fixed deployment
the country ranking is exactly the intensity ranking; the 2023 snapshot
puts Germany at 4.6x Finland.
"""

from ecal import (
    bundled_ci_table,
    cf_vs_gamma,
    default_scenario,
    development_energy,
    inference_phase_energy,
)

scenario = default_scenario()
records = bundled_ci_table()

e_d, _ = development_energy(scenario)
e_p, _ = inference_phase_energy(scenario)
print(f"development energy: {e_d.joules:.4g} J, per request: {e_p.joules:.4g} J\n")

print(f"{'country':>10} {'gCO2eq/kWh':>11} {'CF dev [g]':>12} {'CF/request [g]':>15}")
report = cf_vs_gamma(scenario, records, [scenario.gamma])
for row in report.rows:
    print(f"{row.country_name:>10} {row.intensity.grams_co2e_per_kwh:>11.0f} "
          f"{row.cf_development_g:>12.4g} {row.cf_inference_g:>15.4g}")

germany = next(r for r in report.rows if r.country_code == "DE")
finland = next(r for r in report.rows if r.country_code == "FI")
print(f"\nsame deployment, Germany vs Finland: "
      f"{germany.cf_total_g / finland.cf_total_g:.2f}x the emissions")

print(f"\ntotal footprint growth with the request count (gamma):")
sweep = cf_vs_gamma(scenario, records, [1, 10, 100, 1000, 10000])
print(f"{'gamma':>7} " + " ".join(f"{code:>10}" for code in ("DE", "IE", "SI", "ES", "FI")))
for gamma in (1, 10, 100, 1000, 10000):
    cells = [row for row in sweep.rows if row.gamma == gamma]
    print(f"{gamma:>7} " + " ".join(f"{row.cf_total_g:>10.3g}" for row in cells))
print("\nlow-intensity grids (hydro, wind, nuclear) shrink the footprint of the")
print("entire lifecycle by the same factor they shrink a single kWh.")
