"""Golden-file regression tests for every reference dataset.

The files under tests/golden/ were produced by ``ecal reproduce --target all``
and spot-verified against the published tables; these tests pin them byte
for byte.
"""

from pathlib import Path

import pytest

from ecal.scenario_io import REPRODUCE_TARGETS, reproduce

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.mark.parametrize("target", REPRODUCE_TARGETS)
def test_target_matches_golden_file(target):
    golden = (GOLDEN_DIR / f"{target}.csv").read_text(encoding="utf-8")
    assert reproduce(target).to_csv() == golden


def test_golden_directory_has_no_stray_files():
    names = sorted(p.name for p in GOLDEN_DIR.iterdir())
    assert names == sorted(f"{t}.csv" for t in REPRODUCE_TARGETS)
