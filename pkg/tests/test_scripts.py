import importlib.util
import sys
from fractions import Fraction
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


def test_region_scan_writes_outputs(tmp_path):
    mod = _load("region_scan")
    counts = mod.run(mod.ScanConfig(step=Fraction(1, 2), outdir=tmp_path))
    assert counts["V_zero"] > 0 and counts["V_plus"] > 0
    lines = (tmp_path / "scan.csv").read_text().splitlines()
    assert lines[0] == "x,y,in_VX,region,certificates" and len(lines) == 1 + sum(counts.values())
    assert (tmp_path / "scan.svg").read_text().startswith("<svg")


def test_oracle_sweep_finds_no_violation():
    mod = _load("oracle_sweep")
    tally = mod.run(mod.SweepConfig(trials=40, max_search_rank=6))
    assert tally["trials"] == 40 and tally["violations"] == 0
    assert tally["verified"] + tally["unconfirmed"] == tally["stable"] > 0
