"""Scan the worked rank-12 example over a rational grid and write CSV and SVG.

    python scripts/region_scan.py --outdir results/
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from k3stab import Assumption, Grid, MukaiVector, SurfaceContext, parse_vector, scan_region, wall_locus
from k3stab.svg import render_scan


@dataclass(frozen=True)
class ScanConfig:
    d: int = 3
    v: MukaiVector = MukaiVector(12, 10, 25)
    x_range: tuple[Fraction, Fraction] = (Fraction(-1), Fraction(2))
    y_range: tuple[Fraction, Fraction] = (Fraction(1, 4), Fraction(4))
    step: Fraction = Fraction(1, 8)
    assumptions: tuple[Assumption, ...] = (Assumption.GIESEKER_STABLE,)
    walls: tuple[tuple[MukaiVector, MukaiVector], ...] = field(
        default=((MukaiVector(1, 1, 4), MukaiVector(1, 0, 1)),))
    outdir: Path = Path("results")

    @property
    def grid(self) -> Grid:
        return Grid(*self.x_range, *self.y_range, self.step)


def run(cfg: ScanConfig) -> dict[str, int]:
    ctx = SurfaceContext(cfg.d)
    rows = scan_region(cfg.v, cfg.grid, ctx, cfg.assumptions)
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    with open(cfg.outdir / "scan.csv", "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(["x", "y", "in_VX", "region", "certificates"])
        out.writerows(r.csv_fields() for r in rows)
    walls = [wall_locus(a, e, ctx) for a, e in cfg.walls]
    (cfg.outdir / "scan.svg").write_text(render_scan(rows, cfg.grid, cfg.v, walls))
    counts: dict[str, int] = {}
    for r in rows:
        counts[r.region.value] = counts.get(r.region.value, 0) + 1
    return counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=ScanConfig.d)
    ap.add_argument("--v", type=parse_vector, default=ScanConfig.v)
    ap.add_argument("--step", type=Fraction, default=ScanConfig.step)
    ap.add_argument("--outdir", type=Path, default=ScanConfig.outdir)
    args = ap.parse_args()
    cfg = ScanConfig(d=args.d, v=args.v, step=args.step, outdir=args.outdir)
    for region, n in sorted(run(cfg).items()):
        print(f"{region:8s} {n}")
    print(f"wrote {cfg.outdir / 'scan.csv'} and {cfg.outdir / 'scan.svg'}")


if __name__ == "__main__":
    main()
