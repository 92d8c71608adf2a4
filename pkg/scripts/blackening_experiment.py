#!/usr/bin/env python3
"""Coverage growth of superposed hatch sheets.

Draw `--runs` hatch sheets per seed from one continuing stream, rasterize
each onto an accumulating boolean grid (equivalent to rasterizing the
superposition, but linear instead of quadratic in the run count), and print
the covered fraction at checkpoints.  With the default configuration the
sheet tends toward full blackness: coverage is strictly increasing in the
run count and crosses 0.95 well before fifty sheets.

Usage:
    python3 scripts/blackening_experiment.py [--seeds 0-9] [--runs 50]
        [--resolution 1.0] [--checkpoints 1,5,20,50]
"""

import argparse

from houle.graphics import default_hatch_config, generate_hatchwork, rasterize
from houle.stochastics import rng_new


def parse_seeds(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(s) for s in spec.split(",")]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", default="0-9", help="range 'a-b' or comma list")
    ap.add_argument("--runs", type=int, default=50)
    ap.add_argument("--resolution", type=float, default=1.0, help="cells per mm")
    ap.add_argument("--checkpoints", default="1,5,20,50")
    args = ap.parse_args()

    seeds = parse_seeds(args.seeds)
    checkpoints = sorted({int(c) for c in args.checkpoints.split(",")})
    cfg = default_hatch_config()

    header = "seed " + " ".join(f"{f'k={c}':>9}" for c in checkpoints)
    print(header)
    for seed in seeds:
        stream = rng_new(seed)
        grid = None
        row = []
        for k in range(1, args.runs + 1):
            scene = generate_hatchwork(cfg, stream)
            g = rasterize(scene, resolution=args.resolution)
            grid = g if grid is None else (grid | g)
            if k in checkpoints:
                row.append(float(grid.mean()))
        print(f"{seed:>4} " + " ".join(f"{v:>9.4f}" for v in row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
