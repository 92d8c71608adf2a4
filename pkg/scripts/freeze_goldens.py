#!/usr/bin/env python3
"""Regenerate the byte-exact golden files under tests/golden/.

Run this only when an intentional change to generators or serialization
invalidates the frozen bytes; inspect the diff before committing.  The CLI
goldens are produced through subprocess calls so they cover argument
parsing and file writing exactly as a user would hit them.

Usage: python3 scripts/freeze_goldens.py
"""

import dataclasses
import subprocess
import sys
from pathlib import Path

from houle.catalog import emit_markdown, load_bundled_catalog
from houle.graphics import (
    default_hatch_config,
    generate_density_grid,
    generate_hatchwork,
    generate_polygon,
    Rect,
)
from houle.gridsim import GridConfig, default_components, grid_new, run_phase_cycle
from houle.render import (
    desync_log_csv,
    display_to_text,
    field_to_pgm,
    frame_stream,
    phase_log_csv,
    scene_to_svg,
    scene_to_text,
)
from houle.stochastics import rng_new, triangular_gray_distribution
from houle.waves import load_bundled_spectrum, synthesize_components
from houle.waves.field import evaluate_field, normalize_display

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def freeze_library() -> None:
    two_zones = dataclasses.replace(default_hatch_config(), zone_count=2)
    scene = generate_hatchwork(two_zones, rng_new(42))
    (GOLDEN / "hatch_two_zones_seed42.svg").write_bytes(scene_to_svg(scene))
    (GOLDEN / "hatch_two_zones_seed42.txt").write_text(
        scene_to_text(scene), encoding="utf-8", newline="\n"
    )

    poly = generate_polygon(8, Rect(20.0, 20.0, 120.0, 120.0), stream=rng_new(5))
    (GOLDEN / "polygon_8_seed5.svg").write_bytes(scene_to_svg(poly))

    dens = generate_density_grid(
        3, 4, triangular_gray_distribution(5), cell_mm=10.0, stream=rng_new(1)
    )
    (GOLDEN / "density_3x4_seed1.txt").write_text(
        scene_to_text(dens), encoding="utf-8", newline="\n"
    )

    sp = load_bundled_spectrum()
    cs = synthesize_components(sp, rng_new(0))
    hf = evaluate_field(cs, 6, 5, 5.0, t=0.0)
    (GOLDEN / "wavefield_6x5_seed0.pgm").write_bytes(field_to_pgm(hf, h_ref=20.0))
    dm = normalize_display(hf, h_ref=20.0)
    (GOLDEN / "wavefield_6x5_seed0.txt").write_text(
        display_to_text(dm), encoding="utf-8", newline="\n"
    )

    comps = default_components(0)
    st, res = run_phase_cycle(grid_new(GridConfig(), comps, seed=0), run_iterations=2)
    (GOLDEN / "gridsim_2iter_seed0_frames.txt").write_text(
        frame_stream(res.frames), encoding="utf-8", newline="\n"
    )
    (GOLDEN / "gridsim_2iter_seed0_phases.csv").write_text(
        phase_log_csv(res.phase_log), encoding="utf-8", newline="\n"
    )
    (GOLDEN / "gridsim_2iter_seed0_desync.csv").write_text(
        desync_log_csv(res.desync_log), encoding="utf-8", newline="\n"
    )

    (GOLDEN / "catalog_bundled.md").write_text(
        emit_markdown(load_bundled_catalog()), encoding="utf-8", newline="\n"
    )


def freeze_cli() -> None:
    out = GOLDEN / "cli"
    cfg = out / "hatch_two_zones.cfg"
    cfg.write_text("zones = 2\n", encoding="utf-8", newline="\n")

    def run(*args: str) -> None:
        subprocess.run(
            [sys.executable, "-m", "houle.cli", *args],
            check=True,
            cwd=ROOT,
            capture_output=True,
        )

    run("hatch", "--config", str(cfg), "--seed", "42",
        "-o", str(out / "hatch.svg"), "--dump", str(out / "hatch.txt"))
    run("polygon", "--vertices", "8", "--seed", "5", "-o", str(out / "polygon.svg"))
    run("kdv", "--n", "64", "--length", "20", "--t-end", "0.2", "--snapshots", "2",
        "-o", str(out / "kdv.csv"), "--invariants", str(out / "kdv_inv.csv"))
    run("wavefield", "--rows", "6", "--cols", "5", "--frames", "1", "--seed", "0",
        "--format", "pgm", "-o", str(out / "wavefield"))
    run("gridsim", "--run-iterations", "2", "--seed", "0", "-o", str(out / "gridsim"))
    run("catalog", "-o", str(out / "catalog.md"))


def main() -> int:
    (GOLDEN / "cli").mkdir(parents=True, exist_ok=True)
    freeze_library()
    freeze_cli()
    names = sorted(p.relative_to(GOLDEN).as_posix() for p in GOLDEN.rglob("*") if p.is_file())
    print("frozen:")
    for n in names:
        print(f"  {n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
