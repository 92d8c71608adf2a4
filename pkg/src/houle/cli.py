"""Command line front end.

Subcommands: hatch, polygon, kdv, wavefield, gridsim, catalog.  Every run is
deterministic in its flags and seed; rerunning a command reproduces its
output files byte for byte.

Settings resolve as flags > config file > built-in defaults.  A config file
is flat `key = value` text (comments with #); keys mirror the long flag
names with underscores, and unknown keys are rejected.  Distributions are
written as `weights = [w0, w1, ...]` with an optional `labels = [...]`.

When -o/--out is omitted, outputs land in $HOULE_OUT_DIR (default: the
working directory) under a default name.

Exit codes: 0 success, 1 I/O failure, 2 configuration or parse error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys
from pathlib import Path

import numpy as np

from houle import graphics, render
from houle.catalog import (
    Attribute,
    CatalogFormatError,
    CHAPTERS,
    emit_markdown,
    filter_catalog,
    load_bundled_catalog,
    parse_catalog,
)
from houle.graphics import HatchConfigError, Rect
from houle.gridsim import GridConfig, grid_new, run_phase_cycle
from houle.stochastics import DiscreteDistribution, rng_new, triangular_gray_distribution
from houle.waves import (
    BlowUpError,
    Grid1D,
    KdvState,
    StabilityError,
    evaluate_field,
    integrate_to,
    kdv_invariants,
    load_bundled_spectrum,
    normalize_display,
    parse_spectrum,
    significant_height,
    soliton_profile,
    spectral_moment_m0,
    SpectrumFormatError,
    synthesize_components,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

OUT_DIR_ENV = "HOULE_OUT_DIR"


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------- settings

DEFAULTS: dict[str, dict] = {
    "hatch": {
        "mode": "uniform",
        "zones": 20,
        "seed": 0,
        "rows": 24,
        "cols": 16,
        "cell_mm": 6.0,
        "levels": 5,
        "lines_per_level": 2,
        "weights": None,
        "labels": None,
        "out": None,
        "dump": None,
    },
    "polygon": {
        "vertices": 8,
        "open": False,
        "seed": 0,
        "frame": "20,20,120,120",
        "out": None,
        "dump": None,
    },
    "kdv": {
        "n": 512,
        "length": 40.0,
        "c": 1.0,
        "x0": 10.0,
        "t_end": 1.0,
        "dt": None,
        "snapshots": 5,
        "profile": None,
        "seed": 0,
        "out": None,
        "invariants": None,
    },
    "wavefield": {
        "spectrum": None,
        "seed": 0,
        "rows": 64,
        "cols": 64,
        "spacing": 5.0,
        "frames": 1,
        "dt": 0.5,
        "h_ref": 20.0,
        "format": "pgm",
        "out": None,
    },
    "gridsim": {
        "seed": 0,
        "units": GridConfig.units,
        "modules": GridConfig.modules,
        "rows": GridConfig.rows,
        "cols": GridConfig.cols,
        "alpha": GridConfig.alpha,
        "beta": GridConfig.beta,
        "gamma": GridConfig.gamma,
        "run_iterations": GridConfig.run_iterations,
        "loop_target": 1200.0,
        "out": None,
    },
    "catalog": {
        "input": None,
        "attr": None,
        "chapter": None,
        "year_min": None,
        "year_max": None,
        "title": "Inventaire d'œuvres algorithmiques",
        "out": None,
    },
}


def _parse_list(raw: str) -> list[str]:
    raw = raw.strip()
    if not (raw.startswith("[") and raw.endswith("]")):
        raise ConfigError(f"expected a [..] list, got {raw!r}")
    inner = raw[1:-1].strip()
    if not inner:
        return []
    return [p.strip() for p in inner.split(",")]


def _coerce(command: str, key: str, raw: str):
    if key == "weights":
        try:
            return [float(p) for p in _parse_list(raw)]
        except ValueError:
            raise ConfigError(f"weights must be numbers: {raw!r}")
    if key == "labels":
        return _parse_list(raw)
    ref = DEFAULTS[command][key]
    if isinstance(ref, bool):
        low = raw.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key} expects a boolean, got {raw!r}")
    if isinstance(ref, int):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{key} expects an integer, got {raw!r}")
    if isinstance(ref, float):
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"{key} expects a number, got {raw!r}")
    return raw


def _load_config(command: str, path: str) -> dict:
    values = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}")
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"config line {line_no}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in DEFAULTS[command]:
            raise ConfigError(f"config line {line_no}: unknown key {key!r}")
        values[key] = _coerce(command, key, value)
    return values


def _settings(command: str, args: argparse.Namespace) -> dict:
    """flags > config file > defaults; flags left at None do not override."""
    merged = dict(DEFAULTS[command])
    if getattr(args, "config", None):
        merged.update(_load_config(command, args.config))
    for key in DEFAULTS[command]:
        attr = getattr(args, key, None)
        if attr is not None and attr is not False:
            merged[key] = attr
        if attr is True:  # store_true flags always count as given when set
            merged[key] = True
    return merged


def _resolve_out(setting: str | None, default_name: str) -> Path:
    if setting:
        return Path(setting)
    return Path(os.environ.get(OUT_DIR_ENV, ".")) / default_name


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _write_bytes(path: Path, data: bytes) -> None:
    with open(path, "wb") as fh:
        fh.write(data)


# ---------------------------------------------------------------- commands


def cmd_hatch(args: argparse.Namespace) -> int:
    s = _settings("hatch", args)
    stream = rng_new(s["seed"])
    if s["mode"] == "uniform":
        cfg = dataclasses.replace(graphics.default_hatch_config(), zone_count=s["zones"])
        scene = graphics.generate_hatchwork(cfg, stream)
    elif s["mode"] == "density":
        if s["weights"] is not None:
            f = DiscreteDistribution(s["weights"], outcomes=s["labels"])
        else:
            f = triangular_gray_distribution(s["levels"])
        scene = graphics.generate_density_grid(
            s["rows"], s["cols"], f, s["cell_mm"], stream,
            lines_per_level=s["lines_per_level"],
        )
    else:
        raise ConfigError(f"unknown hatch mode {s['mode']!r}")
    out = _resolve_out(s["out"], "hatch.svg")
    _write_bytes(out, render.scene_to_svg(scene))
    if s["dump"]:
        _write_text(Path(s["dump"]), render.scene_to_text(scene))
    print(f"wrote {out} ({len(scene.strokes)} strokes)")
    return EXIT_OK


def cmd_polygon(args: argparse.Namespace) -> int:
    s = _settings("polygon", args)
    try:
        fx, fy, fw, fh = (float(p) for p in s["frame"].split(","))
    except ValueError:
        raise ConfigError(f"frame expects 'x,y,w,h', got {s['frame']!r}")
    stream = rng_new(s["seed"])
    scene = graphics.generate_polygon(
        s["vertices"], Rect(fx, fy, fw, fh), closed=not s["open"], stream=stream
    )
    out = _resolve_out(s["out"], "polygon.svg")
    _write_bytes(out, render.scene_to_svg(scene))
    if s["dump"]:
        _write_text(Path(s["dump"]), render.scene_to_text(scene))
    print(f"wrote {out} ({s['vertices']} vertices)")
    return EXIT_OK


def _load_profile(path: str, length: float) -> KdvState:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read profile: {exc}")
    values = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ConfigError(f"profile line {line_no}: not a number: {line!r}")
    if len(values) < 8:
        raise ConfigError("profile needs at least 8 samples")
    grid = Grid1D(len(values), length / len(values))
    return KdvState(grid, np.array(values))


def cmd_kdv(args: argparse.Namespace) -> int:
    s = _settings("kdv", args)
    if s["profile"]:
        state = _load_profile(s["profile"], s["length"])
    else:
        n = s["n"]
        grid = Grid1D(n, s["length"] / n)
        state = KdvState(grid, soliton_profile(grid, t=0.0, c=s["c"], x0=s["x0"]))
    snaps = max(1, s["snapshots"])
    times = [s["t_end"] * k / snaps for k in range(snaps + 1)]
    rows = [state]
    for t_next in times[1:]:
        state = integrate_to(state, t_next, dt=s["dt"])
        rows.append(state)
    header = "t," + ",".join(f"u{j}" for j in range(state.grid.n))
    lines = [header]
    for st in rows:
        lines.append(f"{st.t:.6f}," + ",".join(f"{v:.6f}" for v in st.u))
    out = _resolve_out(s["out"], "kdv_series.csv")
    _write_text(out, "\n".join(lines) + "\n")
    if s["invariants"]:
        inv_lines = ["t,mass,momentum"]
        for st in rows:
            mass, mom = kdv_invariants(st)
            inv_lines.append(f"{st.t:.6f},{mass:.9f},{mom:.9f}")
        _write_text(Path(s["invariants"]), "\n".join(inv_lines) + "\n")
    print(f"wrote {out} ({len(rows)} snapshots, n={state.grid.n})")
    return EXIT_OK


def cmd_wavefield(args: argparse.Namespace) -> int:
    s = _settings("wavefield", args)
    if s["spectrum"]:
        try:
            text = Path(s["spectrum"]).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot read spectrum: {exc}", file=sys.stderr)
            return EXIT_IO
        sp = parse_spectrum(text)
    else:
        sp = load_bundled_spectrum()
    m0 = spectral_moment_m0(sp)
    hs = significant_height(sp)
    cs = synthesize_components(sp, rng_new(s["seed"]))
    out_prefix = _resolve_out(s["out"], "wavefield")
    fmt = s["format"]
    written = []
    for k in range(s["frames"]):
        hf = evaluate_field(cs, s["rows"], s["cols"], s["spacing"], t=k * s["dt"])
        if fmt == "pgm":
            path = Path(f"{out_prefix}_{k:04d}.pgm")
            _write_bytes(path, render.field_to_pgm(hf, s["h_ref"]))
        elif fmt == "csv":
            path = Path(f"{out_prefix}_{k:04d}.csv")
            _write_text(path, render.field_to_csv(hf))
        elif fmt == "display":
            path = Path(f"{out_prefix}_{k:04d}.txt")
            _write_text(path, render.display_to_text(normalize_display(hf, s["h_ref"])))
        elif fmt == "ascii":
            path = Path(f"{out_prefix}_{k:04d}.txt")
            _write_text(path, render.display_to_ascii(normalize_display(hf, s["h_ref"])))
        else:
            raise ConfigError(f"unknown format {fmt!r}")
        written.append(path)
    print(
        f"station {sp.station!r} month {sp.month}: "
        f"m0 = {m0:.4f} m^2, Hs = {hs:.2f} m; wrote {len(written)} frame(s)"
    )
    return EXIT_OK


def cmd_gridsim(args: argparse.Namespace) -> int:
    s = _settings("gridsim", args)
    cfg = GridConfig(
        units=s["units"],
        modules=s["modules"],
        rows=s["rows"],
        cols=s["cols"],
        alpha=s["alpha"],
        beta=s["beta"],
        gamma=s["gamma"],
        run_iterations=s["run_iterations"],
    )
    state = grid_new(cfg, seed=s["seed"])
    state, result = run_phase_cycle(state, loop_target_s=s["loop_target"])
    out_dir = _resolve_out(s["out"], "gridsim_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_text(out_dir / "frames.txt", render.frame_stream(result.frames))
    _write_text(out_dir / "phase_log.csv", render.phase_log_csv(result.phase_log))
    _write_text(out_dir / "desync.csv", render.desync_log_csv(result.desync_log))
    target = s["loop_target"]
    drift = 100.0 * (result.duration_s - target) / target if target else math.nan
    print(
        f"cycle {state.loop_index}: duration {result.duration_s:.1f} s "
        f"({drift:+.1f}% of target), halt spread {result.halt_metrics.spread_s:.2f} s, "
        f"entropy {result.halt_metrics.entropy_nats:.3f} nats; wrote {out_dir}/"
    )
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    s = _settings("catalog", args)
    if s["input"]:
        try:
            text = Path(s["input"]).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot read records: {exc}", file=sys.stderr)
            return EXIT_IO
        cat = parse_catalog(text)
    else:
        cat = load_bundled_catalog()
    attributes = None
    if s["attr"]:
        wanted = s["attr"]
        if isinstance(wanted, str):  # config files give a comma list
            wanted = [p.strip() for p in wanted.split(",")]
        attributes = set()
        for label in wanted:
            try:
                attributes.add(Attribute.from_label(label))
            except KeyError:
                raise ConfigError(f"unknown attribute {label!r}")
    if s["chapter"] is not None and s["chapter"] not in CHAPTERS:
        raise ConfigError(f"unknown chapter {s['chapter']!r}")
    year_range = None
    if s["year_min"] is not None or s["year_max"] is not None:
        year_range = (s["year_min"] or 0, s["year_max"] or 9999)
    cat = filter_catalog(cat, attributes=attributes, chapter=s["chapter"], year_range=year_range)
    out = _resolve_out(s["out"], "inventory.md")
    _write_text(out, emit_markdown(cat, title=s["title"]))
    print(f"wrote {out} ({len(cat)} entries)")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="houle",
        description="Deterministic generative graphics and wave numerics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key = value settings file")
        p.add_argument("--seed", type=int, help="random seed (default 0)")
        p.add_argument("-o", "--out", help="output path (see HOULE_OUT_DIR)")

    p = sub.add_parser("hatch", help="random rectangular hatch zones")
    add_common(p)
    p.add_argument("--mode", choices=("uniform", "density"))
    p.add_argument("--zones", type=int, help="zone count (uniform mode)")
    p.add_argument("--rows", type=int, help="cell rows (density mode)")
    p.add_argument("--cols", type=int, help="cell columns (density mode)")
    p.add_argument("--cell-mm", dest="cell_mm", type=float)
    p.add_argument("--levels", type=int, help="gray levels (density mode)")
    p.add_argument("--lines-per-level", dest="lines_per_level", type=int)
    p.add_argument("--dump", help="also write a stroke dump")
    p.set_defaults(func=cmd_hatch)

    p = sub.add_parser("polygon", help="random closed polygon")
    add_common(p)
    p.add_argument("-n", "--vertices", type=int)
    p.add_argument("--open", action="store_true", help="leave the polyline open")
    p.add_argument("--frame", help="sampling frame as 'x,y,w,h' in mm")
    p.add_argument("--dump", help="also write a stroke dump")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("kdv", help="integrate the soliton equation")
    add_common(p)
    p.add_argument("--n", type=int, help="grid points")
    p.add_argument("--length", type=float, help="domain length")
    p.add_argument("--c", type=float, help="soliton speed")
    p.add_argument("--x0", type=float, help="soliton start position")
    p.add_argument("--t-end", dest="t_end", type=float)
    p.add_argument("--dt", type=float, help="time step (default: stable auto)")
    p.add_argument("--snapshots", type=int, help="CSV rows after t=0")
    p.add_argument("--profile", help="initial profile file (one value per line)")
    p.add_argument("--invariants", help="also write mass/momentum CSV")
    p.set_defaults(func=cmd_kdv)

    p = sub.add_parser("wavefield", help="synthesize a sea-state height field")
    add_common(p)
    p.add_argument("--spectrum", help="spectrum file (default: bundled sample)")
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--spacing", type=float, help="grid spacing in metres")
    p.add_argument("--frames", type=int, help="number of time frames")
    p.add_argument("--dt", type=float, help="seconds between frames")
    p.add_argument("--h-ref", dest="h_ref", type=float, help="display reference height")
    p.add_argument("--format", choices=("pgm", "csv", "display", "ascii"))
    p.set_defaults(func=cmd_wavefield)

    p = sub.add_parser("gridsim", help="simulate the desynchronizing grid")
    add_common(p)
    p.add_argument("--units", type=int)
    p.add_argument("--modules", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--alpha", type=float, help="heating per cell of work")
    p.add_argument("--beta", type=float, help="cooling rate per event")
    p.add_argument("--gamma", type=float, help="throttle slope per degC")
    p.add_argument("--run-iterations", dest="run_iterations", type=int)
    p.add_argument("--loop-target", dest="loop_target", type=float)
    p.set_defaults(func=cmd_gridsim)

    p = sub.add_parser("catalog", help="render the artwork inventory")
    add_common(p)
    p.add_argument("--input", help="record file (default: bundled sample)")
    p.add_argument("--attr", action="append", help="require an attribute (repeatable)")
    p.add_argument("--chapter", help="restrict to one chapter")
    p.add_argument("--year-min", dest="year_min", type=int)
    p.add_argument("--year-max", dest="year_max", type=int)
    p.add_argument("--title", help="H1 title of the inventory")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StabilityError, BlowUpError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (
        ConfigError,
        HatchConfigError,
        SpectrumFormatError,
        CatalogFormatError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
