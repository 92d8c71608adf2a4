"""Byte-deterministic file emitters.

Every function here returns bytes or str built with explicit formatting:
fixed attribute order, fixed decimal counts, LF line endings, no locale and
no timestamps.  Re-running an emitter on equal inputs yields equal bytes.
"""

from __future__ import annotations

import numpy as np

from houle.graphics import VectorScene
from houle.waves.field import DISPLAY_MAX, DisplayMatrix, HeightField

# Palette labels -> SVG colors.  Labels without an entry pass through
# unchanged (plain CSS color names keep working).
SVG_COLORS = {
    "black": "#000000",
    "ochre": "#cc7722",
}

ASCII_RAMP = " .:-=+*#%@"


def _fmt(value: float, decimals: int = 3) -> str:
    """Fixed-decimal formatting with negative zero normalized away."""
    s = f"{value:.{decimals}f}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


def scene_to_text(scene: VectorScene) -> str:
    """Stroke dump: one line per stroke, `color pen_width x0,y0 x1,y1 ...`."""
    lines = []
    for s in scene.strokes:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in s.points)
        lines.append(f"{scene.palette[s.color]} {_fmt(s.pen_width)} {coords}")
    return "\n".join(lines) + ("\n" if lines else "")


def scene_to_svg(scene: VectorScene) -> bytes:
    """Canonical SVG: fixed header, one polyline per stroke in draw order.

    Scene coordinates have y up; SVG has y down, so y maps to canvas_h - y.
    """
    w = _fmt(scene.canvas_w)
    h = _fmt(scene.canvas_h)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}mm" '
        f'height="{h}mm" viewBox="0 0 {w} {h}">',
    ]
    for s in scene.strokes:
        label = scene.palette[s.color]
        color = SVG_COLORS.get(label, label)
        pts = " ".join(
            f"{_fmt(x)},{_fmt(scene.canvas_h - y)}" for x, y in s.points
        )
        out.append(
            f'<polyline fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(s.pen_width)}" points="{pts}"/>'
        )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def field_to_csv(hf: HeightField) -> str:
    """Row-major CSV of heights, six decimals."""
    lines = [
        ",".join(_fmt(v, 6) for v in row)
        for row in np.asarray(hf.h)
    ]
    return "\n".join(lines) + "\n"


def field_to_pgm(hf: HeightField, h_ref: float) -> bytes:
    """Binary PGM (P5), gray = round((h / h_ref + 1) / 2 * 255), clamped.

    A zero field maps to uniform mid-gray 128.
    """
    if h_ref <= 0.0:
        raise ValueError("h_ref must be positive")
    h = np.asarray(hf.h)
    gray = np.clip(np.rint((h / h_ref + 1.0) / 2.0 * 255.0), 0, 255)
    header = f"P5\n{h.shape[1]} {h.shape[0]}\n255\n".encode("ascii")
    return header + gray.astype(np.uint8).tobytes()


def display_to_text(dm: DisplayMatrix) -> str:
    """Fixed-width frame: 7-character signed integers, space separated."""
    lines = [
        " ".join(f"{int(v):7d}" for v in row)
        for row in np.asarray(dm.values)
    ]
    return "\n".join(lines) + "\n"


def display_to_ascii(dm: DisplayMatrix) -> str:
    """Character matrix over a fixed 10-step density ramp.

    The signed display range maps onto the whole ramp: the deepest trough
    prints as a space, zero as the middle step, the highest crest as '@'.
    """
    v = np.asarray(dm.values, dtype=np.int64) + DISPLAY_MAX + 1
    idx = np.minimum(v * len(ASCII_RAMP) // (2 * (DISPLAY_MAX + 1)), len(ASCII_RAMP) - 1)
    return "\n".join("".join(ASCII_RAMP[i] for i in row) for row in idx) + "\n"


def frame_stream(frames) -> str:
    """Concatenated frame stream, frames separated by `---` lines.

    Matrix frames render their DisplayMatrix as fixed-width rows; temperature
    frames carry a single `unit <id> temp=<t> C` line.  Frame objects come
    from houle.gridsim.
    """
    blocks = []
    for f in frames:
        header = f"frame {f.index} t={f.t:.3f} phase={f.phase}"
        if hasattr(f, "display"):
            blocks.append(header + "\n" + display_to_text(f.display))
        else:
            blocks.append(header + f"\nunit {f.unit_id} temp={f.temp:.1f} C\n")
    return "---\n".join(blocks)


def phase_log_csv(log) -> str:
    """Phase transition log: loop,phase,sim_time_s (3 decimals)."""
    lines = ["loop,phase,sim_time_s"]
    for loop, phase, t in log:
        lines.append(f"{loop},{phase},{t:.3f}")
    return "\n".join(lines) + "\n"


def desync_log_csv(log) -> str:
    """Desync metric checkpoints: events,spread_s,entropy_nats."""
    lines = ["events,spread_s,entropy_nats"]
    for events, spread, entropy in log:
        lines.append(f"{events},{spread:.6f},{entropy:.6f}")
    return "\n".join(lines) + "\n"
