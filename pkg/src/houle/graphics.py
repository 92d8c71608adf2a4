"""Vector scenes for pen-plotter style generative graphics.

Three generators live here.  `generate_hatchwork` recreates the classic
composition of randomly placed rectangular hatch zones on a portrait sheet
(two inks, fixed sampling order, every parameter drawn from a configurable
sampler).  `generate_polygon` draws the closed random polygon of early
stochastic graphics.  `generate_density_grid` fills a grid of cells with
hatch densities drawn from a gray-level distribution.

Geometry convention: canvas coordinates are millimetres with the origin at
the lower-left corner and y pointing up.  Serialization (SVG, stroke dumps)
lives in `houle.render`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from houle.stochastics import (
    DiscreteDistribution,
    RandomStream,
    UniformRange,
    sample_discrete,
    sample_uniform,
)

# Sheet and stroke defaults follow the catalogued plate this generator
# reproduces: 19.2 x 29 cm portrait, black and ochre ink, ~0.5 mm pen.
CANVAS_W_MM = 192.0
CANVAS_H_MM = 290.0
PEN_WIDTH_MM = 0.5
DEFAULT_PALETTE = ("black", "ochre")

HORIZONTAL = 0.0
VERTICAL = 90.0

_EPS = 1e-9


class HatchConfigError(ValueError):
    """Raised when a hatch configuration could emit an invalid zone."""


@dataclass(frozen=True)
class PenStroke:
    """One pen-down polyline: at least two points, positive pen width."""

    points: tuple[tuple[float, float], ...]
    pen_width: float
    color: int  # palette index

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a stroke needs at least two points")
        if not (self.pen_width > 0.0):
            raise ValueError("pen width must be positive")


@dataclass(frozen=True)
class VectorScene:
    """Ordered strokes on a canvas; draw order is part of the value."""

    canvas_w: float
    canvas_h: float
    strokes: tuple[PenStroke, ...]
    palette: tuple[str, ...]

    def __post_init__(self):
        if not (self.canvas_w > 0.0 and self.canvas_h > 0.0):
            raise ValueError("canvas dimensions must be positive")
        if not self.palette:
            raise ValueError("palette must not be empty")
        for s in self.strokes:
            if not (0 <= s.color < len(self.palette)):
                raise ValueError(f"stroke color {s.color} outside palette")


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    width: float
    height: float

    def __post_init__(self):
        if self.width < 0.0 or self.height < 0.0:
            raise ValueError("rectangle extents must be non-negative")


@dataclass(frozen=True)
class HatchZone:
    """A rectangular hatch patch: position, extent, line count, direction.

    `direction` is the stroke angle in degrees (0 horizontal, 90 vertical,
    anything else oblique).  `color` indexes the scene palette.
    """

    x: float
    y: float
    width: float
    height: float
    line_count: int
    direction: float
    color: int

    def __post_init__(self):
        if self.width <= 0.0 or self.height <= 0.0:
            raise ValueError("hatch zone needs positive extent")
        if self.line_count < 1:
            raise ValueError("hatch zone needs at least one line")


Sampler = UniformRange | DiscreteDistribution


@dataclass
class HatchConfig:
    """Samplers for every zone parameter, drawn in a fixed order.

    Per zone the stream is consumed exactly seven times, in this order:
    x, y, width, height, line_count, direction, color.  Each parameter is
    bound to either a UniformRange or a DiscreteDistribution whose outcomes
    are numeric values (palette indices for `color`, angles in degrees for
    `direction`).
    """

    canvas_w: float = CANVAS_W_MM
    canvas_h: float = CANVAS_H_MM
    zone_count: int = 20
    palette: tuple[str, ...] = DEFAULT_PALETTE
    pen_width: float = PEN_WIDTH_MM
    # Positions snap to a coarse lattice with extra weight on the sheet
    # margins so zones land flush against every canvas edge now and then;
    # continuous position samplers reach the far edges with probability
    # zero and leave the outermost millimetres permanently blank.
    x: Sampler = field(
        default_factory=lambda: DiscreteDistribution(
            (3.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0),
            outcomes=(0.0, 8.0, 16.0, 24.0, 32.0, 40.0, 48.0, 56.0, 64.0, 72.0),
        )
    )
    y: Sampler = field(
        default_factory=lambda: DiscreteDistribution(
            (3.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0),
            outcomes=(
                0.0, 17.0, 34.0, 51.0, 68.0, 85.0,
                102.0, 119.0, 136.0, 153.0, 170.0,
            ),
        )
    )
    width: Sampler = field(
        default_factory=lambda: DiscreteDistribution(
            (1.0, 1.0, 1.0), outcomes=(90.0, 105.0, 120.0)
        )
    )
    height: Sampler = field(
        default_factory=lambda: DiscreteDistribution(
            (1.0, 1.0, 1.0), outcomes=(90.0, 105.0, 120.0)
        )
    )
    line_count: Sampler = field(default_factory=lambda: UniformRange(10.0, 50.0))
    direction: Sampler = field(
        default_factory=lambda: DiscreteDistribution(
            (0.4, 0.4, 0.2), outcomes=(HORIZONTAL, VERTICAL, 45.0)
        )
    )
    color: Sampler = field(
        default_factory=lambda: DiscreteDistribution((0.5, 0.5), outcomes=(0, 1))
    )


def default_hatch_config() -> HatchConfig:
    """Twenty bichrome zones on the portrait sheet (the default layout)."""
    return HatchConfig()


def _draw(stream: RandomStream, sampler: Sampler) -> float:
    """One value from either sampler kind; always one stream advance."""
    if isinstance(sampler, UniformRange):
        return sample_uniform(stream, sampler)
    idx = sample_discrete(stream, sampler)
    return sampler.outcomes[idx]


def _reachable(sampler: Sampler) -> tuple[float, float]:
    """(min, max) of values the sampler can actually emit."""
    if isinstance(sampler, UniformRange):
        return sampler.lo, sampler.hi
    live = [
        float(o)
        for o, w in zip(sampler.outcomes, sampler.weights)
        if w > 0.0
    ]
    return min(live), max(live)


def _validate_hatch_config(cfg: HatchConfig) -> None:
    if cfg.zone_count < 1:
        raise HatchConfigError("zone_count must be at least 1")
    x_lo, x_hi = _reachable(cfg.x)
    y_lo, y_hi = _reachable(cfg.y)
    w_lo, w_hi = _reachable(cfg.width)
    h_lo, h_hi = _reachable(cfg.height)
    if x_lo < 0.0 or y_lo < 0.0:
        raise HatchConfigError("zone position samplers reach below the canvas origin")
    if w_lo <= 0.0 or h_lo <= 0.0:
        raise HatchConfigError("zone extent samplers must stay strictly positive")
    if x_hi + w_hi > cfg.canvas_w + _EPS:
        raise HatchConfigError(
            f"x + width can reach {x_hi + w_hi:.3f} mm on a "
            f"{cfg.canvas_w:.3f} mm wide canvas"
        )
    if y_hi + h_hi > cfg.canvas_h + _EPS:
        raise HatchConfigError(
            f"y + height can reach {y_hi + h_hi:.3f} mm on a "
            f"{cfg.canvas_h:.3f} mm tall canvas"
        )
    n_lo, _ = _reachable(cfg.line_count)
    if int(n_lo) < 1:
        raise HatchConfigError("line_count sampler can emit counts below 1")
    c_lo, c_hi = _reachable(cfg.color)
    if c_lo < 0 or c_hi > len(cfg.palette) - 1:
        raise HatchConfigError("color sampler reaches outside the palette")


def sample_zone(cfg: HatchConfig, stream: RandomStream) -> HatchZone:
    """Draw one zone; consumes exactly seven stream steps in the fixed order."""
    x = _draw(stream, cfg.x)
    y = _draw(stream, cfg.y)
    width = _draw(stream, cfg.width)
    height = _draw(stream, cfg.height)
    line_count = max(1, int(_draw(stream, cfg.line_count)))
    direction = _draw(stream, cfg.direction)
    color = int(_draw(stream, cfg.color))
    return HatchZone(x, y, width, height, line_count, direction, color)


def _clip_line_to_rect(px, py, dx, dy, x0, y0, x1, y1):
    """Clip the infinite line p + t*d to [x0,x1] x [y0,y1].

    Returns segment endpoints or None.  Ownership of edges is half-open:
    a result lying entirely on the right (x1) or top (y1) edge is treated
    as outside and dropped.
    """
    t0, t1 = -math.inf, math.inf
    for p, d, lo, hi in ((px, dx, x0, x1), (py, dy, y0, y1)):
        if d == 0.0:
            if p < lo or p > hi:
                return None
        else:
            ta = (lo - p) / d
            tb = (hi - p) / d
            if ta > tb:
                ta, tb = tb, ta
            t0 = max(t0, ta)
            t1 = min(t1, tb)
    if t0 > t1:
        return None
    ax, ay = px + t0 * dx, py + t0 * dy
    bx, by = px + t1 * dx, py + t1 * dy
    # Snap rounding spill back onto the rectangle.
    ax, bx = min(max(ax, x0), x1), min(max(bx, x0), x1)
    ay, by = min(max(ay, y0), y1), min(max(by, y0), y1)
    if ax == bx and ay == by:
        return None
    if ax == x1 and bx == x1:  # right edge is not ours
        return None
    if ay == y1 and by == y1:  # top edge is not ours
        return None
    return ax, ay, bx, by


def hatch_lines(zone: HatchZone) -> list[tuple[float, float, float, float]]:
    """Endpoints of the zone's hatch lines, clipped to the zone rectangle.

    Lines run parallel to `zone.direction` and are spaced evenly across the
    perpendicular extent: spacing = extent / line_count with the first line
    half a spacing in from the edge, so exactly `line_count` lines exist and
    none coincides with the rectangle boundary.
    """
    a = math.radians(zone.direction)
    dx, dy = math.cos(a), math.sin(a)
    nx, ny = -dy, dx  # unit normal
    x0, y0 = zone.x, zone.y
    x1, y1 = zone.x + zone.width, zone.y + zone.height
    corners = ((x0, y0), (x1, y0), (x0, y1), (x1, y1))
    offsets = [cx * nx + cy * ny for cx, cy in corners]
    cmin, cmax = min(offsets), max(offsets)
    spacing = (cmax - cmin) / zone.line_count
    out = []
    for j in range(zone.line_count):
        c = cmin + (j + 0.5) * spacing
        if c <= cmin:
            c = math.nextafter(cmin, cmax)
        elif c >= cmax:
            c = math.nextafter(cmax, cmin)
        seg = _clip_line_to_rect(c * nx, c * ny, dx, dy, x0, y0, x1, y1)
        if seg is None:  # unreachable for offsets strictly inside (cmin, cmax)
            continue
        out.append(seg)
    return out


def generate_hatchwork(cfg: HatchConfig, stream: RandomStream) -> VectorScene:
    """Sample `cfg.zone_count` hatch zones and return the assembled scene.

    Zones are sampled sequentially; each contributes exactly its line_count
    strokes, in drawing order.  Raises HatchConfigError if the samplers could
    place any zone outside the canvas.
    """
    _validate_hatch_config(cfg)
    strokes = []
    for _ in range(cfg.zone_count):
        zone = sample_zone(cfg, stream)
        for ax, ay, bx, by in hatch_lines(zone):
            strokes.append(
                PenStroke(((ax, ay), (bx, by)), cfg.pen_width, zone.color)
            )
    return VectorScene(cfg.canvas_w, cfg.canvas_h, tuple(strokes), cfg.palette)


def generate_polygon(
    n_vertices: int,
    frame: Rect,
    closed: bool = True,
    stream: RandomStream | None = None,
    pen_width: float = PEN_WIDTH_MM,
) -> VectorScene:
    """Random polygon with vertices uniform in `frame` (x then y per vertex).

    A closed polygon of n vertices yields one stroke of n + 1 points (the
    first point repeated at the end).  A frame of zero area degenerates to
    identical points, as the half-open sampler contract dictates.
    """
    if n_vertices < 3:
        raise ValueError("a polygon needs at least three vertices")
    if stream is None:
        raise ValueError("a RandomStream is required")
    rx = UniformRange(frame.x, frame.x + frame.width)
    ry = UniformRange(frame.y, frame.y + frame.height)
    pts = []
    for _ in range(n_vertices):
        x = sample_uniform(stream, rx)
        y = sample_uniform(stream, ry)
        pts.append((x, y))
    if closed:
        pts.append(pts[0])
    canvas_w = frame.x * 2 + frame.width
    canvas_h = frame.y * 2 + frame.height
    stroke = PenStroke(tuple(pts), pen_width, 0)
    return VectorScene(canvas_w, canvas_h, (stroke,), ("black",))


def generate_density_grid(
    rows: int,
    cols: int,
    f: DiscreteDistribution,
    cell_mm: float,
    stream: RandomStream,
    lines_per_level: int = 2,
    pen_width: float = PEN_WIDTH_MM,
) -> VectorScene:
    """Grid of square cells hatched with density proportional to a gray draw.

    Cells are laid out and sampled row-major, top row first.  A cell drawing
    gray level g receives g * lines_per_level horizontal hatch lines; level 0
    stays empty.  One stream draw per cell.
    """
    if rows < 1 or cols < 1:
        raise ValueError("grid needs at least one row and one column")
    if cell_mm <= 0.0:
        raise ValueError("cell size must be positive")
    if lines_per_level < 1:
        raise ValueError("lines_per_level must be at least 1")
    strokes = []
    for r in range(rows):
        cy = (rows - 1 - r) * cell_mm  # top row first in reading order
        for c in range(cols):
            g = sample_discrete(stream, f)
            if g == 0:
                continue
            zone = HatchZone(
                x=c * cell_mm,
                y=cy,
                width=cell_mm,
                height=cell_mm,
                line_count=g * lines_per_level,
                direction=HORIZONTAL,
                color=0,
            )
            for ax, ay, bx, by in hatch_lines(zone):
                strokes.append(PenStroke(((ax, ay), (bx, by)), pen_width, 0))
    return VectorScene(cols * cell_mm, rows * cell_mm, tuple(strokes), ("black",))


def superpose(scenes: list[VectorScene]) -> VectorScene:
    """Stack several runs on the same sheet (strokes concatenated in order)."""
    if not scenes:
        raise ValueError("nothing to superpose")
    first = scenes[0]
    for s in scenes[1:]:
        if (s.canvas_w, s.canvas_h) != (first.canvas_w, first.canvas_h):
            raise ValueError("superposed scenes must share canvas dimensions")
        if s.palette != first.palette:
            raise ValueError("superposed scenes must share a palette")
    strokes = tuple(st for s in scenes for st in s.strokes)
    return VectorScene(first.canvas_w, first.canvas_h, strokes, first.palette)


def _point_segment_dist(qx, qy, ax, ay, bx, by):
    """Distance from points (arrays qx, qy) to segment a-b (scalars)."""
    vx, vy = bx - ax, by - ay
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return np.hypot(qx - ax, qy - ay)
    t = ((qx - ax) * vx + (qy - ay) * vy) / vv
    t = np.clip(t, 0.0, 1.0)
    return np.hypot(qx - (ax + t * vx), qy - (ay + t * vy))


def _point_box_dist(px, py, lx0, ly0, lx1, ly1):
    """Distance from point (scalars) to solid cells [lx0,lx1] x [ly0,ly1]."""
    dx = np.maximum(np.maximum(lx0 - px, px - lx1), 0.0)
    dy = np.maximum(np.maximum(ly0 - py, py - ly1), 0.0)
    return np.hypot(dx, dy)


def _slab_interval(p, d, lo, hi):
    """Parametric t-interval where the line p + t*d lies inside [lo, hi]."""
    if d != 0.0:
        # A subnormal d may overflow the quotient to inf; the interval
        # arithmetic downstream handles infinities correctly.
        with np.errstate(over="ignore"):
            ta = (lo - p) / d
            tb = (hi - p) / d
        return np.minimum(ta, tb), np.maximum(ta, tb)
    inside = (lo <= p) & (p <= hi)
    t_lo = np.where(inside, -np.inf, np.inf)
    t_hi = np.where(inside, np.inf, -np.inf)
    return t_lo, t_hi


def _mark_segment(mask, res, ax, ay, bx, by, half_width):
    """Mark every raster cell whose square the capped stroke touches.

    A cell is touched when the round-capped stroke (segment dilated by
    half_width) intersects the closed cell square: either the segment
    crosses the square, or the square lies within half_width of it.
    """
    ny, nx = mask.shape
    i0 = max(0, int(math.floor((min(ax, bx) - half_width) * res)))
    i1 = min(nx - 1, int(math.floor((max(ax, bx) + half_width) * res)))
    j0 = max(0, int(math.floor((min(ay, by) - half_width) * res)))
    j1 = min(ny - 1, int(math.floor((max(ay, by) + half_width) * res)))
    if i0 > i1 or j0 > j1:
        return
    cx0 = np.arange(i0, i1 + 1) / res
    cy0 = np.arange(j0, j1 + 1) / res
    cx1 = cx0 + 1.0 / res
    cy1 = cy0 + 1.0 / res
    CX0, CY0 = np.meshgrid(cx0, cy0)
    CX1, CY1 = np.meshgrid(cx1, cy1)

    dx, dy = bx - ax, by - ay
    tx_lo, tx_hi = _slab_interval(ax, dx, CX0, CX1)
    ty_lo, ty_hi = _slab_interval(ay, dy, CY0, CY1)
    t_lo = np.maximum(np.maximum(tx_lo, ty_lo), 0.0)
    t_hi = np.minimum(np.minimum(tx_hi, ty_hi), 1.0)
    crossing = t_lo <= t_hi

    d = np.minimum(
        np.minimum(
            _point_segment_dist(CX0, CY0, ax, ay, bx, by),
            _point_segment_dist(CX1, CY0, ax, ay, bx, by),
        ),
        np.minimum(
            _point_segment_dist(CX0, CY1, ax, ay, bx, by),
            _point_segment_dist(CX1, CY1, ax, ay, bx, by),
        ),
    )
    d = np.minimum(d, _point_box_dist(ax, ay, CX0, CY0, CX1, CY1))
    d = np.minimum(d, _point_box_dist(bx, by, CX0, CY0, CX1, CY1))

    mask[j0 : j1 + 1, i0 : i1 + 1] |= crossing | (d <= half_width)


def rasterize(scene: VectorScene, resolution: float) -> np.ndarray:
    """Boolean ink mask at `resolution` cells per millimetre (row 0 at y=0)."""
    if resolution <= 0.0:
        raise ValueError("resolution must be positive")
    nx = max(1, math.ceil(scene.canvas_w * resolution - _EPS))
    ny = max(1, math.ceil(scene.canvas_h * resolution - _EPS))
    mask = np.zeros((ny, nx), dtype=bool)
    for stroke in scene.strokes:
        hw = stroke.pen_width / 2.0
        pts = stroke.points
        for (ax, ay), (bx, by) in zip(pts, pts[1:]):
            _mark_segment(mask, resolution, ax, ay, bx, by, hw)
    return mask


def coverage_fraction(scene: VectorScene, resolution: float = 1.0) -> float:
    """Fraction of raster cells touched by at least one stroke."""
    mask = rasterize(scene, resolution)
    return float(np.count_nonzero(mask)) / mask.size
