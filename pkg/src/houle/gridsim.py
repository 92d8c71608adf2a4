"""Discrete-event simulation of a small compute grid that drifts out of sync.

Thirty-two identical units spread over eight modules each own a contiguous
band of rows of a shared wave-field display.  Every unit repeatedly
evaluates its band, heats up with the work done, cools toward the ambient
temperature, and throttles its own firing period once it passes a threshold.
Unit-to-unit efficiency differences (drawn once from the seeded stream) give
each unit its own equilibrium temperature, hence its own throttled period:
the initially synchronous grid becomes measurably asynchronous, and display
frames tear as faster units race ahead of slower ones.

Simulated time is seconds.  Events with the same firing time form one batch
processed atomically in unit-id order, so a fully synchronous grid never
splits mid-round and its spread stays exactly zero.  Everything is
deterministic in (config, seed).

The phase cycle mirrors the installation's loop: SYNC (barrier), RUN (the
moving wave field), HALT, TEMP_DISPLAY (each unit takes its turn showing its
temperature), COOLDOWN (pure cooling until within half a degree of ambient),
then back to SYNC.  All thermal constants are fictional desk-scale values
chosen for the dynamics, not measured hardware.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from houle.stochastics import Seed, UniformRange, rng_lane, rng_new, sample_uniform
from houle.waves.field import (
    DisplayMatrix,
    HeightField,
    WaveComponentSet,
    evaluate_field,
    normalize_display,
)
from houle.waves.spectrum import load_bundled_spectrum
from houle.waves.field import synthesize_components

PHASE_SYNC = "SYNC"
PHASE_RUN = "RUN"
PHASE_HALT = "HALT"
PHASE_TEMP_DISPLAY = "TEMP_DISPLAY"
PHASE_COOLDOWN = "COOLDOWN"

DESYNC_BINS = 16


@dataclass(frozen=True)
class GridConfig:
    """Grid layout, wave-field geometry and thermal behaviour.

    run_iterations and the timing constants are tuned so one full default
    cycle lasts about twenty minutes of simulated time.

    The default display has 65 rows over 32 units, so unit 0 owns one band
    row more than its peers and does half again their work per event.  Its
    equilibrium temperature sits far above everyone else's; with the
    throttle threshold between the two groups, the default run shows the
    leading edge of desynchronization: one unit drifts out of step while
    the rest hold a common clock.  Lowering t_throttle below the cooler
    group's equilibria (about 68 to 72 degC) makes the whole grid drift.
    """

    units: int = 32
    modules: int = 8
    rows: int = 65
    cols: int = 16
    spacing: float = 5.0  # metres between display points
    dt_wave: float = 0.5  # wave-time seconds advanced per evaluation
    h_ref: float = 20.0  # metres mapped to full display scale
    p0: float = 1.0  # unthrottled firing period, seconds
    alpha: float = 0.075  # heating per cell of work, degC
    beta: float = 0.05  # cooling rate toward ambient, per event
    gamma: float = 0.02  # period growth per degC above threshold
    t_env: float = 22.0  # degC
    t_throttle: float = 75.0  # degC
    epsilon_lo: float = 0.95
    epsilon_hi: float = 1.05
    temp_display_s: float = 2.0  # seconds each unit holds its temperature
    cooldown_tick_s: float = 1.0
    cooldown_margin: float = 0.5  # degC above ambient that counts as cool
    run_iterations: int = 760
    metrics_every: int = 500

    def __post_init__(self):
        if self.units < 1 or self.modules < 1:
            raise ValueError("need at least one unit and one module")
        if self.units % self.modules != 0:
            raise ValueError(
                f"{self.units} units do not divide evenly over "
                f"{self.modules} modules"
            )
        if self.rows < self.units:
            raise ValueError("need at least one display row per unit")
        if self.cols < 1:
            raise ValueError("need at least one display column")
        if self.epsilon_lo > self.epsilon_hi:
            raise ValueError("epsilon range is inverted")
        if self.dt_wave <= 0.0 or self.p0 <= 0.0:
            raise ValueError("dt_wave and p0 must be positive")


@dataclass
class UnitState:
    """One compute unit: static tile assignment plus mutable run state."""

    unit_id: int
    module_id: int
    row0: int
    row1: int  # exclusive
    epsilon: float
    steps: int = 0
    temp: float = 0.0
    next_fire: float = 0.0

    @property
    def band_rows(self) -> int:
        return self.row1 - self.row0

    def local_time(self, dt_wave: float) -> float:
        return self.steps * dt_wave


@dataclass(frozen=True)
class DesyncMetrics:
    """Spread of unit local times and the entropy of their distribution."""

    spread_s: float
    entropy_nats: float


@dataclass(frozen=True)
class MatrixFrame:
    index: int
    t: float
    phase: str
    display: DisplayMatrix


@dataclass(frozen=True)
class TempFrame:
    index: int
    t: float
    phase: str
    unit_id: int
    temp: float


@dataclass
class GridSimState:
    config: GridConfig
    components: WaveComponentSet
    units: list[UnitState]
    tiles: list[np.ndarray]
    phase: str = PHASE_SYNC
    wall_clock: float = 0.0
    loop_index: int = 0
    frames_in_run: int = 0
    frame_counter: int = 0
    events_total: int = 0
    next_metric_at: int = 0
    desync_log: list[tuple[int, float, float]] = field(default_factory=list)
    phase_log: list[tuple[int, str, float]] = field(default_factory=list)


@dataclass(frozen=True)
class CycleResult:
    """Artifacts of one full phase cycle."""

    frames: tuple
    phase_log: tuple[tuple[int, str, float], ...]
    desync_log: tuple[tuple[int, float, float], ...]
    duration_s: float
    halt_metrics: DesyncMetrics
    cooldown_start_temps: tuple[float, ...]
    cooldown_ticks: int


def _partition_rows(rows: int, units: int) -> list[tuple[int, int]]:
    """Contiguous bands, balanced to within one row, in unit-id order."""
    base, extra = divmod(rows, units)
    bands = []
    start = 0
    for u in range(units):
        size = base + (1 if u < extra else 0)
        bands.append((start, start + size))
        start += size
    return bands


def default_components(seed: Seed) -> WaveComponentSet:
    """Components from the bundled spectrum; phases use stream lane 1."""
    return synthesize_components(load_bundled_spectrum(), rng_lane(seed, 1))


def grid_new(
    config: GridConfig | None = None,
    components: WaveComponentSet | None = None,
    seed: Seed = 0,
) -> GridSimState:
    """Fresh grid in SYNC phase: ambient temps, per-unit efficiency drawn once.

    The seed's base stream supplies one efficiency factor per unit, in
    unit-id order.  Wave phases use stream lane 1 when components are not
    supplied explicitly.
    """
    cfg = config if config is not None else GridConfig()
    if components is None:
        components = default_components(seed)
    stream = rng_new(seed)
    eps_range = UniformRange(cfg.epsilon_lo, cfg.epsilon_hi)
    per_module = cfg.units // cfg.modules
    units = []
    for (row0, row1), uid in zip(
        _partition_rows(cfg.rows, cfg.units), range(cfg.units)
    ):
        units.append(
            UnitState(
                unit_id=uid,
                module_id=uid // per_module,
                row0=row0,
                row1=row1,
                epsilon=sample_uniform(stream, eps_range),
                temp=cfg.t_env,
                next_fire=0.0,
            )
        )
    tiles = [np.zeros((u.band_rows, cfg.cols)) for u in units]
    return GridSimState(
        config=cfg,
        components=components,
        units=units,
        tiles=tiles,
        next_metric_at=cfg.metrics_every,
    )


def measure_desync(state: GridSimState, bins: int = DESYNC_BINS) -> DesyncMetrics:
    """Spread (max - min local time) and Shannon entropy of its distribution.

    Offsets from the slowest unit are histogrammed into `bins` equal cells
    spanning the spread; entropy is in nats and defined as 0 when the grid
    is perfectly synchronous.
    """
    dt = state.config.dt_wave
    times = [u.local_time(dt) for u in state.units]
    lo, hi = min(times), max(times)
    spread = hi - lo
    if spread == 0.0:
        return DesyncMetrics(0.0, 0.0)
    counts = [0] * bins
    for t in times:
        idx = min(int((t - lo) / spread * bins), bins - 1)
        counts[idx] += 1
    n = len(times)
    entropy = -sum(c / n * math.log(c / n) for c in counts if c)
    return DesyncMetrics(spread, entropy)


def _fire_unit(state: GridSimState, unit: UnitState, now: float) -> None:
    """One unit event: evaluate its band, heat, schedule the next firing."""
    cfg = state.config
    hf = evaluate_field(
        state.components,
        rows=unit.band_rows,
        cols=cfg.cols,
        spacing=cfg.spacing,
        t=unit.local_time(cfg.dt_wave),
        row_offset=unit.row0,
    )
    state.tiles[unit.unit_id] = hf.h
    unit.steps += 1
    work = unit.band_rows * cfg.cols  # cells evaluated this event
    unit.temp = (
        unit.temp
        + cfg.alpha * unit.epsilon * work
        - cfg.beta * (unit.temp - cfg.t_env)
    )
    overheat = max(0.0, unit.temp - cfg.t_throttle)
    unit.next_fire = now + cfg.p0 * (1.0 + cfg.gamma * overheat)


def _assemble_frame(state: GridSimState) -> MatrixFrame:
    cfg = state.config
    heights = np.concatenate(state.tiles, axis=0)
    hf = HeightField(heights, spacing=cfg.spacing, t=state.wall_clock)
    dm = normalize_display(hf, cfg.h_ref)
    frame = MatrixFrame(
        index=state.frame_counter,
        t=state.wall_clock,
        phase=state.phase,
        display=dm,
    )
    state.frame_counter += 1
    state.frames_in_run += 1
    return frame


def _advance(
    state: GridSimState,
    max_events: int | None = None,
    max_frames: int | None = None,
) -> tuple[int, list[MatrixFrame]]:
    """Core event loop shared by grid_tick and run_phase_cycle.

    Simultaneous events are one atomic batch (unit-id order); a batch that
    would not fit in the remaining event budget is left untouched for the
    next call.  A frame is emitted whenever the slowest unit completes
    another dt_wave boundary, built from every unit's freshest band.
    """
    cfg = state.config
    frames: list[MatrixFrame] = []
    used = 0
    while True:
        if max_frames is not None and state.frames_in_run >= max_frames:
            break
        fire = min(u.next_fire for u in state.units)
        batch = [u for u in state.units if u.next_fire == fire]
        if max_events is not None and used + len(batch) > max_events:
            break
        state.wall_clock = fire
        for u in batch:
            _fire_unit(state, u, fire)
        used += len(batch)
        state.events_total += len(batch)
        while state.events_total >= state.next_metric_at:
            m = measure_desync(state)
            state.desync_log.append(
                (state.events_total, m.spread_s, m.entropy_nats)
            )
            state.next_metric_at += cfg.metrics_every
        min_steps = min(u.steps for u in state.units)
        while min_steps >= state.frames_in_run + 1 and (
            max_frames is None or state.frames_in_run < max_frames
        ):
            frames.append(_assemble_frame(state))
    return used, frames


def _log_phase(state: GridSimState, phase: str) -> None:
    state.phase = phase
    state.phase_log.append((state.loop_index, phase, state.wall_clock))


def grid_tick(
    state: GridSimState, budget: int
) -> tuple[GridSimState, list[MatrixFrame]]:
    """Process up to `budget` events of RUN work (state is advanced in place).

    A SYNC-phase grid enters RUN on the first tick.  Returns the state and
    the display frames completed within the budget.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if state.phase == PHASE_SYNC:
        _sync_barrier(state)
        _log_phase(state, PHASE_RUN)
    elif state.phase != PHASE_RUN:
        raise ValueError(f"grid_tick invalid in phase {state.phase}")
    _, frames = _advance(state, max_events=budget)
    return state, frames


def _sync_barrier(state: GridSimState) -> None:
    """Barrier-align every unit at the current wall clock; temps preserved."""
    _log_phase(state, PHASE_SYNC)
    state.frames_in_run = 0
    for u in state.units:
        u.steps = 0
        u.next_fire = state.wall_clock
    cfg = state.config
    state.tiles = [np.zeros((u.band_rows, cfg.cols)) for u in state.units]


def run_phase_cycle(
    state: GridSimState,
    run_iterations: int | None = None,
    loop_target_s: float | None = None,
) -> tuple[GridSimState, CycleResult]:
    """One full SYNC / RUN / HALT / TEMP_DISPLAY / COOLDOWN loop.

    `run_iterations` display frames are produced during RUN (default from
    config).  `loop_target_s` is informational; the caller can compare it to
    the returned duration.  The state ends back in SYNC with the loop index
    advanced.
    """
    cfg = state.config
    if run_iterations is None:
        run_iterations = cfg.run_iterations
    if run_iterations < 0:
        raise ValueError("run_iterations must be non-negative")
    start_clock = state.wall_clock
    frames: list = []

    _sync_barrier(state)
    _log_phase(state, PHASE_RUN)
    _, run_frames = _advance(state, max_frames=run_iterations)
    frames.extend(run_frames)

    _log_phase(state, PHASE_HALT)
    halt_metrics = measure_desync(state)

    _log_phase(state, PHASE_TEMP_DISPLAY)
    for u in state.units:  # each unit takes its turn
        frames.append(
            TempFrame(
                index=state.frame_counter,
                t=state.wall_clock,
                phase=PHASE_TEMP_DISPLAY,
                unit_id=u.unit_id,
                temp=u.temp,
            )
        )
        state.frame_counter += 1
        state.wall_clock += cfg.temp_display_s

    _log_phase(state, PHASE_COOLDOWN)
    cooldown_start = tuple(u.temp for u in state.units)
    ticks = 0
    while max(u.temp for u in state.units) - cfg.t_env >= cfg.cooldown_margin:
        for u in state.units:
            u.temp = u.temp - cfg.beta * (u.temp - cfg.t_env)
        state.wall_clock += cfg.cooldown_tick_s
        ticks += 1

    # The closing transition is the next cycle's opening SYNC entry.
    state.loop_index += 1
    state.phase = PHASE_SYNC

    return state, CycleResult(
        frames=tuple(frames),
        phase_log=tuple(state.phase_log),
        desync_log=tuple(state.desync_log),
        duration_s=state.wall_clock - start_clock,
        halt_metrics=halt_metrics,
        cooldown_start_temps=cooldown_start,
        cooldown_ticks=ticks,
    )
