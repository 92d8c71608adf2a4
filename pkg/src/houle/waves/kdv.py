"""Explicit integration of u_t + 6 u u_x + u_xxx = 0 on a periodic line.

The scheme is the classic three-level leapfrog with the three-point average
in the nonlinear term (Zabusky-Kruskal form), which conserves the discrete
mass exactly and the discrete momentum to leapfrog accuracy:

    u[j, n+1] = u[j, n-1]
                - (2 dt / dx) * ubar * (u[j+1] - u[j-1])
                - (dt / dx^3) * (u[j+2] - 2 u[j+1] + 2 u[j-1] - u[j-2])

    ubar = (u[j+1] + u[j] + u[j-1]) / 3

The very first step (and any step after a dt change) has no previous level
and is bootstrapped by one forward-Euler step on the same space operators.

Every step enforces the stability guard dt <= dx^3 / (4 + dx^2 * max|u|),
which bounds both the dispersive and the advective part of the update.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class StabilityError(ValueError):
    """Requested time step violates the explicit stability guard."""


class BlowUpError(ArithmeticError):
    """The solution left the finite range; carries the last stable time."""

    def __init__(self, message: str, last_stable_t: float):
        super().__init__(message)
        self.last_stable_t = last_stable_t


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic 1-D grid: n points, spacing dx, length n * dx."""

    n: int
    dx: float
    periodic: bool = True

    def __post_init__(self):
        if self.n < 8:
            raise ValueError("grid needs at least 8 points")
        if not (self.dx > 0.0):
            raise ValueError("grid spacing must be positive")
        if not self.periodic:
            raise ValueError("only periodic boundaries are supported")

    @property
    def length(self) -> float:
        return self.n * self.dx

    def x(self) -> np.ndarray:
        return np.arange(self.n) * self.dx


@dataclass(frozen=True)
class KdvState:
    """Solution snapshot. Treat `u` as read-only; steps return new states."""

    grid: Grid1D
    u: np.ndarray
    t: float = 0.0
    u_prev: np.ndarray | None = None
    dt_prev: float | None = None

    def __post_init__(self):
        u = np.asarray(self.u, dtype=np.float64)
        if u.shape != (self.grid.n,):
            raise ValueError(f"u must have shape ({self.grid.n},)")
        object.__setattr__(self, "u", u)


def max_stable_dt(state: KdvState) -> float:
    """Largest admissible step for the current amplitude."""
    dx = state.grid.dx
    umax = float(np.max(np.abs(state.u)))
    return dx**3 / (4.0 + dx**2 * umax)


def _rhs(u: np.ndarray, dx: float) -> np.ndarray:
    """Discrete 6 u u_x + u_xxx with the averaged nonlinear term."""
    up1 = np.roll(u, -1)
    um1 = np.roll(u, 1)
    up2 = np.roll(u, -2)
    um2 = np.roll(u, 2)
    ubar = (up1 + u + um1) / 3.0
    nonlinear = 6.0 * ubar * (up1 - um1) / (2.0 * dx)
    dispersive = (up2 - 2.0 * up1 + 2.0 * um1 - um2) / (2.0 * dx**3)
    return nonlinear + dispersive


def kdv_step(state: KdvState, dt: float) -> KdvState:
    """Advance one step of size dt.

    Raises StabilityError when dt exceeds the guard for the current state,
    and BlowUpError (carrying the last stable t) if the update goes
    non-finite anyway.
    """
    if not (dt > 0.0):
        raise ValueError("dt must be positive")
    guard = max_stable_dt(state)
    if dt > guard * (1.0 + 1e-12):
        raise StabilityError(
            f"dt={dt:.3e} exceeds stable limit {guard:.3e} at t={state.t:.6f}"
        )
    dx = state.grid.dx
    f = _rhs(state.u, dx)
    if state.u_prev is None or state.dt_prev != dt:
        u_new = state.u - dt * f  # forward-Euler bootstrap
    else:
        u_new = state.u_prev - 2.0 * dt * f
    if not np.all(np.isfinite(u_new)):
        raise BlowUpError(
            f"solution became non-finite at t={state.t + dt:.6f} "
            f"(last stable t={state.t:.6f})",
            last_stable_t=state.t,
        )
    return KdvState(state.grid, u_new, state.t + dt, u_prev=state.u, dt_prev=dt)


def integrate_to(
    state: KdvState,
    t_end: float,
    dt: float | None = None,
    safety: float = 0.5,
) -> KdvState:
    """March to t_end with a constant step.

    When dt is omitted, the step is safety * guard(initial state) rounded so
    that an integer number of steps lands exactly on t_end.  Deterministic in
    its inputs.
    """
    span = t_end - state.t
    if span <= 0.0:
        return state
    if dt is None:
        dt = safety * max_stable_dt(state)
    n_steps = max(1, math.ceil(span / dt - 1e-12))
    dt = span / n_steps
    for _ in range(n_steps):
        state = kdv_step(state, dt)
    if state.t != t_end:
        # Repeated addition of dt accumulates a few ulps; snap the final
        # timestamp so callers land exactly on the requested time.
        state = KdvState(
            state.grid, state.u, t_end, u_prev=state.u_prev, dt_prev=state.dt_prev
        )
    return state


def kdv_invariants(state: KdvState) -> tuple[float, float]:
    """(mass, momentum) = (sum u * dx, sum u^2 * dx)."""
    dx = state.grid.dx
    mass = float(np.sum(state.u)) * dx
    momentum = float(np.sum(state.u * state.u)) * dx
    return mass, momentum


def soliton_profile(
    grid: Grid1D, t: float = 0.0, c: float = 1.0, x0: float = 0.0
) -> np.ndarray:
    """Closed-form travelling soliton (c/2) sech^2(sqrt(c)/2 * (x - x0 - c t)).

    The argument is wrapped to the nearest periodic image so the profile can
    serve both as the initial condition and as the exact reference at any
    later time.
    """
    if c <= 0.0:
        raise ValueError("soliton speed must be positive")
    length = grid.length
    xi = np.mod(grid.x() - x0 - c * t + length / 2.0, length) - length / 2.0
    return 0.5 * c / np.cosh(0.5 * math.sqrt(c) * xi) ** 2
