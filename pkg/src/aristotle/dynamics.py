"""Time evolution on the orbit: closed-form flow, generators, and a
fixed-step trajectory sampler.

The Hamiltonian m*g*q carries no momentum term, so the flow moves p linearly
and freezes q: a static particle steadily gaining momentum.  The first-order
``symplectic_euler`` update is exact for this constant drift; it is kept as
an independent cross-check of the closed form and as the integrator contract
for any future system that is not static.

Sign bookkeeping: the left-action generator of time translations is
(-m*g, 0) (the derivative of the flow of exp(-s E)), while forward time
evolution drifts with (+m*g, 0).  Both are public so both signs stay pinned
by tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .orbit import OrbitContext, OrbitPoint, OrbitTangent

INTEGRATORS = ("exact", "symplectic_euler")


@dataclass(frozen=True)
class SimulationConfig:
    """Trajectory request: orbit parameters, initial point, grid, integrator."""

    m: float
    g: float
    p0: float
    q0: float
    t_max: float
    dt: float
    integrator: str = "exact"

    def __post_init__(self) -> None:
        for name in ("m", "g", "p0", "q0", "t_max", "dt"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"non-finite configuration value {name}")
        if self.m == 0.0 or self.g == 0.0:
            raise ValueError("m and g must be nonzero")
        if self.dt <= 0.0:
            raise ValueError("dt must be positive")
        if self.t_max < 0.0:
            raise ValueError("t_max must be nonnegative")
        if self.t_max > 0.0 and self.dt > self.t_max:
            raise ValueError("dt must not exceed t_max")
        if self.integrator not in INTEGRATORS:
            raise ValueError(
                f"unknown integrator {self.integrator!r}; expected one of {INTEGRATORS}"
            )


@dataclass(frozen=True)
class TrajectorySample:
    """One trajectory record; H is m*g*q for the producing configuration."""

    t: float
    p: float
    q: float
    H: float


def hamiltonian(ctx: OrbitContext, pt: OrbitPoint) -> float:
    """Full Hamiltonian m*g*q: gravitational potential energy, no kinetic term."""
    return ctx.m * ctx.g * pt.q


def evolve_exact(ctx: OrbitContext, pt: OrbitPoint, t: float) -> OrbitPoint:
    """Closed-form flow for time t: momentum grows linearly, position is frozen."""
    return OrbitPoint(pt.p + ctx.m * ctx.g * t, pt.q)


def generator_left(ctx: OrbitContext, which: str) -> OrbitTangent:
    """Left-action generator d/ds of the flow of exp(-s X) at s = 0.

    ``which`` selects X: "E" (time translation) gives (-m*g, 0) and "P"
    (space translation) gives (0, -1).
    """
    if which == "E":
        return OrbitTangent(-(ctx.m * ctx.g), 0.0)
    if which == "P":
        return OrbitTangent(0.0, -1.0)
    raise ValueError(f"unknown generator {which!r}; expected 'E' or 'P'")


def physical_drift(ctx: OrbitContext) -> OrbitTangent:
    """(dp/dt, dq/dt) of forward time evolution; minus generator_left(ctx, 'E')."""
    return OrbitTangent(ctx.m * ctx.g, 0.0)


def _time_grid(t_max: float, dt: float) -> tuple[list[float], bool]:
    """Grid 0, dt, ..., n*dt with n = floor(t_max/dt), clamped so no grid point
    exceeds t_max; the flag says whether an exact final sample at t_max must
    be appended.  Grid points are k*dt rather than accumulated sums, so the
    sample count never depends on summation order.
    """
    n = int(math.floor(t_max / dt))
    while n > 0 and n * dt > t_max:
        n -= 1
    grid = [k * dt for k in range(n + 1)]
    return grid, grid[-1] < t_max


def simulate(cfg: SimulationConfig) -> list[TrajectorySample]:
    """Sample the trajectory on the configured grid, final point included."""
    ctx = OrbitContext(cfg.m, cfg.g)
    start = OrbitPoint(cfg.p0, cfg.q0)
    grid, append_final = _time_grid(cfg.t_max, cfg.dt)

    samples: list[TrajectorySample] = []
    if cfg.integrator == "exact":
        times = grid + ([cfg.t_max] if append_final else [])
        for t in times:
            pt = evolve_exact(ctx, start, t)
            samples.append(TrajectorySample(t, pt.p, pt.q, hamiltonian(ctx, pt)))
    else:
        drift = physical_drift(ctx)
        step = drift.dp * cfg.dt
        p = cfg.p0
        for k, t in enumerate(grid):
            pt = OrbitPoint(p, cfg.q0)
            samples.append(TrajectorySample(t, pt.p, pt.q, hamiltonian(ctx, pt)))
            if k < len(grid) - 1:
                p = p + step
        if append_final:
            # Partial step covering the remainder of the grid.
            p = p + drift.dp * (cfg.t_max - grid[-1])
            pt = OrbitPoint(p, cfg.q0)
            samples.append(TrajectorySample(cfg.t_max, pt.p, pt.q, hamiltonian(ctx, pt)))
    return samples


def energy_drift(samples: list[TrajectorySample]) -> float:
    """Largest deviation of H from its initial value along a trajectory."""
    if not samples:
        raise ValueError("energy_drift needs a non-empty trajectory")
    h0 = samples[0].H
    return max(abs(s.H - h0) for s in samples)
