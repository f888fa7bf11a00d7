"""Greedy residual-angle compiler over a discrete set of allowed axes.

The loop, starting from the identity: read the current fidelity to the
target, convert it to the coaxial residual angle, try that rotation
about every allowed axis, keep the best strictly-improving candidate,
and repeat until the gate error drops below the requested threshold.
If no axis improves, the trial angle is halved (the residual-angle rule
assumes the ideal axis is available; damping guarantees termination).

Allowed axes are the +/- z lines plus n_axes - 2 phases uniform on the
XY-plane, so +/-x and +/-y are always present when 4 | (n_axes - 2).
Z-line steps are recorded as free virtual-Z shifts; the finishing passes
merge adjacent rotations and absorb the virtual-Zs into pulse phases.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import ir
from .su2 import IDENTITY, hs_fidelity, residual_angle, rotation_unitary


class InvalidConfigurationError(ValueError):
    """Compiler configuration violates its preconditions."""


class CompileError(RuntimeError):
    """Compilation failed; carries the best-so-far schedule for diagnostics."""

    def __init__(self, message: str, steps: list[ir.PulseStep], fidelity: float):
        super().__init__(message)
        self.steps = steps
        self.fidelity = fidelity


class MaxItersError(CompileError):
    """Iteration budget exhausted before reaching the target error."""


class NoProgressError(CompileError):
    """Damping floor reached with no fidelity-improving axis."""


@dataclass(frozen=True)
class AllowedAxis:
    """One allowed rotation axis: a z line (z_sign = +/-1) or an XY phase."""

    z_sign: int
    phase: float

    @property
    def is_z_line(self) -> bool:
        return self.z_sign != 0

    def unit_vector(self) -> tuple[float, float, float]:
        if self.z_sign != 0:
            return (0.0, 0.0, float(self.z_sign))
        return (math.cos(self.phase), math.sin(self.phase), 0.0)


@dataclass(frozen=True)
class AxisSet:
    """Deterministically ordered allowed axes: +z, -z, then XY phases ascending."""

    n_axes: int
    axes: tuple[AllowedAxis, ...]
    # unit-vector components, row-aligned with `axes`, for vectorized scoring
    nx: np.ndarray = field(repr=False, compare=False, default=None)
    ny: np.ndarray = field(repr=False, compare=False, default=None)
    nz: np.ndarray = field(repr=False, compare=False, default=None)


def allowed_axes(n_axes: int) -> AxisSet:
    """Build the axis set {+z, -z} plus n_axes - 2 uniform XY phases."""
    if n_axes < 4:
        raise InvalidConfigurationError(f"n_axes must be >= 4, got {n_axes}")
    axes = [AllowedAxis(+1, 0.0), AllowedAxis(-1, 0.0)]
    m = n_axes - 2
    axes.extend(AllowedAxis(0, 2.0 * math.pi * k / m) for k in range(m))
    vectors = np.array([a.unit_vector() for a in axes])
    return AxisSet(
        n_axes=n_axes,
        axes=tuple(axes),
        nx=vectors[:, 0],
        ny=vectors[:, 1],
        nz=vectors[:, 2],
    )


@dataclass(frozen=True)
class GreedyConfig:
    """Termination threshold and stall safeguards for the greedy loop."""

    eps_target: float
    max_iters: int = 10_000
    damping_factor: float = 0.5
    min_angle: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.eps_target < 1.0:
            raise InvalidConfigurationError("eps_target must be in (0, 1)")
        if self.max_iters <= 0:
            raise InvalidConfigurationError("max_iters must be positive")
        if not 0.0 < self.damping_factor < 1.0:
            raise InvalidConfigurationError("damping_factor must be in (0, 1)")
        if self.min_angle <= 0.0:
            raise InvalidConfigurationError("min_angle must be positive")


@dataclass(frozen=True)
class CompileReport:
    """Per-compilation diagnostics, including pre-pass cost metrics."""

    achieved_epsilon: float
    iterations: int
    damped_steps: int
    pre_pass_distance: float
    pre_pass_pulse_count: int
    post_pass_distance: float
    post_pass_pulse_count: int
    compile_time: float


def best_axis_step(
    current: np.ndarray,
    target: np.ndarray,
    axes: AxisSet,
    step_angle: float,
) -> tuple[AllowedAxis, float]:
    """Best-fidelity axis for one trial rotation of `step_angle`.

    Scores hs_fidelity(target, R_a(step_angle) @ current) for every axis
    via the trace expansion Tr(T^dag R U) = Tr(R U T^dag) = cos(t/2) Tr(A) -
    i sin(t/2) (nx Tr(sx A) + ny Tr(sy A) + nz Tr(sz A)) with
    A = U T^dag, which is exactly the brute-force product fidelity.
    Ties break to the first axis in the set's deterministic order.
    """
    a = current @ target.conj().T
    t0 = a[0, 0] + a[1, 1]
    tx = a[0, 1] + a[1, 0]
    ty = 1j * (a[0, 1] - a[1, 0])
    tz = a[0, 0] - a[1, 1]
    c = math.cos(step_angle / 2.0)
    s = math.sin(step_angle / 2.0)
    traces = c * t0 - 1j * s * (axes.nx * tx + axes.ny * ty + axes.nz * tz)
    fids = np.abs(traces) ** 2 / 4.0
    i = int(np.argmax(fids))
    return axes.axes[i], float(fids[i])


def _record_step(axis: AllowedAxis, angle: float) -> ir.PulseStep:
    if axis.is_z_line:
        return ir.VirtualZ(axis.z_sign * angle)
    return ir.XYPulse(axis.phase, angle)


def greedy_compile(
    target: np.ndarray,
    axes: AxisSet,
    config: GreedyConfig,
) -> tuple[ir.CompiledGate, CompileReport]:
    """Compile `target` into allowed-axis rotations to error <= eps_target.

    Accepted steps strictly increase fidelity, so the loop terminates on
    the error test on the common path; max_iters and the damping floor
    are safety nets. The finishing passes (merge, absorb) are exact, and
    the final gate is re-verified against the target.
    """
    t_start = time.perf_counter()
    u = IDENTITY
    steps: list[ir.PulseStep] = []
    iterations = 0
    damped = 0
    fid = hs_fidelity(target, u)
    while 1.0 - fid > config.eps_target:
        if iterations >= config.max_iters:
            raise MaxItersError(
                f"no convergence within {config.max_iters} iterations", steps, fid
            )
        angle = residual_angle(fid)
        axis, best = best_axis_step(u, target, axes, angle)
        while best <= fid:
            angle *= config.damping_factor
            damped += 1
            if angle < config.min_angle:
                raise NoProgressError(
                    "damping floor reached with no improving axis", steps, fid
                )
            axis, best = best_axis_step(u, target, axes, angle)
        steps.append(_record_step(axis, angle))
        u = rotation_unitary(axis.unit_vector(), angle) @ u
        fid = best
        iterations += 1

    merged = ir.merge_adjacent(steps)
    pulses, frame_phase = ir.absorb_virtual_z(merged)
    gate_unitary = ir.sequence_unitary(pulses)
    if frame_phase != 0.0:
        gate_unitary = rotation_unitary((0.0, 0.0, 1.0), frame_phase) @ gate_unitary
    epsilon = max(0.0, 1.0 - hs_fidelity(target, gate_unitary))
    if epsilon > config.eps_target + 1e-12:
        raise CompileError(
            f"post-pass error {epsilon} exceeds target {config.eps_target}",
            steps,
            fid,
        )
    elapsed = time.perf_counter() - t_start
    gate = ir.CompiledGate(
        pulses=tuple(pulses),
        frame_phase=frame_phase,
        epsilon=epsilon,
        distance=ir.distance(pulses),
        pulse_count=len(pulses),
        iterations=iterations,
        compile_time=elapsed,
    )
    report = CompileReport(
        achieved_epsilon=epsilon,
        iterations=iterations,
        damped_steps=damped,
        pre_pass_distance=ir.distance(steps),
        pre_pass_pulse_count=ir.pulse_count(steps),
        post_pass_distance=gate.distance,
        post_pass_pulse_count=gate.pulse_count,
        compile_time=elapsed,
    )
    return gate, report
