"""Pulse-schedule intermediate representation.

A schedule is an ordered list of steps, index 0 applied first in time.
Two step kinds exist: physical XY-plane pulses (phase selects the axis,
angle the rotation) and virtual-Z frame shifts, which cost nothing on
hardware. Passes here are exact up to global phase:

  * merge_adjacent  -- folds adjacent same-line rotations together
  * absorb_virtual_z -- pushes every virtual-Z into the phases of later
    pulses, leaving physical pulses plus one trailing frame shift

Cost metrics follow the zero-cost virtual-Z accounting: distance sums
only physical pulse angles, pulse_count counts only physical pulses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .su2 import IDENTITY, mod_2pi, mod_pm_pi, rz, xy_rotation

# Canonical angles below this are dropped (pure global phase at double precision).
ANGLE_EPS = 1e-12
# Tolerance for recognizing equal / antipodal pulse phases when merging.
PHASE_EPS = 1e-12


@dataclass(frozen=True)
class VirtualZ:
    """Zero-cost z-axis frame shift by `alpha` radians."""

    alpha: float


@dataclass(frozen=True)
class XYPulse:
    """Physical rotation by `angle` about the XY-plane axis at `phase`."""

    phase: float
    angle: float


PulseStep = Union[VirtualZ, XYPulse]
PulseSequence = Sequence[PulseStep]


def canonical_xy(phase: float, angle: float) -> Optional[XYPulse]:
    """Canonical form: angle in (0, pi], phase in [0, 2*pi); None if trivial.

    A rotation by theta in (pi, 2*pi) equals (up to global phase) a rotation
    by 2*pi - theta about the antipodal axis.
    """
    a = mod_2pi(angle)
    if a > math.pi:
        a = 2.0 * math.pi - a
        phase = phase + math.pi
    if a < ANGLE_EPS:
        return None
    return XYPulse(mod_2pi(phase), a)


def canonical_virtual_z(alpha: float) -> Optional[VirtualZ]:
    """Canonical form: alpha in (-pi, pi], nonzero; None if trivial."""
    a = mod_pm_pi(alpha)
    if abs(a) < ANGLE_EPS:
        return None
    return VirtualZ(a)


def canonical_step(step: PulseStep) -> Optional[PulseStep]:
    if isinstance(step, VirtualZ):
        return canonical_virtual_z(step.alpha)
    return canonical_xy(step.phase, step.angle)


def step_unitary(step: PulseStep) -> np.ndarray:
    if isinstance(step, VirtualZ):
        return rz(step.alpha)
    return xy_rotation(step.phase, step.angle)


def sequence_unitary(steps: PulseSequence) -> np.ndarray:
    """Semantic unitary of a schedule; later steps left-multiply."""
    u = IDENTITY
    for step in steps:
        u = step_unitary(step) @ u
    return u


def _phase_delta(a: float, b: float) -> float:
    """Circular distance |a - b| folded into [0, pi]."""
    d = mod_2pi(a - b)
    return min(d, 2.0 * math.pi - d)


def _try_merge(a: PulseStep, b: PulseStep) -> Optional[Optional[PulseStep]]:
    """Merge rule for the adjacent pair (a then b), both canonical.

    Returns the merged canonical step, None when the pair cancels to a
    global phase, or the sentinel `_NO_RULE` when no rule applies.
    """
    if isinstance(a, VirtualZ) and isinstance(b, VirtualZ):
        return canonical_virtual_z(a.alpha + b.alpha)
    if isinstance(a, XYPulse) and isinstance(b, XYPulse):
        if _phase_delta(a.phase, b.phase) < PHASE_EPS:
            return canonical_xy(a.phase, a.angle + b.angle)
        if abs(_phase_delta(a.phase, b.phase) - math.pi) < PHASE_EPS:
            return canonical_xy(a.phase, a.angle - b.angle)
    return _NO_RULE


_NO_RULE = object()


def merge_adjacent(steps: PulseSequence) -> list[PulseStep]:
    """Fold adjacent same-line rotations to a fixpoint.

    Coaxial pulses add angles, antipodal-phase pulses subtract, virtual-Z
    angles add; trivial results are deleted. Unitary is preserved up to
    global phase and the step count never increases.
    """
    out: list[PulseStep] = []
    for raw in steps:
        step = canonical_step(raw)
        while step is not None and out:
            merged = _try_merge(out[-1], step)
            if merged is _NO_RULE:
                break
            out.pop()
            step = merged
        if step is not None:
            out.append(step)
    return out


def absorb_virtual_z(
    steps: PulseSequence, merge: bool = True
) -> tuple[list[XYPulse], float]:
    """Push all virtual-Z shifts into later pulse phases.

    A frame shift by z before a pulse at phase phi is equivalent to the
    pulse at phase phi - z followed by the same shift; scanning in time
    order leaves only physical pulses plus one trailing frame phase.
    Returns (pulses, frame_phase in [0, 2*pi)). With `merge` (default)
    the emitted pulses are re-merged, since absorption can make phases
    adjacent; pass merge=False to keep a fixed pulse pattern.
    """
    z_acc = 0.0
    pulses: list[XYPulse] = []
    for step in steps:
        if isinstance(step, VirtualZ):
            z_acc += step.alpha
        else:
            shifted = canonical_xy(step.phase - z_acc, step.angle)
            if shifted is not None:
                pulses.append(shifted)
    if merge:
        pulses = [p for p in merge_adjacent(pulses) if isinstance(p, XYPulse)]
    return pulses, mod_2pi(z_acc)


def distance(steps: Iterable[PulseStep]) -> float:
    """Total physical rotation distance; virtual-Z steps are free."""
    return sum(s.angle for s in steps if isinstance(s, XYPulse))


def pulse_count(steps: Iterable[PulseStep]) -> int:
    """Number of physical pulses; virtual-Z steps are free."""
    return sum(1 for s in steps if isinstance(s, XYPulse))


@dataclass(frozen=True)
class CompiledGate:
    """Physical schedule for one target gate plus its achieved metrics."""

    pulses: tuple[XYPulse, ...]
    frame_phase: float
    epsilon: float
    distance: float
    pulse_count: int
    iterations: int
    compile_time: float

    def unitary(self) -> np.ndarray:
        """Evaluate pulses followed by the trailing frame shift."""
        u = sequence_unitary(self.pulses)
        if self.frame_phase != 0.0:
            u = rz(self.frame_phase) @ u
        return u
