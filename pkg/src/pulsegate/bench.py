"""Benchmark harness: evaluation dataset, parameter sweep and log-model fits.

The dataset is a deterministic grid of 128 targets, each a rotation
about x followed by a rotation about z. The sweep compiles the whole
dataset for every (n_axes, eps_target) pair and aggregates achieved
error, rotation distance, pulse count and wall-clock compile time.
Pulse count and runtime are expected to grow linearly in log10(1/eps),
which fit_log_model quantifies.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .greedy import CompileError, GreedyConfig, allowed_axes, greedy_compile
from .ir import CompiledGate
from .su2 import compose, rx, rz

DEFAULT_AXES_LIST = (6, 10, 18, 34)
DEFAULT_EPS_LIST = tuple(10.0 ** (-k) for k in range(1, 9))


class InsufficientDataError(ValueError):
    """Too few points for a least-squares fit."""


@dataclass(frozen=True)
class EvalTarget:
    """One benchmark target: X rotation by theta, then Z rotation by varphi."""

    theta: float
    varphi: float
    unitary: np.ndarray


@dataclass(frozen=True)
class SweepRow:
    """Aggregate metrics for one (n_axes, eps_target) cell."""

    n_axes: int
    eps_target: float
    eps_mean: float
    dist_mean: float
    pulses_mean: float
    time_mean_s: float
    failures: int


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r2: float


def evaluation_dataset(z_first: bool = False) -> list[EvalTarget]:
    """The 128-gate grid: theta = k*pi/7 (k = 0..7), varphi = 2*pi*j/16 (j = 0..15).

    Targets apply the x rotation first and the z rotation second; pass
    z_first=True to flip the order for sensitivity checks. Order is
    theta-major.
    """
    targets = []
    for k in range(8):
        theta = k * math.pi / 7.0
        for j in range(16):
            varphi = 2.0 * math.pi * j / 16.0
            if z_first:
                u = compose(rz(varphi), rx(theta))
            else:
                u = compose(rx(theta), rz(varphi))
            targets.append(EvalTarget(theta, varphi, u))
    return targets


def run_sweep(
    axes_list: Sequence[int] = DEFAULT_AXES_LIST,
    eps_list: Sequence[float] = DEFAULT_EPS_LIST,
    dataset: Sequence[EvalTarget] | None = None,
    max_iters: int = 10_000,
    keep_gates: bool = False,
) -> list[SweepRow] | tuple[list[SweepRow], dict]:
    """Compile the dataset for every (n_axes, eps_target) pair.

    Failures (stall or iteration budget) are counted per row and excluded
    from the means. With keep_gates=True also returns the per-gate
    CompiledGate lists keyed by (n_axes, eps_target), for verification.
    """
    if dataset is None:
        dataset = evaluation_dataset()
    rows: list[SweepRow] = []
    gates: dict[tuple[int, float], list[CompiledGate | None]] = {}
    for n_axes in axes_list:
        axes = allowed_axes(n_axes)
        for eps in eps_list:
            config = GreedyConfig(eps_target=eps, max_iters=max_iters)
            eps_sum = dist_sum = pulses_sum = time_sum = 0.0
            failures = 0
            cell: list[CompiledGate | None] = []
            for target in dataset:
                t0 = time.perf_counter()
                try:
                    gate, _ = greedy_compile(target.unitary, axes, config)
                except CompileError:
                    failures += 1
                    cell.append(None)
                    continue
                elapsed = time.perf_counter() - t0
                eps_sum += gate.epsilon
                dist_sum += gate.distance
                pulses_sum += gate.pulse_count
                time_sum += elapsed
                cell.append(gate)
            ok = len(dataset) - failures
            rows.append(
                SweepRow(
                    n_axes=n_axes,
                    eps_target=eps,
                    eps_mean=eps_sum / ok if ok else math.nan,
                    dist_mean=dist_sum / ok if ok else math.nan,
                    pulses_mean=pulses_sum / ok if ok else math.nan,
                    time_mean_s=time_sum / ok if ok else math.nan,
                    failures=failures,
                )
            )
            if keep_gates:
                gates[(n_axes, eps)] = cell
    if keep_gates:
        return rows, gates
    return rows


def fit_log_model(eps_targets: Sequence[float], ys: Sequence[float]) -> FitResult:
    """Ordinary least squares of y = slope * log10(1/eps) + intercept."""
    if len(eps_targets) < 3 or len(ys) != len(eps_targets):
        raise InsufficientDataError("need at least 3 matched (eps, y) points")
    if any(not 0.0 < e < 1.0 for e in eps_targets):
        raise ValueError("eps_targets must lie in (0, 1)")
    x = np.log10(1.0 / np.asarray(eps_targets, dtype=float))
    y = np.asarray(ys, dtype=float)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return FitResult(slope=0.0, intercept=float(y.mean()), r2=1.0)
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    r2 = 1.0 - float(np.sum(residuals**2)) / ss_tot
    return FitResult(slope=float(slope), intercept=float(intercept), r2=r2)
