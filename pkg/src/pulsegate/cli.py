"""Command-line front end and serialization formats.

Subcommands:
    compile  -- compile one gate (greedy or two-pulse baseline) to JSON/text
    bench    -- run the (n_axes, eps_target) sweep over the 128-gate dataset
    verify   -- independently re-evaluate a schedule file against a target

Exit codes: 0 ok, 1 operational failure, 2 usage error.

Schedule files are JSON with fixed keys and floats printed to 17
significant digits, so serialize -> parse -> serialize is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bench, ir
from .greedy import CompileError, GreedyConfig, allowed_axes, greedy_compile
from .su2 import euler_matrix, hs_fidelity, is_unitary, rotation_unitary
from .u3 import u3_compile

NAMED_GATES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    "SX": np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2,
}


class GateSpecError(ValueError):
    """Unresolvable gate specification (usage error)."""


@dataclass(frozen=True)
class GateSpec:
    """A resolved target gate plus the JSON form it was given in."""

    description: dict
    unitary: np.ndarray


def _parse_floats(text: str, n: int, what: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != n:
        raise GateSpecError(f"{what} needs {n} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise GateSpecError(f"malformed number in {what}: {exc}") from exc


def _matrix_from_json(data) -> np.ndarray:
    """Accept [[a, b], [c, d]] with entries as numbers or [re, im] pairs."""

    def entry(x) -> complex:
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, list) and len(x) == 2:
            return complex(float(x[0]), float(x[1]))
        raise GateSpecError(f"matrix entry must be a number or [re, im] pair: {x!r}")

    if not (isinstance(data, list) and len(data) == 2 and all(len(r) == 2 for r in data)):
        raise GateSpecError("matrix must be 2x2")
    return np.array([[entry(x) for x in row] for row in data])


def resolve_gate_spec(args) -> GateSpec:
    """Resolve the --gate/--euler/--axis/--matrix flags to a unitary."""
    given = [
        name
        for name, value in [
            ("--gate", args.gate),
            ("--euler", args.euler),
            ("--axis", args.axis),
            ("--matrix", args.matrix),
            ("--matrix-file", args.matrix_file),
        ]
        if value is not None
    ]
    if len(given) != 1:
        raise GateSpecError("specify exactly one of --gate/--euler/--axis/--matrix/--matrix-file")
    if args.gate is not None:
        name = args.gate.upper()
        if name not in NAMED_GATES:
            raise GateSpecError(f"unknown gate {args.gate!r}; known: {', '.join(NAMED_GATES)}")
        return GateSpec({"gate": name}, NAMED_GATES[name])
    if args.euler is not None:
        theta, phi, lam = _parse_floats(args.euler, 3, "--euler")
        return GateSpec({"euler": [theta, phi, lam]}, euler_matrix(theta, phi, lam))
    if args.axis is not None:
        if args.angle is None:
            raise GateSpecError("--axis requires --angle")
        nx, ny, nz = _parse_floats(args.axis, 3, "--axis")
        try:
            u = rotation_unitary((nx, ny, nz), args.angle)
        except ValueError as exc:
            raise GateSpecError(str(exc)) from exc
        return GateSpec({"axis": [nx, ny, nz], "angle": args.angle}, u)
    if args.matrix is not None:
        try:
            data = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise GateSpecError(f"malformed --matrix JSON: {exc}") from exc
    else:
        try:
            with open(args.matrix_file) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise GateSpecError(f"cannot read matrix file: {exc}") from exc
    u = _matrix_from_json(data)
    if not is_unitary(u):
        raise GateSpecError("matrix is not unitary within 1e-9")
    return GateSpec({"matrix": [[[x.real, x.imag] for x in row] for row in u]}, u)


def gate_spec_from_json(description: dict) -> GateSpec:
    """Rebuild a GateSpec from the `target` object of a schedule file."""
    if "gate" in description:
        name = description["gate"]
        if name not in NAMED_GATES:
            raise GateSpecError(f"unknown gate {name!r}")
        return GateSpec({"gate": name}, NAMED_GATES[name])
    if "euler" in description:
        theta, phi, lam = (float(x) for x in description["euler"])
        return GateSpec(description, euler_matrix(theta, phi, lam))
    if "axis" in description:
        u = rotation_unitary(description["axis"], float(description["angle"]))
        return GateSpec(description, u)
    if "matrix" in description:
        u = _matrix_from_json(description["matrix"])
        if not is_unitary(u):
            raise GateSpecError("embedded matrix is not unitary within 1e-9")
        return GateSpec(description, u)
    raise GateSpecError(f"unrecognized target spec: {description!r}")


# ---------------------------------------------------------------------------
# canonical JSON (17 significant digits, fixed key order, byte-stable)


def _fmt_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt_value(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_fmt_value(v)}" for k, v in x.items()) + "}"
    raise TypeError(f"cannot serialize {type(x)}")


def canonical_json(obj: dict) -> str:
    return _fmt_value(obj) + "\n"


def schedule_to_json(
    spec: GateSpec, n_axes: int, eps_target: float, gate: ir.CompiledGate
) -> str:
    return canonical_json(
        {
            "target": spec.description,
            "n_axes": n_axes,
            "eps_target": eps_target,
            "pulses": [{"phase_rad": p.phase, "angle_rad": p.angle} for p in gate.pulses],
            "frame_phase_rad": gate.frame_phase,
            "epsilon": gate.epsilon,
            "distance_rad": gate.distance,
            "pulse_count": gate.pulse_count,
            "iterations": gate.iterations,
            "compile_time_s": gate.compile_time,
        }
    )


def schedule_to_text(gate: ir.CompiledGate) -> str:
    lines = []
    for i, p in enumerate(gate.pulses):
        lines.append(f"pulse {i}: phase {p.phase:.12g} rad, angle {p.angle:.12g} rad")
    lines.append(f"frame phase: {gate.frame_phase:.12g} rad")
    lines.append(f"epsilon:     {gate.epsilon:.6g}")
    lines.append(f"distance:    {gate.distance:.12g} rad")
    lines.append(f"pulse count: {gate.pulse_count}")
    lines.append(f"iterations:  {gate.iterations}")
    lines.append(f"time:        {gate.compile_time:.6g} s")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _add_gate_spec_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--gate", help="named gate: " + ", ".join(NAMED_GATES))
    p.add_argument("--euler", metavar="T,P,L", help="ZXZ Euler angles in radians")
    p.add_argument("--axis", metavar="NX,NY,NZ", help="rotation axis (unit vector)")
    p.add_argument("--angle", type=float, help="rotation angle for --axis, radians")
    p.add_argument("--matrix", help="inline 2x2 matrix as JSON")
    p.add_argument("--matrix-file", help="path to a JSON 2x2 matrix")
    p.set_defaults(gate_spec_required=required)


def cmd_compile(args) -> int:
    spec = resolve_gate_spec(args)
    if not 0.0 < args.epsilon < 1.0:
        raise GateSpecError("--epsilon must be in (0, 1)")
    if args.baseline:
        gate, _ = u3_compile(spec.unitary)
        n_axes = 0
    else:
        axes = allowed_axes(args.axes)
        config = GreedyConfig(eps_target=args.epsilon)
        try:
            gate, _ = greedy_compile(spec.unitary, axes, config)
        except CompileError as exc:
            print(
                f"error: compilation failed: {exc} "
                f"(best fidelity {exc.fidelity:.12g}, {len(exc.steps)} steps)",
                file=sys.stderr,
            )
            return 1
        n_axes = args.axes
    if args.format == "json":
        sys.stdout.write(schedule_to_json(spec, n_axes, args.epsilon, gate))
    else:
        sys.stdout.write(schedule_to_text(gate))
    return 0


def cmd_bench(args) -> int:
    try:
        axes_list = [int(x) for x in args.axes_list.split(",")]
        lo, hi = (int(x) for x in args.eps_decades.split(":"))
    except ValueError as exc:
        raise GateSpecError(f"malformed bench arguments: {exc}") from exc
    if not axes_list or lo < 1 or hi < lo:
        raise GateSpecError("need a non-empty axes list and eps decades LO:HI with 1 <= LO <= HI")
    eps_list = [10.0 ** (-k) for k in range(lo, hi + 1)]
    rows = bench.run_sweep(axes_list, eps_list)
    header = "n_axes,eps_target,eps_mean,dist_mean,pulses_mean,time_mean_s,failures"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.n_axes},{r.eps_target:.17g},{r.eps_mean:.17g},{r.dist_mean:.17g},"
            f"{r.pulses_mean:.17g},{r.time_mean_s:.17g},{r.failures}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.schedule) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read schedule: {exc}", file=sys.stderr)
        return 1
    given = any(x is not None for x in (args.gate, args.euler, args.axis, args.matrix, args.matrix_file))
    spec = resolve_gate_spec(args) if given else gate_spec_from_json(doc["target"])
    pulses = [ir.XYPulse(float(p["phase_rad"]), float(p["angle_rad"])) for p in doc["pulses"]]
    steps: list[ir.PulseStep] = list(pulses)
    frame = float(doc["frame_phase_rad"])
    if frame != 0.0:
        steps.append(ir.VirtualZ(frame))
    u = ir.sequence_unitary(steps)
    eps = max(0.0, 1.0 - hs_fidelity(spec.unitary, u))
    declared = float(doc["epsilon"])
    ok = eps <= declared + 1e-12
    print(f"achieved epsilon: {eps:.17g} (declared {declared:.17g}) -> {'OK' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pulsegate",
        description="Compile single-qubit gates to XY-plane pulses plus virtual-Z frame shifts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile one gate")
    _add_gate_spec_flags(p_compile, required=True)
    p_compile.add_argument("--axes", type=int, default=18, help="number of allowed axes (default 18)")
    p_compile.add_argument("--epsilon", type=float, default=1e-4, help="target gate error (default 1e-4)")
    p_compile.add_argument("--baseline", action="store_true", help="use the fixed two-pulse baseline")
    p_compile.add_argument("--format", choices=("json", "text"), default="json")
    p_compile.set_defaults(func=cmd_compile)

    p_bench = sub.add_parser("bench", help="run the benchmark sweep")
    p_bench.add_argument("--axes-list", default="6,10,18,34", help="comma-separated axis counts")
    p_bench.add_argument("--eps-decades", default="1:8", help="eps range as LO:HI decades (10^-LO..10^-HI)")
    p_bench.add_argument("--out", help="CSV output path (default stdout)")
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify", help="re-evaluate a schedule file")
    p_verify.add_argument("--schedule", required=True, help="schedule JSON path")
    _add_gate_spec_flags(p_verify, required=False)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GateSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
