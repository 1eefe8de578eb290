"""Command-line front end.

Subcommands::

    cvgauss run CIRCUIT [--seed N] [--out STATE]
    cvgauss fidelity STATE_A STATE_B
    cvgauss overlap STATE_A STATE_B
    cvgauss purity STATE
    cvgauss wigner STATE [--mode K] [--range R] [--points N] [--out CSV]
    cvgauss sample STATE [--mode K] [--phi PHI] [--count N] [--seed N]

Exit status is 0 on success, 2 for invalid input (bad arguments, malformed
or inconsistent files, unphysical states) and 1 for failures while
computing (for example a degenerate homodyne measurement).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .circuit import CircuitRunError, parse_circuit, run_circuit, run_metadata
from .core import GaussianError, purity, require_physical
from .fidelity import FidelityError, fidelity, fidelity_path
from .measurement import DegenerateMeasurementError, sample_outcomes
from .phasespace import overlap, wigner_grid
from .serialization import dumps_state, read_json_file, read_state

EXIT_RUNTIME = 1
EXIT_INVALID = 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_run(args) -> None:
    spec = parse_circuit(read_json_file(args.circuit), args.circuit)
    state, log = run_circuit(spec, seed=args.seed)
    _emit(dumps_state(state, run_metadata(log, args.seed)), args.out)


def _pair(args):
    a, _ = read_state(args.state_a)
    b, _ = read_state(args.state_b)
    require_physical(a, args.state_a)
    require_physical(b, args.state_b)
    return a, b


def cmd_fidelity(args) -> None:
    a, b = _pair(args)
    value = fidelity(a, b)
    print(f"{value:.12f} {fidelity_path(a, b)}")


def cmd_overlap(args) -> None:
    a, b = _pair(args)
    print(repr(overlap(a, b)))


def cmd_purity(args) -> None:
    state, _ = read_state(args.state)
    require_physical(state, args.state)
    print(repr(purity(state)))


def cmd_wigner(args) -> None:
    state, _ = read_state(args.state)
    x, p, W = wigner_grid(state, args.mode, args.range, args.points)
    lines = ["x,p,W"]
    for i, xi in enumerate(x):
        for j, pj in enumerate(p):
            lines.append(f"{float(xi)!r},{float(pj)!r},{float(W[i, j])!r}")
    _emit("\n".join(lines) + "\n", args.out)


def cmd_sample(args) -> None:
    state, _ = read_state(args.state)
    require_physical(state, args.state)
    samples = sample_outcomes(state, args.mode, args.phi, args.count, args.seed)
    sys.stdout.write("".join(f"{float(u)!r}\n" for u in samples))


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cvgauss", description="Gaussian-state phase-space calculations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a circuit file and write the final state")
    p.add_argument("circuit")
    p.add_argument("--seed", type=_non_negative_int, default=0, help="master seed for sampled measurements")
    p.add_argument("--out", help="output state file (default: standard output)")
    p.set_defaults(func=cmd_run)

    for name, func, help_ in (
        ("fidelity", cmd_fidelity, "fidelity between two state files"),
        ("overlap", cmd_overlap, "Tr[rho_1 rho_2] for two state files"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("state_a")
        p.add_argument("state_b")
        p.set_defaults(func=func)

    p = sub.add_parser("purity", help="purity of a state file")
    p.add_argument("state")
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("wigner", help="single-mode Wigner function on a grid, as CSV")
    p.add_argument("state")
    p.add_argument("--mode", type=_non_negative_int, default=0)
    p.add_argument("--range", type=float, default=5.0, help="grid covers [-range, range] on both axes")
    p.add_argument("--points", type=int, default=101, help="grid points per axis (>= 2)")
    p.add_argument("--out", help="output CSV file (default: standard output)")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("sample", help="sample homodyne outcomes, one per line")
    p.add_argument("state")
    p.add_argument("--mode", type=_non_negative_int, default=0)
    p.add_argument("--phi", type=float, default=0.0, help="quadrature angle: cos(phi) x + sin(phi) p")
    p.add_argument("--count", type=_non_negative_int, default=1)
    p.add_argument("--seed", type=_non_negative_int, default=0)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CircuitRunError, DegenerateMeasurementError, FidelityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (GaussianError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
