"""Command-line front-end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circuit import CircuitError, parse_bits, parse_circuit, run_clifford
from .gates import GATE_SPECS, build_gate
from .matrix_backend import compare_backends, run_fuzz, run_matrix
from .real_ga import bloch_angles, bloch_verify, iso_check
from .witt import WittContext, render_witt, state_to_amplitudes

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _print_amplitudes(amps, n: int) -> None:
    for k, a in enumerate(amps):
        label = format(k, f"0{n}b")
        print(f"|{label}>  {a.real:+.10f}{a.imag:+.10f}i")


def _print_probabilities(amps, n: int) -> None:
    for k, a in enumerate(amps):
        label = format(k, f"0{n}b")
        print(f"p(|{label}>) = {abs(a) ** 2:.10f}")


def cmd_run(args: argparse.Namespace) -> int:
    try:
        with open(args.circuit, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.circuit}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        circuit = parse_circuit(text)
        bits = parse_bits(args.init, circuit.n_qubits) if args.init else None
    except (CircuitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    n = circuit.n_qubits
    deviation = None
    if args.backend == "both":
        report = compare_backends(circuit, bits, tol=args.tol)
        amps = list(report.clifford)
        deviation = report.max_deviation
    elif args.backend == "matrix":
        amps = list(run_matrix(circuit, bits).amplitudes)
    else:
        state = run_clifford(circuit, bits)
        amps = state_to_amplitudes(state.ctx, state)

    if args.show_algebra:
        ctx = WittContext(n)
        for op in circuit.ops:
            g = build_gate(ctx, op.name, op.wires, op.params)
            loc = " ".join(map(str, op.wires))
            print(f"{op.name} {loc}: {render_witt(g.value, n)}")
        state = run_clifford(circuit, bits)
        print(f"state: {render_witt(state.value, n)}")
        print(f"state blades: {state.value.render()}")

    if args.json:
        payload = {
            "backend": args.backend,
            "amplitudes": [[a.real, a.imag] for a in amps],
            "probabilities": [abs(a) ** 2 for a in amps],
            "deviation": deviation,
        }
        print(json.dumps(payload))
    else:
        _print_amplitudes(amps, n)
        if args.probabilities:
            _print_probabilities(amps, n)
        if deviation is not None:
            verdict = "PASS" if deviation < args.tol else "FAIL"
            print(f"backend deviation max|d| = {deviation:.3e}  {verdict}")

    if deviation is not None and deviation >= args.tol:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    report = run_fuzz(
        seed=args.seed,
        circuits=args.circuits,
        max_qubits=args.max_qubits,
        max_depth=args.depth,
        tol=args.tol,
    )
    if args.json:
        payload = {
            "seed": report.seed,
            "circuits": report.circuits,
            "max_qubits": report.max_qubits,
            "depth": report.max_depth,
            "tol": report.tol,
            "failures": report.failures,
            "max_deviation": report.max_deviation,
            "results": [
                {
                    "index": r.index,
                    "seed": r.seed,
                    "qubits": r.n_qubits,
                    "gates": r.gate_count,
                    "deviation": r.max_deviation,
                    "pass": r.passed,
                }
                for r in report.results
            ],
        }
        print(json.dumps(payload))
    else:
        for r in report.results:
            verdict = "PASS" if r.passed else "FAIL"
            print(
                f"circuit {r.index:4d}  seed={r.seed}  n={r.n_qubits}  "
                f"gates={r.gate_count:2d}  max|d|={r.max_deviation:.3e}  {verdict}"
            )
        verdict = "PASS" if report.passed else "FAIL"
        print(
            f"fuzz summary: {report.circuits} circuits, {report.failures} failures, "
            f"max|d|={report.max_deviation:.3e}  {verdict}"
        )
    return EXIT_OK if report.passed else EXIT_VERIFY


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def cmd_bloch(args: argparse.Namespace) -> int:
    try:
        alpha = _parse_complex(args.alpha)
        beta = _parse_complex(args.beta)
        theta, phi = bloch_angles(alpha, beta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    x, y, z = bloch_verify(theta, phi)
    print(f"theta = {theta:.12f}")
    print(f"phi   = {phi:.12f}")
    print(f"point = ({x:+.12f}, {y:+.12f}, {z:+.12f})")
    return EXIT_OK


def cmd_iso_check(args: argparse.Namespace) -> int:
    report = iso_check()
    print(
        f"isomorphism check: {report.elements} elements, {report.pairs} products"
    )
    print(f"max product error: {report.max_product_error:.3e}")
    print(f"max dagger/reverse transport error: {report.max_dagger_error:.3e}")
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_gate_dump(args: argparse.Namespace) -> int:
    name = args.name.lower()
    spec = GATE_SPECS.get(name)
    if spec is None:
        print(f"error: unknown gate {args.name!r}", file=sys.stderr)
        return EXIT_USAGE
    wires = args.wires if args.wires else list(range(1, spec.wires + 1))
    if len(wires) != spec.wires:
        print(f"error: gate {name!r} takes {spec.wires} wire(s)", file=sys.stderr)
        return EXIT_USAGE
    n = args.qubits if args.qubits else max(wires)
    params: list[float] = []
    if spec.params == 1:
        params = [args.param if args.param is not None else 0.0]
    elif spec.params == 8:
        if args.u2 is None:
            print("error: u2 requires --u2 with 8 values", file=sys.stderr)
            return EXIT_USAGE
        params = args.u2
    try:
        ctx = WittContext(n)
        g = build_gate(ctx, name, wires, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{name} on wires {tuple(wires)} in {n} qubit(s):")
    print(f"  witt basis: {render_witt(g.value, n)}")
    print(f"  blades:     {g.value.render()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffsim",
        description="Quantum circuit simulation in complex Clifford algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a circuit file")
    run.add_argument("circuit", help="circuit file path")
    run.add_argument("--backend", choices=("clifford", "matrix", "both"), default="clifford")
    run.add_argument("--init", default=None, help="initial bitstring, MSB first")
    run.add_argument("--probabilities", action="store_true")
    run.add_argument("--show-algebra", action="store_true")
    run.add_argument("--json", action="store_true")
    run.add_argument("--tol", type=float, default=1e-9)
    run.set_defaults(func=cmd_run)

    fuzz = sub.add_parser("fuzz", help="differential test against the matrix backend")
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--circuits", type=int, default=200)
    fuzz.add_argument("--max-qubits", type=int, default=4)
    fuzz.add_argument("--depth", type=int, default=20)
    fuzz.add_argument("--tol", type=float, default=1e-9)
    fuzz.add_argument("--json", action="store_true")
    fuzz.set_defaults(func=cmd_fuzz)

    bloch = sub.add_parser("bloch", help="Bloch angles and rotation check")
    bloch.add_argument("alpha", help="complex amplitude, e.g. 0.6 or 0.6+0.8j")
    bloch.add_argument("beta")
    bloch.set_defaults(func=cmd_bloch)

    iso = sub.add_parser("iso-check", help="verify the real-algebra isomorphism")
    iso.set_defaults(func=cmd_iso_check)

    dump = sub.add_parser("gate-dump", help="print a gate in the Witt basis")
    dump.add_argument("name")
    dump.add_argument("--wires", type=int, nargs="+", default=None)
    dump.add_argument("--qubits", type=int, default=None)
    dump.add_argument("--param", type=float, default=None, help="angle for phase")
    dump.add_argument("--u2", type=float, nargs=8, default=None, help="re/im pairs of a b c d")
    dump.set_defaults(func=cmd_gate_dump)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
