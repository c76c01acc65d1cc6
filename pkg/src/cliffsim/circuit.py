"""Circuit files: a `qubits N` header, then one gate per line.

    qubits 2
    h 1            # gate name, then 1-based wires
    cnot 1 2
    phase 2 1.5707963267948966

`phase` takes one angle parameter; `u2` takes eight (re/im pairs of the
matrix entries a, b, c, d, row major).  `#` starts a comment; blank lines
are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gates import GATE_SPECS, apply, build_gate
from .witt import SpinorState, WittContext, basis_state


@dataclass(frozen=True)
class GateOp:
    name: str
    wires: tuple[int, ...]
    params: tuple[float, ...] = ()


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[GateOp, ...]


class CircuitError(ValueError):
    """Parse or validation failure with a line/column location."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")


def _tokens(text_line: str) -> list[tuple[str, int]]:
    code = text_line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(code)]


def parse_circuit(text: str) -> Circuit:
    """Parse and validate a circuit file."""
    n_qubits: int | None = None
    ops: list[GateOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if n_qubits is None:
            if toks[0][0].lower() != "qubits":
                raise CircuitError("expected 'qubits N' header", lineno, toks[0][1])
            if len(toks) != 2:
                raise CircuitError("header must be exactly 'qubits N'", lineno, toks[0][1])
            word, col = toks[1]
            if not word.isdigit() or int(word) < 1:
                raise CircuitError(f"invalid qubit count {word!r}", lineno, col)
            n_qubits = int(word)
            continue
        name, col = toks[0]
        name = name.lower()
        spec = GATE_SPECS.get(name)
        if spec is None:
            raise CircuitError(f"unknown gate {name!r}", lineno, col)
        expected = 1 + spec.wires + spec.params
        if len(toks) != expected:
            raise CircuitError(
                f"gate {name!r} takes {spec.wires} wire(s) and {spec.params} parameter(s)",
                lineno,
                col,
            )
        wires = []
        for word, wcol in toks[1 : 1 + spec.wires]:
            if not word.isdigit():
                raise CircuitError(f"invalid wire {word!r}", lineno, wcol)
            w = int(word)
            if not 1 <= w <= n_qubits:
                raise CircuitError(f"wire {w} out of range 1..{n_qubits}", lineno, wcol)
            wires.append(w)
        if len(set(wires)) != len(wires):
            raise CircuitError(f"gate {name!r} requires distinct wires", lineno, col)
        params = []
        for word, pcol in toks[1 + spec.wires :]:
            try:
                params.append(float(word))
            except ValueError:
                raise CircuitError(f"invalid parameter {word!r}", lineno, pcol) from None
        ops.append(GateOp(name, tuple(wires), tuple(params)))
    if n_qubits is None:
        raise CircuitError("empty circuit file, expected 'qubits N' header", 1)
    return Circuit(n_qubits, tuple(ops))


def render_circuit(circuit: Circuit) -> str:
    """Text form that parses back to an identical circuit."""
    lines = [f"qubits {circuit.n_qubits}"]
    for op in circuit.ops:
        parts = [op.name, *map(str, op.wires), *(f"{p!r}" for p in op.params)]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_bits(text: str, n: int) -> tuple[int, ...]:
    """Bitstring like '010' into an MSB-first bit tuple."""
    if len(text) != n or any(c not in "01" for c in text):
        raise ValueError(f"expected a bitstring of {n} 0/1 characters, got {text!r}")
    return tuple(int(c) for c in text)


def run_clifford(circuit: Circuit, init_bits=None, strict: bool = False) -> SpinorState:
    """Evaluate the circuit in the Clifford-algebra backend."""
    ctx = WittContext(circuit.n_qubits, strict=strict)
    bits = tuple(init_bits) if init_bits is not None else (0,) * circuit.n_qubits
    state = basis_state(ctx, bits)
    for op in circuit.ops:
        state = apply(build_gate(ctx, op.name, op.wires, op.params), state)
    return state
