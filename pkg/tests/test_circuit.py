"""Circuit file parsing, validation diagnostics, round-tripping."""

import math

import pytest

from cliffsim.circuit import (
    Circuit,
    CircuitError,
    GateOp,
    parse_bits,
    parse_circuit,
    render_circuit,
    run_clifford,
)
from cliffsim.witt import state_to_amplitudes


class TestParsing:
    def test_bell_circuit(self):
        circuit = parse_circuit("qubits 2\nh 1\ncnot 1 2\n")
        assert circuit == Circuit(2, (GateOp("h", (1,)), GateOp("cnot", (1, 2))))

    def test_phase_parameter(self):
        circuit = parse_circuit("qubits 1\nphase 1 1.5707963\n")
        assert circuit.ops[0] == GateOp("phase", (1,), (1.5707963,))

    def test_comments_and_blank_lines(self):
        text = "\n# a comment\nqubits 1\n\nx 1  # inline comment\n\n"
        circuit = parse_circuit(text)
        assert circuit == Circuit(1, (GateOp("x", (1,)),))

    def test_case_insensitive_names(self):
        circuit = parse_circuit("QUBITS 2\nH 1\nCNOT 1 2\n")
        assert circuit.ops[0].name == "h"

    def test_u2_takes_eight_params(self):
        text = "qubits 1\nu2 1 0 0 0 0 0 0 1 0\n"
        circuit = parse_circuit(text)
        assert circuit.ops[0].params == (0, 0, 0, 0, 0, 0, 1, 0)


class TestDiagnostics:
    def test_wire_out_of_range(self):
        with pytest.raises(CircuitError) as exc:
            parse_circuit("qubits 2\ncnot 1 3\n")
        assert exc.value.line == 2
        assert "out of range" in str(exc.value)

    def test_unknown_gate(self):
        with pytest.raises(CircuitError) as exc:
            parse_circuit("qubits 2\nfoo 1\n")
        assert exc.value.line == 2

    def test_arity_mismatch(self):
        with pytest.raises(CircuitError):
            parse_circuit("qubits 2\ncnot 1\n")

    def test_bad_parameter(self):
        with pytest.raises(CircuitError) as exc:
            parse_circuit("qubits 1\nphase 1 fast\n")
        assert "parameter" in str(exc.value)

    def test_duplicate_wires(self):
        with pytest.raises(CircuitError):
            parse_circuit("qubits 2\nswap 1 1\n")

    def test_missing_header(self):
        with pytest.raises(CircuitError):
            parse_circuit("x 1\n")

    def test_empty_file(self):
        with pytest.raises(CircuitError):
            parse_circuit("")

    def test_bad_qubit_count(self):
        with pytest.raises(CircuitError):
            parse_circuit("qubits zero\n")

    def test_column_reported(self):
        with pytest.raises(CircuitError) as exc:
            parse_circuit("qubits 2\ncnot 1 9\n")
        assert exc.value.column == 8


class TestRoundTrip:
    def test_parse_render_parse(self):
        text = (
            "qubits 3\n"
            "h 1\n"
            "phase 2 0.7853981633974483\n"
            "cnot 1 3\n"
            "ccnot 1 2 3\n"
            "u2 2 0.6 0.0 0.0 0.8 0.0 0.8 0.6 0.0\n"
        )
        first = parse_circuit(text)
        second = parse_circuit(render_circuit(first))
        assert first == second

    def test_render_starts_with_header(self):
        circuit = Circuit(2, (GateOp("x", (2,)),))
        assert render_circuit(circuit).splitlines()[0] == "qubits 2"


class TestBits:
    def test_parse_bits(self):
        assert parse_bits("010", 3) == (0, 1, 0)

    def test_parse_bits_validation(self):
        with pytest.raises(ValueError):
            parse_bits("01", 3)
        with pytest.raises(ValueError):
            parse_bits("012", 3)


class TestRunClifford:
    def test_bell_amplitudes(self):
        circuit = parse_circuit("qubits 2\nh 1\ncnot 1 2\n")
        state = run_clifford(circuit)
        amps = state_to_amplitudes(state.ctx, state)
        r = 1 / math.sqrt(2)
        expected = [r, 0, 0, r]
        assert max(abs(a - e) for a, e in zip(amps, expected)) < 1e-12

    def test_initial_bits(self):
        circuit = parse_circuit("qubits 2\ncnot 1 2\n")
        state = run_clifford(circuit, init_bits=(1, 0))
        amps = state_to_amplitudes(state.ctx, state)
        assert abs(amps[3] - 1) < 1e-12

    def test_strict_mode_runs(self):
        circuit = parse_circuit("qubits 2\nh 1\ncnot 1 2\nswap 1 2\n")
        state = run_clifford(circuit, strict=True)
        assert abs(sum(abs(a) ** 2 for a in state_to_amplitudes(state.ctx, state)) - 1) < 1e-10
