"""Dense statevector simulator used as an independent oracle.

Amplitude indexing is MSB first: wire 1 is the most significant bit of the
basis index.  Dense work is capped at 12 qubits.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .circuit import Circuit, GateOp, run_clifford
from .gates import GATE_SPECS
from .witt import state_to_amplitudes

MAX_DENSE_QUBITS = 12

_SQRT2_INV = 1.0 / math.sqrt(2.0)

_FIXED_MATRICES: dict[str, np.ndarray] = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "h": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "s": np.array([[1, 0], [0, 1j]], dtype=complex),
    "cnot": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "cz": np.diag([1, 1, 1, -1]).astype(complex),
    "swap": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


def gate_matrix(name: str, params=()) -> np.ndarray:
    """Unitary matrix of a registry gate (control wires first)."""
    if name in _FIXED_MATRICES:
        return _FIXED_MATRICES[name].copy()
    if name == "phase":
        (phi,) = params
        return np.array([[1, 0], [0, cmath.exp(1j * phi)]], dtype=complex)
    if name == "u2":
        p = list(params)
        return np.array(
            [
                [complex(p[0], p[1]), complex(p[2], p[3])],
                [complex(p[4], p[5]), complex(p[6], p[7])],
            ]
        )
    if name == "ccnot":
        m = np.eye(8, dtype=complex)
        m[[6, 7], :] = m[[7, 6], :]
        return m
    if name == "cswap":
        m = np.eye(8, dtype=complex)
        m[[5, 6], :] = m[[6, 5], :]
        return m
    raise ValueError(f"unknown gate {name!r}")


def kron_embed(gate: np.ndarray, wires, n: int) -> np.ndarray:
    """Embed a 2^k unitary acting on the given wires into the full 2^n space."""
    k = len(wires)
    if gate.shape != (2 ** k, 2 ** k):
        raise ValueError(f"gate shape {gate.shape} does not match {k} wire(s)")
    if len(set(wires)) != k:
        raise ValueError(f"wires must be distinct, got {tuple(wires)}")
    for w in wires:
        if not 1 <= w <= n:
            raise ValueError(f"wire {w} out of range 1..{n}")
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense embedding capped at {MAX_DENSE_QUBITS} qubits")
    dim = 2 ** n
    shifts = [n - w for w in wires]
    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        sub_in = 0
        for i, sh in enumerate(shifts):
            sub_in = (sub_in << 1) | ((col >> sh) & 1)
        base = col
        for sh in shifts:
            base &= ~(1 << sh)
        for sub_out in range(2 ** k):
            amp = gate[sub_out, sub_in]
            if amp == 0:
                continue
            row = base
            for i, sh in enumerate(shifts):
                if (sub_out >> (k - 1 - i)) & 1:
                    row |= 1 << sh
            out[row, col] += amp
    return out


def _apply_gate(vec: np.ndarray, gate: np.ndarray, wires, n: int) -> np.ndarray:
    k = len(wires)
    axes = [w - 1 for w in wires]
    rest = [a for a in range(n) if a not in axes]
    t = vec.reshape([2] * n).transpose(axes + rest).reshape(2 ** k, -1)
    t = gate @ t
    t = t.reshape([2] * n)
    inverse = np.argsort(axes + rest)
    return t.transpose(inverse).reshape(-1)


@dataclass
class MatrixState:
    n: int
    amplitudes: np.ndarray


def initial_vector(n: int, bits=None) -> np.ndarray:
    vec = np.zeros(2 ** n, dtype=complex)
    index = 0
    if bits is not None:
        if len(bits) != n:
            raise ValueError(f"expected {n} bits, got {len(bits)}")
        for b in bits:
            index = (index << 1) | int(b)
    vec[index] = 1.0
    return vec


def run_matrix(circuit: Circuit, init_bits=None) -> MatrixState:
    """Evaluate the circuit by sequential matrix-vector products."""
    n = circuit.n_qubits
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"matrix backend capped at {MAX_DENSE_QUBITS} qubits")
    vec = initial_vector(n, init_bits)
    for op in circuit.ops:
        if op.name not in GATE_SPECS:
            raise ValueError(f"unknown gate {op.name!r}")
        vec = _apply_gate(vec, gate_matrix(op.name, op.params), op.wires, n)
    return MatrixState(n, vec)


@dataclass
class BackendComparison:
    n_qubits: int
    gate_count: int
    max_deviation: float
    passed: bool
    clifford: np.ndarray = field(repr=False)
    matrix: np.ndarray = field(repr=False)


def compare_backends(circuit: Circuit, init_bits=None, tol: float = 1e-9) -> BackendComparison:
    """Run both backends and report the L-infinity amplitude deviation."""
    state = run_clifford(circuit, init_bits)
    cliff = np.asarray(state_to_amplitudes(state.ctx, state), dtype=complex)
    mat = run_matrix(circuit, init_bits).amplitudes
    dev = float(np.max(np.abs(cliff - mat))) if len(cliff) else 0.0
    return BackendComparison(
        n_qubits=circuit.n_qubits,
        gate_count=len(circuit.ops),
        max_deviation=dev,
        passed=dev < tol,
        clifford=cliff,
        matrix=mat,
    )


# -- random circuits and differential fuzzing --------------------------------------


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random U(2) via QR with phase fixing."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_circuit(rng: np.random.Generator, n_qubits: int, depth: int) -> Circuit:
    """Uniform draws from the gate registry with random wires and parameters."""
    names = [name for name, spec in GATE_SPECS.items() if spec.wires <= n_qubits]
    ops = []
    for _ in range(depth):
        name = names[int(rng.integers(len(names)))]
        spec = GATE_SPECS[name]
        wires = tuple(int(w) + 1 for w in rng.choice(n_qubits, size=spec.wires, replace=False))
        if name == "phase":
            params: tuple[float, ...] = (float(rng.uniform(0.0, 2.0 * math.pi)),)
        elif name == "u2":
            u = random_unitary_2x2(rng)
            params = tuple(
                float(x)
                for entry in (u[0, 0], u[0, 1], u[1, 0], u[1, 1])
                for x in (entry.real, entry.imag)
            )
        else:
            params = ()
        ops.append(GateOp(name, wires, params))
    return Circuit(n_qubits, tuple(ops))


@dataclass
class FuzzResult:
    index: int
    seed: int
    n_qubits: int
    gate_count: int
    max_deviation: float
    passed: bool


@dataclass
class FuzzReport:
    seed: int
    circuits: int
    max_qubits: int
    max_depth: int
    tol: float
    results: list[FuzzResult]
    failures: int
    max_deviation: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def run_fuzz(
    seed: int = 0,
    circuits: int = 200,
    max_qubits: int = 4,
    max_depth: int = 20,
    tol: float = 1e-9,
) -> FuzzReport:
    """Differential sweep of random circuits across both backends."""
    results = []
    worst = 0.0
    failures = 0
    for i in range(circuits):
        circuit_seed = seed * 1_000_003 + i
        rng = np.random.default_rng(circuit_seed)
        n = int(rng.integers(1, max_qubits + 1))
        depth = int(rng.integers(1, max_depth + 1))
        circuit = random_circuit(rng, n, depth)
        report = compare_backends(circuit, tol=tol)
        worst = max(worst, report.max_deviation)
        if not report.passed:
            failures += 1
        results.append(
            FuzzResult(i, circuit_seed, n, len(circuit.ops), report.max_deviation, report.passed)
        )
    return FuzzReport(seed, circuits, max_qubits, max_depth, tol, results, failures, worst)
