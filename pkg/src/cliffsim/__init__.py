"""Quantum circuit simulation in complex Clifford algebras.

States are elements of the left ideal generated by the primitive idempotent
of the Witt basis; gates are unitary algebra elements acting by left
multiplication.  A dense matrix statevector simulator is included as an
independent oracle for differential testing.
"""

from .circuit import Circuit, CircuitError, GateOp, parse_circuit, render_circuit, run_clifford
from .gates import (
    GATE_SPECS,
    GateElement,
    apply,
    build_gate,
    gate_ccnot,
    gate_cnot,
    gate_cswap,
    gate_cz,
    gate_from_u2,
    gate_h,
    gate_identity,
    gate_phase,
    gate_swap,
    gate_x,
    gate_y,
    gate_z,
    is_unitary,
    ketbra,
    measure_probabilities,
    super_tensor,
)
from .matrix_backend import (
    BackendComparison,
    MatrixState,
    compare_backends,
    gate_matrix,
    kron_embed,
    random_circuit,
    run_fuzz,
    run_matrix,
)
from .multivector import (
    Multivector,
    Signature,
    blade_product,
    exp_element,
    hermitian_inner,
)
from .witt import (
    SpinorState,
    WittContext,
    amplitudes_to_state,
    basis_state,
    is_spinor,
    render_witt,
    spinor_inner,
    state_to_amplitudes,
    witt_coordinates,
)

__version__ = "0.1.0"
