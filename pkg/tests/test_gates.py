"""Gate elements: golden forms, super tensor signs, unitarity, state action."""

import cmath
import math

import numpy as np
import pytest

from cliffsim.gates import (
    GATE_SPECS,
    apply,
    build_gate,
    exp_element,
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
    wire_coordinates,
)
from cliffsim.matrix_backend import random_unitary_2x2
from cliffsim.multivector import Multivector, hermitian_inner
from cliffsim.witt import (
    WittContext,
    amplitudes_to_state,
    basis_state,
    index_bits,
    spinor_inner,
    state_to_amplitudes,
)


@pytest.fixture
def ctx1():
    return WittContext(1)


@pytest.fixture
def ctx2():
    return WittContext(2)


@pytest.fixture
def ctx3():
    return WittContext(3)


class TestSingleQubitGoldenForms:
    def test_x_equals_first_generator(self, ctx1):
        g = gate_x(ctx1, 1)
        assert g.value.terms == (ctx1.fdag(1) + ctx1.f(1)).terms
        assert g.value.terms == Multivector.basis_vector(ctx1.signature, 1).terms

    def test_y_equals_minus_second_generator(self, ctx1):
        g = gate_y(ctx1, 1)
        assert g.value.terms == (1j * ctx1.fdag(1) - 1j * ctx1.f(1)).terms
        assert g.value.terms == (-Multivector.basis_vector(ctx1.signature, 2)).terms

    def test_z_equals_imaginary_bivector(self, ctx1):
        g = gate_z(ctx1, 1)
        assert g.value.terms == (ctx1.proj0(1) - ctx1.proj1(1)).terms
        e1 = Multivector.basis_vector(ctx1.signature, 1)
        e2 = Multivector.basis_vector(ctx1.signature, 2)
        assert g.value.terms == (1j * e1.outer(e2)).terms

    def test_x_flips_basis_states(self, ctx1):
        g = gate_x(ctx1, 1)
        assert apply(g, basis_state(ctx1, [0])).value.terms == basis_state(ctx1, [1]).value.terms
        assert apply(g, basis_state(ctx1, [1])).value.terms == basis_state(ctx1, [0]).value.terms

    def test_xz_product(self, ctx1):
        from cliffsim.gates import GateElement

        xz = gate_x(ctx1, 1).value * gate_z(ctx1, 1).value
        assert xz.terms == (ctx1.fdag(1) - ctx1.f(1)).terms
        # Z negates |1>, then X flips it: XZ|1> = -|0>
        flipped = apply(GateElement(1, xz), basis_state(ctx1, [1]))
        assert flipped.value.terms == (-basis_state(ctx1, [0]).value).terms

    def test_involutions(self, ctx1):
        one = {0: 1 + 0j}
        assert (gate_x(ctx1, 1).value * gate_x(ctx1, 1).value).terms == one
        assert (gate_y(ctx1, 1).value * gate_y(ctx1, 1).value).terms == one
        assert (gate_z(ctx1, 1).value * gate_z(ctx1, 1).value).terms == one


class TestPhaseGate:
    def test_zero_angle_is_identity(self, ctx1):
        assert gate_phase(ctx1, 1, 0.0).value.terms == {0: 1 + 0j}

    def test_pi_gives_z(self, ctx1):
        g = gate_phase(ctx1, 1, math.pi)
        assert g.value.max_coeff_diff(gate_z(ctx1, 1).value) < 1e-12

    def test_s_squares_to_z(self, ctx1):
        s = gate_phase(ctx1, 1, math.pi / 2)
        assert (s.value * s.value).max_coeff_diff(gate_z(ctx1, 1).value) < 1e-12


class TestHadamard:
    def test_witt_and_blade_forms(self, ctx1):
        g = gate_h(ctx1, 1)
        r = 1.0 / math.sqrt(2.0)
        expected = (ctx1.proj0(1) - ctx1.proj1(1) + ctx1.f(1) + ctx1.fdag(1)) * r
        assert g.value.max_coeff_diff(expected) < 1e-13
        e1 = Multivector.basis_vector(ctx1.signature, 1)
        e2 = Multivector.basis_vector(ctx1.signature, 2)
        assert g.value.max_coeff_diff(r * (e1 + 1j * e1.outer(e2))) < 1e-13

    def test_square_is_identity(self, ctx1):
        h = gate_h(ctx1, 1).value
        assert (h * h).max_coeff_diff(ctx1.one()) < 1e-13

    def test_action_on_zero(self, ctx1):
        amps = state_to_amplitudes(ctx1, apply(gate_h(ctx1, 1), basis_state(ctx1, [0])))
        r = 1.0 / math.sqrt(2.0)
        assert abs(amps[0] - r) < 1e-13 and abs(amps[1] - r) < 1e-13

    def test_from_exponential(self, ctx1):
        y = gate_y(ctx1, 1).value
        h = gate_x(ctx1, 1).value * exp_element(-1j * (math.pi / 4.0) * y)
        assert h.max_coeff_diff(gate_h(ctx1, 1).value) < 1e-13


class TestU2Correspondence:
    def test_identity_matrix(self, ctx1):
        g = gate_from_u2(ctx1, 1, [[1, 0], [0, 1]])
        assert g.value.terms == {0: 1 + 0j}

    def test_x_matrix(self, ctx1):
        g = gate_from_u2(ctx1, 1, [[0, 1], [1, 0]])
        assert g.value.terms == (ctx1.fdag(1) + ctx1.f(1)).terms

    def test_rejects_non_unitary(self, ctx1):
        with pytest.raises(ValueError):
            gate_from_u2(ctx1, 1, [[1, 0], [0, 2]])

    def test_random_unitaries_give_unitary_elements(self, ctx1):
        rng = np.random.default_rng(101)
        for _ in range(20):
            u = random_unitary_2x2(rng)
            g = gate_from_u2(ctx1, 1, u)
            assert is_unitary(g)
            # action agrees with the matrix on both basis states
            for col in (0, 1):
                state = apply(g, basis_state(ctx1, [col]))
                amps = state_to_amplitudes(ctx1, state)
                assert max(abs(a - b) for a, b in zip(amps, u[:, col])) < 1e-10

    def test_coefficient_conditions(self, ctx1):
        rng = np.random.default_rng(103)
        for _ in range(20):
            u = random_unitary_2x2(rng)
            g = gate_from_u2(ctx1, 1, u)
            a, b, c, d = wire_coordinates(ctx1, g.value, 1)
            assert abs(abs(a) ** 2 + abs(c) ** 2 - 1) < 1e-12
            assert abs(abs(b) ** 2 + abs(d) ** 2 - 1) < 1e-12
            assert abs(b.conjugate() * a + d.conjugate() * c) < 1e-12


class TestKetBra:
    def test_lowering_projector(self, ctx1):
        assert ketbra(ctx1, [0], [1]).terms == ctx1.f(1).terms

    def test_raising_projector(self, ctx1):
        assert ketbra(ctx1, [1], [0]).terms == ctx1.fdag(1).terms

    def test_completeness(self, ctx2):
        total = Multivector.zero(ctx2.signature)
        for k in range(4):
            bits = index_bits(k, 2)
            total = total + ketbra(ctx2, bits, bits)
        assert total.terms == {0: 1 + 0j}

    def test_length_mismatch(self, ctx2):
        with pytest.raises(ValueError):
            ketbra(ctx2, [0, 1], [1])


class TestSuperTensor:
    def test_x_tensor_y_printed_expansion(self, ctx2):
        f1, fd1 = ctx2.f(1), ctx2.fdag(1)
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        g = super_tensor(ctx2, [fd1 + f1, 1j * fd2 - 1j * f2])
        expected = 1j * (fd1 * fd2 - fd1 * f2 - f1 * fd2 + f1 * f2)
        assert g.value.terms == expected.terms

    def test_y_tensor_x_printed_expansion(self, ctx2):
        f1, fd1 = ctx2.f(1), ctx2.fdag(1)
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        g = super_tensor(ctx2, [1j * fd1 - 1j * f1, fd2 + f2])
        expected = 1j * (fd1 * fd2 + fd1 * f2 + f1 * fd2 + f1 * f2)
        assert g.value.terms == expected.terms

    def test_identity_tensor_x(self, ctx2):
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        g = super_tensor(ctx2, [None, fd2 + f2])
        expected = ctx2.proj0(1) * (fd2 + f2) - ctx2.proj1(1) * (fd2 + f2)
        assert g.value.terms == expected.terms

    def test_wrong_factor_count(self, ctx2):
        with pytest.raises(ValueError):
            super_tensor(ctx2, [None])

    def test_factor_outside_wire_rejected(self, ctx2):
        with pytest.raises(ValueError):
            super_tensor(ctx2, [ctx2.f(2), None])

    @pytest.mark.parametrize("n", [2, 3])
    def test_slotwise_action_oracle(self, n):
        # every choice of basis factors acts like the slot-wise product
        ctx = WittContext(n)
        basis_factors = [
            lambda k: ctx.proj0(k),
            lambda k: ctx.proj1(k),
            lambda k: ctx.f(k),
            lambda k: ctx.fdag(k),
        ]
        for combo in range(4 ** n):
            choices = [(combo >> (2 * k)) & 3 for k in range(n)]
            factors = [basis_factors[c](k + 1) for k, c in enumerate(choices)]
            g = super_tensor(ctx, factors)
            for idx in range(2 ** n):
                bits = index_bits(idx, n)
                state = basis_state(ctx, bits).value
                got = g.value * state
                slotwise = ctx.one()
                for k in range(1, n + 1):
                    local_state = ctx.fdag(k) * ctx.proj0(k) if bits[k - 1] else ctx.proj0(k)
                    slotwise = slotwise * (factors[k - 1] * local_state)
                assert got.terms == slotwise.terms

    def test_blade_super_commutation_randomized(self):
        # (eA eB)(eC eD) = (-1)^{|B||C|} (eA eC)(eB eD) for disjoint B, C
        rng = np.random.default_rng(107)
        sig = WittContext(3).signature
        for _ in range(50):
            b = int(rng.integers(0, 64))
            c = int(rng.integers(0, 64)) & ~b
            a = int(rng.integers(0, 64))
            d = int(rng.integers(0, 64))
            ea, eb, ec, ed = (Multivector(sig, {m: 1.0}) for m in (a, b, c, d))
            lhs = (ea * eb) * (ec * ed)
            sign = (-1) ** (bin(b).count("1") * bin(c).count("1"))
            rhs = sign * (ea * ec) * (eb * ed)
            assert lhs.terms == rhs.terms


class TestControlledGates:
    def test_cnot_closed_form(self, ctx2):
        f1, fd1 = ctx2.f(1), ctx2.fdag(1)
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        expected = f1 * fd1 - fd1 * f1 * (fd2 + f2)
        assert gate_cnot(ctx2, 1, 2).value.terms == expected.terms

    def test_cz_closed_form_and_decomposition(self, ctx2):
        f1, fd1 = ctx2.f(1), ctx2.fdag(1)
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        expected = f1 * fd1 + fd1 * f1 * (f2 * fd2 - fd2 * f2)
        got = gate_cz(ctx2, 1, 2).value
        assert got.terms == expected.terms
        # controlled decomposition through the public tensor constructor
        alt = (
            super_tensor(ctx2, [ctx2.proj0(1), None]).value
            + super_tensor(ctx2, [ctx2.proj1(1), ctx2.proj0(2) - ctx2.proj1(2)]).value
        )
        assert got.terms == alt.terms

    def test_swap_closed_form(self, ctx2):
        f1, fd1 = ctx2.f(1), ctx2.fdag(1)
        f2, fd2 = ctx2.f(2), ctx2.fdag(2)
        expected = f1 * fd1 * f2 * fd2 + fd1 * f1 * fd2 * f2 + fd1 * f2 - f1 * fd2
        assert gate_swap(ctx2, 1, 2).value.terms == expected.terms

    def test_swap_is_symmetric(self, ctx2):
        assert gate_swap(ctx2, 1, 2).value.terms == gate_swap(ctx2, 2, 1).value.terms

    def test_cnot_action_table(self, ctx2):
        g = gate_cnot(ctx2, 1, 2)
        table = {(0, 0): (0, 0), (0, 1): (0, 1), (1, 0): (1, 1), (1, 1): (1, 0)}
        for src, dst in table.items():
            got = apply(g, basis_state(ctx2, list(src)))
            assert got.value.terms == basis_state(ctx2, list(dst)).value.terms

    def test_swap_action(self, ctx2):
        g = gate_swap(ctx2, 1, 2)
        got = apply(g, basis_state(ctx2, [0, 1]))
        assert got.value.terms == basis_state(ctx2, [1, 0]).value.terms

    def test_reversed_control_matches_matrix(self, ctx2):
        # control on wire 2, target on wire 1
        from cliffsim.circuit import Circuit, GateOp
        from cliffsim.matrix_backend import compare_backends

        circuit = Circuit(2, (GateOp("h", (2,)), GateOp("cnot", (2, 1))))
        report = compare_backends(circuit)
        assert report.max_deviation < 1e-12

    def test_toffoli_closed_form(self, ctx3):
        fd1, f1 = ctx3.fdag(1), ctx3.f(1)
        fd2, f2 = ctx3.fdag(2), ctx3.f(2)
        fd3, f3 = ctx3.fdag(3), ctx3.f(3)
        expected = ctx3.one() + fd1 * f1 * fd2 * f2 * (f3 + fd3 - ctx3.one())
        assert gate_ccnot(ctx3, 1, 2, 3).value.terms == expected.terms

    def test_toffoli_action(self, ctx3):
        g = gate_ccnot(ctx3, 1, 2, 3)
        got = apply(g, basis_state(ctx3, [1, 1, 0]))
        assert got.value.terms == basis_state(ctx3, [1, 1, 1]).value.terms
        inert = apply(g, basis_state(ctx3, [0, 1, 0]))
        assert inert.value.terms == basis_state(ctx3, [0, 1, 0]).value.terms

    def test_cswap_closed_form_and_action(self, ctx3):
        fd1, f1 = ctx3.fdag(1), ctx3.f(1)
        fd2, f2 = ctx3.fdag(2), ctx3.f(2)
        fd3, f3 = ctx3.fdag(3), ctx3.f(3)
        expected = f1 * fd1 + fd1 * f1 * (
            f2 * fd2 * f3 * fd3 + fd2 * f2 * fd3 * f3 + fd2 * f3 - f2 * fd3
        )
        g = gate_cswap(ctx3, 1, 2, 3)
        assert g.value.terms == expected.terms
        got = apply(g, basis_state(ctx3, [1, 0, 1]))
        assert got.value.terms == basis_state(ctx3, [1, 1, 0]).value.terms

    def test_distinct_wire_validation(self, ctx2):
        with pytest.raises(ValueError):
            gate_cnot(ctx2, 1, 1)
        with pytest.raises(ValueError):
            gate_cnot(ctx2, 1, 3)


class TestUnitarity:
    def test_x_is_unitary(self, ctx1):
        assert is_unitary(gate_x(ctx1, 1))

    def test_bare_witt_element_is_not(self, ctx1):
        from cliffsim.gates import GateElement

        assert not is_unitary(GateElement(1, ctx1.f(1)))

    def test_all_named_gates_sweep(self):
        rng = np.random.default_rng(109)
        for n in (1, 2, 3):
            ctx = WittContext(n)
            for name, spec in GATE_SPECS.items():
                if spec.wires > n:
                    continue
                wires = tuple(range(1, spec.wires + 1))
                if spec.params == 0:
                    params = ()
                elif spec.params == 1:
                    params = (float(rng.uniform(0, 2 * math.pi)),)
                else:
                    u = random_unitary_2x2(rng)
                    params = tuple(
                        float(x)
                        for e in (u[0, 0], u[0, 1], u[1, 0], u[1, 1])
                        for x in (e.real, e.imag)
                    )
                assert is_unitary(build_gate(ctx, name, wires, params)), name

    def test_products_of_unitaries(self, ctx2):
        rng = np.random.default_rng(113)
        from cliffsim.gates import GateElement
        from cliffsim.matrix_backend import random_circuit

        for _ in range(5):
            circuit = random_circuit(rng, 2, 8)
            total = ctx2.one()
            for op in circuit.ops:
                total = build_gate(ctx2, op.name, op.wires, op.params).value * total
            assert is_unitary(GateElement(2, total))

    def test_hermitian_product_preserved(self, ctx2):
        rng = np.random.default_rng(127)
        u = random_unitary_2x2(rng)
        gates = [
            gate_cnot(ctx2, 1, 2),
            gate_h(ctx2, 2),
            gate_swap(ctx2, 1, 2),
            gate_from_u2(ctx2, 2, u),
        ]
        for g in gates:
            for _ in range(5):
                va = rng.normal(size=4) + 1j * rng.normal(size=4)
                vb = rng.normal(size=4) + 1j * rng.normal(size=4)
                x = amplitudes_to_state(ctx2, list(va))
                y = amplitudes_to_state(ctx2, list(vb))
                before = spinor_inner(ctx2, x, y)
                after = spinor_inner(ctx2, apply(g, x), apply(g, y))
                assert abs(before - after) < 1e-10


class TestApplication:
    def test_identity_gate(self, ctx2):
        g = gate_identity(ctx2)
        s = basis_state(ctx2, [1, 0])
        assert apply(g, s).value.terms == s.value.terms

    def test_double_hadamard_round_trip(self, ctx1):
        rng = np.random.default_rng(131)
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        s = amplitudes_to_state(ctx1, list(v))
        h = gate_h(ctx1, 1)
        back = apply(h, apply(h, s))
        assert back.value.max_coeff_diff(s.value) < 1e-12

    def test_qubit_count_mismatch(self, ctx1, ctx2):
        with pytest.raises(ValueError):
            apply(gate_x(ctx1, 1), basis_state(ctx2, [0, 0]))

    def test_phase_rotation_eigenvalue(self, ctx1):
        theta = 1.234
        gen = -0.5j * theta * gate_z(ctx1, 1).value
        rot = exp_element(gen)
        out = rot * basis_state(ctx1, [1]).value
        expected = cmath.exp(0.5j * theta) * basis_state(ctx1, [1]).value
        assert out.max_coeff_diff(expected) < 1e-12


class TestProbabilities:
    def test_basis_state(self, ctx1):
        probs = measure_probabilities(ctx1, basis_state(ctx1, [0]))
        assert probs == [1, 0]

    def test_hadamard_state(self, ctx1):
        probs = measure_probabilities(ctx1, apply(gate_h(ctx1, 1), basis_state(ctx1, [0])))
        assert abs(probs[0] - 0.5) < 1e-12 and abs(probs[1] - 0.5) < 1e-12

    def test_bell_state(self, ctx2):
        state = apply(gate_h(ctx2, 1), basis_state(ctx2, [0, 0]))
        state = apply(gate_cnot(ctx2, 1, 2), state)
        probs = measure_probabilities(ctx2, state)
        expected = [0.5, 0.0, 0.0, 0.5]
        assert max(abs(p - e) for p, e in zip(probs, expected)) < 1e-12

    def test_sums_to_state_norm(self, ctx2):
        rng = np.random.default_rng(137)
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        s = amplitudes_to_state(ctx2, list(v))
        total = sum(measure_probabilities(ctx2, s))
        norm = spinor_inner(ctx2, s, s)
        assert abs(total - norm.real) < 1e-10


class TestRegistry:
    def test_unknown_gate(self, ctx1):
        with pytest.raises(ValueError):
            build_gate(ctx1, "nope", (1,))

    def test_arity_validation(self, ctx2):
        with pytest.raises(ValueError):
            build_gate(ctx2, "cnot", (1,))
        with pytest.raises(ValueError):
            build_gate(ctx2, "phase", (1,), ())

    def test_registry_names(self):
        assert set(GATE_SPECS) == {
            "x", "y", "z", "h", "s", "phase", "u2",
            "cnot", "cz", "swap", "ccnot", "cswap",
        }
