"""Quantum gates as unitary elements of the 2n-generator complex Clifford algebra.

Single-wire operators live in the four-dimensional span of
(f_k f_k^dagger, f_k, f_k^dagger, f_k^dagger f_k); multi-wire gates are
signed super tensor products of such factors.  The sign of a product word
picks up -1 for every odd factor (f_i or f_i^dagger) preceded by a factor
of type f_l or f_l^dagger f_l on an earlier wire, which makes the geometric
product of the word act on product states exactly like the ordinary tensor
product of the factors.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .multivector import Multivector, exp_element
from .witt import SpinorState, WittContext, basis_state, index_bits, is_spinor, spinor_inner

UNITARY_TOL = 1e-10

__all__ = [
    "GateElement",
    "GateSpec",
    "GATE_SPECS",
    "apply",
    "build_gate",
    "exp_element",
    "gate_ccnot",
    "gate_cnot",
    "gate_cswap",
    "gate_cz",
    "gate_from_u2",
    "gate_h",
    "gate_identity",
    "gate_phase",
    "gate_swap",
    "gate_x",
    "gate_y",
    "gate_z",
    "is_unitary",
    "ketbra",
    "measure_probabilities",
    "super_tensor",
    "wire_coordinates",
]


@dataclass
class GateElement:
    """An algebra element used as an operator, with a cached unitarity verdict."""

    n: int
    value: Multivector
    _unitary: bool | None = field(default=None, repr=False, compare=False)


def wire_coordinates(ctx: WittContext, factor: Multivector, k: int) -> tuple[complex, complex, complex, complex]:
    """Coordinates (a, b, c, d) of a wire-k operator on (f f^dag, f, f^dag, f^dag f).

    Raises if the factor touches generators outside wire k.
    """
    ctx._check_wire(k)
    n = ctx.n
    e_bit = 1 << (k - 1)
    en_bit = 1 << (k + n - 1)
    allowed = e_bit | en_bit
    for mask in factor.terms:
        if mask & ~allowed:
            raise ValueError(f"factor for wire {k} is supported outside its wire")
    s = factor.coefficient(0)
    u = factor.coefficient(e_bit)
    v = factor.coefficient(en_bit)
    w = factor.coefficient(allowed)
    return (s - 1j * w, u + 1j * v, u - 1j * v, s + 1j * w)


def _identity_run(ctx: WittContext, first: int, last: int) -> tuple[Multivector, Multivector]:
    """Even/odd bit-1-projector-count parts of an identity run of wires.

    Returns (E, O) with E + O = 1 and E - O = Z_first ... Z_last.
    """
    zs = ctx.one()
    for j in range(first, last + 1):
        zs = zs * (ctx.proj0(j) - ctx.proj1(j))
    return (ctx.one() + zs) * 0.5, (ctx.one() - zs) * 0.5


def _super_words(ctx: WittContext, wire_factors: dict[int, Multivector]) -> Multivector:
    """Signed multilinear expansion of per-wire factors into one element."""
    plus = ctx.one()
    minus = Multivector.zero(ctx.signature)
    prev = 0
    for k in sorted(wire_factors):
        if k > prev + 1:
            even, odd = _identity_run(ctx, prev + 1, k - 1)
            plus, minus = plus * even + minus * odd, plus * odd + minus * even
        a, b, c, d = wire_coordinates(ctx, wire_factors[k], k)
        keep_even = a * ctx.proj0(k)      # no sign, parity unchanged
        keep_odd = c * ctx.fdag(k)        # sign (-1)^parity, parity unchanged
        flip_odd = b * ctx.f(k)           # sign (-1)^parity, parity flips
        flip_even = d * ctx.proj1(k)      # no sign, parity flips
        plus, minus = (
            plus * keep_even + plus * keep_odd + minus * flip_even - minus * flip_odd,
            minus * keep_even - minus * keep_odd + plus * flip_even + plus * flip_odd,
        )
        prev = k
    # Trailing identity wires multiply by (E + O) = 1: nothing to do.
    return plus + minus


def super_tensor(ctx: WittContext, factors: Sequence[Multivector | None]) -> GateElement:
    """Tensor product of per-wire operators realized inside the algebra.

    ``factors`` has one entry per wire; None means identity.  The result acts
    on every product state exactly as the slot-wise action of the factors.
    """
    if len(factors) != ctx.n:
        raise ValueError(f"expected {ctx.n} factors, got {len(factors)}")
    present = {k: f for k, f in enumerate(factors, start=1) if f is not None}
    return GateElement(ctx.n, _super_words(ctx, present))


def _embed(ctx: WittContext, wire_factors: dict[int, Multivector]) -> Multivector:
    return _super_words(ctx, wire_factors)


# -- local single-wire operators ------------------------------------------------


def _local_x(ctx: WittContext, k: int) -> Multivector:
    return ctx.fdag(k) + ctx.f(k)


def _local_y(ctx: WittContext, k: int) -> Multivector:
    return 1j * ctx.fdag(k) - 1j * ctx.f(k)


def _local_z(ctx: WittContext, k: int) -> Multivector:
    return ctx.proj0(k) - ctx.proj1(k)


def _local_h(ctx: WittContext, k: int) -> Multivector:
    return (ctx.proj0(k) - ctx.proj1(k) + ctx.f(k) + ctx.fdag(k)) * (1.0 / math.sqrt(2.0))


def _local_phase(ctx: WittContext, k: int, phi: float) -> Multivector:
    return ctx.proj0(k) + cmath.exp(1j * phi) * ctx.proj1(k)


# -- named gates -----------------------------------------------------------------


def gate_identity(ctx: WittContext) -> GateElement:
    return GateElement(ctx.n, ctx.one())


def gate_x(ctx: WittContext, k: int) -> GateElement:
    return GateElement(ctx.n, _embed(ctx, {k: _local_x(ctx, k)}))


def gate_y(ctx: WittContext, k: int) -> GateElement:
    return GateElement(ctx.n, _embed(ctx, {k: _local_y(ctx, k)}))


def gate_z(ctx: WittContext, k: int) -> GateElement:
    return GateElement(ctx.n, _embed(ctx, {k: _local_z(ctx, k)}))


def gate_h(ctx: WittContext, k: int) -> GateElement:
    return GateElement(ctx.n, _embed(ctx, {k: _local_h(ctx, k)}))


def gate_phase(ctx: WittContext, k: int, phi: float) -> GateElement:
    return GateElement(ctx.n, _embed(ctx, {k: _local_phase(ctx, k, phi)}))


def gate_from_u2(ctx: WittContext, k: int, matrix) -> GateElement:
    """Wire-k gate from a 2x2 unitary [[a, b], [c, d]]."""
    (a, b), (c, d) = matrix
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    err = max(
        abs(abs(a) ** 2 + abs(c) ** 2 - 1.0),
        abs(abs(b) ** 2 + abs(d) ** 2 - 1.0),
        abs(b.conjugate() * a + d.conjugate() * c),
    )
    if err > UNITARY_TOL:
        raise ValueError(f"matrix is not unitary (deviation {err:.3e})")
    local = a * ctx.proj0(k) + b * ctx.f(k) + c * ctx.fdag(k) + d * ctx.proj1(k)
    return GateElement(ctx.n, _embed(ctx, {k: local}))


def _check_distinct(ctx: WittContext, wires: Sequence[int]) -> None:
    for w in wires:
        ctx._check_wire(w)
    if len(set(wires)) != len(wires):
        raise ValueError(f"wires must be distinct, got {tuple(wires)}")


def gate_cnot(ctx: WittContext, control: int, target: int) -> GateElement:
    _check_distinct(ctx, (control, target))
    value = _embed(ctx, {control: ctx.proj0(control)}) + _embed(
        ctx, {control: ctx.proj1(control), target: _local_x(ctx, target)}
    )
    return GateElement(ctx.n, value)


def gate_cz(ctx: WittContext, control: int, target: int) -> GateElement:
    _check_distinct(ctx, (control, target))
    value = _embed(ctx, {control: ctx.proj0(control)}) + _embed(
        ctx, {control: ctx.proj1(control), target: _local_z(ctx, target)}
    )
    return GateElement(ctx.n, value)


def gate_swap(ctx: WittContext, a: int, b: int) -> GateElement:
    _check_distinct(ctx, (a, b))
    value = (
        _embed(ctx, {a: ctx.proj0(a), b: ctx.proj0(b)})
        + _embed(ctx, {a: ctx.proj1(a), b: ctx.proj1(b)})
        + _embed(ctx, {a: ctx.fdag(a), b: ctx.f(b)})
        + _embed(ctx, {a: ctx.f(a), b: ctx.fdag(b)})
    )
    return GateElement(ctx.n, value)


def gate_ccnot(ctx: WittContext, c1: int, c2: int, target: int) -> GateElement:
    _check_distinct(ctx, (c1, c2, target))
    value = (
        _embed(ctx, {c1: ctx.proj0(c1)})
        + _embed(ctx, {c1: ctx.proj1(c1), c2: ctx.proj0(c2)})
        + _embed(ctx, {c1: ctx.proj1(c1), c2: ctx.proj1(c2), target: _local_x(ctx, target)})
    )
    return GateElement(ctx.n, value)


def gate_cswap(ctx: WittContext, control: int, t1: int, t2: int) -> GateElement:
    _check_distinct(ctx, (control, t1, t2))
    k = control
    value = (
        _embed(ctx, {k: ctx.proj0(k)})
        + _embed(ctx, {k: ctx.proj1(k), t1: ctx.proj0(t1), t2: ctx.proj0(t2)})
        + _embed(ctx, {k: ctx.proj1(k), t1: ctx.proj1(t1), t2: ctx.proj1(t2)})
        + _embed(ctx, {k: ctx.proj1(k), t1: ctx.fdag(t1), t2: ctx.f(t2)})
        + _embed(ctx, {k: ctx.proj1(k), t1: ctx.f(t1), t2: ctx.fdag(t2)})
    )
    return GateElement(ctx.n, value)


# -- operator construction from states ------------------------------------------


def ketbra(ctx: WittContext, bits_out, bits_in) -> Multivector:
    """Outer product |bits_out><bits_in| as an algebra element."""
    if len(bits_out) != len(bits_in):
        raise ValueError("bit lists must have equal length")
    ket = basis_state(ctx, bits_out).value
    bra = basis_state(ctx, bits_in).value.dagger()
    return ket * bra


# -- action on states --------------------------------------------------------------


def apply(g: GateElement, state: SpinorState) -> SpinorState:
    """Left multiplication of the state by the gate element."""
    if g.n != state.n:
        raise ValueError(f"gate acts on {g.n} qubits, state has {state.n}")
    return SpinorState(state.ctx, g.value * state.value)


def is_unitary(g: GateElement, tol: float = UNITARY_TOL) -> bool:
    """Checks g^dagger g = 1 and g g^dagger = 1; verdict is cached."""
    if g._unitary is None:
        one = Multivector.scalar(g.value.signature, 1.0)
        dag = g.value.dagger()
        g._unitary = (dag * g.value).isclose(one, tol) and (g.value * dag).isclose(one, tol)
    return g._unitary


def measure_probabilities(ctx: WittContext, state: SpinorState) -> list[float]:
    """Born-rule probabilities over the computational basis."""
    if ctx.strict and not is_spinor(ctx, state.value):
        raise ValueError("multivector is not in the spinor ideal")
    return [
        abs(spinor_inner(ctx, basis_state(ctx, index_bits(k, ctx.n)), state)) ** 2
        for k in range(2 ** ctx.n)
    ]


# -- registry -----------------------------------------------------------------------


@dataclass(frozen=True)
class GateSpec:
    """Arity and builder for a named gate."""

    wires: int
    params: int
    build: Callable[..., GateElement]


def _build_s(ctx: WittContext, k: int) -> GateElement:
    return gate_phase(ctx, k, math.pi / 2.0)


def _build_u2(ctx: WittContext, k: int, *p: float) -> GateElement:
    a = complex(p[0], p[1])
    b = complex(p[2], p[3])
    c = complex(p[4], p[5])
    d = complex(p[6], p[7])
    return gate_from_u2(ctx, k, [[a, b], [c, d]])


GATE_SPECS: dict[str, GateSpec] = {
    "x": GateSpec(1, 0, gate_x),
    "y": GateSpec(1, 0, gate_y),
    "z": GateSpec(1, 0, gate_z),
    "h": GateSpec(1, 0, gate_h),
    "s": GateSpec(1, 0, _build_s),
    "phase": GateSpec(1, 1, gate_phase),
    "u2": GateSpec(1, 8, _build_u2),
    "cnot": GateSpec(2, 0, gate_cnot),
    "cz": GateSpec(2, 0, gate_cz),
    "swap": GateSpec(2, 0, gate_swap),
    "ccnot": GateSpec(3, 0, gate_ccnot),
    "cswap": GateSpec(3, 0, gate_cswap),
}


def build_gate(ctx: WittContext, name: str, wires: Sequence[int], params: Sequence[float] = ()) -> GateElement:
    spec = GATE_SPECS.get(name)
    if spec is None:
        raise ValueError(f"unknown gate {name!r}")
    if len(wires) != spec.wires:
        raise ValueError(f"gate {name!r} takes {spec.wires} wire(s), got {len(wires)}")
    if len(params) != spec.params:
        raise ValueError(f"gate {name!r} takes {spec.params} parameter(s), got {len(params)}")
    return spec.build(ctx, *wires, *params)
