"""Witt basis for the complex Clifford algebra on 2n generators.

Wire j pairs generators (e_j, e_{j+n}) into the isotropic elements

    f_j        = (e_j - i e_{j+n}) / 2
    f_j^dagger = (e_j + i e_{j+n}) / 2

which square to zero and satisfy f_j f_k^dagger + f_k^dagger f_j = delta_jk.
The primitive idempotent I = f_1 f_1^dagger ... f_n f_n^dagger generates the
left ideal used as the n-qubit state space; its basis states are the words
(f_1^dagger)^{b_1} ... (f_n^dagger)^{b_n} I for bit lists b, MSB first.

All Witt construction coefficients are dyadic, so the identity suites hold
with exact floating-point cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multivector import Multivector, Signature, hermitian_inner

SPINOR_TOL = 1e-12


class WittContext:
    """Precomputed Witt elements and idempotents for an n-qubit register.

    With ``strict`` set, states are verified to lie in the spinor ideal at
    construction and after gate application (an O(4^n * sparsity) product,
    so off by default).
    """

    def __init__(self, n: int, strict: bool = False):
        if not 1 <= n <= 32:
            raise ValueError(f"qubit count {n} out of range 1..32")
        self.n = n
        self.strict = strict
        self.signature = Signature(2 * n)
        sig = self.signature
        self._f = []
        self._fdag = []
        self._proj0 = []
        self._proj1 = []
        for j in range(1, n + 1):
            ej = 1 << (j - 1)
            ejn = 1 << (j + n - 1)
            f = Multivector(sig, {ej: 0.5, ejn: -0.5j})
            fd = Multivector(sig, {ej: 0.5, ejn: 0.5j})
            self._f.append(f)
            self._fdag.append(fd)
            self._proj0.append(f * fd)
            self._proj1.append(fd * f)
        idem = Multivector.scalar(sig, 1.0)
        for p in self._proj0:
            idem = idem * p
        self.idempotent = idem

    def _check_wire(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise ValueError(f"wire {j} out of range 1..{self.n}")

    def f(self, j: int) -> Multivector:
        self._check_wire(j)
        return self._f[j - 1]

    def fdag(self, j: int) -> Multivector:
        self._check_wire(j)
        return self._fdag[j - 1]

    def proj0(self, j: int) -> Multivector:
        """Wire idempotent f_j f_j^dagger (projects onto bit 0)."""
        self._check_wire(j)
        return self._proj0[j - 1]

    def proj1(self, j: int) -> Multivector:
        """Wire idempotent f_j^dagger f_j (projects onto bit 1)."""
        self._check_wire(j)
        return self._proj1[j - 1]

    def one(self) -> Multivector:
        return Multivector.scalar(self.signature, 1.0)

    def __repr__(self) -> str:
        return f"WittContext(n={self.n}, strict={self.strict})"


@dataclass(frozen=True)
class SpinorState:
    """A multivector constrained to the spinor ideal of its context."""

    ctx: WittContext
    value: Multivector

    @property
    def n(self) -> int:
        return self.ctx.n

    def __post_init__(self) -> None:
        if self.value.signature != self.ctx.signature:
            raise ValueError("state multivector does not match context algebra")
        if self.ctx.strict and not is_spinor(self.ctx, self.value):
            raise ValueError("multivector is not in the spinor ideal")


def basis_state(ctx: WittContext, bits: list[int] | tuple[int, ...]) -> SpinorState:
    """Computational basis state for an MSB-first bit list."""
    if len(bits) != ctx.n:
        raise ValueError(f"expected {ctx.n} bits, got {len(bits)}")
    value = ctx.idempotent
    for j in range(ctx.n, 0, -1):
        b = bits[j - 1]
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        if b:
            value = ctx.fdag(j) * value
    return SpinorState(ctx, value)


def index_bits(k: int, n: int) -> tuple[int, ...]:
    """MSB-first bit decomposition of a basis index."""
    return tuple((k >> (n - 1 - i)) & 1 for i in range(n))


def spinor_inner(ctx: WittContext, x: SpinorState, y: SpinorState) -> complex:
    """Hermitian product normalized by 2^n so basis states are orthonormal."""
    if x.ctx.n != ctx.n or y.ctx.n != ctx.n:
        raise ValueError("state qubit count does not match context")
    return (2 ** ctx.n) * hermitian_inner(x.value, y.value)


def is_spinor(ctx: WittContext, x: Multivector, tol: float = SPINOR_TOL) -> bool:
    """True iff right multiplication by the primitive idempotent fixes x."""
    return (x * ctx.idempotent).isclose(x, tol)


def state_to_amplitudes(ctx: WittContext, x: SpinorState) -> list[complex]:
    """Components against the orthonormal basis, index ascending (MSB first)."""
    if ctx.strict and not is_spinor(ctx, x.value):
        raise ValueError("multivector is not in the spinor ideal")
    return [
        spinor_inner(ctx, basis_state(ctx, index_bits(k, ctx.n)), x)
        for k in range(2 ** ctx.n)
    ]


def amplitudes_to_state(ctx: WittContext, amplitudes) -> SpinorState:
    """Inverse of state_to_amplitudes."""
    if len(amplitudes) != 2 ** ctx.n:
        raise ValueError(f"expected {2 ** ctx.n} amplitudes, got {len(amplitudes)}")
    value = Multivector.zero(ctx.signature)
    for k, a in enumerate(amplitudes):
        a = complex(a)
        if a != 0:
            value = value + a * basis_state(ctx, index_bits(k, ctx.n)).value
    return SpinorState(ctx, value)


# -- Witt-basis rendering -----------------------------------------------------

# Per-wire word codes: 0 -> 1, 1 -> f_k, 2 -> f_k^dagger, 3 -> f_k^dagger f_k.
_WORD_NAMES = ("", "f{k}", "f{k}†", "f{k}†f{k}")


def witt_coordinates(mv: Multivector, n: int) -> dict[tuple[int, ...], complex]:
    """Coordinates of a multivector over ordered products of per-wire words.

    Each wire contributes one factor from (1, f_k, f_k^dagger,
    f_k^dagger f_k); the key is the tuple of per-wire word codes.
    """
    if mv.dim != 2 * n:
        raise ValueError(f"multivector dim {mv.dim} does not match 2n = {2 * n}")
    out: dict[tuple[int, ...], complex] = {}
    for mask, coeff in mv.terms.items():
        # Regroup the ascending generator list by wire and track the sign.
        order = []
        for k in range(1, n + 1):
            if mask & (1 << (k - 1)):
                order.append(k)
            if mask & (1 << (k + n - 1)):
                order.append(k + n)
        sign = 1
        seen: list[int] = []
        for g in order:
            sign *= -1 if sum(1 for s in seen if s > g) % 2 else 1
            seen.append(g)
        # Per-wire change of basis to (1, f, fdag, fdag f).
        words: list[tuple[tuple[int, ...], complex]] = [((), coeff * sign)]
        for k in range(1, n + 1):
            has_e = bool(mask & (1 << (k - 1)))
            has_en = bool(mask & (1 << (k + n - 1)))
            if not has_e and not has_en:
                local = {0: 1.0 + 0j}
            elif has_e and not has_en:
                local = {1: 1.0 + 0j, 2: 1.0 + 0j}
            elif has_en and not has_e:
                local = {1: 1j, 2: -1j}
            else:
                local = {0: -1j, 3: 2j}
            words = [
                (codes + (code,), c * lc)
                for codes, c in words
                for code, lc in local.items()
            ]
        for codes, c in words:
            out[codes] = out.get(codes, 0j) + c
    return {codes: c for codes, c in out.items() if abs(c) > 1e-14}


def render_witt(mv: Multivector, n: int) -> str:
    """Render as a sum of words in f_j, f_j^dagger."""
    coords = witt_coordinates(mv, n)
    if not coords:
        return "0"

    def _order(cs: tuple[int, ...]):
        occupied = tuple(k for k, c in enumerate(cs) if c)
        return (len(occupied), occupied, cs)

    parts = []
    for codes in sorted(coords, key=_order):
        c = coords[codes]
        factors = [
            _WORD_NAMES[code].format(k=k)
            for k, code in enumerate(codes, start=1)
            if code
        ]
        word = " ".join(factors) if factors else "1"
        parts.append((c, word))
    pieces = []
    for i, (c, word) in enumerate(parts):
        if abs(c.imag) < 1e-14 and c.real < 0:
            lead = "- " if i == 0 else " - "
            pieces.append(lead + _coeff_str(-c.real, word))
        else:
            lead = "" if i == 0 else " + "
            if abs(c.imag) < 1e-14:
                pieces.append(lead + _coeff_str(c.real, word))
            else:
                pieces.append(f"{lead}({_cplx_str(c)}) {word}")
    return "".join(pieces)


def _coeff_str(r: float, word: str) -> str:
    if abs(r - 1.0) < 1e-14 and word != "1":
        return word
    if word == "1":
        return f"{r:.10g}"
    return f"{r:.10g} {word}"


def _cplx_str(c: complex) -> str:
    if abs(c.real) < 1e-14:
        return f"{c.imag:.10g}i"
    return f"{c.real:.10g}{c.imag:+.10g}i"
