"""Sparse Clifford algebra with complex coefficients over an orthonormal basis.

A basis blade e_{j1}..e_{jr} (ascending generator order) is encoded as a
bitmask with bit j-1 set iff generator e_j occurs; the empty mask is the
scalar blade 1.  A multivector is a map from blade mask to a complex
coefficient, pruned of entries below ``PRUNE_EPS``.

Sign conventions, per grade-r blade:

* reverse                 (-1)^(r(r-1)/2)
* grade involution        (-1)^r
* Clifford conjugation    (-1)^(r(r+1)/2)
* Hermitian conjugation   reverse sign with complex-conjugated coefficient

The last one fixes the generators (e_j -> e_j), is complex conjugation on
scalars, and makes <x|x> = sum |x_A|^2 nonnegative for a Euclidean metric.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

MAX_GENERATORS = 64
PRUNE_EPS = 1e-14
EQ_TOL = 1e-12


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): generators 1..p square to +1, p+1..p+q to -1."""

    p: int
    q: int = 0

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be nonnegative")
        if self.p + self.q > MAX_GENERATORS:
            raise ValueError(f"at most {MAX_GENERATORS} generators supported")

    @property
    def dim(self) -> int:
        return self.p + self.q

    def square(self, j: int) -> int:
        """Square of generator e_j (1-based)."""
        if not 1 <= j <= self.dim:
            raise ValueError(f"generator index {j} out of range 1..{self.dim}")
        return 1 if j <= self.p else -1

    @property
    def is_euclidean(self) -> bool:
        return self.q == 0


def _reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the concatenation of two ascending blades."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return 1 if swaps % 2 == 0 else -1


_sign_cache: dict[tuple[int, int], int] = {}


def _reorder_sign_cached(a: int, b: int) -> int:
    key = (a, b)
    s = _sign_cache.get(key)
    if s is None:
        s = _reorder_sign(a, b)
        _sign_cache[key] = s
    return s


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Geometric product of basis blades: (sign, result mask).

    The sign combines the transposition count from interleaving the two
    blades with the metric squares of the contracted common generators.
    """
    sign = _reorder_sign_cached(a, b)
    common = a & b
    if common and not sig.is_euclidean:
        j = 1
        while common:
            if common & 1 and sig.square(j) < 0:
                sign = -sign
            common >>= 1
            j += 1
    return sign, a ^ b


def _reverse_sign(mask: int) -> int:
    return -1 if mask.bit_count() % 4 in (2, 3) else 1


def _involution_sign(mask: int) -> int:
    return -1 if mask.bit_count() % 2 else 1


def _conjugation_sign(mask: int) -> int:
    return -1 if mask.bit_count() % 4 in (1, 2) else 1


class Multivector:
    """Immutable sparse multivector. Do not mutate ``terms`` after creation."""

    __slots__ = ("signature", "terms")

    def __init__(self, signature: Signature | int, terms: Mapping[int, complex] | None = None):
        if isinstance(signature, int):
            signature = Signature(signature)
        self.signature = signature
        pruned: dict[int, complex] = {}
        if terms:
            limit = 1 << signature.dim
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"blade mask {mask:#x} outside algebra of dim {signature.dim}")
                c = complex(coeff)
                if abs(c) >= PRUNE_EPS:
                    pruned[mask] = c
        self.terms = pruned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, signature: Signature | int) -> Multivector:
        return cls(signature)

    @classmethod
    def scalar(cls, signature: Signature | int, value: complex) -> Multivector:
        return cls(signature, {0: value})

    @classmethod
    def basis_vector(cls, signature: Signature | int, j: int) -> Multivector:
        sig = Signature(signature) if isinstance(signature, int) else signature
        if not 1 <= j <= sig.dim:
            raise ValueError(f"generator index {j} out of range 1..{sig.dim}")
        return cls(sig, {1 << (j - 1): 1.0})

    @classmethod
    def blade(cls, signature: Signature | int, generators: Iterable[int], coeff: complex = 1.0) -> Multivector:
        """Product of distinct generators in the given order (sign tracked)."""
        sig = Signature(signature) if isinstance(signature, int) else signature
        mask = 0
        sign = 1
        for j in generators:
            bit = 1 << (j - 1)
            if mask & bit:
                raise ValueError(f"repeated generator e_{j} in blade")
            s, mask = blade_product(mask, bit, sig)
            sign *= s
        return cls(sig, {mask: sign * coeff})

    @classmethod
    def _from_raw(cls, signature: Signature, terms: dict[int, complex]) -> Multivector:
        mv = cls.__new__(cls)
        mv.signature = signature
        mv.terms = {m: c for m, c in terms.items() if abs(c) >= PRUNE_EPS}
        return mv

    # -- basics ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.signature.dim

    def coefficient(self, mask: int) -> complex:
        return self.terms.get(mask, 0j)

    def scalar_part(self) -> complex:
        return self.terms.get(0, 0j)

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def is_zero(self, tol: float = EQ_TOL) -> bool:
        return all(abs(c) <= tol for c in self.terms.values())

    def norm(self) -> float:
        """Coefficient 2-norm, sqrt(sum |x_A|^2)."""
        return math.sqrt(sum(abs(c) ** 2 for c in self.terms.values()))

    def _check_compatible(self, other: Multivector) -> None:
        if self.signature != other.signature:
            raise ValueError(
                f"algebra mismatch: {self.signature} vs {other.signature}"
            )

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: Multivector | complex) -> Multivector:
        if isinstance(other, (int, float, complex)):
            other = Multivector.scalar(self.signature, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0j) + c
        return Multivector._from_raw(self.signature, out)

    __radd__ = __add__

    def __sub__(self, other: Multivector | complex) -> Multivector:
        return self + (-other if isinstance(other, Multivector) else -complex(other))

    def __rsub__(self, other: complex) -> Multivector:
        return (-self) + complex(other)

    def __neg__(self) -> Multivector:
        return Multivector._from_raw(self.signature, {m: -c for m, c in self.terms.items()})

    def __truediv__(self, scalar: complex) -> Multivector:
        return self * (1.0 / complex(scalar))

    # -- products ------------------------------------------------------------

    def __mul__(self, other: Multivector | complex) -> Multivector:
        if isinstance(other, (int, float, complex)):
            z = complex(other)
            return Multivector._from_raw(self.signature, {m: c * z for m, c in self.terms.items()})
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        sig = self.signature
        out: dict[int, complex] = {}
        if sig.is_euclidean:
            get_sign = _reorder_sign_cached
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    m = a ^ b
                    out[m] = out.get(m, 0j) + ca * cb * get_sign(a, b)
        else:
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    s, m = blade_product(a, b, sig)
                    out[m] = out.get(m, 0j) + ca * cb * s
        return Multivector._from_raw(sig, out)

    def __rmul__(self, other: complex) -> Multivector:
        if isinstance(other, (int, float, complex)):
            return self * other
        return NotImplemented

    def outer(self, other: Multivector) -> Multivector:
        """Outer (wedge) product: blade terms with disjoint generator sets."""
        self._check_compatible(other)
        out: dict[int, complex] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a & b:
                    continue
                m = a ^ b
                out[m] = out.get(m, 0j) + ca * cb * _reorder_sign_cached(a, b)
        return Multivector._from_raw(self.signature, out)

    def left_contract(self, other: Multivector) -> Multivector:
        """Left contraction: grade-lowering part of the geometric product.

        Kept as the blade terms with the left factor contained in the right
        one, so that v x = (v . x) + (v ^ x) holds for grade-1 v by
        construction.
        """
        self._check_compatible(other)
        sig = self.signature
        out: dict[int, complex] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a & ~b:
                    continue
                s, m = blade_product(a, b, sig)
                out[m] = out.get(m, 0j) + ca * cb * s
        return Multivector._from_raw(sig, out)

    # -- grading and involutions ----------------------------------------------

    def grade(self, r: int) -> Multivector:
        """Projection onto the grade-r component."""
        if not 0 <= r <= self.dim:
            raise ValueError(f"grade {r} out of range 0..{self.dim}")
        return Multivector._from_raw(
            self.signature, {m: c for m, c in self.terms.items() if m.bit_count() == r}
        )

    def grade_involution(self) -> Multivector:
        return Multivector._from_raw(
            self.signature, {m: c * _involution_sign(m) for m, c in self.terms.items()}
        )

    def reverse(self) -> Multivector:
        return Multivector._from_raw(
            self.signature, {m: c * _reverse_sign(m) for m, c in self.terms.items()}
        )

    def clifford_conjugate(self) -> Multivector:
        return Multivector._from_raw(
            self.signature, {m: c * _conjugation_sign(m) for m, c in self.terms.items()}
        )

    def dagger(self) -> Multivector:
        """Hermitian conjugation: conjugated coefficients with reverse signs."""
        return Multivector._from_raw(
            self.signature,
            {m: c.conjugate() * _reverse_sign(m) for m, c in self.terms.items()},
        )

    # -- comparison ------------------------------------------------------------

    def isclose(self, other: Multivector, tol: float = EQ_TOL) -> bool:
        if self.signature != other.signature:
            return False
        for m in self.terms.keys() | other.terms.keys():
            if abs(self.terms.get(m, 0j) - other.terms.get(m, 0j)) > tol:
                return False
        return True

    def max_coeff_diff(self, other: Multivector) -> float:
        self._check_compatible(other)
        keys = self.terms.keys() | other.terms.keys()
        return max((abs(self.terms.get(m, 0j) - other.terms.get(m, 0j)) for m in keys), default=0.0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None  # type: ignore[assignment]

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        """Readable form: terms sorted by (grade, mask), '(re+imi) e1e2' style."""
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            coeff = _format_complex(self.terms[mask])
            name = _blade_name(mask)
            parts.append(f"({coeff}) {name}".rstrip())
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<Multivector dim={self.dim} {self.render()}>"


def _blade_name(mask: int) -> str:
    if mask == 0:
        return ""
    names = []
    j = 1
    while mask:
        if mask & 1:
            names.append(f"e{j}")
        mask >>= 1
        j += 1
    return "".join(names)


def _format_complex(c: complex, digits: int = 12) -> str:
    re, im = c.real, c.imag
    if abs(im) < PRUNE_EPS:
        return f"{re:.{digits}g}"
    if abs(re) < PRUNE_EPS:
        return f"{im:.{digits}g}i"
    return f"{re:.{digits}g}{im:+.{digits}g}i"


def hermitian_inner(x: Multivector, y: Multivector) -> complex:
    """Scalar part of x^dagger y.

    For a Euclidean metric this is sum_A conj(x_A) y_A, hence real and
    nonnegative at x == y.
    """
    x._check_compatible(y)
    sig = x.signature
    out = 0j
    for m, cx in x.terms.items():
        cy = y.terms.get(m)
        if cy is None:
            continue
        sign = _reverse_sign(m) * blade_product(m, m, sig)[0]
        out += cx.conjugate() * cy * sign
    return out


def exp_element(x: Multivector, tol: float = 1e-13, max_terms: int = 64) -> Multivector:
    """Exponential of a multivector.

    Uses the closed form cosh(s) + sinh(s)/s * x when x^2 is a scalar s^2
    (covers the involutive gate generators); otherwise sums the power series
    until the term norm drops below ``tol`` relative to the partial sum.
    """
    x2 = x * x
    if not x2.terms or set(x2.terms) == {0}:
        w = x2.scalar_part()
        one = Multivector.scalar(x.signature, 1.0)
        if w == 0:
            return one + x
        s = cmath.sqrt(w)
        return cmath.cosh(s) * one + (cmath.sinh(s) / s) * x
    acc = Multivector.scalar(x.signature, 1.0)
    term = Multivector.scalar(x.signature, 1.0)
    for k in range(1, max_terms + 1):
        term = term * x * (1.0 / k)
        acc = acc + term
        if term.norm() <= tol * max(1.0, acc.norm()):
            return acc
    raise ArithmeticError(f"exponential series did not converge in {max_terms} terms")
