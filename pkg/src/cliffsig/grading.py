"""Z2-gradings of Cl(p,q) compatible with the multivector structure.

A structure-preserving grading is determined by which 1-vectors are odd,
and (up to an isometry of V) the odd space can be spanned by part of the
standard orthonormal basis.  ``Z2Grading`` is that normal form: a subset
of the basis declared odd.  General isometric involutions of V are
handled by ``validate_involution``, which either reduces them to the same
(p0, q0, p1, q1) data or rejects them with the violated hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import kernels, linalg
from .core import (
    Multivector,
    Signature,
    SignatureMismatch,
    all_blades,
    blade_from_indices,
    blade_indices,
    blade_product,
    blade_sort_key,
)


class NotInvolution(ValueError):
    """Candidate grading map does not square to the identity on V."""


class NotIsometry(ValueError):
    """Candidate grading map is an involution of V but not a g-isometry."""


@dataclass(frozen=True)
class Z2Grading:
    """Basis-aligned structure-preserving grading: ``odd_mask`` marks the
    basis vectors spanning the odd 1-vector space."""

    sig: Signature
    odd_mask: int = 0

    def __post_init__(self):
        self.sig.check_mask(self.odd_mask)

    @classmethod
    def from_odd_indices(cls, sig: Signature, indices) -> "Z2Grading":
        return cls(sig, blade_from_indices(indices, sig))

    @classmethod
    def trivial(cls, sig: Signature) -> "Z2Grading":
        return cls(sig, 0)

    @classmethod
    def usual(cls, sig: Signature) -> "Z2Grading":
        """All 1-vectors odd: the even part is the even-grade subalgebra."""
        return cls(sig, sig.full_mask)

    @property
    def even_mask(self) -> int:
        return self.sig.full_mask & ~self.odd_mask

    @property
    def odd_indices(self) -> tuple[int, ...]:
        return blade_indices(self.odd_mask)

    @property
    def even_indices(self) -> tuple[int, ...]:
        return blade_indices(self.even_mask)

    @property
    def is_trivial(self) -> bool:
        return self.odd_mask == 0

    @property
    def is_usual(self) -> bool:
        return self.odd_mask == self.sig.full_mask

    def counts(self) -> tuple[int, int, int, int]:
        """(p0, q0, p1, q1): signature of g on the even / odd 1-vector spaces."""
        pos = (1 << self.sig.p) - 1
        p0 = kernels.grade(self.even_mask & pos)
        q0 = kernels.grade(self.even_mask & ~pos)
        return p0, q0, self.sig.p - p0, self.sig.q - q0

    @property
    def p0(self) -> int:
        return self.counts()[0]

    @property
    def q0(self) -> int:
        return self.counts()[1]

    def blade_parity(self, mask: int) -> int:
        """0 or 1: parity of the number of odd generators in the blade."""
        return kernels.grade(mask & self.odd_mask) & 1

    def __str__(self) -> str:
        odd = ",".join(f"e{i}" for i in self.odd_indices) or "-"
        return f"{self.sig} odd={odd}"


def alpha(a: Multivector, gr: Z2Grading) -> Multivector:
    """Grading automorphism: -1 on odd blades, +1 on even ones."""
    if a.sig != gr.sig:
        raise SignatureMismatch(f"{a.sig} vs {gr.sig}")
    return Multivector(
        a.sig,
        {m: -c if gr.blade_parity(m) else c for m, c in a.terms.items()},
    )


def project_even(a: Multivector, gr: Z2Grading) -> Multivector:
    """pi_0(a) = (a + alpha(a)) / 2: the even component."""
    if a.sig != gr.sig:
        raise SignatureMismatch(f"{a.sig} vs {gr.sig}")
    return Multivector(a.sig, {m: c for m, c in a.terms.items() if not gr.blade_parity(m)})


def project_odd(a: Multivector, gr: Z2Grading) -> Multivector:
    """pi_1(a) = (a - alpha(a)) / 2: the odd component."""
    if a.sig != gr.sig:
        raise SignatureMismatch(f"{a.sig} vs {gr.sig}")
    return Multivector(a.sig, {m: c for m, c in a.terms.items() if gr.blade_parity(m)})


def even_subalgebra_basis(gr: Z2Grading) -> list[int]:
    """All blades with an even number of odd generators, canonically ordered.

    This is a vector-space basis of the even subalgebra: 2^n blades for
    the trivial grading, 2^(n-1) otherwise.
    """
    return sorted(
        (m for m in range(1 << gr.sig.n) if not gr.blade_parity(m)),
        key=blade_sort_key,
    )


class DimensionClass(Enum):
    TRIVIAL = "trivial"
    HALF = "half"


def dimension_dichotomy_check(gr: Z2Grading) -> DimensionClass:
    """Even-part dimension dichotomy: the whole algebra for the trivial
    grading, exactly half of it for every other grading."""
    size = len(even_subalgebra_basis(gr))
    n = gr.sig.n
    if gr.is_trivial:
        assert size == 1 << n
        return DimensionClass.TRIVIAL
    assert size == 1 << (n - 1)
    return DimensionClass.HALF


@dataclass
class ClosureReport:
    """Result of the exhaustive parity-closure sweep over blade pairs."""

    pairs_checked: int
    violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def grading_closure_check(gr: Z2Grading) -> ClosureReport:
    """Multiply every blade pair and confirm the product lands in the
    parity component predicted by the grading."""
    sig = gr.sig
    blades = all_blades(sig)
    violations = []
    for a in blades:
        pa = gr.blade_parity(a)
        for b in blades:
            _, m = blade_product(a, b, sig)
            if gr.blade_parity(m) != (pa + gr.blade_parity(b)) & 1:
                violations.append((a, b))
    return ClosureReport(pairs_checked=len(blades) ** 2, violations=violations)


@dataclass(frozen=True)
class InvolutionSplit:
    """Outcome of validating a general involution: the signature data of
    g restricted to the +1/-1 eigenspaces, plus eigenbases (coordinate
    vectors over the standard basis)."""

    sig: Signature
    p0: int
    q0: int
    p1: int
    q1: int
    even_vectors: tuple[tuple[Fraction, ...], ...]
    odd_vectors: tuple[tuple[Fraction, ...], ...]

    def counts(self) -> tuple[int, int, int, int]:
        return self.p0, self.q0, self.p1, self.q1


def _metric_matrix(sig: Signature) -> linalg.Matrix:
    return [
        [Fraction(sig.metric(i + 1) if i == j else 0) for j in range(sig.n)]
        for i in range(sig.n)
    ]


def validate_involution(matrix, sig: Signature) -> InvolutionSplit:
    """Check that ``matrix`` defines a structure-preserving grading on V.

    Accepts exactly the maps that are involutions of V and g-isometries;
    each rejection names the violated hypothesis.  The +1/-1 eigenspaces
    are computed by exact elimination and the restricted signatures by
    exact congruence diagonalization.
    """
    m = linalg.to_fractions(matrix)
    n = sig.n
    if len(m) != n or any(len(row) != n for row in m):
        raise ValueError(f"expected a {n}x{n} matrix for {sig}")
    ident = linalg.identity(n)
    if not linalg.mat_eq(linalg.mat_mul(m, m), ident):
        raise NotInvolution("matrix squared is not the identity on V")
    g = _metric_matrix(sig)
    mt = linalg.transpose(m)
    if not linalg.mat_eq(linalg.mat_mul(mt, linalg.mat_mul(g, m)), g):
        raise NotIsometry("matrix is an involution of V but does not preserve g")

    minus = [[m[i][j] - ident[i][j] for j in range(n)] for i in range(n)]
    plus = [[m[i][j] + ident[i][j] for j in range(n)] for i in range(n)]
    even_vectors = linalg.nullspace(minus, n)
    odd_vectors = linalg.nullspace(plus, n)
    assert len(even_vectors) + len(odd_vectors) == n

    def g_pair(u, v) -> Fraction:
        return sum(
            (u[i] * sig.metric(i + 1) * v[i] for i in range(n)), Fraction(0)
        )

    # orthogonality of the two eigenspaces is forced; assert it anyway
    for u in even_vectors:
        for v in odd_vectors:
            assert g_pair(u, v) == 0

    def restricted(vectors) -> tuple[int, int]:
        gram = [[g_pair(u, v) for v in vectors] for u in vectors]
        pos, neg, zero = linalg.symmetric_signature(gram)
        assert zero == 0  # each eigenspace is nondegenerate
        return pos, neg

    p0, q0 = restricted(even_vectors) if even_vectors else (0, 0)
    p1, q1 = restricted(odd_vectors) if odd_vectors else (0, 0)
    return InvolutionSplit(
        sig=sig,
        p0=p0,
        q0=q0,
        p1=p1,
        q1=q1,
        even_vectors=tuple(tuple(v) for v in even_vectors),
        odd_vectors=tuple(tuple(v) for v in odd_vectors),
    )
