"""Structural fingerprints of finite-dimensional associative algebras.

The fingerprint of an algebra is (dimension, center dimension, signature
of the trace form B(x,y) = tr(L_x L_y), signature of B restricted to the
center).  It is an isomorphism invariant, and the test suite asserts by
enumeration that it separates every class produced by ``classify`` up to
real dimension 256 — which is what lets a fingerprint equality stand in
for an isomorphism when cross-checking the closed-form tables.

Two ways to get structure constants: ``regular_representation`` extracts
them from a multivector basis closed under a given product, and
``StructureConstants.matrix_units`` realizes M(m, K) explicitly so
``expected_invariants`` can fingerprint a reference copy of any class.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .classify import AlgebraClass
from .core import Multivector

#: dim**3 at or below which associativity is checked exhaustively.
_EXHAUSTIVE_TRIPLES = 4096


class NotClosed(ValueError):
    """A product left the span of the proposed basis."""


class NotIndependent(ValueError):
    """The proposed basis is linearly dependent."""


class NotAssociative(ValueError):
    """The structure constants fail an associativity check."""


@dataclass(frozen=True)
class StructuralInvariants:
    """Isomorphism fingerprint.  For the semisimple algebras this package
    produces, the trace form is nondegenerate: pos + neg = dim."""

    dim: int
    center_dim: int
    trace_sig: tuple[int, int]
    center_trace_sig: tuple[int, int]


_K_UNITS = {"R": ("1",), "C": ("1", "i"), "H": ("1", "i", "j", "k")}

_H_MUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}

_K_MUL = {
    "R": {("1", "1"): (1, "1")},
    "C": {("1", "1"): (1, "1"), ("1", "i"): (1, "i"),
          ("i", "1"): (1, "i"), ("i", "i"): (-1, "1")},
    "H": _H_MUL,
}


class StructureConstants:
    """Sparse structure constants: b_i b_j = sum_k table[i][j][k] b_k."""

    __slots__ = ("table", "dim")

    def __init__(self, table: list[list[dict[int, Fraction]]]):
        self.table = table
        self.dim = len(table)

    def left_matrix(self, i: int) -> linalg.Matrix:
        """Dense matrix of x -> b_i x in the given basis (rows = output)."""
        mat = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.table[i][j].items():
                mat[k][j] = v
        return mat

    def direct_sum(self, other: "StructureConstants") -> "StructureConstants":
        off = self.dim
        table = [
            [dict(cell) for cell in row] + [{} for _ in range(other.dim)]
            for row in self.table
        ]
        for row in other.table:
            new_row = [{} for _ in range(off)]
            new_row.extend({k + off: v for k, v in cell.items()} for cell in row)
            table.append(new_row)
        return StructureConstants(table)

    @classmethod
    def matrix_units(cls, m: int, K: str) -> "StructureConstants":
        """Reference realization of M(m, K) over the real basis
        {E_ab * u : u a unit of K}."""
        units = _K_UNITS[K]
        mul = _K_MUL[K]
        nu = len(units)

        def idx(a: int, b: int, ui: int) -> int:
            return (a * m + b) * nu + ui

        dim = m * m * nu
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for a, b, ui in itertools.product(range(m), range(m), range(nu)):
            left = idx(a, b, ui)
            for c, d, vi in itertools.product(range(m), range(m), range(nu)):
                if b != c:
                    continue
                sign, w = mul[(units[ui], units[vi])]
                table[left][idx(c, d, vi)] = {
                    idx(a, d, units.index(w)): Fraction(sign)
                }
        return cls(table)


def regular_representation(basis, product) -> StructureConstants:
    """Structure constants of a basis closed under ``product``.

    The basis must be linearly independent (NotIndependent) and its span
    closed under the product (NotClosed); both are established by exact
    linear solves.  Unit-coefficient single-blade bases — the common case
    everywhere in this package — skip the solver.
    """
    basis = list(basis)
    if not basis:
        raise NotIndependent("empty basis")
    m = len(basis)

    single = [
        next(iter(b.terms)) if len(b.terms) == 1 and next(iter(b.terms.values())) == 1 else None
        for b in basis
    ]
    if all(s is not None for s in single) and len(set(single)) == m:
        index = {mask: i for i, mask in enumerate(single)}
        table = []
        for i in range(m):
            row = []
            for j in range(m):
                cell: dict[int, Fraction] = {}
                for mask, c in product(basis[i], basis[j]).terms.items():
                    k = index.get(mask)
                    if k is None:
                        raise NotClosed(
                            f"product of basis elements {i} and {j} leaves the span"
                        )
                    cell[k] = c
                row.append(cell)
            table.append(row)
        return StructureConstants(table)

    products = [[product(bi, bj) for bj in basis] for bi in basis]
    masks = sorted(
        set().union(*(b.terms.keys() for b in basis))
        | set().union(*(p.terms.keys() for row in products for p in row))
    )
    coord = {mask: r for r, mask in enumerate(masks)}
    a = [[Fraction(0)] * m for _ in masks]
    for j, b in enumerate(basis):
        for mask, c in b.terms.items():
            a[coord[mask]][j] = c
    solver = linalg.LinearSolver(a)
    if solver.rank < m:
        raise NotIndependent(f"basis has rank {solver.rank} < {m}")
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            rhs = [Fraction(0)] * len(masks)
            for mask, c in products[i][j].terms.items():
                rhs[coord[mask]] = c
            x = solver.solve(rhs)
            if x is None:
                raise NotClosed(
                    f"product of basis elements {i} and {j} leaves the span"
                )
            row.append({k: v for k, v in enumerate(x) if v})
        table.append(row)
    return StructureConstants(table)


def _check_associativity(sc: StructureConstants, seed: int, trials: int) -> None:
    dim = sc.dim
    table = sc.table
    if dim**3 <= _EXHAUSTIVE_TRIPLES:
        triples = itertools.product(range(dim), repeat=3)
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(dim), rng.randrange(dim), rng.randrange(dim))
            for _ in range(trials)
        )
    for i, j, k in triples:
        lhs: dict[int, Fraction] = {}
        for mid, v in table[i][j].items():
            for out, w in table[mid][k].items():
                lhs[out] = lhs.get(out, Fraction(0)) + v * w
        rhs: dict[int, Fraction] = {}
        for mid, v in table[j][k].items():
            for out, w in table[i][mid].items():
                rhs[out] = rhs.get(out, Fraction(0)) + v * w
        lhs = {k2: v for k2, v in lhs.items() if v}
        rhs = {k2: v for k2, v in rhs.items() if v}
        if lhs != rhs:
            raise NotAssociative(f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})")


def _center_basis(sc: StructureConstants) -> list[linalg.Vector]:
    """Nullspace of x -> ([x, b_j])_j over the basis coordinates."""
    dim = sc.dim
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}

    def add(key, col, val):
        row = rows.setdefault(key, {})
        row[col] = row.get(col, Fraction(0)) + val

    for i in range(dim):
        for j in range(dim):
            for k, v in sc.table[i][j].items():
                add((j, k), i, v)
                add((i, k), j, -v)
    seen = set()
    sparse_rows = []
    for row in rows.values():
        row = {c: v for c, v in row.items() if v}
        if not row:
            continue
        lead = min(row)
        scale = row[lead]
        key = tuple(sorted((c, v / scale) for c, v in row.items()))
        if key not in seen:
            seen.add(key)
            sparse_rows.append(row)
    return _sparse_nullspace(sparse_rows, dim)


def _sparse_nullspace(rows, dim: int) -> list[linalg.Vector]:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                d = row.pop(c)
                norm = {cc: vv / d for cc, vv in row.items()}
                norm[c] = Fraction(1)
                pivots[c] = norm
                break
            f = row.pop(c)
            for cc, vv in piv.items():
                if cc == c:
                    continue
                nv = row.get(cc, Fraction(0)) - f * vv
                if nv:
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
    # back-substitute so each pivot column appears in its own row only
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2 in pivots:
            if c2 >= c:
                continue
            target = pivots[c2]
            f = target.get(c)
            if not f:
                continue
            del target[c]
            for cc, vv in prow.items():
                if cc == c:
                    continue
                nv = target.get(cc, Fraction(0)) - f * vv
                if nv:
                    target[cc] = nv
                elif cc in target:
                    del target[cc]
    basis = []
    for fcol in range(dim):
        if fcol in pivots:
            continue
        v = [Fraction(0)] * dim
        v[fcol] = Fraction(1)
        for pc, prow in pivots.items():
            val = prow.get(fcol)
            if val:
                v[pc] = -val
        basis.append(v)
    return basis


def _trace_form(sc: StructureConstants) -> linalg.Matrix:
    """B[i][j] = tr(L_i L_j), via the sparsity of the constants."""
    dim = sc.dim
    table = sc.table
    b = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        rows_i = table[i]
        for j in range(i, dim):
            rows_j = table[j]
            t = Fraction(0)
            for a in range(dim):
                cell = rows_j[a]
                if cell:
                    for mid, v in cell.items():
                        w = rows_i[mid].get(a)
                        if w:
                            t += w * v
            if t:
                b[i][j] = t
                b[j][i] = t
    return b


def structural_invariants(
    sc: StructureConstants, *, seed: int = 0, associativity_trials: int = 200
) -> StructuralInvariants:
    """Fingerprint of an associative unital algebra given by structure
    constants.  Associativity is spot-checked (exhaustively for small
    dimensions) and NotAssociative raised on a violation."""
    _check_associativity(sc, seed, associativity_trials)
    center = _center_basis(sc)
    b = _trace_form(sc)
    pos, neg, _zero = linalg.symmetric_signature(b)
    if center:
        gram = [
            [_bilinear_form(b, u, v) for v in center]
            for u in center
        ]
        cpos, cneg, _ = linalg.symmetric_signature(gram)
    else:
        cpos = cneg = 0
    return StructuralInvariants(
        dim=sc.dim,
        center_dim=len(center),
        trace_sig=(pos, neg),
        center_trace_sig=(cpos, cneg),
    )


def _bilinear_form(b: linalg.Matrix, u: linalg.Vector, v: linalg.Vector) -> Fraction:
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui:
            row = b[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * row[j] * vj
    return total


@lru_cache(maxsize=None)
def expected_invariants(cls: AlgebraClass) -> StructuralInvariants:
    """Fingerprint of a reference realization of the class: matrix-unit
    constants for each component, direct-summed.  Any algebra isomorphic
    to ``cls`` has this fingerprint."""
    sc: StructureConstants | None = None
    for comp in cls.components:
        block = StructureConstants.matrix_units(comp.m, comp.K)
        sc = block if sc is None else sc.direct_sum(block)
    assert sc is not None
    return structural_invariants(sc)


def fingerprint_of_basis(basis, product, *, seed: int = 0) -> StructuralInvariants:
    """Convenience: regular representation + invariants in one step."""
    return structural_invariants(regular_representation(basis, product), seed=seed)


def blade_basis(sig, masks) -> list[Multivector]:
    """Multivector wrappers for a list of blade masks."""
    return [Multivector.blade(sig, m) for m in masks]
