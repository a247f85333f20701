"""Verification sweeps behind the ``verify`` CLI command.

Each suite re-derives a family of facts cell by cell and cross-checks the
closed-form classification against the structural oracle (or products
against their defining laws), timing each cell.  Cells are pure
computations, so a sweep could fan out to workers; the implementation
stays sequential to keep report ordering deterministic.

Suites:

* ``table1``  — full algebras: oracle fingerprint vs classify_clifford.
* ``table2``  — even-grade parts: fingerprint vs classify_even_part and
  the Cl+(p,q) ~ Cl(q,p-1) identity.
* ``table4``  — every grading's even subalgebra vs
  classify_even_subalgebra (the central sweep).
* ``sigchange`` — verify_clifford_map over every grading.
* ``core``    — generator relations, associativity, contraction
  adjointness and involution laws for the base product.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import classify_clifford, classify_even_part, classify_even_subalgebra
from .core import (
    MAX_DIMENSION,
    Multivector,
    Signature,
    all_blades,
    extended_metric,
    geometric_product,
    left_contraction,
    parity,
    reversion,
    right_contraction,
    wedge,
)
from .grading import Z2Grading, even_subalgebra_basis
from .oracle import blade_basis, expected_invariants, regular_representation, structural_invariants
from .sigchange import verify_clifford_map

DEFAULT_SEED = 0

SUITE_DEFAULT_MAX_N = {
    "table1": 6,
    "table2": 6,
    "table4": 6,
    "sigchange": 5,
    "core": 6,
}

SUITES = tuple(SUITE_DEFAULT_MAX_N) + ("all",)


@dataclass
class Cell:
    key: str
    ok: bool
    detail: str
    seconds: float


@dataclass
class SuiteReport:
    suite: str
    cells: list[Cell] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(not c.ok for c in self.cells)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cells": [
                {
                    "key": c.key,
                    "pass": c.ok,
                    "detail": c.detail,
                    "seconds": round(c.seconds, 6),
                }
                for c in self.cells
            ],
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _timed(report: SuiteReport, key: str, fn) -> None:
    start = time.perf_counter()
    ok, detail = fn()
    report.cells.append(Cell(key, ok, detail, time.perf_counter() - start))


def signatures_up_to(max_n: int):
    for n in range(max_n + 1):
        for p in range(n + 1):
            yield Signature(p, n - p)


def all_gradings(sig: Signature):
    for odd_mask in range(1 << sig.n):
        yield Z2Grading(sig, odd_mask)


def canonical_odd_mask(sig: Signature, p1: int, q1: int) -> int:
    """Odd set used in sweeps: the last p1 positive and last q1 negative
    generators.  Any other choice with the same counts is isometric."""
    mask = 0
    for i in range(sig.p - p1 + 1, sig.p + 1):
        mask |= 1 << (i - 1)
    for i in range(sig.n - q1 + 1, sig.n + 1):
        mask |= 1 << (i - 1)
    return mask


def random_odd_mask(rng: random.Random, sig: Signature, p1: int, q1: int) -> int:
    pos = rng.sample(range(1, sig.p + 1), p1)
    neg = rng.sample(range(sig.p + 1, sig.n + 1), q1)
    mask = 0
    for i in pos + neg:
        mask |= 1 << (i - 1)
    return mask


def random_multivector(
    rng: random.Random, sig: Signature, terms: int = 4
) -> Multivector:
    out: dict[int, Fraction] = {}
    for _ in range(terms):
        mask = rng.randrange(1 << sig.n)
        out[mask] = out.get(mask, Fraction(0)) + Fraction(
            rng.randint(-8, 8), rng.randint(1, 6)
        )
    return Multivector(sig, out)


def random_vector(rng: random.Random, sig: Signature) -> Multivector:
    return Multivector(
        sig,
        {1 << k: Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for k in range(sig.n)},
    )


# ---------------------------------------------------------------------------
# suites


def verify_table1(max_n: int = 6, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Fingerprint of (carrier, geometric product) against the closed-form
    class of Cl(p,q), for every signature with p+q <= max_n."""
    report = SuiteReport("table1")
    for sig in signatures_up_to(max_n):

        def cell(sig=sig):
            cls = classify_clifford(sig.p, sig.q)
            got = structural_invariants(
                regular_representation(
                    blade_basis(sig, all_blades(sig)), geometric_product
                ),
                seed=seed,
            )
            want = expected_invariants(cls)
            return got == want, f"{sig} ~ {cls}" + (
                "" if got == want else f"; oracle {got} != reference {want}"
            )

        _timed(report, f"{sig.p},{sig.q}", cell)
    return report


def verify_table2(max_n: int = 6, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Even-grade subalgebras: oracle fingerprint, plus the closed-form
    identities Cl+(p,q) ~ Cl(q,p-1) ~ Cl(p,q-1)."""
    report = SuiteReport("table2")
    for sig in signatures_up_to(max_n):
        if sig.n < 1:
            continue

        def cell(sig=sig):
            cls = classify_even_part(sig.p, sig.q)
            problems = []
            if sig.p >= 1 and cls != classify_clifford(sig.q, sig.p - 1):
                problems.append(f"!= Cl({sig.q},{sig.p - 1})")
            if sig.q >= 1 and cls != classify_clifford(sig.p, sig.q - 1):
                problems.append(f"!= Cl({sig.p},{sig.q - 1})")
            masks = [m for m in all_blades(sig) if not m.bit_count() & 1]
            got = structural_invariants(
                regular_representation(blade_basis(sig, masks), geometric_product),
                seed=seed,
            )
            if got != expected_invariants(cls):
                problems.append("oracle fingerprint mismatch")
            return not problems, f"Cl+({sig.p},{sig.q}) ~ {cls}" + (
                "; " + "; ".join(problems) if problems else ""
            )

        _timed(report, f"{sig.p},{sig.q}", cell)
    return report


def verify_table4(
    max_n: int = 6, seed: int = DEFAULT_SEED, subset_seed: int | None = None
) -> SuiteReport:
    """The central sweep: for every (p,q,p0,q0), build the grading, take
    the even-subalgebra blade basis under the geometric product, and
    check its fingerprint against classify_even_subalgebra.

    ``subset_seed`` switches the canonical odd set for a random one with
    the same per-sign counts (isometric, so nothing should change).
    """
    report = SuiteReport("table4")
    rng = random.Random(subset_seed) if subset_seed is not None else None
    for sig in signatures_up_to(max_n):
        for p0 in range(sig.p + 1):
            for q0 in range(sig.q + 1):

                def cell(sig=sig, p0=p0, q0=q0):
                    p1, q1 = sig.p - p0, sig.q - q0
                    mask = (
                        canonical_odd_mask(sig, p1, q1)
                        if rng is None
                        else random_odd_mask(rng, sig, p1, q1)
                    )
                    gr = Z2Grading(sig, mask)
                    assert gr.counts() == (p0, q0, p1, q1)
                    cls = classify_even_subalgebra(sig.p, sig.q, p0, q0)
                    got = structural_invariants(
                        regular_representation(
                            blade_basis(sig, even_subalgebra_basis(gr)),
                            geometric_product,
                        ),
                        seed=seed,
                    )
                    want = expected_invariants(cls)
                    return got == want, f"Cl0 ~ {cls}" + (
                        "" if got == want else f"; oracle {got} != reference {want}"
                    )

                _timed(report, f"{sig.p},{sig.q},{p0},{q0}", cell)
    return report


def verify_sigchange(max_n: int = 5, seed: int = DEFAULT_SEED) -> SuiteReport:
    """verify_clifford_map over every grading of every Cl(p,q), p+q <= max_n."""
    report = SuiteReport("sigchange")
    for sig in signatures_up_to(max_n):
        for gr in all_gradings(sig):

            def cell(gr=gr):
                res = verify_clifford_map(gr, seed=seed)
                bad = [c for c in res.checks if not c.ok]
                r, s = res.target
                if bad:
                    return False, f"-> Cl({r},{s}); " + "; ".join(
                        f"{c.name}: {c.detail}" for c in bad
                    )
                return True, f"-> Cl({r},{s})"

            odd = ",".join(str(i) for i in gr.odd_indices)
            _timed(report, f"{sig.p},{sig.q},odd={odd}", cell)
    return report


def verify_core(
    max_n: int = 6, seed: int = DEFAULT_SEED, trials: int = 300
) -> SuiteReport:
    """Base-product laws per signature: generator relations, associativity,
    contraction adjointness, involution laws, and v a = v^a + v⌟a."""
    report = SuiteReport("core")
    for sig in signatures_up_to(max_n):
        rng = random.Random(seed * 10_000 + sig.p * 100 + sig.q)
        blades = all_blades(sig)

        def gen_cell(sig=sig):
            bad = 0
            for i in range(1, sig.n + 1):
                ei = Multivector.basis_vector(sig, i)
                for j in range(1, sig.n + 1):
                    ej = Multivector.basis_vector(sig, j)
                    want = Multivector.scalar(
                        sig, 2 * (sig.metric(i) if i == j else 0)
                    )
                    if geometric_product(ei, ej) + geometric_product(ej, ei) != want:
                        bad += 1
            return bad == 0, f"{sig.n * sig.n} pairs, {bad} violations"

        def assoc_cell(sig=sig, blades=blades, rng=rng):
            bad = checked = 0
            if sig.n <= 4:
                for ma in blades:
                    a = Multivector.blade(sig, ma)
                    for mb in blades:
                        b = Multivector.blade(sig, mb)
                        ab = geometric_product(a, b)
                        for mc in blades:
                            c = Multivector.blade(sig, mc)
                            checked += 1
                            if geometric_product(ab, c) != geometric_product(
                                a, geometric_product(b, c)
                            ):
                                bad += 1
                how = "exhaustive blade"
            else:
                for _ in range(trials):
                    a = random_multivector(rng, sig)
                    b = random_multivector(rng, sig)
                    c = random_multivector(rng, sig)
                    checked += 1
                    if geometric_product(geometric_product(a, b), c) != geometric_product(
                        a, geometric_product(b, c)
                    ):
                        bad += 1
                how = "random multivector"
            return bad == 0, f"{checked} {how} triples, {bad} violations"

        def adjoint_cell(sig=sig, blades=blades, rng=rng):
            bad = checked = 0
            if sig.n <= 4:
                triples = (
                    (a, b, c) for a in blades for b in blades for c in blades
                )
            else:
                triples = (
                    (rng.choice(blades), rng.choice(blades), rng.choice(blades))
                    for _ in range(trials)
                )
            for ma, mb, mc in triples:
                a = Multivector.blade(sig, ma)
                b = Multivector.blade(sig, mb)
                c = Multivector.blade(sig, mc)
                checked += 1
                if extended_metric(left_contraction(a, b), c) != extended_metric(
                    b, wedge(reversion(a), c)
                ):
                    bad += 1
                    continue
                if extended_metric(right_contraction(b, a), c) != extended_metric(
                    b, wedge(c, reversion(a))
                ):
                    bad += 1
            return bad == 0, f"{checked} triples, {bad} violations"

        def involution_cell(sig=sig, rng=rng):
            bad = 0
            for _ in range(max(50, trials // 4)):
                a = random_multivector(rng, sig)
                b = random_multivector(rng, sig)
                ab = geometric_product(a, b)
                if parity(parity(a)) != a or reversion(reversion(a)) != a:
                    bad += 1
                if parity(ab) != geometric_product(parity(a), parity(b)):
                    bad += 1
                if reversion(ab) != geometric_product(reversion(b), reversion(a)):
                    bad += 1
            return bad == 0, f"{bad} violations"

        def decomposition_cell(sig=sig, rng=rng):
            bad = 0
            for _ in range(max(50, trials // 4)):
                v = random_vector(rng, sig)
                a = random_multivector(rng, sig)
                if geometric_product(v, a) != wedge(v, a) + left_contraction(v, a):
                    bad += 1
            return bad == 0, f"{bad} violations"

        key = f"{sig.p},{sig.q}"
        _timed(report, f"{key}:generators", gen_cell)
        _timed(report, f"{key}:associativity", assoc_cell)
        _timed(report, f"{key}:adjointness", adjoint_cell)
        _timed(report, f"{key}:involutions", involution_cell)
        _timed(report, f"{key}:decomposition", decomposition_cell)
    return report


_SUITE_FNS = {
    "table1": verify_table1,
    "table2": verify_table2,
    "table4": verify_table4,
    "sigchange": verify_sigchange,
    "core": verify_core,
}


def run_suite(name: str, max_n: int | None = None, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Run one suite (or 'all'); max_n defaults per suite and is capped at
    the package dimension limit."""
    if name == "all":
        combined = SuiteReport("all")
        for sub in SUITE_DEFAULT_MAX_N:
            rep = run_suite(sub, max_n, seed)
            for c in rep.cells:
                combined.cells.append(
                    Cell(f"{sub}/{c.key}", c.ok, c.detail, c.seconds)
                )
        return combined
    if name not in _SUITE_FNS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    n = SUITE_DEFAULT_MAX_N[name] if max_n is None else max_n
    if not 0 <= n <= MAX_DIMENSION:
        raise ValueError(f"max_n must be between 0 and {MAX_DIMENSION}")
    return _SUITE_FNS[name](n, seed)
