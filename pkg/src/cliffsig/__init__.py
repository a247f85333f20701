"""cliffsig: exact-arithmetic Clifford algebras Cl(p,q), their
structure-preserving Z2-gradings, the classification of the resulting
even subalgebras (closed-form tables cross-checked by a structural
oracle), and arbitrary signature change through deformed products on the
shared multivector carrier.

All coefficients are exact rationals; there is no floating point
anywhere, so every identity the package claims is checked exactly.
"""

from .classify import (
    AlgebraClass,
    SimpleComponent,
    classify_clifford,
    classify_complex_clifford,
    classify_even_part,
    classify_even_subalgebra,
    even_subalgebra_lookup,
    tensor_simplify,
)
from .core import (
    MAX_DIMENSION,
    Multivector,
    Signature,
    SignatureMismatch,
    all_blades,
    blade_from_indices,
    blade_grade,
    blade_indices,
    blade_product,
    extended_metric,
    geometric_product,
    grade_projection,
    left_contraction,
    parity,
    reversion,
    right_contraction,
    wedge,
)
from .expr import ParseError, format_multivector, parse_multivector
from .grading import (
    DimensionClass,
    InvolutionSplit,
    NotInvolution,
    NotIsometry,
    Z2Grading,
    alpha,
    dimension_dichotomy_check,
    even_subalgebra_basis,
    grading_closure_check,
    project_even,
    project_odd,
    validate_involution,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import (
    NotAssociative,
    NotClosed,
    NotIndependent,
    StructuralInvariants,
    StructureConstants,
    expected_invariants,
    regular_representation,
    structural_invariants,
)
from .sigchange import (
    CliffordMapReport,
    WedgeWitness,
    deformed_metric,
    find_wedge_counterexample,
    naive_antisymmetrization,
    target_signature,
    tilt_product,
    vee_alpha,
    vee_alpha_via_split,
    vee_prime,
    vee_prime_invariants,
    verify_clifford_map,
    weighted_antisymmetrization,
)
from .verify import run_suite, verify_table1, verify_table2, verify_table4, verify_sigchange

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass",
    "CliffordMapReport",
    "DimensionClass",
    "InvolutionSplit",
    "KERNEL_BACKEND",
    "MAX_DIMENSION",
    "Multivector",
    "NotAssociative",
    "NotClosed",
    "NotIndependent",
    "NotInvolution",
    "NotIsometry",
    "ParseError",
    "Signature",
    "SignatureMismatch",
    "SimpleComponent",
    "StructuralInvariants",
    "StructureConstants",
    "WedgeWitness",
    "Z2Grading",
    "all_blades",
    "alpha",
    "blade_from_indices",
    "blade_grade",
    "blade_indices",
    "blade_product",
    "classify_clifford",
    "classify_complex_clifford",
    "classify_even_part",
    "classify_even_subalgebra",
    "deformed_metric",
    "dimension_dichotomy_check",
    "even_subalgebra_basis",
    "even_subalgebra_lookup",
    "expected_invariants",
    "extended_metric",
    "find_wedge_counterexample",
    "format_multivector",
    "geometric_product",
    "grade_projection",
    "grading_closure_check",
    "left_contraction",
    "naive_antisymmetrization",
    "parity",
    "parse_multivector",
    "project_even",
    "project_odd",
    "regular_representation",
    "reversion",
    "right_contraction",
    "run_suite",
    "structural_invariants",
    "target_signature",
    "tensor_simplify",
    "tilt_product",
    "validate_involution",
    "vee_alpha",
    "vee_alpha_via_split",
    "vee_prime",
    "vee_prime_invariants",
    "verify_clifford_map",
    "verify_sigchange",
    "verify_table1",
    "verify_table2",
    "verify_table4",
    "wedge",
    "weighted_antisymmetrization",
]
