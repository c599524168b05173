"""Exact linear algebra over the max-plus, symmetrized and supertropical semirings."""
from .charpoly import (
    CornerRoot,
    Polynomial,
    SpectralMap,
    char_poly,
    corner_roots,
    eval_poly,
    is_root,
    majorization_check,
    spectral_transform,
)
from .combinatorics import Bijection, SubsetIndex, subsets
from .errors import (
    BadArity,
    Divergent,
    InternalInvariantViolation,
    KindMismatch,
    LengthMismatch,
    NotInvertible,
    NotThin,
    ParseError,
    Singular,
    SizeMismatch,
    TooLarge,
    TropalgError,
)
from .identities import REGISTRY, check
from .io import parse_matrix, parse_polynomial, print_matrix, print_polynomial
from .kernels import backend, set_backend, use_backend
from .matrix import (
    DefiniteForm,
    Matrix,
    adjoint,
    compound,
    compound_matrix,
    definite_form,
    det,
    kleene_star,
    mat_add,
    mat_mul,
    mat_power,
    permanent,
    quasi_inverse,
    trace,
)
from .report import CheckReport, IdentityId, Status
from .semiring import Element, Relation, SemiringKind, Tag, add, elem, mul, one, parse_element, relation, zero
from .suite import SuiteConfig, run_suite, summarize

__version__ = "0.1.0"

__all__ = [
    "Element", "Relation", "SemiringKind", "Tag", "add", "elem", "mul", "one", "parse_element", "relation", "zero",
    "Bijection", "SubsetIndex", "subsets",
    "Matrix", "DefiniteForm", "adjoint", "compound", "compound_matrix", "definite_form", "det", "kleene_star",
    "mat_add", "mat_mul", "mat_power", "permanent", "quasi_inverse", "trace",
    "CornerRoot", "Polynomial", "SpectralMap", "char_poly", "corner_roots", "eval_poly", "is_root",
    "majorization_check", "spectral_transform",
    "CheckReport", "IdentityId", "Status", "REGISTRY", "check", "SuiteConfig", "run_suite", "summarize",
    "parse_matrix", "parse_polynomial", "print_matrix", "print_polynomial",
    "backend", "set_backend", "use_backend",
    "BadArity", "Divergent", "InternalInvariantViolation", "KindMismatch", "LengthMismatch", "NotInvertible",
    "NotThin", "ParseError", "Singular", "SizeMismatch", "TooLarge", "TropalgError",
]
