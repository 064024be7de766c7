"""Loday cohomology and linear deformations of Leibniz superalgebras over Q."""

from .algebra import (
    CentralSeriesReport,
    NotNilpotentError,
    Parity,
    SuperAlgebra,
    change_basis,
    check_leibniz_superidentity,
    direct_sum,
    generator_certificate,
    is_leibniz,
    is_null_filiform,
    lower_central_series,
    minimal_generator_count,
)
from .catalog import nf_algebra, nf_superalgebra
from .cochains import (
    Cochain,
    CochainSpace,
    CohomologySpaces,
    cochain_space_dim,
    cohomology,
    derivations,
    differential,
    differential_matrix,
    inner_derivation,
)
from .deformations import (
    CanonicalForm,
    Deformation,
    FamilyParams,
    NotSingleGeneratedError,
    canonical_single_generated,
    cohomologous,
    deform,
    derivation_dim_of_family,
    family,
    is_linearly_integrable,
)
from .linalg import Matrix, VectorSpaceBasis, in_span, kernel_basis, rank, rref
from .modules import Bimodule, adjoint_module, check_module_axioms

__version__ = "0.1.0"

__all__ = [
    "nf_algebra",
    "nf_superalgebra",
    "Bimodule",
    "CanonicalForm",
    "CentralSeriesReport",
    "Cochain",
    "CochainSpace",
    "CohomologySpaces",
    "Deformation",
    "FamilyParams",
    "Matrix",
    "NotNilpotentError",
    "NotSingleGeneratedError",
    "Parity",
    "SuperAlgebra",
    "VectorSpaceBasis",
    "adjoint_module",
    "canonical_single_generated",
    "change_basis",
    "check_leibniz_superidentity",
    "check_module_axioms",
    "cochain_space_dim",
    "cohomologous",
    "cohomology",
    "deform",
    "derivation_dim_of_family",
    "derivations",
    "differential",
    "differential_matrix",
    "direct_sum",
    "family",
    "generator_certificate",
    "in_span",
    "inner_derivation",
    "is_leibniz",
    "is_linearly_integrable",
    "is_null_filiform",
    "kernel_basis",
    "lower_central_series",
    "minimal_generator_count",
    "rank",
    "rref",
]
