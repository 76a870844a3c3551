"""Exact finite-dimensional matrix models of semigroup operator algebras and
circle-symmetric multiplier algebras."""

from .coaction import (
    AlgebraElement,
    CoactionSpec,
    apply_character,
    character_reconstruction,
    delta_apply,
    fell_intertwiner,
    qf_spanning_set,
    spectral_decompose,
)
from .enumeration import (
    ControlledMap,
    EnumerationTable,
    MonoidElement,
    abelianization,
    enumerate_monoid,
    length_map,
)
from .errors import (
    BasisMismatchError,
    CancellativityError,
    ControlledMapError,
    DegreeOverflowError,
    IncompleteFiberError,
    KernelSpecError,
    LengthBoundError,
    NormConvergenceError,
    PresentationError,
    ResourceLimitError,
    SemifdError,
)
from .fdapprox import DivisorSubspace, build_Y, kernel_set, pi_F, stabilization_index
from .funcalg import (
    KernelSpec,
    Polynomial,
    circle_action,
    circle_action_matrix,
    dirichlet,
    drury_arveson,
    fock_basis,
    hardy,
    homogeneous_decompose,
    monomial_norm,
    mult_operator,
    multiplier_norm_lower,
    n_coaction,
)
from .linrep import (
    Basis,
    SparseOperator,
    Vector,
    graded_basis,
    identity_operator,
    inclusion,
    lambda_adjoint_op,
    lambda_op,
    operator_norm,
    tensor_basis,
    zero_operator,
)
from .presentations import MonoidPresentation, braid, builtin, free, nat, parse_presentation, raag

__all__ = [
    "AlgebraElement",
    "Basis",
    "BasisMismatchError",
    "CancellativityError",
    "CoactionSpec",
    "ControlledMap",
    "ControlledMapError",
    "DegreeOverflowError",
    "DivisorSubspace",
    "EnumerationTable",
    "IncompleteFiberError",
    "KernelSpec",
    "KernelSpecError",
    "LengthBoundError",
    "MonoidElement",
    "MonoidPresentation",
    "NormConvergenceError",
    "Polynomial",
    "PresentationError",
    "ResourceLimitError",
    "SemifdError",
    "SparseOperator",
    "Vector",
    "abelianization",
    "apply_character",
    "braid",
    "build_Y",
    "builtin",
    "character_reconstruction",
    "circle_action",
    "circle_action_matrix",
    "delta_apply",
    "dirichlet",
    "drury_arveson",
    "enumerate_monoid",
    "fell_intertwiner",
    "fock_basis",
    "free",
    "graded_basis",
    "hardy",
    "homogeneous_decompose",
    "identity_operator",
    "inclusion",
    "kernel_set",
    "lambda_adjoint_op",
    "lambda_op",
    "length_map",
    "monomial_norm",
    "mult_operator",
    "multiplier_norm_lower",
    "n_coaction",
    "nat",
    "operator_norm",
    "parse_presentation",
    "pi_F",
    "qf_spanning_set",
    "raag",
    "spectral_decompose",
    "stabilization_index",
    "tensor_basis",
    "zero_operator",
]
