"""Exact harmonic analysis on finite groups.

Builds finite groups, computes their full character tables, and
machine-verifies the subgroup-transform identity
(psi *_U f)(1) = sum_pi mu_pi Phi_pi(f) together with the multiplicity
bookkeeping behind it, with every integral an exact finite sum.
"""

from .characters import (
    CharacterTable,
    LinearCharacter,
    OrthogonalityReport,
    character_table,
    linear_characters,
    verify_orthogonality,
)
from .errors import (
    ChainNotExhaustive,
    ChainNotNested,
    ChainNotSymmetric,
    ClosureExceedsCap,
    EigensplitFailure,
    FinharmError,
    GroupMismatch,
    IndexOutOfRange,
    IndexTooLarge,
    InvalidPermutation,
    NonIntegralMultiplicity,
    OrderTooLarge,
    ParseError,
    SubgroupMismatch,
    SweepAborted,
    ToleranceViolation,
    UnsupportedParameter,
)
from .groups import (
    DEFAULT_PERM_ORDER_CAP,
    MAX_NAMED_ORDER,
    SUBGROUP_ENUMERATION_CAP,
    FiniteGroup,
    Subgroup,
    build_from_permutations,
    enumerate_subgroups,
    make_named_group,
    subgroup_closure,
    verify_group_axioms,
)
from .harmonic import (
    GroupFunction,
    IrrepTerm,
    WhittakerCheckRecord,
    character_as_function,
    convolve_over_subgroup,
    generalized_plancherel_check,
    generalized_plancherel_check_batch,
    phi,
    plancherel_invert_at_identity,
    theta,
    whittaker_kernel,
    whittaker_transform,
)
from .induction import (
    ConjectureProbeReport,
    InducedCharacter,
    InducedRep,
    KernelMultiplicityReport,
    ProbeIrrepRecord,
    conjecture_probe,
    fubini_interchange_oracle,
    induced_character,
    induced_rep_matrices,
    kernel_multiplicity_identity_check,
    multiplicity_frobenius,
    truncation_demo,
)
from .reports import RunConfig, SweepReport, build_report, parse_group_spec, run_sweep
from .sampling import keyed_test_function, random_test_functions

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "LinearCharacter",
    "OrthogonalityReport",
    "character_table",
    "linear_characters",
    "verify_orthogonality",
    "ChainNotExhaustive",
    "ChainNotNested",
    "ChainNotSymmetric",
    "ClosureExceedsCap",
    "EigensplitFailure",
    "FinharmError",
    "GroupMismatch",
    "IndexOutOfRange",
    "IndexTooLarge",
    "InvalidPermutation",
    "NonIntegralMultiplicity",
    "OrderTooLarge",
    "ParseError",
    "SubgroupMismatch",
    "SweepAborted",
    "ToleranceViolation",
    "UnsupportedParameter",
    "DEFAULT_PERM_ORDER_CAP",
    "MAX_NAMED_ORDER",
    "SUBGROUP_ENUMERATION_CAP",
    "FiniteGroup",
    "Subgroup",
    "build_from_permutations",
    "enumerate_subgroups",
    "make_named_group",
    "subgroup_closure",
    "verify_group_axioms",
    "GroupFunction",
    "IrrepTerm",
    "WhittakerCheckRecord",
    "character_as_function",
    "convolve_over_subgroup",
    "generalized_plancherel_check",
    "generalized_plancherel_check_batch",
    "phi",
    "plancherel_invert_at_identity",
    "theta",
    "whittaker_kernel",
    "whittaker_transform",
    "ConjectureProbeReport",
    "InducedCharacter",
    "InducedRep",
    "KernelMultiplicityReport",
    "ProbeIrrepRecord",
    "conjecture_probe",
    "fubini_interchange_oracle",
    "induced_character",
    "induced_rep_matrices",
    "kernel_multiplicity_identity_check",
    "multiplicity_frobenius",
    "truncation_demo",
    "RunConfig",
    "SweepReport",
    "build_report",
    "parse_group_spec",
    "run_sweep",
    "keyed_test_function",
    "random_test_functions",
    "__version__",
]
