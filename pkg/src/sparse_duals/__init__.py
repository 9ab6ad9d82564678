"""Maximum sparse ideals of numerical semigroups and the isometry-dual
behaviour of punctured one-point AG codes on Hermitian curves."""

from .errors import (
    DifferentParents,
    DivisionByZero,
    DuplicatePoints,
    EmptyGenerators,
    FieldMismatch,
    FieldTooLarge,
    GcdNotOne,
    NotALeader,
    NotAnIdeal,
    NotMaximumSparse,
    NotPrime,
    NotProper,
    PointNotOnCurve,
    PreconditionViolated,
    ReducibleModulus,
    SearchSpaceTooLarge,
    SparseDualsError,
    TooManySubsets,
)
from .gf import Field, FieldElement, make_field
from .hermitian import (
    BasisFunction,
    CodeSequence,
    CurvePoint,
    compute_wstar,
    curve_genus,
    find_isometry_vector,
    hermitian_field,
    hermitian_points,
    ideal_complement_check,
    isometry_dual_criterion,
    monomial_basis,
    weierstrass_semigroup,
)
from .puncturing import (
    HierarchyGraph,
    HierarchyNode,
    InheritanceReport,
    build_hierarchy,
    export_dot,
    graph_to_json,
    qualifying_subsets,
    sample_qualifying_subsets,
    subset_qualifies,
    verify_inheritance,
)
from .semigroup import NumericalSemigroup
from .sparse_ideals import (
    InclusionReport,
    SemigroupIdeal,
    divisor_set,
    enumerate_proper_ideals,
    gap_pair_count,
    ideal_from_complement,
    inclusion_report,
    is_maximum_sparse,
    leader_set,
    maximum_sparse_from_leader,
)

__version__ = "0.1.0"
