"""Laminar matroids: explicit matroids, capacity presentations,
recognition with certificates, and a construction calculus."""

from ._backend import backend_name
from .constructions import (
    ConstructionScript,
    binary_component,
    circuit,
    deconstruct,
    empty,
    excluded_minor,
    fano,
    fano_dual,
    free,
    nested_from_chain,
    run_script,
    standard_matroid,
    ternary_component,
    uniform,
)
from .errors import (
    BadBasepoint,
    BadParams,
    DuplicateElement,
    EliminationFails,
    EmptyMemberSet,
    ForeignElement,
    LoopBase,
    MatroidError,
    NegativeCapacity,
    NotAChain,
    NotAnAntichain,
    NotCanonical,
    NotLaminar,
    OverlappingSets,
    ParseError,
    RankZero,
    TooLarge,
    TooSmall,
    UndefinedName,
    UsageError,
)
from .matroid import (
    DESK_CAP,
    HARD_CAP,
    ExplicitMatroid,
    GroundSet,
    MinorWitness,
    apply_witness,
    build_matroid,
    direct_sum,
    has_minor,
    is_isomorphic,
    parallel_connection,
    two_sum,
)
from .presentation import (
    CanonicalPresentation,
    LaminarPresentation,
    canonical_from_matroid,
    canonicalize,
    validate_presentation,
)
from .recognize import (
    Classification,
    classify,
    classify_binary_laminar,
    classify_dual_laminar,
    classify_ternary_laminar,
    excluded_minor_witness,
    is_laminar,
    is_nested,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "build_matroid",
    "ExplicitMatroid",
    "GroundSet",
    "MinorWitness",
    "MatroidError",
    "NotAnAntichain",
    "EliminationFails",
    "ForeignElement",
    "OverlappingSets",
    "RankZero",
    "BadBasepoint",
    "TooSmall",
    "NotLaminar",
    "NegativeCapacity",
    "EmptyMemberSet",
    "TooLarge",
    "LoopBase",
    "DuplicateElement",
    "BadParams",
    "NotAChain",
    "NotCanonical",
    "UndefinedName",
    "ParseError",
    "UsageError",
    "apply_witness",
    "direct_sum",
    "parallel_connection",
    "two_sum",
    "is_isomorphic",
    "has_minor",
    "DESK_CAP",
    "HARD_CAP",
    "LaminarPresentation",
    "CanonicalPresentation",
    "validate_presentation",
    "canonicalize",
    "canonical_from_matroid",
    "is_laminar",
    "is_nested",
    "classify",
    "classify_dual_laminar",
    "classify_binary_laminar",
    "classify_ternary_laminar",
    "excluded_minor_witness",
    "Classification",
    "uniform",
    "circuit",
    "free",
    "empty",
    "fano",
    "fano_dual",
    "excluded_minor",
    "standard_matroid",
    "nested_from_chain",
    "ConstructionScript",
    "run_script",
    "deconstruct",
    "binary_component",
    "ternary_component",
]
