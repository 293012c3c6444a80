"""Contextual state spaces for finite-dimensional quantum theory.

The package computes, over finite posets of abelian operator algebras
("contexts"): Gelfand spectra and their restriction maps, inner/outer
daseinisation of projections and self-adjoint operators, clopen subobjects
and their Heyting algebra, sieve-valued truth values of propositions in a
pure state, interval-valued physical quantities, and global sections of the
spectral presheaf (whose absence certifies contextuality for the poset).
"""

from .contexts import (
    Context,
    ContextPoset,
    build_poset,
    context_from_atoms,
    context_from_basis,
    context_from_projectors,
    down_set,
    intersect_contexts,
    is_subcontext,
)
from .daseinisation import (
    DaseinisedProposition,
    daseinise_proposition,
    inner_daseinise_projection,
    inner_daseinise_selfadjoint,
    outer_daseinise_projection,
    outer_daseinise_selfadjoint,
)
from .errors import ToposError
from .logic import (
    GlobalElementOfOmega,
    Sieve,
    check_global_element,
    empty_sieve,
    enumerate_sieves,
    global_element_connective,
    is_sieve,
    omega_restriction,
    principal_sieve,
    sieve_connective,
    subobject_connective,
    totally_false,
    totally_true,
)
from .operators import (
    TAU,
    TAU_EIG,
    SpectralDecomposition,
    SpectralFamily,
    is_projector,
    is_self_adjoint,
    projector_leq,
    spectral_decomposition,
    spectral_family,
    spectral_family_at,
    spectral_order_leq,
)
from .presheaf import (
    Character,
    ClopenSubobject,
    empty_subobject,
    evaluate_character,
    full_subobject,
    gelfand_spectrum,
    is_clopen_subobject,
    restrict_character,
    subobject_leq,
)
from .problems import (
    Problem,
    load_problem,
    problem_poset,
    resolve_proposition,
    serialize_problem,
)
from .valuation import (
    GlobalSection,
    IntervalPair,
    PseudoState,
    global_sections,
    is_global_section,
    proposition_projector,
    pseudo_state,
    quantity_value_arrow,
    truth_value,
)

__all__ = [
    "TAU",
    "TAU_EIG",
    "Character",
    "ClopenSubobject",
    "Context",
    "ContextPoset",
    "DaseinisedProposition",
    "GlobalElementOfOmega",
    "GlobalSection",
    "IntervalPair",
    "Problem",
    "PseudoState",
    "Sieve",
    "SpectralDecomposition",
    "SpectralFamily",
    "ToposError",
    "build_poset",
    "check_global_element",
    "context_from_atoms",
    "context_from_basis",
    "context_from_projectors",
    "daseinise_proposition",
    "down_set",
    "empty_sieve",
    "empty_subobject",
    "enumerate_sieves",
    "evaluate_character",
    "full_subobject",
    "gelfand_spectrum",
    "global_element_connective",
    "global_sections",
    "inner_daseinise_projection",
    "inner_daseinise_selfadjoint",
    "intersect_contexts",
    "is_clopen_subobject",
    "is_global_section",
    "is_projector",
    "is_self_adjoint",
    "is_sieve",
    "is_subcontext",
    "load_problem",
    "omega_restriction",
    "outer_daseinise_projection",
    "outer_daseinise_selfadjoint",
    "principal_sieve",
    "problem_poset",
    "projector_leq",
    "proposition_projector",
    "pseudo_state",
    "quantity_value_arrow",
    "resolve_proposition",
    "restrict_character",
    "serialize_problem",
    "sieve_connective",
    "spectral_decomposition",
    "spectral_family",
    "spectral_family_at",
    "spectral_order_leq",
    "subobject_connective",
    "subobject_leq",
    "totally_false",
    "totally_true",
    "truth_value",
]
