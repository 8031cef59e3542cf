"""Resource convertibility for parallel-combinable finite-set processes.

Processes are functions between canonical finite sets; one process converts
to another when the second can be recovered from the first by running it
alongside an untouched auxiliary system, wiring inputs and outputs with free
morphisms, and discarding junk.  Two free subtheories are supported,
bijections and injections, and in both the order is completely captured by
fiber-counting profiles.

The package provides the profile-based decision procedure and witness
synthesis (:mod:`pcdres.convert`), an independent brute-force search over
the defining equation used to cross-check it (:mod:`pcdres.oracle`), a
screening lab for candidate additive monotones (:mod:`pcdres.monotones`),
and a command-line front end (:mod:`pcdres.cli`).
"""

from .convert import (
    NotConvertibleError,
    TheoryVariant,
    Witness,
    check_witness,
    decide,
    equivalent,
    normal_form,
    representative,
    witness,
    witness_from_dict,
    witness_to_dict,
)
from .finset import (
    FinFun,
    FinSet,
    FormatError,
    Relation,
    braiding,
    compose,
    disjoint_union,
    enumerate_all_functions,
    enumerate_bijections,
    enumerate_functions,
    enumerate_injections,
    finfun_from_dict,
    finfun_to_dict,
    fun_of_rel,
    identity,
    is_bijection,
    is_fun_graph,
    is_injection,
    rel_compose,
    rel_identity,
    rel_of_fun,
    rel_product,
    relation_from_dict,
    relation_to_dict,
)
from .monotones import (
    BUILTIN_MEASURES,
    NEGATIVE_CONTROLS,
    CandidateMeasure,
    CheckReport,
    FamilyReport,
    InducedMonotone,
    MeasureRejected,
    check_complete_family,
    check_measure,
    default_family,
    induce_monotone,
)
from .oracle import (
    REL_TIMES_THEORY,
    SET_BIJ_THEORY,
    SET_INJ_THEORY,
    RelTimesTheory,
    SearchBounds,
    SetTheory,
    TheoryInstance,
    default_bounds,
    oracle_convertible,
    preorder_lines,
    preorder_table,
    relx_convert,
    theory_for,
    verify_witness,
)
from .profiles import (
    Profile,
    gamma_profile,
    phi_profile,
    profile_from_dict,
    profile_to_dict,
    realize_profile,
)

__all__ = [
    "BUILTIN_MEASURES",
    "CandidateMeasure",
    "CheckReport",
    "FamilyReport",
    "FinFun",
    "FinSet",
    "FormatError",
    "InducedMonotone",
    "MeasureRejected",
    "NEGATIVE_CONTROLS",
    "NotConvertibleError",
    "Profile",
    "REL_TIMES_THEORY",
    "Relation",
    "RelTimesTheory",
    "SET_BIJ_THEORY",
    "SET_INJ_THEORY",
    "SearchBounds",
    "SetTheory",
    "TheoryInstance",
    "TheoryVariant",
    "Witness",
    "braiding",
    "check_complete_family",
    "check_measure",
    "check_witness",
    "compose",
    "decide",
    "default_bounds",
    "default_family",
    "disjoint_union",
    "enumerate_all_functions",
    "enumerate_bijections",
    "enumerate_functions",
    "enumerate_injections",
    "equivalent",
    "finfun_from_dict",
    "finfun_to_dict",
    "fun_of_rel",
    "gamma_profile",
    "identity",
    "induce_monotone",
    "is_bijection",
    "is_fun_graph",
    "is_injection",
    "normal_form",
    "oracle_convertible",
    "phi_profile",
    "preorder_lines",
    "preorder_table",
    "profile_from_dict",
    "profile_to_dict",
    "realize_profile",
    "rel_compose",
    "rel_identity",
    "rel_of_fun",
    "rel_product",
    "relation_from_dict",
    "relation_to_dict",
    "relx_convert",
    "representative",
    "theory_for",
    "verify_witness",
    "witness",
    "witness_from_dict",
    "witness_to_dict",
]
