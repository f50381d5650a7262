"""Graph groups from commutation graphs: normal forms, a solvable word
problem, structure-map checking and presentation-graph recovery."""

from .coalgebra import (
    CoalgebraMap,
    CoalgebraVerdict,
    CohomWitness,
    apply_structure,
    canonical_coalgebra,
    check_coalgebra,
    check_coassociativity,
    check_counit,
    cohom_to_graph_hom,
    is_cohomomorphism,
    is_homomorphism_to_acg,
    make_coalgebra,
)
from .errors import (
    BaseMismatch,
    BudgetExhausted,
    DuplicateVertex,
    EndsMismatch,
    ExplicitSelfLoop,
    GraphMismatch,
    IdentitySymbolWarning,
    InvalidVertexName,
    MismatchedEnds,
    NotACoalgebra,
    NotAHom,
    NotAHomomorphism,
    RaagError,
    SearchSpaceTooLarge,
    UnknownEndpoint,
    UnknownGenerator,
    UnknownVertex,
    WordSyntaxError,
    ZeroExponent,
)
from .functors import (
    ACGroupHandle,
    ACSymbol,
    ACWord,
    GroupHandle,
    GroupHom,
    a_on_hom,
    ac_canonical,
    ac_concat,
    ac_equals,
    ac_invert,
    ac_map_symbols,
    ac_on_hom,
    ac_power,
    ac_text,
    ac_word,
    commutation_graph,
    delta,
    epsilon,
    eta,
    group_hom,
    handle_with_generators,
    parse_ac_word,
    raag_of_graph,
)
from .graphs import (
    Graph,
    GraphHom,
    adjacent,
    compose_homs,
    enumerate_homs,
    equalizer,
    full_subgraph,
    graphs_isomorphic,
    identity_hom,
    is_coreflexive_pair,
    validate_graph,
    validate_hom,
)
from .recovery import (
    FinitePresentation,
    FiniteTableGroup,
    abelianization_rank,
    commutator_presentation,
    enumerate_elements,
    exponent_matrix,
    find_vertices,
    presentation,
    recover_graph,
    search_coalgebra,
    smith_normal_form,
    validate_matrix,
)
from .words import (
    CentralForm,
    Syllable,
    Word,
    canonical_form,
    canonical_key,
    central_form,
    commutes,
    equals,
    in_special_subgroup,
    invert,
    is_identity,
    multiply,
    parse_word,
    power,
    sort_key,
    support,
    word_from_pairs,
    word_text,
)

__version__ = "0.1.0"
