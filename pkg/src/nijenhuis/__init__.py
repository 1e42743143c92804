"""Exact symbolic computation in free Nijenhuis algebras.

The package builds the free algebra with a distinguished operator on a
finite generator set, derives the three splitting operations of its
product, rederives the space of their compatible quadratic relations by
exact linear algebra, and studies finite-dimensional instances through
structure constants, induced operations, evaluation maps, and a
truncated ideal membership procedure.  A small expression language and a
command line front end sit on top.
"""

from .algebra import COORD_OPS, OpSymbol, derived_op, operator_n, product, product_words
from .envelope import (
    ArityMismatch,
    BoundTooSmall,
    CheckReport,
    InvalidInput,
    LinearMap,
    Membership,
    NSAlgebraFD,
    NijenhuisAlgebraFD,
    UnknownGenerator,
    check_morphism_kills_generators,
    check_ndendriform_axioms,
    check_nijenhuis_fd,
    check_ns_axioms,
    check_relations_fd,
    default_names,
    enveloping_generators,
    evaluate_hom,
    fixture_projection,
    fixture_scaling,
    fixture_swap,
    induced_ns,
    truncated_ideal_membership,
)
from .linalg import (
    DimensionMismatch,
    LinComb,
    Rational,
    RationalMatrix,
    format_rational,
    in_span,
    lc_add,
    lc_scale,
    nullspace_basis,
    rational,
    rref,
    subspace_equal,
)
from .parser import (
    EvalError,
    ParseError,
    UnknownIdentifier,
    eval_expr,
    parse_expr,
    print_canonical,
)
from .relations import (
    RelVector,
    check_relation_universal,
    evaluate_relation,
    ndendriform_relation_set,
    ns_relation_set,
    relation_matrix,
    relation_monomials,
    relation_sets_span_equal,
    relation_space_contains,
    solve_relation_space,
)
from .words import (
    AlternationViolation,
    Bracket,
    BracketAdjacency,
    BracketedWord,
    EmptyInput,
    EndKind,
    Factor,
    GeneratorSymbol,
    Letters,
    WordError,
    breadth,
    canonical_compare,
    canonical_key,
    concat_words,
    depth,
    from_canonical,
    generators,
    head_tail,
    letter_count,
    letter_word,
    make_word,
    size,
    standard_decomposition,
    to_canonical,
    words_of_size,
    words_up_to_size,
)

__version__ = "0.1.0"
