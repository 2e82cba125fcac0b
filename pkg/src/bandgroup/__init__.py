"""Band-letter calculus for braid groups.

Exact braid arithmetic through the faithful free-group action, Hurwitz
actions over three coefficient systems, block combinatorics of reduced
involutive words, expressions over commuting band letters, and a verifier
for the relation families of the subgroups generated by band powers.
"""

from .coxeter import (
    BandPair,
    CoxeterDatum,
    Partition,
    ScopeError,
    commutes_in_brn,
    crossing,
    matrix_to_partition,
    partition_to_matrix,
    set_partitions,
)
from .braid import (
    ArtinWord,
    FreeEndo,
    FreeWord,
    Permutation,
    artin_action_on_free,
    band_to_artin,
    braid_equal,
    free_image,
    format_braid_word,
    parse_braid_word,
    permutation_image,
)
from .coxword import (
    CoxWord,
    JkFactorization,
    act_band_on_cox,
    apply_artin_to_cox,
    band_power_letter_action,
    check_prop7,
    check_prop_trans,
    has_long_subword,
    is_critical,
    is_long,
    jk_factorize,
    reduce_cox,
)
from .hurwitz import GroupContext, GroupTuple, hurwitz_apply, hurwitz_step, stabilizes
from .raag import (
    RaagExpression,
    apply_type1,
    apply_type2,
    canonical_expressions,
    ends_in,
    ends_in_witness,
    expression_to_braid,
    injectivity_scan,
    is_reduced,
    normalize,
    parse_expression,
)
from .present import (
    Relation,
    block_product_check,
    coset_rewrite,
    coset_table_check,
    export_presentation,
    relations_combing,
    relations_sec4,
    relations_thm1,
    relations_thm2,
    relations_thm2_rederivations,
    verify_relations,
)
from .report import RunReport

__all__ = [
    "ArtinWord",
    "BandPair",
    "CoxWord",
    "CoxeterDatum",
    "FreeEndo",
    "FreeWord",
    "GroupContext",
    "GroupTuple",
    "JkFactorization",
    "Partition",
    "Permutation",
    "RaagExpression",
    "Relation",
    "RunReport",
    "ScopeError",
    "act_band_on_cox",
    "apply_artin_to_cox",
    "apply_type1",
    "apply_type2",
    "artin_action_on_free",
    "band_power_letter_action",
    "band_to_artin",
    "block_product_check",
    "braid_equal",
    "canonical_expressions",
    "check_prop7",
    "check_prop_trans",
    "commutes_in_brn",
    "coset_rewrite",
    "coset_table_check",
    "crossing",
    "ends_in",
    "ends_in_witness",
    "export_presentation",
    "expression_to_braid",
    "format_braid_word",
    "free_image",
    "has_long_subword",
    "hurwitz_apply",
    "hurwitz_step",
    "injectivity_scan",
    "is_critical",
    "is_long",
    "is_reduced",
    "jk_factorize",
    "matrix_to_partition",
    "normalize",
    "parse_braid_word",
    "parse_expression",
    "partition_to_matrix",
    "permutation_image",
    "reduce_cox",
    "relations_combing",
    "relations_sec4",
    "relations_thm1",
    "relations_thm2",
    "relations_thm2_rederivations",
    "set_partitions",
    "stabilizes",
    "verify_relations",
]
