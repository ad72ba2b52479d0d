"""Exact computations with Specht modules of symmetric groups: polytabloids,
semistandard homomorphisms, Carter-Payne maps, endomorphism rings of
restricted and induced modules, and Jantzen filtrations."""

from .combinatorics import (
    Node,
    Partition,
    SemistandardSet,
    Tableau,
    addable_nodes,
    dominates,
    enumerate_semistandard_one_box,
    hook_lengths_column_b,
    join_vee,
    one_box_shift,
    p_core,
    removable_nodes,
    removable_set,
    residue,
)
from .errors import (
    CharacteristicTwoError,
    DegreeTooLargeError,
    DomainMismatchError,
    InvalidShapeError,
    InvalidTableauError,
    NotInSpanError,
    ResidueConditionError,
    SpechtError,
    TheoremCheckError,
)
from .exact_algebra import GF, QQ, ExactMatrix, SmithForm, smith_normal_form
from .homomorphisms import (
    HomMatrix,
    PsiMap,
    carter_payne_explicit,
    carter_payne_jm,
    compose_cp_chain,
    endo_ring_induction,
    endo_ring_restriction,
    hom_space,
    psi,
    specht_membership,
    theta_T,
)
from .jantzen import bilinear_form, error_term, gram_matrix, jantzen_filtration, theta_tilde, verify_jantzen_containment
from .specht import (
    SpechtBasis,
    TabloidModule,
    TranspositionSum,
    act_jm,
    act_permutation,
    expand_in_standard,
    polytabloid,
    specht_series_restriction,
    standard_basis,
)

__version__ = "0.1.0"

__all__ = [
    "CharacteristicTwoError",
    "DegreeTooLargeError",
    "DomainMismatchError",
    "ExactMatrix",
    "GF",
    "HomMatrix",
    "InvalidShapeError",
    "InvalidTableauError",
    "Node",
    "NotInSpanError",
    "Partition",
    "PsiMap",
    "QQ",
    "ResidueConditionError",
    "SemistandardSet",
    "SmithForm",
    "SpechtBasis",
    "SpechtError",
    "Tableau",
    "TabloidModule",
    "TheoremCheckError",
    "TranspositionSum",
    "act_jm",
    "act_permutation",
    "addable_nodes",
    "bilinear_form",
    "carter_payne_explicit",
    "carter_payne_jm",
    "compose_cp_chain",
    "dominates",
    "endo_ring_induction",
    "endo_ring_restriction",
    "enumerate_semistandard_one_box",
    "error_term",
    "expand_in_standard",
    "gram_matrix",
    "hom_space",
    "hook_lengths_column_b",
    "jantzen_filtration",
    "join_vee",
    "one_box_shift",
    "p_core",
    "polytabloid",
    "psi",
    "removable_nodes",
    "removable_set",
    "residue",
    "smith_normal_form",
    "specht_membership",
    "specht_series_restriction",
    "standard_basis",
    "theta_T",
    "theta_tilde",
    "verify_jantzen_containment",
]
