from .characters import (
    CharTable,
    character_compare,
    character_suite,
    closed_form_product,
    fock_slice_char,
    l_zero_char,
    mslice_closed_form,
    partition_product,
    spanning_character,
    theta_partition_form,
    zhat_hilbert_oracle,
)
from .dictionary import OpCache, VModule, kbar_box
from .suites import (
    Check,
    all_passed,
    automorphism_suite,
    bracket_fidelity_suite,
    element_pool,
    garland_operator_apply,
    garland_suite,
    highest_weight_suite,
    lemma_action_suite,
    presentation_suite,
    zhat_suite,
)
from .zhat import zhat_reduce

__all__ = [
    "CharTable",
    "Check",
    "OpCache",
    "VModule",
    "all_passed",
    "automorphism_suite",
    "bracket_fidelity_suite",
    "character_compare",
    "character_suite",
    "closed_form_product",
    "element_pool",
    "fock_slice_char",
    "garland_operator_apply",
    "garland_suite",
    "highest_weight_suite",
    "kbar_box",
    "l_zero_char",
    "lemma_action_suite",
    "mslice_closed_form",
    "partition_product",
    "presentation_suite",
    "spanning_character",
    "theta_partition_form",
    "zhat_hilbert_oracle",
    "zhat_reduce",
    "zhat_suite",
]
