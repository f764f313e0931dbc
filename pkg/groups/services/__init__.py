from .finite_group import (
    BUILTIN_NAMES, FiniteGroup, GroupAction, builtin_group, conjugation, conjugation_action,
    cyclic_group, direct_product, is_automorphism, symmetric_group,
    trivial_action, trivial_group,
)
from .labelled import (
    GroupTuple, LabelledPermutation, enumerate_labelled_permutations,
    inversions, labelled_perm_compose, perm_compose, perm_identity,
    perm_inverse, perm_tensor, permute_entries, skeletal_relabel, tuple_act,
)
