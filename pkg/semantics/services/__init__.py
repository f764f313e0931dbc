from .checker import (
    CATEGORIES, RULES, EvalReport, FunctorialityChecker, ModelLaws, braiding_laws,
    check_functoriality, check_involution, check_rewrite_soundness, check_ribbon,
    check_semantics, rule_instances, verify_model,
)
from .evaluator import (
    apply_djg, apply_op_djg, eval_composite, eval_djg, eval_element, eval_mono, eval_ncset,
    eval_op_djg, eval_op_mono, eval_span_class, eval_span_pair, evaluate, is_cocommutative,
    is_commutative, iterated_comult, iterated_mult,
)
from .linalg import (
    MAX_PRIME, as_matrix, equal_mod, identity, inverse_mod, is_prime, kron_all, matmul,
    permutation_matrix, swap_matrix,
)
from .model import (
    BimonoidModel, exterior_model, group_algebra_model, mutate_comult, sign_characters,
    trivial_model, with_sign_braiding, with_sign_twist,
)
