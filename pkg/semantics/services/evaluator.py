# semantics/services/evaluator.py
"""
Evaluation of morphisms as matrices over a bimonoid model.

Monotone maps use iterated μ (η for empty fibers), their opposites
iterated δ (ε). A middle element (x, σ) with flags f and twists t
evaluates to (⊗ A(x_j) ι^(f_j) Θ^(t_j)) · P_σ: the strands are permuted
first, then every output strand is acted on.

Everything is applied to a strand state rather than multiplied out, so a
composite never builds a matrix on its middle object.
"""
import functools
import logging

from composites.services import CompositeMorphism, DJGMorphism, SpanMorphism, canonicalize
from crossed.services import CrossedFamily
from ncsets.services import NCSetMap, SpanClass, leg_orders, to_pair
from ordmaps.services import OrderedMap
from utils.constants import NO_BRAIDING, RIBBON, SYMMETRIC
from utils.validators import InvalidDataError, require_same_group

from .linalg import (
    act_on_strands, apply_blocks, equal_mod, identity, kron_all, matmul, permute_strands, power,
)

logger = logging.getLogger(__name__)


def iterated_mult(model, k):
    """μ^(k): d^k → d, nested to the left"""
    if k == 0:
        return model.unit
    result = identity(model.dim)
    for _ in range(k - 1):
        result = matmul(model.p, model.mult, kron_all(model.p, (result, identity(model.dim))))
    return result


def iterated_comult(model, k):
    if k == 0:
        return model.counit
    result = identity(model.dim)
    for _ in range(k - 1):
        result = matmul(model.p, kron_all(model.p, (result, identity(model.dim))), model.comult)
    return result


# ============= STATE APPLICATION =============

def apply_mono(model, phi, state):
    return apply_blocks(
        model.p, model.dim, state, [(k, iterated_mult(model, k)) for k in phi.fiber_sizes()],
    )


def apply_op_mono(model, phi, state):
    return apply_blocks(
        model.p, model.dim, state, [(1, iterated_comult(model, k)) for k in phi.fiber_sizes()],
    )


def _strand_matrices(model, family, elt):
    flags = family.flags(elt) or (0,) * elt.arity
    twists = elt.braid.twists if family.tag == RIBBON else (0,) * elt.arity
    if any(flags) and model.involution is None:
        raise InvalidDataError(f"{model} has no involution; cannot evaluate flagged strands")
    twist_inverse = model.twist_inverse() if any(t < 0 for t in twists) else None
    matrices = []
    for label, flag, amount in zip(family.labels(elt).entries, flags, twists):
        factors = []
        if label != model.group.identity:
            factors.append(model.act(label))
        if flag:
            factors.append(model.involution)
        if amount:
            factors.append(power(model.p, model.twist, amount, twist_inverse))
        matrices.append(matmul(model.p, *factors) if factors else None)
    return matrices


def apply_element(model, family, elt, state):
    family.check(elt)
    require_same_group(family.group, model.group)
    perm = tuple(family.perm(elt))
    if model.braiding == NO_BRAIDING and perm != tuple(range(len(perm))):
        raise InvalidDataError(f"{model} has no braiding; cannot evaluate the crossing in {elt}")
    state = permute_strands(model.p, model.dim, state, perm, model.sign_parity)
    return act_on_strands(model.p, model.dim, state, _strand_matrices(model, family, elt))


def apply_djg(model, f, state):
    """mono ∘ elt applied to a state on f.domain strands"""
    state = apply_element(model, f.family, f.elt, state)
    return apply_mono(model, f.mono, state)


def apply_op_djg(model, f, state):
    """fᵒᵖ = elt⁻¹ ∘ monoᵒᵖ applied to a state on f.codomain strands"""
    state = apply_op_mono(model, f.mono, state)
    return apply_element(model, f.family, f.family.inverse(f.elt), state)


def _start(model, n):
    return identity(model.dim, n)


# ============= MATRICES =============

def eval_mono(model, phi):
    """The monoid-side image of a monotone map: d^domain → d^codomain"""
    return apply_mono(model, phi, _start(model, phi.domain))


def eval_op_mono(model, phi):
    """The comonoid-side image of φᵒᵖ: d^codomain → d^domain"""
    return apply_op_mono(model, phi, _start(model, phi.codomain))


def eval_element(model, family, elt):
    return apply_element(model, family, elt, _start(model, elt.arity))


def eval_djg(model, f):
    return apply_djg(model, f, _start(model, f.domain))


def eval_op_djg(model, f):
    return apply_op_djg(model, f, _start(model, f.codomain))


def eval_span_pair(model, beta, alpha):
    """α∘βᵒᵖ for legs β, α out of a common middle; no matrix is built on the middle"""
    return apply_djg(model, alpha, eval_op_djg(model, beta))


def eval_composite(model, c):
    """out ∘ elt ∘ inᵒᵖ"""
    state = apply_op_mono(model, c.in_mono, _start(model, c.domain))
    state = apply_element(model, c.family, c.elt, state)
    return apply_mono(model, c.out_mono, state)


# ============= LABELLED SETS =============

def is_commutative(model):
    return equal_mod(model.p, model.mult, matmul(model.p, model.mult, model.swap()))


def is_cocommutative(model):
    return equal_mod(model.p, model.comult, matmul(model.p, model.swap(), model.comult))


@functools.lru_cache(maxsize=64)
def _symmetric_family(group):
    return CrossedFamily(SYMMETRIC, group)


def _pair(f):
    ordered = NCSetMap(f.group, f.domain, f.codomain, f.fibers)
    return to_pair(ordered, _symmetric_family(f.group))


def eval_ncset(model, f):
    """GF(as) through the pair isomorphism; GF maps need a commutative model"""
    if not f.ordered and not is_commutative(model):
        raise InvalidDataError(f"{model} is not commutative; unordered fibers are ambiguous")
    return eval_djg(model, _pair(f))


def eval_span_class(model, span):
    """out ∘ inᵒᵖ with both legs read through the pair isomorphism"""
    out_ordered, in_ordered = leg_orders(span.variant)
    if not out_ordered and not is_commutative(model):
        raise InvalidDataError(f"{span.variant} spans need a commutative model")
    if not in_ordered and not is_cocommutative(model):
        raise InvalidDataError(f"{span.variant} spans need a cocommutative model")
    in_pair, out_pair = _pair(span.in_leg), _pair(span.out_leg)
    state = apply_op_mono(model, in_pair.mono, _start(model, span.domain))
    family = in_pair.family
    state = apply_element(model, family, family.inverse(in_pair.elt), state)
    state = apply_element(model, family, out_pair.elt, state)
    return apply_mono(model, out_pair.mono, state)


# ============= DISPATCH =============

def evaluate(model, morphism):
    """
    Matrix of any morphism the calculus builds: monotone maps, DJG pairs,
    spans and canonical triples, labelled set maps and span classes.
    """
    if isinstance(morphism, OrderedMap):
        return eval_mono(model, morphism)
    if isinstance(morphism, DJGMorphism):
        return eval_djg(model, morphism)
    if isinstance(morphism, CompositeMorphism):
        return eval_composite(model, morphism)
    if isinstance(morphism, SpanMorphism):
        return eval_composite(model, canonicalize(morphism))
    if isinstance(morphism, NCSetMap):
        return eval_ncset(model, morphism)
    if isinstance(morphism, SpanClass):
        return eval_span_class(model, morphism)
    raise InvalidDataError(f"cannot evaluate a {type(morphism).__name__}")
