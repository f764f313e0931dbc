# ncsets/services/isomorphism.py
"""
GF(as) ≅ 𝔻⊗ℙ⊗𝔾.

Listing the fibers of f one after the other gives a position for every
element. The pair of f is (ψ, (x, τ)): τ sends an element to its position,
x_q is the label of the element at position q and ψ is the monotone map
sending each position to its fiber.
"""
import logging

from composites.services import DJGMorphism
from crossed.services import CrossedFamily
from groups.services import GroupTuple, LabelledPermutation
from ordmaps.services import from_fiber_sizes
from utils.constants import SYMMETRIC
from utils.validators import GroupMismatchError, InvalidDataError

from .ncset_map import NCSetMap

logger = logging.getLogger(__name__)


def to_pair(f, family=None):
    if not f.ordered:
        raise InvalidDataError(f"{f} has unordered fibers; only GF(as) maps have a pair")
    family = family or CrossedFamily(SYMMETRIC, f.group)
    if family.tag != SYMMETRIC:
        raise GroupMismatchError(f"GF(as) pairs live in the {SYMMETRIC} family, not {family.tag}")
    order = [pair for fiber in f.fibers for pair in fiber]
    tau = [0] * f.domain
    for position, (e, _) in enumerate(order):
        tau[e] = position
    labels = GroupTuple(f.group, tuple(a for _, a in order))
    return DJGMorphism(family, LabelledPermutation(labels, tuple(tau)), from_fiber_sizes(f.fiber_sizes()))


def from_pair(morphism):
    family = morphism.family
    if family.tag != SYMMETRIC:
        raise GroupMismatchError(f"only {SYMMETRIC} pairs are GF(as) maps, not {family.tag}")
    elt, psi = morphism.elt, morphism.mono
    at_position = [0] * elt.arity
    for e, position in enumerate(elt.perm):
        at_position[position] = e
    fibers = [[] for _ in range(psi.codomain)]
    for position, j in enumerate(psi.values):
        fibers[j].append((at_position[position], elt.labels[position]))
    return NCSetMap(family.group, psi.domain, psi.codomain, tuple(tuple(fiber) for fiber in fibers))
