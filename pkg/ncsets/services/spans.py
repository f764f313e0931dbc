# ncsets/services/spans.py
"""
Span classes of the four composite PROPs built from GF(as) and GF.

A variant names the covariant leg first and the contravariant leg second:
A for GF(as) (ordered fibers), V for GF (unordered fibers). A span
n ←φ— p —f→ m stands for f∘φᵒᵖ; spans related by a labelled bijection of
the middle are the same morphism.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

from composites.services import DJGMorphism
from utils.constants import AMBIENT_FOR_VARIANT, SPAN_VARIANTS
from utils.validators import ArityError, InvalidDataError, require_same_group

from .bimorphism import star_complete
from .isomorphism import from_pair
from .ncset_map import NCSetMap, compose_maps, forget

logger = logging.getLogger(__name__)


def leg_orders(variant):
    """(covariant ordered, contravariant ordered)"""
    if variant not in SPAN_VARIANTS:
        raise InvalidDataError(f"unknown span variant {variant!r}; expected one of {', '.join(SPAN_VARIANTS)}")
    return variant[0] == 'A', variant[1] == 'A'


def _as_leg(f, ordered):
    if ordered and not f.ordered:
        raise InvalidDataError(f"{f} has unordered fibers but the leg needs GF(as)")
    return f if ordered else forget(f)


@dataclass(frozen=True, eq=False)
class SpanClass:
    variant: str
    in_leg: NCSetMap
    out_leg: NCSetMap

    def __post_init__(self):
        out_ordered, in_ordered = leg_orders(self.variant)
        object.__setattr__(self, 'in_leg', _as_leg(self.in_leg, in_ordered))
        object.__setattr__(self, 'out_leg', _as_leg(self.out_leg, out_ordered))
        require_same_group(self.in_leg.group, self.out_leg.group)
        if self.in_leg.domain != self.out_leg.domain:
            raise ArityError(f"span legs start at {self.in_leg.domain} and {self.out_leg.domain}")

    @property
    def group(self):
        return self.in_leg.group

    @property
    def middle(self):
        return self.in_leg.domain

    @property
    def domain(self):
        return self.in_leg.codomain

    @property
    def codomain(self):
        return self.out_leg.codomain

    def __str__(self):
        return f"{self.variant}({self.in_leg}; {self.out_leg})"

    @classmethod
    def identity(cls, variant, group, n):
        return cls(variant, NCSetMap.identity(group, n), NCSetMap.identity(group, n))

    @classmethod
    def from_composite(cls, morphism):
        """The AA class of a symmetric triple out∘elt∘inᵒᵖ"""
        family = morphism.family
        in_leg = from_pair(DJGMorphism.from_mono(family, morphism.in_mono))
        out_leg = from_pair(DJGMorphism(family, morphism.elt, morphism.out_mono))
        return cls('AA', in_leg, out_leg)

    def tensor(self, other):
        if other.variant != self.variant:
            raise InvalidDataError(f"cannot tensor {self.variant} and {other.variant} spans")
        return SpanClass(self.variant, self.in_leg.tensor(other.in_leg), self.out_leg.tensor(other.out_leg))

    def key(self):
        return self._key

    @cached_property
    def _key(self):
        """
        Complete invariant of the class, computed once per span.

        The middle is relabelled so the in-leg becomes monotone with identity
        labels; each middle element is then described by its out-leg target,
        its rank in that fiber (ordered out-legs only) and its out-leg label
        times the inverse of its in-leg label. Unordered in-legs leave the
        order inside each block free, so those blocks are sorted.
        """
        group = self.group
        in_leg, out_leg = self.in_leg, self.out_leg
        out_values, out_labels = out_leg.values, out_leg.labels
        blocks = []
        for fiber in in_leg.fibers:
            described = [
                (
                    out_values[e],
                    out_leg.rank(e) if out_leg.ordered else 0,
                    group.mul(out_labels[e], group.inv(a)),
                )
                for e, a in fiber
            ]
            blocks.append(tuple(described) if in_leg.ordered else tuple(sorted(described)))
        return self.variant, self.domain, self.codomain, tuple(blocks)

    def __eq__(self, other):
        return isinstance(other, SpanClass) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def pullback_span_compose(variant, s2, s1):
    """s2∘s1 through the star completion of (s1.out_leg, s2.in_leg)"""
    if s1.variant != variant or s2.variant != variant:
        raise InvalidDataError(f"spans of variants {s1.variant}, {s2.variant} composed as {variant}")
    if s1.codomain != s2.domain:
        raise ArityError(f"cannot compose spans: {s1.codomain} != {s2.domain}")
    square = star_complete(s1.out_leg, s2.in_leg, AMBIENT_FOR_VARIANT[variant])
    return SpanClass(
        variant,
        compose_maps(s1.in_leg, square.left),
        compose_maps(s2.out_leg, square.top),
    )

