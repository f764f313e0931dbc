# composites/services/composite.py
"""
Spans and canonical triples of 𝔻⊗(J⊗𝔾)⊗𝔻ᵒᵖ.

A span (in_leg, out_leg) over a middle p stands for out_leg∘in_legᵒᵖ.
Spans that differ by a middle element h, (in∘h, out∘h), are the same
morphism; the canonical triple absorbs the in-leg element into the middle.
"""
import logging
from dataclasses import dataclass

from ordmaps.services import (
    MULT_MAP, UNIT_MAP, OrderedMap, enumerate_mono, identity_map, tensor_mono,
)
from utils.validators import ArityError, require_arity

from .djg import DJGMorphism, compose_DJG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanMorphism:
    in_leg: DJGMorphism
    out_leg: DJGMorphism

    def __post_init__(self):
        require_arity(self.out_leg.domain, self.in_leg.domain, 'span middle')

    @property
    def family(self):
        return self.in_leg.family

    @property
    def middle(self):
        return self.in_leg.domain

    @property
    def domain(self):
        return self.in_leg.codomain

    @property
    def codomain(self):
        return self.out_leg.codomain


@dataclass(frozen=True)
class CompositeMorphism:
    """out_mono ∘ elt ∘ in_monoᵒᵖ : n → m, through a middle of size p"""
    family: object
    in_mono: OrderedMap
    elt: object
    out_mono: OrderedMap

    def __post_init__(self):
        self.family.check(self.elt)
        require_arity(self.in_mono.domain, self.elt.arity, 'in-leg domain')
        require_arity(self.out_mono.domain, self.elt.arity, 'out-leg domain')

    @property
    def middle(self):
        return self.elt.arity

    @property
    def domain(self):
        return self.in_mono.codomain

    @property
    def codomain(self):
        return self.out_mono.codomain

    def __str__(self):
        return f"span({self.in_mono}; {self.elt}; {self.out_mono})"

    @classmethod
    def identity(cls, family, n):
        return cls(family, identity_map(n), family.identity(n), identity_map(n))

    @classmethod
    def from_elt(cls, family, elt):
        n = elt.arity
        return cls(family, identity_map(n), family.canonical(elt), identity_map(n))

    @classmethod
    def from_mono(cls, family, mono):
        return cls(family, identity_map(mono.domain), family.identity(mono.domain), mono)

    @classmethod
    def from_op_mono(cls, family, mono):
        return cls(family, mono, family.identity(mono.domain), identity_map(mono.domain))

    def to_span(self):
        return SpanMorphism(
            DJGMorphism.from_mono(self.family, self.in_mono),
            DJGMorphism(self.family, self.elt, self.out_mono),
        )

    def tensor(self, other):
        return CompositeMorphism(
            self.family,
            tensor_mono(self.in_mono, other.in_mono),
            self.family.tensor(self.elt, other.elt),
            tensor_mono(self.out_mono, other.out_mono),
        )

    def op(self):
        """The opposite morphism m → n"""
        return CompositeMorphism(
            self.family, self.out_mono, self.family.canonical(self.family.inverse(self.elt)), self.in_mono,
        )

    def key(self):
        return self.in_mono, self.family.normalize(self.elt), self.out_mono


def canonicalize(span):
    """(φ_in∘j_in, φ_out∘j_out) ↦ (φ_in, j_out∘j_in⁻¹, φ_out)"""
    if isinstance(span, CompositeMorphism):
        return CompositeMorphism(span.family, span.in_mono, span.family.canonical(span.elt), span.out_mono)
    family = span.family
    elt = family.compose(span.out_leg.elt, family.inverse(span.in_leg.elt))
    return CompositeMorphism(family, span.in_leg.mono, family.canonical(elt), span.out_leg.mono)


def span_equiv(s1, s2):
    c1, c2 = canonicalize(s1), canonicalize(s2)
    if (c1.domain, c1.codomain) != (c2.domain, c2.codomain):
        raise ArityError(
            f"spans {c1.domain}->{c1.codomain} and {c2.domain}->{c2.codomain} have different boundaries"
        )
    return c1.key() == c2.key()


def precompose_middle(span, h):
    """(in∘h, out∘h): the same morphism seen through a relabelled middle"""
    witness = DJGMorphism.from_elt(span.family, h)
    return SpanMorphism(compose_DJG(span.in_leg, witness), compose_DJG(span.out_leg, witness))


# ============= BIMONOID GENERATORS =============

def mult(family):
    return CompositeMorphism.from_mono(family, MULT_MAP)


def unit(family):
    return CompositeMorphism.from_mono(family, UNIT_MAP)


def comult(family):
    return CompositeMorphism.from_op_mono(family, MULT_MAP)


def counit(family):
    return CompositeMorphism.from_op_mono(family, UNIT_MAP)


def random_composite(family, rng, n, m, max_middle=3):
    if n == 0 or m == 0:
        p = 0
    else:
        p = rng.randint(0, max_middle)
    return CompositeMorphism(
        family,
        rng.choice(enumerate_mono(p, n)),
        family.canonical(family.random(rng, p)),
        rng.choice(enumerate_mono(p, m)),
    )
