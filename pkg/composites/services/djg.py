# composites/services/djg.py
"""
Morphisms of 𝔻⊗J⊗𝔾: pairs (φ, j) read as φ∘j, the middle element first.
"""
import itertools
import logging
from dataclasses import dataclass

from crossed.services import rewrite_past_mono
from ordmaps.services import (
    OrderedMap, compose_mono, enumerate_mono, identity_map, tensor_mono,
)
from utils.validators import ArityError, require_arity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DJGMorphism:
    family: object
    elt: object
    mono: OrderedMap

    def __post_init__(self):
        self.family.check(self.elt)
        require_arity(self.elt.arity, self.mono.domain, 'middle element arity')

    @property
    def domain(self):
        return self.mono.domain

    @property
    def codomain(self):
        return self.mono.codomain

    def __str__(self):
        return f"({self.mono}, {self.elt})"

    @classmethod
    def identity(cls, family, n):
        return cls(family, family.identity(n), identity_map(n))

    @classmethod
    def from_mono(cls, family, mono):
        return cls(family, family.identity(mono.domain), mono)

    @classmethod
    def from_elt(cls, family, elt):
        return cls(family, elt, identity_map(elt.arity))

    def is_identity(self):
        return self.mono.is_identity() and self.family.is_identity(self.elt)

    def has_trivial_elt(self):
        return self.family.is_identity(self.elt)

    def tensor(self, other):
        return DJGMorphism(
            self.family,
            self.family.tensor(self.elt, other.elt),
            tensor_mono(self.mono, other.mono),
        )

    def key(self):
        return self.mono, self.family.normalize(self.elt)


def compose_DJG(g, f):
    """g∘f: the middle element of g is moved past the map of f"""
    if f.codomain != g.domain:
        raise ArityError(f"cannot compose {g} after {f}: {f.codomain} != {g.domain}")
    family = f.family
    moved_mono, moved_elt = rewrite_past_mono(family, g.elt, f.mono)
    return DJGMorphism(
        family,
        family.compose(moved_elt, f.elt),
        compose_mono(g.mono, moved_mono),
    )


def compose_all(morphisms):
    """Compose a list in diagrammatic order: the first entry acts first"""
    morphisms = list(morphisms)
    result = morphisms[0]
    for g in morphisms[1:]:
        result = compose_DJG(g, result)
    return result


def djg_equal(f, g):
    return f.domain == g.domain and f.codomain == g.codomain and f.key() == g.key()


def enumerate_djg(family, n, m):
    """Every morphism n→m of a finite family"""
    return [
        DJGMorphism(family, elt, mono)
        for mono, elt in itertools.product(enumerate_mono(n, m), list(family.enumerate(n)))
    ]


def random_djg(family, rng, n, m):
    return DJGMorphism(family, family.random(rng, n), rng.choice(enumerate_mono(n, m)))
