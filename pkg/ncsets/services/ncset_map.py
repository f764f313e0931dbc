# ncsets/services/ncset_map.py
"""
G-labelled non-commutative sets.

An NCSetMap n→m lists, for every target j, the fiber over j as an ordered
tuple of (element, label) pairs; a GFMap keeps the same data but the
fibers are unordered and stored sorted by element. Elements and labels
are 0-based indices.
"""
import itertools
import logging
from dataclasses import dataclass

from utils.validators import ArityError, InvalidDataError, require_index, require_same_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NCSetMap:
    group: object
    domain: int
    codomain: int
    fibers: tuple

    ordered = True

    def __post_init__(self):
        fibers = tuple(tuple((int(e), int(a)) for e, a in fiber) for fiber in self.fibers)
        if len(fibers) != self.codomain:
            raise InvalidDataError(f"{len(fibers)} fibers given for a codomain of size {self.codomain}")
        seen = []
        for fiber in fibers:
            for e, a in fiber:
                require_index(e, self.domain, 'fiber element')
                require_index(a, self.group.order, 'label')
                seen.append(e)
        if sorted(seen) != list(range(self.domain)):
            raise InvalidDataError(f"fibers {self._text(fibers)} do not partition {self.domain} elements")
        if not self.ordered:
            fibers = tuple(tuple(sorted(fiber)) for fiber in fibers)
        object.__setattr__(self, 'fibers', fibers)

    def _text(self, fibers):
        return '|'.join(
            ' '.join(f"{e + 1}^{self.group.name_of(a)}" for e, a in fiber) for fiber in fibers
        )

    def __str__(self):
        brackets = '[]' if self.ordered else '{}'
        return f"{brackets[0]}{self._text(self.fibers)}{brackets[1]}:{self.domain}->{self.codomain}"

    @property
    def values(self):
        """The underlying set map"""
        values = [0] * self.domain
        for j, fiber in enumerate(self.fibers):
            for e, _ in fiber:
                values[e] = j
        return tuple(values)

    @property
    def labels(self):
        labels = [0] * self.domain
        for fiber in self.fibers:
            for e, a in fiber:
                labels[e] = a
        return tuple(labels)

    def rank(self, e):
        """Position of e inside its fiber"""
        for fiber in self.fibers:
            for position, (element, _) in enumerate(fiber):
                if element == e:
                    return position
        raise InvalidDataError(f"element {e} is not in the domain")

    def fiber_sizes(self):
        return tuple(len(fiber) for fiber in self.fibers)

    def is_bijection(self):
        return self.domain == self.codomain and all(len(fiber) == 1 for fiber in self.fibers)

    @classmethod
    def identity(cls, group, n):
        return cls(group, n, n, tuple(((i, group.identity),) for i in range(n)))

    @classmethod
    def from_values(cls, group, values, codomain, labels=None):
        """The map with the given underlying values, fibers in increasing order"""
        if labels is None:
            labels = (group.identity,) * len(values)
        fibers = [[] for _ in range(codomain)]
        for e, (j, a) in enumerate(zip(values, labels)):
            require_index(j, codomain, 'map value')
            fibers[j].append((e, a))
        return cls(group, len(values), codomain, tuple(tuple(fiber) for fiber in fibers))

    def tensor(self, other):
        require_same_group(self.group, other.group)
        shifted = tuple(tuple((self.domain + e, a) for e, a in fiber) for fiber in other.fibers)
        return type(self)(
            self.group, self.domain + other.domain, self.codomain + other.codomain, self.fibers + shifted,
        )


@dataclass(frozen=True)
class GFMap(NCSetMap):
    """A G-labelled set map; fibers carry no order"""

    ordered = False


def label_act(group, g, fiber):
    """g∗S: every label multiplied on the left by g, order kept"""
    return tuple((e, group.mul(g, a)) for e, a in fiber)


def _composite_fibers(f2, f1):
    if f1.codomain != f2.domain:
        raise ArityError(f"cannot compose {f2} after {f1}: {f1.codomain} != {f2.domain}")
    require_same_group(f1.group, f2.group)
    group = f1.group
    return tuple(
        tuple(itertools.chain.from_iterable(label_act(group, alpha, f1.fibers[j]) for j, alpha in fiber))
        for fiber in f2.fibers
    )


def ncset_compose(f2, f1):
    """f2∘f1: the fiber over i concatenates α_j∗f1⁻¹(j) for j^α_j in f2⁻¹(i), in that order"""
    return NCSetMap(f1.group, f1.domain, f2.codomain, _composite_fibers(f2, f1))


def gf_compose(f2, f1):
    return GFMap(f1.group, f1.domain, f2.codomain, _composite_fibers(f2, f1))


def compose_maps(f2, f1):
    """Composite in GF(as) when both maps are ordered, in GF otherwise"""
    if f1.ordered and f2.ordered:
        return ncset_compose(f2, f1)
    return gf_compose(f2, f1)


def forget(f):
    """GF(as) → GF"""
    return GFMap(f.group, f.domain, f.codomain, f.fibers)


def block_symmetry(group, a, b, ordered=True):
    """The block permutation a+b → b+a moving the first a elements past the next b"""
    values = tuple(b + e for e in range(a)) + tuple(e - a for e in range(a, a + b))
    cls = NCSetMap if ordered else GFMap
    return cls.from_values(group, values, a + b)


# ============= ENUMERATION =============

def _set_maps(n, m):
    return itertools.product(range(m), repeat=n)


def enumerate_ncset(group, n, m):
    """Every morphism n→m of GF(as)"""
    result = []
    for values in _set_maps(n, m):
        base = [[e for e in range(n) if values[e] == j] for j in range(m)]
        for orders in itertools.product(*(itertools.permutations(fiber) for fiber in base)):
            for labels in itertools.product(group.elements(), repeat=n):
                fibers = tuple(tuple((e, labels[e]) for e in order) for order in orders)
                result.append(NCSetMap(group, n, m, fibers))
    return result


def enumerate_gf(group, n, m):
    """Every morphism n→m of GF"""
    return [
        GFMap.from_values(group, values, m, labels)
        for values in _set_maps(n, m)
        for labels in itertools.product(group.elements(), repeat=n)
    ]


def ncset_hom_count(group, n, m):
    """Σ over set maps f of Π_i |f⁻¹(i)|! · |G|ⁿ"""
    total = 0
    for values in _set_maps(n, m):
        product = 1
        for j in range(m):
            for k in range(1, values.count(j) + 1):
                product *= k
        total += product
    return total * group.order ** n


def random_ncset(group, rng, n, m, ordered=True):
    if m == 0 and n > 0:
        raise ArityError(f"there are no maps {n}->0")
    values = [rng.randrange(m) for _ in range(n)]
    fibers = [[e for e in range(n) if values[e] == j] for j in range(m)]
    for fiber in fibers:
        rng.shuffle(fiber)
    labels = [rng.choice(group.elements()) for _ in range(n)]
    cls = NCSetMap if ordered else GFMap
    return cls(group, n, m, tuple(tuple((e, labels[e]) for e in fiber) for fiber in fibers))
