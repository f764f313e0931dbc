# ncsets/services/bimorphism.py
"""
Bimorphisms of the double categories GF(as)₂, GF₂, V and H.

A bimorphism is a square

    P --top--> p
    |          |
   left      right
    v          v
    m --bottom-> q

whose underlying sets form a pullback. Restricted to a fiber of `left`,
`top` is an order-preserving bijection onto the matching fiber of `right`
(and symmetrically). The labels cancel around the square: bottom∘left and
right∘top carry identity labels. The square need not commute.
"""
import itertools
import logging
from dataclasses import dataclass

from utils.constants import AMBIENTS
from utils.validators import ArityError, InvalidDataError, require_same_group

from .ncset_map import GFMap, NCSetMap, compose_maps

logger = logging.getLogger(__name__)

# (horizontal ordered, vertical ordered) per ambient double category
AMBIENT_ORDERS = {
    'GFas2': (True, True),
    'GF2': (False, False),
    'V': (False, True),
    'H': (True, False),
}


@dataclass(frozen=True)
class Bimorphism:
    ambient: str
    top: NCSetMap
    left: NCSetMap
    right: NCSetMap
    bottom: NCSetMap

    @property
    def apex(self):
        return self.top.domain


def _map_class(ordered):
    return NCSetMap if ordered else GFMap


def _require_ambient(ambient, horizontal, vertical):
    if ambient not in AMBIENTS:
        raise InvalidDataError(f"unknown double category {ambient!r}; expected one of {', '.join(AMBIENTS)}")
    expected = AMBIENT_ORDERS[ambient]
    if (horizontal.ordered, vertical.ordered) != expected:
        raise InvalidDataError(
            f"{ambient} needs horizontal ordered={expected[0]} and vertical ordered={expected[1]}"
        )


def pullback(f, phi):
    """Pairs (x, y) with f(x) = φ(y), listed x-major"""
    fv, pv = f.values, phi.values
    return [(x, y) for x in range(f.domain) for y in range(phi.domain) if fv[x] == pv[y]]


def star_complete(f, phi, ambient):
    """
    The unique bimorphism with bottom f: m→q (horizontal) and right φ: p→q (vertical).

    Fibers of the lifted top are ordered like the fibers of f and those of
    the lifted left like the fibers of φ.
    """
    if f.codomain != phi.codomain:
        raise ArityError(f"{f} and {phi} do not share a codomain")
    require_same_group(f.group, phi.group)
    _require_ambient(ambient, f, phi)
    group = f.group
    apex = pullback(f, phi)
    index = {pair: k for k, pair in enumerate(apex)}
    f_labels, phi_labels = f.labels, phi.labels
    top = tuple(
        tuple((index[x, y], group.inv(phi_labels[y])) for x, _ in f.fibers[phi.values[y]])
        for y in range(phi.domain)
    )
    left = tuple(
        tuple((index[x, y], group.inv(f_labels[x])) for y, _ in phi.fibers[f.values[x]])
        for x in range(f.domain)
    )
    horizontal, vertical = _map_class(f.ordered), _map_class(phi.ordered)
    square = Bimorphism(
        ambient,
        horizontal(group, len(apex), phi.domain, top),
        vertical(group, len(apex), f.domain, left),
        phi,
        f,
    )
    logger.debug(f"star completion of {f} and {phi} in {ambient}: apex {len(apex)}")
    return square


def _restricted_bijection(outer, along, onto, e_fiber, target):
    """Whether `along` maps the elements e_fiber bijectively onto the fiber `target` of `onto`"""
    images = [along.values[e] for e, _ in e_fiber]
    wanted = [e for e, _ in onto.fibers[target]]
    if sorted(images) != sorted(wanted):
        return False
    return not outer.ordered or images == wanted


def _labels_cancel(outer, inner):
    composite = compose_maps(outer, inner)
    return all(a == composite.group.identity for a in composite.labels)


def is_bimorphism(square):
    top, left, right, bottom = square.top, square.left, square.right, square.bottom
    try:
        _require_ambient(square.ambient, bottom, right)
    except InvalidDataError:
        return False
    if (top.ordered, left.ordered) != (bottom.ordered, right.ordered):
        return False
    if (top.codomain, left.codomain) != (right.domain, bottom.domain) or top.domain != left.domain:
        return False
    pairs = sorted(zip(left.values, top.values))
    if pairs != sorted(pullback(bottom, right)):
        return False
    for x, fiber in enumerate(left.fibers):
        if not _restricted_bijection(left, top, right, fiber, bottom.values[x]):
            return False
    for y, fiber in enumerate(top.fibers):
        if not _restricted_bijection(top, left, bottom, fiber, right.values[y]):
            return False
    return _labels_cancel(bottom, left) and _labels_cancel(right, top)


def count_completions(f, phi, ambient):
    """
    Number of ways to lift the pullback projections to a bimorphism.

    Every fiber order and every label of both lifted legs is tried; the
    fiber conditions are local, so the count is a product over fibers.
    """
    square = star_complete(f, phi, ambient)
    group = f.group
    total = 1
    for lifted, opposite, target, target_values, opposite_labels in (
        (square.top, square.left, f, phi.values, phi.labels),
        (square.left, square.top, phi, f.values, f.labels),
    ):
        for k, fiber in enumerate(lifted.fibers):
            elements = [e for e, _ in fiber]
            wanted = [e for e, _ in target.fibers[target_values[k]]]
            if lifted.ordered:
                orders = sum(
                    1 for order in itertools.permutations(elements)
                    if [opposite.values[e] for e in order] == wanted
                )
            else:
                orders = 1
            labels = sum(
                1 for a in group.elements() if group.mul(opposite_labels[k], a) == group.identity
            )
            total *= orders * labels ** len(elements)
    return total
