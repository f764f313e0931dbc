# ordmaps/services/ordered_map.py
import itertools
import logging
import re
from dataclasses import dataclass

from utils.validators import ArityError, InvalidDataError, require_index

logger = logging.getLogger(__name__)

ID = 'id'
MULT = 'mult'
UNIT = 'unit'

# (inputs, outputs) of each layer symbol
SYMBOL_ARITY = {ID: (1, 1), MULT: (2, 1), UNIT: (0, 1)}

_TEXT = re.compile(r'^\s*\[\s*([0-9,\s]*)\]\s*:\s*(\d+)\s*->\s*(\d+)\s*$')


@dataclass(frozen=True)
class OrderedMap:
    """
    A monotone map {0..domain-1} → {0..codomain-1}.

    values[i] is the image of i; the textual form is 1-based.
    """
    domain: int
    codomain: int
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != self.domain:
            raise InvalidDataError(f"{len(values)} values given for a domain of size {self.domain}")
        for value in values:
            require_index(value, self.codomain, 'map value')
        if any(a > b for a, b in zip(values, values[1:])):
            raise InvalidDataError(f"values {list(values)} are not weakly increasing")
        object.__setattr__(self, 'values', values)

    def __call__(self, i):
        return self.values[i]

    def __str__(self):
        return f"[{','.join(str(v + 1) for v in self.values)}]:{self.domain}->{self.codomain}"

    def fiber_sizes(self):
        sizes = [0] * self.codomain
        for value in self.values:
            sizes[value] += 1
        return tuple(sizes)

    def fiber(self, j):
        return tuple(i for i, value in enumerate(self.values) if value == j)

    def is_identity(self):
        return self.domain == self.codomain and self.values == tuple(range(self.domain))

    def is_injective(self):
        return len(set(self.values)) == self.domain

    def is_surjective(self):
        return set(self.values) == set(range(self.codomain))


def identity_map(n):
    return OrderedMap(n, n, tuple(range(n)))


def from_fiber_sizes(sizes):
    """The unique monotone map whose j-th fiber has sizes[j] elements"""
    values = tuple(j for j, size in enumerate(sizes) for _ in range(size))
    return OrderedMap(len(values), len(sizes), values)


MULT_MAP = OrderedMap(2, 1, (0, 0))
UNIT_MAP = OrderedMap(0, 1, ())


def parse_ordered_map(text):
    """Read the textual form "[v1,v2,...]:n->m" (1-based values)"""
    match = _TEXT.match(text)
    if not match:
        raise InvalidDataError(f"not an ordered map: {text!r}")
    body, n, m = match.groups()
    values = tuple(int(v) - 1 for v in body.replace(' ', '').split(',') if v)
    if int(n) != len(values):
        raise InvalidDataError(f"{text!r}: domain {n} but {len(values)} values")
    return OrderedMap(int(n), int(m), values)


# ============= COMPOSITION AND TENSOR =============

def compose_mono(g, f):
    """g∘f for f: n→m and g: m→l"""
    if f.codomain != g.domain:
        raise ArityError(f"cannot compose {g} after {f}: {f.codomain} != {g.domain}")
    return OrderedMap(f.domain, g.codomain, tuple(g.values[v] for v in f.values))


def tensor_mono(f, g):
    """Juxtaposition f ⊗ g; g's values are offset by f's codomain"""
    return OrderedMap(
        f.domain + g.domain,
        f.codomain + g.codomain,
        f.values + tuple(f.codomain + v for v in g.values),
    )


def tensor_all(maps):
    result = identity_map(0)
    for f in maps:
        result = tensor_mono(result, f)
    return result


def epi_mono(f):
    """f = face∘degeneracy with a surjective degeneracy and an injective face"""
    image = sorted(set(f.values))
    position = {value: k for k, value in enumerate(image)}
    surjection = OrderedMap(f.domain, len(image), tuple(position[v] for v in f.values))
    injection = OrderedMap(len(image), f.codomain, tuple(image))
    return surjection, injection


def enumerate_mono(n, m):
    """Every monotone map n→m, in lexicographic order of values"""
    if n < 0 or m < 0:
        raise InvalidDataError("arities must be non-negative")
    return [
        OrderedMap(n, m, values)
        for values in itertools.combinations_with_replacement(range(m), n)
    ]
