# groups/services/finite_group.py
import functools
import itertools
import logging
from dataclasses import dataclass, field

from utils.validators import InvalidDataError, require_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group given by its Cayley table.

    Elements are the indices 0..order-1; table[a][b] is the index of a·b.
    identity and inverse are derived from the table at construction and
    the Latin-square and identity conditions are validated there.
    """
    name: str
    table: tuple
    names: tuple = ()
    identity: int = field(init=False, compare=False)
    inverse: tuple = field(init=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        order = len(table)
        if order == 0:
            raise InvalidDataError("a group needs at least one element")
        full = set(range(order))
        for row in table:
            if len(row) != order or set(row) != full:
                raise InvalidDataError(f"table of {self.name} is not a Latin square")
        for col in range(order):
            if {row[col] for row in table} != full:
                raise InvalidDataError(f"table of {self.name} is not a Latin square")

        identity = next((a for a in range(order) if table[a] == tuple(range(order))), None)
        if identity is None or any(table[b][identity] != b for b in range(order)):
            raise InvalidDataError(f"table of {self.name} has no two-sided identity")
        for a, b, c in itertools.product(range(order), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidDataError(f"table of {self.name} is not associative")

        inverse = tuple(table[a].index(identity) for a in range(order))
        names = tuple(self.names) or tuple(str(a) for a in range(order))
        if len(names) != order or len(set(names)) != order:
            raise InvalidDataError(f"names of {self.name} must be {order} distinct strings")

        object.__setattr__(self, 'table', table)
        object.__setattr__(self, 'names', names)
        object.__setattr__(self, 'identity', identity)
        object.__setattr__(self, 'inverse', inverse)

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def element(self, name):
        """Index of the element called `name` (plain indices are accepted too)"""
        if name in self.names:
            return self.names.index(name)
        if isinstance(name, int) and not isinstance(name, bool):
            require_index(name, self.order, 'group element')
            return name
        raise InvalidDataError(f"{name!r} is not an element of {self.name}")

    def name_of(self, a):
        return self.names[a]

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


# ============= CATALOGUE =============

def trivial_group():
    return FiniteGroup('trivial', ((0,),), ('e',))


def cyclic_group(n):
    if n < 1:
        raise InvalidDataError("cyclic group order must be positive")
    names = ['e'] + ['g' if k == 1 else f'g{k}' for k in range(1, n)]
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(f'c{n}', table, tuple(names))


def symmetric_group(n):
    """Σₙ with elements named in one-line notation and product (pq)(i) = p(q(i))"""
    perms = list(itertools.permutations(range(n)))
    position = {p: k for k, p in enumerate(perms)}
    table = tuple(
        tuple(position[tuple(p[q[i]] for i in range(n))] for q in perms)
        for p in perms
    )
    names = tuple(''.join(str(v + 1) for v in p) or 'e' for p in perms)
    return FiniteGroup(f's{n}', table, names)


def direct_product(first, second):
    pairs = list(itertools.product(first.elements(), second.elements()))
    position = {pair: k for k, pair in enumerate(pairs)}
    table = tuple(
        tuple(
            position[(first.mul(a, c), second.mul(b, d))]
            for (c, d) in pairs
        )
        for (a, b) in pairs
    )
    names = tuple(f'({first.name_of(a)},{second.name_of(b)})' for a, b in pairs)
    return FiniteGroup(f'{first.name}x{second.name}', table, names)


BUILTIN_GROUPS = {
    'trivial': trivial_group,
    'c2': lambda: cyclic_group(2),
    'c3': lambda: cyclic_group(3),
    's3': lambda: symmetric_group(3),
}


BUILTIN_NAMES = tuple(BUILTIN_GROUPS)


@functools.lru_cache(maxsize=None)
def builtin_group(name):
    try:
        return BUILTIN_GROUPS[name]()
    except KeyError:
        raise InvalidDataError(
            f"unknown builtin group {name!r}; choose from {', '.join(BUILTIN_GROUPS)}"
        ) from None


# ============= AUTOMORPHISMS AND ACTIONS =============

def is_automorphism(group, images):
    """True if the index map a ↦ images[a] is a bijective homomorphism"""
    if sorted(images) != list(group.elements()):
        return False
    return all(
        images[group.mul(a, b)] == group.mul(images[a], images[b])
        for a in group.elements() for b in group.elements()
    )


def conjugation(group, g):
    """The inner automorphism h ↦ g h g⁻¹"""
    return tuple(group.mul(group.mul(g, h), group.inv(g)) for h in group.elements())


@dataclass(frozen=True)
class GroupAction:
    """A homomorphism acting → Aut(target), stored as one image tuple per element"""
    acting: FiniteGroup
    target: FiniteGroup
    images: tuple

    def __post_init__(self):
        images = tuple(tuple(img) for img in self.images)
        if len(images) != self.acting.order:
            raise InvalidDataError("one automorphism per acting element is required")
        for g, img in enumerate(images):
            if len(img) != self.target.order or not is_automorphism(self.target, img):
                raise InvalidDataError(
                    f"image of {self.acting.name_of(g)} is not an automorphism of {self.target.name}"
                )
        for g, k in itertools.product(self.acting.elements(), repeat=2):
            composite = tuple(images[g][images[k][h]] for h in self.target.elements())
            if composite != images[self.acting.mul(g, k)]:
                raise InvalidDataError("automorphism table is not a homomorphism")
        object.__setattr__(self, 'images', images)

    def apply(self, g, h):
        return self.images[g][h]


def trivial_action(acting, target):
    identity = tuple(target.elements())
    return GroupAction(acting, target, tuple(identity for _ in acting.elements()))


def conjugation_action(acting, target, generator):
    """
    Action of a cyclic group through powers of conjugation by `generator`.

    acting must be cyclic with its generator at index 1 (as built by
    cyclic_group); the order of conjugation by `generator` must divide
    acting.order, which GroupAction validates.
    """
    step = conjugation(target, generator)
    current = tuple(target.elements())
    power = {acting.identity: current}
    g = acting.identity
    for _ in range(acting.order - 1):
        g = acting.mul(g, 1 if acting.order > 1 else 0)
        current = tuple(step[h] for h in current)
        power[g] = current
    images = tuple(power[g] for g in acting.elements())
    logger.debug(f"Conjugation action of {acting.name} on {target.name} built")
    return GroupAction(acting, target, images)
