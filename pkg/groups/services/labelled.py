# groups/services/labelled.py
"""
Label tuples and labelled permutations (elements of Gⁿ⋊Σₙ and Gⁿ⋊Hₙ).

Conventions used across the project:

* a permutation is a tuple `perm` with perm[i] = σ(i), 0-based;
* permutations compose as functions, (στ)(i) = σ(τ(i));
* σ acts on a tuple by (σ·x)_i = x_{σ⁻¹(i)}, i.e. entry j moves to σ(j);
* (x, σ) is read as "move point i to σ(i), then multiply its label by x_{σ(i)}",
  which gives the product (x,σ)(y,τ) = (x·σ·y, στ).

Hyperoctahedral elements carry a flag tuple over C₂ (0 = +, 1 = -) that is
indexed and multiplied exactly like the labels.
"""
import itertools
from dataclasses import dataclass

from utils.validators import (
    ArityError, GroupMismatchError, InvalidDataError,
    require_arity, require_bijection, require_index, require_same_group,
)


# ============= PERMUTATIONS =============

def perm_identity(n):
    return tuple(range(n))


def perm_compose(sigma, tau):
    """σ∘τ, τ applied first"""
    require_arity(len(sigma), len(tau), 'permutation length')
    return tuple(sigma[t] for t in tau)


def perm_inverse(sigma):
    inverse = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inverse[s] = i
    return tuple(inverse)


def perm_tensor(sigma, tau):
    """Block sum σ ⊕ τ"""
    shift = len(sigma)
    return tuple(sigma) + tuple(shift + t for t in tau)


def permute_entries(sigma, values):
    """(σ·v)_i = v_{σ⁻¹(i)} on any sequence"""
    require_arity(len(values), len(sigma), 'tuple length')
    result = [None] * len(values)
    for j, value in enumerate(values):
        result[sigma[j]] = value
    return tuple(result)


def inversions(sigma):
    return sum(
        1 for i, j in itertools.combinations(range(len(sigma)), 2)
        if sigma[i] > sigma[j]
    )


# ============= LABEL TUPLES =============

@dataclass(frozen=True)
class GroupTuple:
    group: object
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        for entry in entries:
            require_index(entry, self.group.order, 'label')
        object.__setattr__(self, 'entries', entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self):
        return f"({','.join(self.group.name_of(a) for a in self.entries)})"

    def multiply(self, other):
        """Pointwise product self_i · other_i"""
        require_same_group(self.group, other.group)
        require_arity(len(other), len(self), 'tuple length')
        return GroupTuple(
            self.group,
            tuple(self.group.mul(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def inverted(self):
        return GroupTuple(self.group, tuple(self.group.inv(a) for a in self.entries))

    def concat(self, other):
        require_same_group(self.group, other.group)
        return GroupTuple(self.group, self.entries + other.entries)

    @classmethod
    def identity(cls, group, n):
        return cls(group, (group.identity,) * n)

    @classmethod
    def from_names(cls, group, names):
        return cls(group, tuple(group.element(name) for name in names))


def tuple_act(sigma, x):
    """Left action of Σₙ on Gⁿ: the j-th entry moves to position σ(j)"""
    if len(sigma) != len(x):
        raise ArityError(f"cannot act with a permutation of {len(sigma)} points on a tuple of length {len(x)}")
    return GroupTuple(x.group, permute_entries(sigma, x.entries))


def skeletal_relabel(f, x):
    """
    Pull a label tuple back along a set map: result_i = x_{f(i)}.

    `f` is the value tuple of a map {0..n-1} → {0..m-1}, m = len(x).
    """
    for value in f:
        require_index(value, len(x), 'map value')
    return GroupTuple(x.group, tuple(x.entries[value] for value in f))


# ============= LABELLED PERMUTATIONS =============

def _flags_act(sigma, flags):
    return permute_entries(sigma, flags)


@dataclass(frozen=True)
class LabelledPermutation:
    labels: GroupTuple
    perm: tuple
    flags: tuple = None

    def __post_init__(self):
        perm = tuple(self.perm)
        require_bijection(perm)
        require_arity(len(self.labels), len(perm), 'label tuple length')
        object.__setattr__(self, 'perm', perm)
        if self.flags is not None:
            flags = tuple(self.flags)
            require_arity(len(flags), len(perm), 'flag tuple length')
            if any(flag not in (0, 1) for flag in flags):
                raise InvalidDataError(f"flags must be 0 or 1: {flags}")
            object.__setattr__(self, 'flags', flags)

    @property
    def arity(self):
        return len(self.perm)

    @property
    def group(self):
        return self.labels.group

    @property
    def hyperoctahedral(self):
        return self.flags is not None

    @classmethod
    def identity(cls, group, n, hyperoctahedral=False):
        return cls(
            GroupTuple.identity(group, n),
            perm_identity(n),
            (0,) * n if hyperoctahedral else None,
        )

    def is_identity(self):
        return (
            self.perm == perm_identity(self.arity)
            and all(a == self.group.identity for a in self.labels.entries)
            and not any(self.flags or ())
        )

    def inverse(self):
        """(x,σ)⁻¹ = (σ⁻¹·x⁻¹, σ⁻¹)"""
        back = perm_inverse(self.perm)
        flags = None
        if self.flags is not None:
            flags = _flags_act(back, self.flags)
        return LabelledPermutation(tuple_act(back, self.labels.inverted()), back, flags)

    def tensor(self, other):
        _require_compatible(self, other)
        flags = None
        if self.flags is not None:
            flags = self.flags + other.flags
        return LabelledPermutation(
            self.labels.concat(other.labels),
            perm_tensor(self.perm, other.perm),
            flags,
        )

    def __repr__(self):
        flags = ''
        if self.flags is not None:
            flags = ' ' + ''.join('-' if f else '+' for f in self.flags)
        return f"LabelledPermutation({self.labels!r} {list(self.perm)}{flags})"


def _require_compatible(p, q):
    require_same_group(p.group, q.group)
    if p.hyperoctahedral != q.hyperoctahedral:
        raise GroupMismatchError("cannot mix hyperoctahedral and plain labelled permutations")


def labelled_perm_compose(p, q):
    """Semidirect product p∘q = (x·σ·y, στ); q acts first"""
    _require_compatible(p, q)
    require_arity(q.arity, p.arity)
    labels = p.labels.multiply(tuple_act(p.perm, q.labels))
    flags = None
    if p.flags is not None:
        moved = _flags_act(p.perm, q.flags)
        flags = tuple(a ^ b for a, b in zip(p.flags, moved))
    return LabelledPermutation(labels, perm_compose(p.perm, q.perm), flags)


def enumerate_labelled_permutations(group, n, hyperoctahedral=False):
    """Every element of Gⁿ⋊Σₙ, or of Gⁿ⋊Hₙ when hyperoctahedral"""
    flag_choices = itertools.product((0, 1), repeat=n) if hyperoctahedral else [None]
    flag_choices = list(flag_choices)
    for perm in itertools.permutations(range(n)):
        for entries in itertools.product(group.elements(), repeat=n):
            labels = GroupTuple(group, entries)
            for flags in flag_choices:
                yield LabelledPermutation(labels, perm, flags)
