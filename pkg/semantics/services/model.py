# semantics/services/model.py
"""
Bimonoid models: a d-dimensional carrier over ℤ/p with μ, η, δ, ε, a
G-action, a symmetric braiding, a twist Θ and an optional involution ι.
"""
import itertools
import logging
from dataclasses import dataclass, replace

import numpy as np

from groups.services import GroupAction, trivial_action, trivial_group
from utils.constants import BRAIDINGS, FLIP, SIGN
from utils.helpers import setting
from utils.validators import InvalidDataError, require_arity

from .linalg import as_matrix, identity, inverse_mod, require_prime, swap_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BimonoidModel:
    p: int
    dim: int
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    group: object
    action: tuple
    braiding: str = FLIP
    parity: tuple = None
    twist: np.ndarray = None
    involution: np.ndarray = None
    name: str = 'model'

    def __post_init__(self):
        p, d = require_prime(self.p), self.dim
        if d < 1:
            raise InvalidDataError(f"carrier dimension must be positive, got {d}")
        object.__setattr__(self, 'mult', as_matrix(p, self.mult, (d, d * d), 'mult'))
        object.__setattr__(self, 'unit', as_matrix(p, self.unit, (d, 1), 'unit'))
        object.__setattr__(self, 'comult', as_matrix(p, self.comult, (d * d, d), 'comult'))
        object.__setattr__(self, 'counit', as_matrix(p, self.counit, (1, d), 'counit'))
        require_arity(len(self.action), self.group.order, 'number of action matrices')
        object.__setattr__(
            self, 'action', tuple(as_matrix(p, a, (d, d), 'action matrix') for a in self.action),
        )
        if self.braiding not in BRAIDINGS:
            raise InvalidDataError(f"unknown braiding {self.braiding!r}; expected one of {', '.join(BRAIDINGS)}")
        parity = tuple(self.parity) if self.parity is not None else (0,) * d
        require_arity(len(parity), d, 'parity vector length')
        if any(bit not in (0, 1) for bit in parity):
            raise InvalidDataError(f"parity entries must be 0 or 1: {parity}")
        object.__setattr__(self, 'parity', parity)
        twist = identity(d) if self.twist is None else as_matrix(p, self.twist, (d, d), 'twist')
        object.__setattr__(self, 'twist', twist)
        if self.involution is not None:
            object.__setattr__(self, 'involution', as_matrix(p, self.involution, (d, d), 'involution'))

    def __str__(self):
        return f"{self.name} (dim {self.dim} over Z/{self.p})"

    @property
    def signed(self):
        return self.braiding == SIGN and any(self.parity)

    @property
    def sign_parity(self):
        """Parity vector used for permutations, or None for the plain flip"""
        return self.parity if self.signed else None

    def swap(self):
        return swap_matrix(self.p, self.dim, self.sign_parity)

    def act(self, g):
        return self.action[g]

    def twist_inverse(self):
        return inverse_mod(self.p, self.twist)


# ============= CONSTRUCTIONS =============

def group_algebra_model(p, target, action=None):
    """
    k[H] over ℤ/p with δ(h) = h⊗h, ε ≡ 1 and ι(h) = h⁻¹.

    `action` is a GroupAction G → Aut(H); each automorphism acts by its
    permutation matrix. Without one the trivial group acts.
    """
    if action is None:
        action = trivial_action(trivial_group(), target)
    if not isinstance(action, GroupAction):
        raise InvalidDataError("the group action must be a GroupAction")
    if action.target != target:
        raise InvalidDataError(f"the action acts on {action.target.name}, not on {target.name}")
    d = target.order
    mult = np.zeros((d, d * d), dtype=np.int64)
    comult = np.zeros((d * d, d), dtype=np.int64)
    for a, b in itertools.product(target.elements(), repeat=2):
        mult[target.mul(a, b), a * d + b] = 1
    for h in target.elements():
        comult[h * d + h, h] = 1
    unit = np.zeros((d, 1), dtype=np.int64)
    unit[target.identity, 0] = 1
    involution = np.zeros((d, d), dtype=np.int64)
    for h in target.elements():
        involution[target.inv(h), h] = 1
    matrices = []
    for g in action.acting.elements():
        matrix = np.zeros((d, d), dtype=np.int64)
        for h in target.elements():
            matrix[action.apply(g, h), h] = 1
        matrices.append(matrix)
    model = BimonoidModel(
        p, d, mult, unit, comult, np.ones((1, d), dtype=np.int64),
        action.acting, tuple(matrices), involution=involution,
        name=f"k[{target.name}]",
    )
    logger.debug(f"Built {model} with {action.acting.name} acting")
    return model


def trivial_model(p=None, acting=None):
    """The 1-dimensional model: every structure map is the scalar 1"""
    acting = acting or trivial_group()
    p = p or setting('PRIME')
    return group_algebra_model(p, trivial_group(), trivial_action(acting, trivial_group()))


def exterior_model(p=None, acting=None):
    """
    Λ[x] with x odd and primitive under the graded-sign braiding.

    x·x = 0, δ(x) = x⊗1 + 1⊗x, ε(x) = 0 and ι(x) = -x. The generator of a
    cyclic acting group sends x to -x.
    """
    p = p or setting('PRIME')
    acting = acting or trivial_group()
    mult = [[1, 0, 0, 0], [0, 1, 1, 0]]
    comult = [[1, 0], [0, 1], [0, 1], [0, 0]]
    flip_x = np.array([[1, 0], [0, -1]], dtype=np.int64)
    action = []
    for g in acting.elements():
        action.append(flip_x if _odd_power(acting, g) else np.eye(2, dtype=np.int64))
    return BimonoidModel(
        p, 2, mult, [[1], [0]], comult, [[1, 0]], acting, tuple(action),
        braiding=SIGN, parity=(0, 1), involution=flip_x, name='exterior',
    )


def _odd_power(group, g):
    """Whether g is an odd power of the element at index 1 (cyclic groups)"""
    if group.order % 2:
        return False
    current, k = group.identity, 0
    while current != g:
        current = group.mul(current, 1)
        k += 1
        if k > group.order:
            raise InvalidDataError(f"{group.name} is not cyclic on its element 1")
    return k % 2 == 1


def sign_characters(group):
    """Every homomorphism group → {±1}, as sign tuples indexed by element"""
    characters = []
    for signs in itertools.product((1, -1), repeat=group.order):
        if signs[group.identity] != 1:
            continue
        if all(
            signs[group.mul(a, b)] == signs[a] * signs[b]
            for a, b in itertools.product(group.elements(), repeat=2)
        ):
            characters.append(signs)
    return characters


def with_sign_twist(model, signs):
    """Θ = diag(signs); a sign character keeps Θ multiplicative"""
    require_arity(len(signs), model.dim, 'sign vector length')
    if any(s not in (1, -1) for s in signs):
        raise InvalidDataError(f"twist signs must be ±1: {signs}")
    return replace(model, twist=np.diag(np.array(signs, dtype=np.int64)), name=f"{model.name}+twist")


def with_sign_braiding(model, parity):
    """Replace the flip by the graded flip e_a⊗e_b ↦ (-1)^(|a||b|) e_b⊗e_a"""
    return replace(model, braiding=SIGN, parity=tuple(parity), name=f"{model.name}+sign")


def mutate_comult(model, first=0, second=1):
    """
    δ + (e_first⊗e_second)·ε, which breaks coassociativity.

    Used to check that the verification suites notice a broken model.
    """
    d = model.dim
    if d < 2:
        raise InvalidDataError("mutating the comultiplication needs a carrier of dimension at least 2")
    bump = np.zeros((d * d, 1), dtype=np.int64)
    bump[first * d + second, 0] = 1
    comult = np.mod(model.comult + bump @ model.counit, model.p)
    return replace(model, comult=comult, name=f"{model.name}+mutated")
