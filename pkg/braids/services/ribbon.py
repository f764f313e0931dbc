# braids/services/ribbon.py
"""
Ribbon braids (t, β) ∈ ℤⁿ⋊Bₙ.

The twist tuple is indexed by the output positions of β, matching the
label convention of labelled permutations: (t,β)(s,γ) = (t + π(β)·s, βγ).
"""
from dataclasses import dataclass

from groups.services import perm_inverse, permute_entries
from utils.validators import ArityError, InvalidDataError, require_arity

from .braid_word import BraidWord, braid_compose, cable, twist_power, underlying_permutation
from .garside import braid_normal_form


@dataclass(frozen=True)
class RibbonBraid:
    braid: BraidWord
    twists: tuple

    def __post_init__(self):
        twists = tuple(self.twists)
        require_arity(len(twists), self.braid.strands, 'twist tuple length')
        if not all(isinstance(t, int) and not isinstance(t, bool) for t in twists):
            raise InvalidDataError(f"twists must be integers: {twists}")
        object.__setattr__(self, 'twists', twists)

    @property
    def strands(self):
        return self.braid.strands

    def __str__(self):
        prefix = f"tw({','.join(str(t) for t in self.twists)})"
        if not self.braid.letters:
            return prefix
        return f"{prefix} {self.braid}"

    @classmethod
    def identity(cls, strands):
        return cls(BraidWord.identity(strands), (0,) * strands)

    @classmethod
    def from_braid(cls, braid):
        return cls(braid, (0,) * braid.strands)

    def inverse(self):
        """(t,β)⁻¹ = (-π(β)⁻¹·t, β⁻¹)"""
        back = perm_inverse(underlying_permutation(self.braid))
        return RibbonBraid(
            self.braid.inverse(),
            tuple(-t for t in permute_entries(back, self.twists)),
        )

    def tensor(self, other):
        return RibbonBraid(self.braid.tensor(other.braid), self.twists + other.twists)


def ribbon_compose(r1, r2):
    if r1.strands != r2.strands:
        raise ArityError(f"cannot compose ribbon braids on {r1.strands} and {r2.strands} strands")
    moved = permute_entries(underlying_permutation(r1.braid), r2.twists)
    return RibbonBraid(
        braid_compose(r1.braid, r2.braid),
        tuple(a + b for a, b in zip(r1.twists, moved)),
    )


def ribbon_normal_form(r):
    return r.twists, braid_normal_form(r.braid)


def ribbon_equal(r1, r2):
    return r1.strands == r2.strands and ribbon_normal_form(r1) == ribbon_normal_form(r2)


def ribbon_cable(r, mult):
    """
    Cable a ribbon braid.

    Each strand of twist t becomes a block whose strands all carry twist t,
    and the block receives the internal full twists Δₖ^(2t). Twists are
    read at the output, so the blocks are sized by π(β)·mult.
    """
    mult = tuple(mult)
    require_arity(len(mult), r.strands, 'multiplicity tuple length')
    cabled = cable(r.braid, mult)
    target = permute_entries(underlying_permutation(r.braid), mult)
    twist_block = BraidWord.identity(0)
    twists = []
    for size, t in zip(target, r.twists):
        twist_block = twist_block.tensor(twist_power(size, t))
        twists.extend([t] * size)
    return RibbonBraid(braid_compose(twist_block, cabled), tuple(twists))
