# braids/services/labelled_braid.py
from dataclasses import dataclass

from groups.services import GroupTuple, perm_inverse, tuple_act
from utils.validators import GroupMismatchError, require_arity, require_same_group

from .braid_word import BraidWord, braid_compose, underlying_permutation
from .garside import braid_normal_form
from .ribbon import RibbonBraid, ribbon_compose, ribbon_normal_form


@dataclass(frozen=True)
class LabelledBraid:
    """An element (x, β) of Gⁿ⋊Bₙ, or of Gⁿ⋊RBₙ when β is a RibbonBraid"""
    labels: GroupTuple
    braid: object

    def __post_init__(self):
        require_arity(len(self.labels), self.braid.strands, 'label tuple length')

    @property
    def arity(self):
        return self.braid.strands

    @property
    def group(self):
        return self.labels.group

    @property
    def ribbon(self):
        return isinstance(self.braid, RibbonBraid)

    @property
    def word(self):
        return self.braid.braid if self.ribbon else self.braid

    @property
    def perm(self):
        return underlying_permutation(self.word)

    @classmethod
    def identity(cls, group, n, ribbon=False):
        braid = RibbonBraid.identity(n) if ribbon else BraidWord.identity(n)
        return cls(GroupTuple.identity(group, n), braid)

    def inverse(self):
        back = perm_inverse(self.perm)
        return LabelledBraid(tuple_act(back, self.labels.inverted()), self.braid.inverse())

    def tensor(self, other):
        _require_compatible(self, other)
        return LabelledBraid(self.labels.concat(other.labels), self.braid.tensor(other.braid))

    def normal_form(self):
        """Hashable key deciding equality in the group"""
        if self.ribbon:
            return self.labels, ribbon_normal_form(self.braid)
        return self.labels, braid_normal_form(self.braid)

    def __str__(self):
        return f"{self.labels!r} {self.braid}"


def _require_compatible(p, q):
    require_same_group(p.group, q.group)
    if p.ribbon != q.ribbon:
        raise GroupMismatchError("cannot mix ribbon and plain labelled braids")


def labelled_braid_compose(p, q):
    """(x,β)(y,γ) = (x·π(β)·y, βγ)"""
    _require_compatible(p, q)
    require_arity(q.arity, p.arity)
    labels = p.labels.multiply(tuple_act(p.perm, q.labels))
    if p.ribbon:
        return LabelledBraid(labels, ribbon_compose(p.braid, q.braid))
    return LabelledBraid(labels, braid_compose(p.braid, q.braid))


def labelled_braid_equal(p, q):
    return p.ribbon == q.ribbon and p.arity == q.arity and p.normal_form() == q.normal_form()
