# crossed/services/families.py
"""
The four crossed families of labelled middle elements.

CrossedFamily gives every family the same element API so the rewrite
engine, the composites and the evaluator never branch on element types.
"""
import logging
from dataclasses import dataclass

from braids.services import (
    BraidWord, LabelledBraid, RibbonBraid, braid_normal_form, labelled_braid_compose,
    labelled_braid_equal, permutation_braid, ribbon_normal_form,
)
from groups.services import (
    GroupTuple, LabelledPermutation, enumerate_labelled_permutations,
    labelled_perm_compose, perm_identity,
)
from utils.constants import BRAID, FAMILIES, FINITE_FAMILIES, HYPEROCTAHEDRAL, RIBBON
from utils.validators import GroupMismatchError, InvalidDataError, require_index, require_same_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossedFamily:
    tag: str
    group: object

    def __post_init__(self):
        if self.tag not in FAMILIES:
            raise InvalidDataError(f"unknown family {self.tag!r}; expected one of {', '.join(FAMILIES)}")

    def __str__(self):
        return f"{self.tag}[{self.group.name}]"

    @property
    def finite(self):
        return self.tag in FINITE_FAMILIES

    @property
    def braided(self):
        return self.tag in (BRAID, RIBBON)

    # ============= CONSTRUCTION =============

    def identity(self, n):
        if self.braided:
            return LabelledBraid.identity(self.group, n, ribbon=self.tag == RIBBON)
        return LabelledPermutation.identity(self.group, n, hyperoctahedral=self.tag == HYPEROCTAHEDRAL)

    def from_labels(self, labels):
        """The element carrying `labels` with trivial underlying symmetry"""
        return self._relabelled(self.identity(len(labels)), labels)

    def crossing(self, n, i):
        """The positive crossing of strands i and i+1 (1-based) on n strands"""
        require_index(i - 1, n - 1, 'crossing')
        if self.braided:
            word = BraidWord(n, (i,))
            braid = RibbonBraid.from_braid(word) if self.tag == RIBBON else word
            return LabelledBraid(GroupTuple.identity(self.group, n), braid)
        perm = list(range(n))
        perm[i - 1], perm[i] = i, i - 1
        flags = (0,) * n if self.tag == HYPEROCTAHEDRAL else None
        return LabelledPermutation(GroupTuple.identity(self.group, n), tuple(perm), flags)

    def flip(self, n, i):
        """The order-reversing flag on wire i (0-based) of n wires"""
        if self.tag != HYPEROCTAHEDRAL:
            raise GroupMismatchError(f"flags only exist in the {HYPEROCTAHEDRAL} family, not {self.tag}")
        require_index(i, n, 'wire')
        flags = tuple(1 if k == i else 0 for k in range(n))
        return LabelledPermutation(GroupTuple.identity(self.group, n), perm_identity(n), flags)

    def twist(self, n, i, amount=1):
        """`amount` full ribbon twists on wire i (0-based) of n wires"""
        if self.tag != RIBBON:
            raise GroupMismatchError(f"twists only exist in the {RIBBON} family, not {self.tag}")
        require_index(i, n, 'wire')
        twists = tuple(amount if k == i else 0 for k in range(n))
        return LabelledBraid(GroupTuple.identity(self.group, n), RibbonBraid(BraidWord.identity(n), twists))

    def positive_lift(self, perm):
        """The positive lift of a permutation, with identity labels"""
        labels = GroupTuple.identity(self.group, len(perm))
        if self.braided:
            braid = permutation_braid(perm)
            if self.tag == RIBBON:
                braid = RibbonBraid.from_braid(braid)
            return LabelledBraid(labels, braid)
        flags = (0,) * len(perm) if self.tag == HYPEROCTAHEDRAL else None
        return LabelledPermutation(labels, tuple(perm), flags)

    def _relabelled(self, element, labels):
        if self.braided:
            return LabelledBraid(labels, element.braid)
        return LabelledPermutation(labels, element.perm, element.flags)

    # ============= GROUP STRUCTURE =============

    def check(self, element):
        if self.braided:
            ok = isinstance(element, LabelledBraid) and element.ribbon == (self.tag == RIBBON)
        else:
            ok = (
                isinstance(element, LabelledPermutation)
                and element.hyperoctahedral == (self.tag == HYPEROCTAHEDRAL)
            )
        if not ok:
            raise GroupMismatchError(f"{type(element).__name__} is not an element of the {self.tag} family")
        require_same_group(element.group, self.group)
        return element

    def compose(self, p, q):
        """p∘q, q acting first"""
        self.check(p)
        self.check(q)
        if self.braided:
            return labelled_braid_compose(p, q)
        return labelled_perm_compose(p, q)

    def inverse(self, p):
        return self.check(p).inverse()

    def tensor(self, p, q):
        self.check(p)
        return p.tensor(self.check(q))

    def normalize(self, p):
        """A hashable key; two elements are equal iff their keys are"""
        self.check(p)
        if self.braided:
            return p.normal_form()
        return p

    def canonical(self, p):
        """The representative spelled by the normal form"""
        self.check(p)
        if not self.braided:
            return p
        if self.tag == RIBBON:
            twists, form = ribbon_normal_form(p.braid)
            return LabelledBraid(p.labels, RibbonBraid(form.to_word(), twists))
        return LabelledBraid(p.labels, braid_normal_form(p.braid).to_word())

    def equal(self, p, q):
        if self.braided:
            return labelled_braid_equal(p, q)
        return p == q

    def is_identity(self, p):
        return self.equal(p, self.identity(p.arity))

    def perm(self, p):
        return p.perm

    def labels(self, p):
        return p.labels

    def flags(self, p):
        return getattr(p, 'flags', None)

    def project(self, p):
        """Image in the next simpler family: ribbon → braid → symmetric, flags dropped"""
        if self.tag == RIBBON:
            return LabelledBraid(p.labels, p.braid.braid)
        return LabelledPermutation(p.labels, p.perm)

    # ============= SAMPLING =============

    def random(self, rng, n, max_length=6):
        labels = GroupTuple(self.group, tuple(rng.choice(self.group.elements()) for _ in range(n)))
        if self.braided:
            letters = ()
            if n > 1:
                length = rng.randint(0, max_length)
                letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
            braid = BraidWord(n, letters)
            if self.tag == RIBBON:
                braid = RibbonBraid(braid, tuple(rng.randint(-2, 2) for _ in range(n)))
            return LabelledBraid(labels, braid)
        perm = list(range(n))
        rng.shuffle(perm)
        flags = None
        if self.tag == HYPEROCTAHEDRAL:
            flags = tuple(rng.randint(0, 1) for _ in range(n))
        return LabelledPermutation(labels, tuple(perm), flags)

    def enumerate(self, n):
        if not self.finite:
            raise InvalidDataError(f"the {self.tag} family has infinitely many elements on {n} strands")
        return enumerate_labelled_permutations(self.group, n, hyperoctahedral=self.tag == HYPEROCTAHEDRAL)

    def elements(self, n, rng=None, samples=None):
        """Every element when finite, otherwise `samples` random ones"""
        if self.finite:
            return list(self.enumerate(n))
        return [self.random(rng, n) for _ in range(samples)]
