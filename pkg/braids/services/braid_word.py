# braids/services/braid_word.py
"""
Braid words on n strands.

A letter +i is the generator σᵢ (1 ≤ i ≤ n-1), -i its inverse. The word
w1 w2 is the group product w1·w2; as with permutations, the right-hand
factor acts first, so π(w1 w2) = π(w1)∘π(w2).
"""
import logging
from dataclasses import dataclass

from groups.services import perm_compose, perm_identity, permute_entries
from utils.validators import ArityError, InvalidDataError, require_arity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        if self.strands < 0:
            raise InvalidDataError(f"negative strand count {self.strands}")
        for letter in letters:
            if not isinstance(letter, int) or letter == 0 or abs(letter) >= self.strands:
                raise InvalidDataError(
                    f"generator {letter!r} out of range for {self.strands} strands"
                )
        object.__setattr__(self, 'letters', letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_braid(self)

    @classmethod
    def identity(cls, strands):
        return cls(strands, ())

    def inverse(self):
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def tensor(self, other):
        """Juxtaposition; other's generators are shifted past self's strands"""
        shift = self.strands
        shifted = tuple(letter + shift if letter > 0 else letter - shift for letter in other.letters)
        return BraidWord(self.strands + other.strands, self.letters + shifted)


def braid_compose(w1, w2):
    """The product w1·w2 as a concatenated word; nothing is normalized"""
    if w1.strands != w2.strands:
        raise ArityError(f"cannot compose braids on {w1.strands} and {w2.strands} strands")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def transposition(n, i):
    """t_i swapping the 0-based points i-1 and i"""
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def underlying_permutation(w):
    perm = perm_identity(w.strands)
    for letter in w.letters:
        perm = perm_compose(perm, transposition(w.strands, abs(letter)))
    return perm


def permutation_braid(perm):
    """The positive braid with one crossing per inversion of perm"""
    current = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            if current[i] > current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                swaps.append(i + 1)
                changed = True
    return BraidWord(len(perm), tuple(reversed(swaps)))


def reversal(n):
    return tuple(range(n - 1, -1, -1))


def half_twist(n):
    """Δₙ, the positive lift of the order-reversing permutation"""
    return permutation_braid(reversal(n))


def full_twist(n):
    delta = half_twist(n)
    return braid_compose(delta, delta)


def twist_power(n, power):
    """Δₙ^(2·power); negative powers use the inverse full twist"""
    step = full_twist(n) if power >= 0 else full_twist(n).inverse()
    return BraidWord(n, step.letters * abs(power))


# ============= CABLING =============

def block_crossing_perm(left, right):
    """Block of `left` strands moves past a block of `right` strands"""
    return tuple(right + k for k in range(left)) + tuple(range(right))


def _embed(word, offset, strands):
    shifted = tuple(letter + offset if letter > 0 else letter - offset for letter in word.letters)
    return BraidWord(strands, shifted)


def cable(w, mult):
    """
    Replace strand i of w by mult[i] parallel strands.

    Strands with multiplicity 0 are deleted. Letters are cabled from the
    right, where the block sizes are `mult`, moving the sizes along with
    the underlying permutation.
    """
    mult = tuple(mult)
    require_arity(len(mult), w.strands, 'multiplicity tuple length')
    if any(k < 0 for k in mult):
        raise InvalidDataError(f"negative multiplicity in {mult}")
    total = sum(mult)
    sizes = mult
    pieces = []
    for letter in reversed(w.letters):
        i = abs(letter)
        left, right = sizes[i - 1], sizes[i]
        offset = sum(sizes[:i - 1])
        if letter > 0:
            piece = permutation_braid(block_crossing_perm(left, right))
        else:
            piece = permutation_braid(block_crossing_perm(right, left)).inverse()
        pieces.append(_embed(piece, offset, total))
        sizes = permute_entries(transposition(w.strands, i), sizes)
    letters = tuple(letter for piece in reversed(pieces) for letter in piece.letters)
    return BraidWord(total, letters)


# ============= TEXT FORM =============

def format_braid(w):
    if not w.letters:
        return 'e'
    return ' '.join(f"s{abs(letter)}" + ("'" if letter < 0 else '') for letter in w.letters)
