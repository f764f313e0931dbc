# braids/services/garside.py
"""
Garside left-greedy normal form.

A braid is stored as Δ^power · A1 ··· Ak with every Ai a simple braid
(a positive permutation braid, kept as its permutation), none of them Δ or
the identity, and every adjacent pair left-weighted: each generator that
can start A(i+1) already ends Ai.
"""
import logging
from dataclasses import dataclass

from groups.services import perm_compose, perm_identity

from .braid_word import BraidWord, half_twist, permutation_braid, reversal, transposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    power: int
    factors: tuple

    @property
    def infimum(self):
        return self.power

    @property
    def canonical_length(self):
        return len(self.factors)

    def is_identity(self):
        return self.power == 0 and not self.factors

    def to_word(self):
        delta = half_twist(self.strands)
        if self.power < 0:
            delta = delta.inverse()
        letters = delta.letters * abs(self.power)
        for factor in self.factors:
            letters += permutation_braid(factor).letters
        return BraidWord(self.strands, letters)


def finishing_set(perm):
    """Generators σᵢ (1-based i) that right-divide the simple braid of perm"""
    return {i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1]}


def starting_set(perm):
    """Generators σᵢ (1-based i) that left-divide the simple braid of perm"""
    position = {value: k for k, value in enumerate(perm)}
    return {i + 1 for i in range(len(perm) - 1) if position[i + 1] < position[i]}


def _left_weight(first, second):
    """Move generators from the front of `second` to the back of `first`"""
    n = len(first)
    changed = False
    while True:
        movable = starting_set(second) - finishing_set(first)
        if not movable:
            return first, second, changed
        i = min(movable)
        t = transposition(n, i)
        first = perm_compose(first, t)
        second = perm_compose(t, second)
        changed = True


def _conjugate(perm):
    """Permutation of Δ·A·Δ⁻¹"""
    r = reversal(len(perm))
    return perm_compose(r, perm_compose(perm, r))


def _normalize(strands, power, factors):
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            factors[k], factors[k + 1], moved = _left_weight(factors[k], factors[k + 1])
            changed = changed or moved
    delta = reversal(strands)
    identity = perm_identity(strands)
    while factors and factors[0] == delta:
        factors.pop(0)
        power += 1
    while factors and factors[-1] == identity:
        factors.pop()
    return power, factors


def braid_normal_form(w):
    n = w.strands
    if n <= 1:
        return GarsideNormalForm(n, 0, ())
    power = 0
    factors = []
    r = reversal(n)
    for letter in w.letters:
        t = transposition(n, abs(letter))
        if letter > 0:
            factors.append(t)
        else:
            # σᵢ⁻¹ = Δ⁻¹·(Δσᵢ⁻¹); the Δ⁻¹ moves left conjugating every factor
            power -= 1
            factors = [_conjugate(factor) for factor in factors]
            factors.append(perm_compose(r, t))
        power, factors = _normalize(n, power, factors)
    return GarsideNormalForm(n, power, tuple(factors))


def braid_equal(w1, w2):
    return w1.strands == w2.strands and braid_normal_form(w1) == braid_normal_form(w2)
