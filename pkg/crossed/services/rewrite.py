# crossed/services/rewrite.py
"""
Moving a labelled middle element past a monotone map.

For j on m and φ: n→m, rewrite_past_mono returns (ψ, j′) with ψ: n→m
monotone and j′ on n such that j∘φ = ψ∘j′. Labels (and flags) of j′ are
those of j pulled back along ψ.
"""
import itertools
import logging
from dataclasses import dataclass

from braids.services import LabelledBraid, cable, ribbon_cable
from groups.services import LabelledPermutation, permute_entries, skeletal_relabel
from ordmaps.services import OrderedMap, enumerate_mono, from_fiber_sizes
from utils.validators import require_arity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossedRewrite:
    new_mono: OrderedMap
    new_elt: object

    def __iter__(self):
        return iter((self.new_mono, self.new_elt))


def _fiber_targets(sizes):
    offsets = list(itertools.accumulate((0,) + tuple(sizes)))
    return [list(range(offsets[k], offsets[k + 1])) for k in range(len(sizes))]


def _rewrite_permutation(j, phi):
    sigma = j.perm
    image = [sigma[v] for v in phi.values]
    sizes = [0] * phi.codomain
    for k in image:
        sizes[k] += 1
    psi = from_fiber_sizes(sizes)
    targets = _fiber_targets(sizes)
    if j.flags is not None:
        targets = [list(reversed(t)) if j.flags[k] else t for k, t in enumerate(targets)]
    cursor = [0] * phi.codomain
    tau = []
    for k in image:
        tau.append(targets[k][cursor[k]])
        cursor[k] += 1
    flags = None
    if j.flags is not None:
        flags = tuple(j.flags[v] for v in psi.values)
    labels = skeletal_relabel(psi.values, j.labels)
    return CrossedRewrite(psi, LabelledPermutation(labels, tuple(tau), flags))


def _rewrite_braid(j, phi):
    sizes = phi.fiber_sizes()
    if j.ribbon:
        braid = ribbon_cable(j.braid, sizes)
    else:
        braid = cable(j.braid, sizes)
    psi = from_fiber_sizes(permute_entries(j.perm, sizes))
    labels = skeletal_relabel(psi.values, j.labels)
    return CrossedRewrite(psi, LabelledBraid(labels, braid))


def underlying_sets_agree(j_perm, phi, rewrite, new_perm):
    """π(j)∘φ = ψ∘π(j′) as functions"""
    psi = rewrite.new_mono
    return all(j_perm[phi(i)] == psi(new_perm[i]) for i in range(phi.domain))


def rewrite_past_mono(family, j, phi):
    family.check(j)
    require_arity(j.arity, phi.codomain, 'element arity against map codomain')
    if family.braided:
        result = _rewrite_braid(j, phi)
    else:
        result = _rewrite_permutation(j, phi)
    assert underlying_sets_agree(family.perm(j), phi, result, family.perm(result.new_elt)), (
        f"rewrite of {j} past {phi} breaks the underlying set maps"
    )
    return result


def count_factorizations(family, j, phi):
    """
    Brute-force count of (ψ, τ) with π(j)∘φ = ψ∘τ and τ monotone on each
    fiber, antitone on fibers whose target flag is set.
    """
    sigma = family.perm(j)
    flags = family.flags(j)
    n, m = phi.domain, phi.codomain
    image = [sigma[v] for v in phi.values]
    count = 0
    for psi in enumerate_mono(n, m):
        for tau in itertools.permutations(range(n)):
            if any(psi(tau[i]) != image[i] for i in range(n)):
                continue
            ordered = True
            for a, b in itertools.combinations(range(n), 2):
                if image[a] != image[b]:
                    continue
                reverse = bool(flags and flags[image[a]])
                if (tau[a] < tau[b]) == reverse:
                    ordered = False
                    break
            if ordered:
                count += 1
    return count
