# crossed/services/checker.py
import itertools
import logging

from ordmaps.services import compose_mono, enumerate_mono, identity_map, tensor_mono
from utils.decorators import logged_suite
from utils.helpers import CheckReport, make_rng, setting

from .rewrite import rewrite_past_mono

logger = logging.getLogger(__name__)

# Above this many combinations a finite family is sampled instead of enumerated
EXHAUSTIVE_LIMIT = 60000


def _same(family, left, right):
    return left.new_mono == right.new_mono and family.equal(left.new_elt, right.new_elt)


class CrossedIdentityChecker:
    """
    The laws of a distributive law of middle elements over monotone maps.

    Finite families are enumerated up to max_n (sampled past
    EXHAUSTIVE_LIMIT combinations); braid families are always sampled.
    """

    def __init__(self, family, max_n, samples=None, seed=None):
        self.family = family
        self.max_n = max_n
        self.samples = samples or setting('SAMPLES')
        self.rng = make_rng(seed)
        self.maps = {
            (n, m): enumerate_mono(n, m)
            for n in range(max_n + 1) for m in range(max_n + 1)
        }
        self._elements = {}

    def elements(self, n):
        if n not in self._elements:
            self._elements[n] = self.family.elements(n, self.rng, self.samples)
        return self._elements[n]

    def _cases(self, pools):
        """All combinations of the pools, or a seeded sample when too many"""
        total = 1
        for pool in pools:
            total *= len(pool)
        if total == 0:
            return []
        if self.family.finite and total <= EXHAUSTIVE_LIMIT:
            return itertools.product(*pools)
        return [tuple(self.rng.choice(pool) for pool in pools) for _ in range(self.samples)]

    def _maps_into(self, m):
        return [f for n in range(self.max_n + 1) for f in self.maps[n, m]]

    def unit_laws(self):
        report = CheckReport('unit laws')
        family = self.family
        for m in range(self.max_n + 1):
            for j, phi in self._cases([self.elements(m), self._maps_into(m)]):
                mono, elt = rewrite_past_mono(family, j, identity_map(m))
                report.record(
                    mono == identity_map(m) and family.equal(elt, j),
                    law='j*(id) = id', j=str(j),
                )
                mono, elt = rewrite_past_mono(family, family.identity(m), phi)
                report.record(
                    mono == phi and family.is_identity(elt),
                    law='id*(phi) = phi', phi=str(phi),
                )
        return report

    def multiplicativity(self):
        """rewrite(j∘k, φ) = (φ2, j1∘k1) for (φ1, k1) = rewrite(k, φ), (φ2, j1) = rewrite(j, φ1)"""
        report = CheckReport('multiplicativity')
        family = self.family
        for m in range(1, self.max_n + 1):
            elements = self.elements(m)
            for j, k, phi in self._cases([elements, elements, self._maps_into(m)]):
                whole = rewrite_past_mono(family, family.compose(j, k), phi)
                phi1, k1 = rewrite_past_mono(family, k, phi)
                phi2, j1 = rewrite_past_mono(family, j, phi1)
                ok = whole.new_mono == phi2 and family.equal(whole.new_elt, family.compose(j1, k1))
                report.record(ok, law='(jk)*', j=str(j), k=str(k), phi=str(phi))
        return report

    def mono_composition(self):
        """rewrite(j, φ∘ψ) = (φ′∘ψ′, j″) for (φ′, j′) = rewrite(j, φ), (ψ′, j″) = rewrite(j′, ψ)"""
        report = CheckReport('composition of maps')
        family = self.family
        pairs = [
            (phi, psi)
            for m in range(self.max_n + 1)
            for n in range(self.max_n + 1)
            for l in range(self.max_n + 1)
            for phi in self.maps[n, m]
            for psi in self.maps[l, n]
        ]
        for m in range(self.max_n + 1):
            candidates = [(phi, psi) for phi, psi in pairs if phi.codomain == m]
            for j, (phi, psi) in self._cases([self.elements(m), candidates]):
                whole = rewrite_past_mono(family, j, compose_mono(phi, psi))
                phi1, j1 = rewrite_past_mono(family, j, phi)
                psi1, j2 = rewrite_past_mono(family, j1, psi)
                ok = whole.new_mono == compose_mono(phi1, psi1) and family.equal(whole.new_elt, j2)
                report.record(ok, law='*(phi psi)', j=str(j), phi=str(phi), psi=str(psi))
        return report

    def tensor_compatibility(self):
        report = CheckReport('tensor compatibility')
        family = self.family
        for m1, m2 in itertools.product(range(self.max_n + 1), repeat=2):
            if m1 + m2 > self.max_n:
                continue
            pools = [self.elements(m1), self.elements(m2), self._maps_into(m1), self._maps_into(m2)]
            for j, k, phi, psi in self._cases(pools):
                whole = rewrite_past_mono(family, family.tensor(j, k), tensor_mono(phi, psi))
                left = rewrite_past_mono(family, j, phi)
                right = rewrite_past_mono(family, k, psi)
                ok = (
                    whole.new_mono == tensor_mono(left.new_mono, right.new_mono)
                    and family.equal(whole.new_elt, family.tensor(left.new_elt, right.new_elt))
                )
                report.record(ok, law='tensor', j=str(j), k=str(k), phi=str(phi), psi=str(psi))
        return report


@logged_suite
def check_crossed_identities(family, max_n, samples=None, seed=None):
    checker = CrossedIdentityChecker(family, max_n, samples, seed)
    report = CheckReport(f"crossed identities {family}")
    for law in (
        checker.unit_laws,
        checker.multiplicativity,
        checker.mono_composition,
        checker.tensor_compatibility,
    ):
        part = law()
        logger.debug(f"{family}: {part.suite} {part.checked} cases, {len(part.failures)} failures")
        report.merge(part)
    return report
