# utils/helpers.py
import itertools
import random
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings

from utils.constants import DEFAULT_PRIME

_DEFAULTS = {
    'PRIME': DEFAULT_PRIME,
    'SEED': 0,
    'SAMPLES': 200,
    'MAX_N': 3,
    'REWRITE_BUDGET': 20000,
    'MAX_TENSOR_ENTRIES': 4_000_000,
}


def setting(name):
    """Read one key of settings.PROPCALC, falling back to the shipped default"""
    return getattr(settings, 'PROPCALC', {}).get(name, _DEFAULTS[name])


def make_rng(seed=None):
    """Seeded PRNG; every sampled suite draws from one of these"""
    return random.Random(setting('SEED') if seed is None else seed)


@dataclass
class CheckReport:
    """
    Outcome of a verification suite.

    `failures` holds one dict per failing case; the suite keeps counting
    after a failure so `checked` is always the full number of cases.
    """
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def record(self, ok, **case):
        self.checked += 1
        if not ok:
            self.failures.append(case)
        return ok

    def record_many(self, total, failures=()):
        """`total` cases checked at once, of which `failures` failed"""
        self.checked += total
        self.failures.extend(failures)
        return self

    def merge(self, other):
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def to_dict(self):
        return {
            'suite': self.suite,
            'passed': self.passed,
            'checked': self.checked,
            'failure_count': len(self.failures),
            'first_failure': self.first_failure,
        }


# ============= COMPOSITION TABLES =============

def composition_table(outer, inner, target, compose, key):
    """
    T[i, j] = index of outer[i]∘inner[j] in `target`, or -1 when the
    composite is not in `target`.
    """
    index = {key(f): i for i, f in enumerate(target)}
    table = np.full((len(outer), len(inner)), -1, dtype=np.int64)
    for i, g in enumerate(outer):
        for j, f in enumerate(inner):
            table[i, j] = index.get(key(compose(g, f)), -1)
    return table


def associativity_mismatches(gf, hg, h_gf, hg_f):
    """
    Index triples (h, g, f) with h∘(g∘f) != (h∘g)∘f.

    gf[g, f] and hg[h, g] index the inner composites; h_gf and hg_f are
    the tables composing them with h and with f. Rows of h are compared
    one at a time so memory stays at |g|·|f|.
    """
    for h in range(hg.shape[0]):
        left = h_gf[h][gf]
        right = hg_f[hg[h]]
        for g, f in np.argwhere(left != right):
            yield h, int(g), int(f)


class CompositionTables:
    """
    Composition tables over finite hom-sets, built on demand.

    hom(n, m) lists the morphisms n→m; compose(g, f) is g∘f and key(f)
    is a hashable complete invariant of f inside its hom-set.
    """

    def __init__(self, hom, compose, key):
        self.hom = hom
        self.compose = compose
        self.key = key
        self._tables = {}

    def table(self, n, m, l):
        """hom(m, l) × hom(n, m) → hom(n, l)"""
        if (n, m, l) not in self._tables:
            self._tables[n, m, l] = composition_table(
                self.hom(m, l), self.hom(n, m), self.hom(n, l), self.compose, self.key,
            )
        return self._tables[n, m, l]

    def check_associativity(self, report, bound, law='associativity'):
        """Every composable triple with all arities <= bound, recorded on `report`"""
        for n, m, l, k in itertools.product(range(bound + 1), repeat=4):
            fs, gs, hs = self.hom(n, m), self.hom(m, l), self.hom(l, k)
            total = len(fs) * len(gs) * len(hs)
            if total == 0:
                continue
            tables = self.table(n, m, l), self.table(m, l, k), self.table(n, l, k), self.table(n, m, k)
            if any((table < 0).any() for table in tables):
                report.record(False, law='closure', arities=(n, m, l, k))
                continue
            failures = [
                {'law': law, 'f': str(fs[f]), 'g': str(gs[g]), 'h': str(hs[h])}
                for h, g, f in associativity_mismatches(*tables)
            ]
            report.record_many(total, failures)
        return report
