# braids/services/checker.py
import logging

from utils.decorators import logged_suite
from utils.helpers import CheckReport, make_rng, setting

from .braid_word import BraidWord, braid_compose, underlying_permutation
from .garside import braid_normal_form
from .ribbon import RibbonBraid, ribbon_compose, ribbon_equal

logger = logging.getLogger(__name__)


def random_word(rng, n, max_length=12):
    if n < 2:
        return BraidWord.identity(n)
    length = rng.randint(0, max_length)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


class WordProblemChecker:
    """Normal forms against the group laws and the defining relations, on sampled words"""

    def __init__(self, max_strands=5, max_length=12, samples=None, seed=None):
        self.max_strands = max_strands
        self.max_length = max_length
        self.samples = samples or setting('SAMPLES')
        self.rng = make_rng(seed)

    def _word(self, low=2):
        return random_word(self.rng, self.rng.randint(low, self.max_strands), self.max_length)

    def inverses(self):
        report = CheckReport('w w^-1 = e')
        for _ in range(self.samples):
            w = self._word()
            report.record(
                braid_normal_form(braid_compose(w, w.inverse())).is_identity(),
                law='inverse', word=str(w),
            )
        return report

    def relations(self):
        """Inserting a braid relator or a cancelling pair anywhere leaves the normal form alone"""
        report = CheckReport('relation insertions')
        if self.max_strands < 3:
            return report
        rng = self.rng
        for _ in range(self.samples):
            w = self._word(low=3)
            n = w.strands
            i = rng.randint(1, n - 2)
            j = rng.randint(1, n - 1)
            inserted = (i, i + 1, i, -(i + 1), -i, -(i + 1), -j, j)
            far = [k for k in range(1, n) if abs(k - j) > 1]
            if far:
                k = rng.choice(far)
                inserted += (j, k, -j, -k)
            cut = rng.randint(0, len(w))
            moved = BraidWord(n, w.letters[:cut] + inserted + w.letters[cut:])
            report.record(
                braid_normal_form(moved) == braid_normal_form(w),
                law='relation', word=str(w), at=cut,
            )
        return report

    def round_trips(self):
        report = CheckReport('normal form words')
        for _ in range(self.samples):
            w = self._word()
            form = braid_normal_form(w)
            spelled = form.to_word()
            report.record(
                braid_normal_form(spelled) == form
                and underlying_permutation(spelled) == underlying_permutation(w),
                law='to_word', word=str(w),
            )
        return report

    def ribbon_laws(self):
        report = CheckReport('ribbon group laws')
        rng = self.rng
        for _ in range(self.samples):
            n = rng.randint(1, self.max_strands)
            a, b, c = (
                RibbonBraid(random_word(rng, n, self.max_length), tuple(rng.randint(-2, 2) for _ in range(n)))
                for _ in range(3)
            )
            identity = RibbonBraid.identity(n)
            report.record(ribbon_equal(ribbon_compose(a, a.inverse()), identity), law='ribbon inverse', r=str(a))
            report.record(
                ribbon_equal(ribbon_compose(ribbon_compose(a, b), c), ribbon_compose(a, ribbon_compose(b, c))),
                law='ribbon associativity', r=str(a),
            )
        return report


@logged_suite
def check_word_problem(max_strands=5, max_length=12, samples=None, seed=None):
    checker = WordProblemChecker(max_strands, max_length, samples, seed)
    report = CheckReport(f"braid word problem up to {max_strands} strands")
    for law in (checker.inverses, checker.relations, checker.round_trips, checker.ribbon_laws):
        report.merge(law())
    return report
