# composites/services/checker.py
import itertools
import logging

from ordmaps.services import enumerate_mono
from utils.decorators import logged_suite
from utils.helpers import CheckReport, CompositionTables, make_rng, setting

from .composite import CompositeMorphism, random_composite, span_equiv
from .djg import DJGMorphism, compose_DJG, djg_equal, enumerate_djg, random_djg
from .rewriting import INNERMOST, OUTERMOST, closed_form_compose, span_compose

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 60000

# associativity of a finite family is exhaustive up to this arity, sampled above it
EXHAUSTIVE_ARITY = 2


def _chain(n, m, l, k):
    return [(n, m), (m, l), (l, k)]


class CompositeChecker:
    """
    Category laws of 𝔻⊗J⊗𝔾 and of the span composite, plus
    rewrite-strategy independence.

    Cases of a finite family are enumerated per arity tuple (sampled past
    EXHAUSTIVE_LIMIT); associativity runs on composition tables up to
    EXHAUSTIVE_ARITY and is sampled above. Braid families and spans are
    sampled.
    """

    def __init__(self, family, max_n, samples=None, seed=None):
        self.family = family
        self.max_n = max_n
        self.samples = samples or setting('SAMPLES')
        self.rng = make_rng(seed)
        self._homs = {}

    def djg_hom(self, n, m):
        if (n, m) not in self._homs:
            self._homs[n, m] = enumerate_djg(self.family, n, m)
        return self._homs[n, m]

    def _draw(self, arity_count, bound, shapes):
        """
        Cases of composable pairs.

        `shapes` maps an arity tuple to a list of (domain, codomain) pairs,
        one per morphism of the case.
        """
        rng = self.rng
        if self.family.finite:
            for arities in itertools.product(range(bound + 1), repeat=arity_count):
                pools = [self.djg_hom(n, m) for n, m in shapes(*arities)]
                total = 1
                for pool in pools:
                    total *= len(pool)
                if total == 0:
                    continue
                if total <= EXHAUSTIVE_LIMIT:
                    yield from itertools.product(*pools)
                else:
                    for _ in range(self.samples):
                        yield tuple(rng.choice(pool) for pool in pools)
            return
        for _ in range(self.samples):
            arities = [rng.randint(0, bound) for _ in range(arity_count)]
            pairs = shapes(*arities)
            if any(n > 0 and m == 0 for n, m in pairs):
                continue
            yield tuple(random_djg(self.family, rng, n, m) for n, m in pairs)

    def djg_laws(self):
        report = CheckReport('category laws of pairs')
        family = self.family
        for (f,) in self._draw(2, self.max_n, lambda n, m: [(n, m)]):
            report.record(
                djg_equal(compose_DJG(DJGMorphism.identity(family, f.codomain), f), f)
                and djg_equal(compose_DJG(f, DJGMorphism.identity(family, f.domain)), f),
                law='identity', f=str(f),
            )
        if family.finite:
            bound = min(self.max_n, EXHAUSTIVE_ARITY)
            CompositionTables(self.djg_hom, compose_DJG, DJGMorphism.key).check_associativity(report, bound)
            chains = self._chains(bound)
        else:
            chains = self._draw(4, self.max_n, _chain)
        for f, g, h in chains:
            left = compose_DJG(h, compose_DJG(g, f))
            right = compose_DJG(compose_DJG(h, g), f)
            report.record(djg_equal(left, right), law='associativity', f=str(f), g=str(g), h=str(h))
        shapes = lambda n1, m1, l1, n2, m2, l2: [(n1, m1), (m1, l1), (n2, m2), (m2, l2)]  # noqa: E731
        for f1, g1, f2, g2 in self._draw(6, 1, shapes):
            left = compose_DJG(g1.tensor(g2), f1.tensor(f2))
            right = compose_DJG(g1, f1).tensor(compose_DJG(g2, f2))
            report.record(djg_equal(left, right), law='interchange', f1=str(f1), g1=str(g1))
        return report

    def _chains(self, floor):
        """`samples` composable triples of a finite family whose largest arity is above `floor`"""
        shapes = [
            arities for arities in itertools.product(range(self.max_n + 1), repeat=4)
            if max(arities) > floor and all(self.djg_hom(n, m) for n, m in _chain(*arities))
        ]
        if not shapes:
            return
        for _ in range(self.samples):
            pools = [self.djg_hom(n, m) for n, m in _chain(*self.rng.choice(shapes))]
            yield tuple(self.rng.choice(pool) for pool in pools)

    def _composite(self, n, m):
        return random_composite(self.family, self.rng, n, m)

    def _arity(self, bound=None):
        return self.rng.randint(0, self.max_n if bound is None else bound)

    def span_laws(self):
        """Sampled identity, associativity and interchange of span composition"""
        report = CheckReport('category laws of spans')
        family = self.family
        for _ in range(self.samples):
            n, m, l, k = (self._arity() for _ in range(4))
            f, g, h = self._composite(n, m), self._composite(m, l), self._composite(l, k)
            report.record(
                span_equiv(span_compose(CompositeMorphism.identity(family, m), f), f)
                and span_equiv(span_compose(f, CompositeMorphism.identity(family, n)), f),
                law='identity', f=str(f),
            )
            left = span_compose(h, span_compose(g, f))
            right = span_compose(span_compose(h, g), f)
            report.record(span_equiv(left, right), law='associativity', f=str(f), g=str(g), h=str(h))
        for _ in range(self.samples):
            n1, m1, l1, n2, m2, l2 = (self._arity(2) for _ in range(6))
            f1, g1 = self._composite(n1, m1), self._composite(m1, l1)
            f2, g2 = self._composite(n2, m2), self._composite(m2, l2)
            left = span_compose(g1.tensor(g2), f1.tensor(f2))
            right = span_compose(g1, f1).tensor(span_compose(g2, f2))
            report.record(span_equiv(left, right), law='interchange', f1=str(f1), g1=str(g1))
        return report

    def strategy_independence(self):
        report = CheckReport('rewrite strategy independence')
        for _ in range(self.samples):
            n, m, l = (self._arity() for _ in range(3))
            f, g = self._composite(n, m), self._composite(m, l)
            inner = span_compose(g, f, INNERMOST)
            outer = span_compose(g, f, OUTERMOST)
            closed = closed_form_compose(g, f)
            report.record(
                span_equiv(inner, outer) and span_equiv(inner, closed),
                law='strategy', f=str(f), g=str(g),
            )
        return report


def hom_count(family, n, m):
    """|Hom(n, m)| of 𝔻⊗J⊗𝔾 for a finite family, by enumeration"""
    return len(enumerate_mono(n, m)) * sum(1 for _ in family.enumerate(n))


@logged_suite
def check_category_axioms(family, max_n, samples=None, seed=None):
    checker = CompositeChecker(family, max_n, samples, seed)
    report = CheckReport(f"category axioms {family}")
    for law in (checker.djg_laws, checker.span_laws):
        report.merge(law())
    return report


@logged_suite
def check_strategy_independence(family, max_n, samples=None, seed=None):
    return CompositeChecker(family, max_n, samples, seed).strategy_independence()
