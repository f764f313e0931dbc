# ncsets/services/checker.py
import itertools
import logging
import math

from composites.services import CompositeMorphism, compose_DJG, hom_count, span_compose
from crossed.services import CrossedFamily
from ordmaps.services import enumerate_mono
from utils.constants import AMBIENT_FOR_VARIANT, SPAN_VARIANTS, SYMMETRIC
from utils.decorators import logged_suite
from utils.helpers import CheckReport, CompositionTables, make_rng, setting

from .bimorphism import AMBIENT_ORDERS, count_completions, is_bimorphism, star_complete
from .isomorphism import from_pair, to_pair
from .ncset_map import (
    NCSetMap, enumerate_gf, enumerate_ncset, forget, gf_compose,
    ncset_compose, ncset_hom_count, random_ncset,
)
from .spans import SpanClass, leg_orders, pullback_span_compose

logger = logging.getLogger(__name__)

# Above this many combinations per arity tuple a check is sampled instead of enumerated
EXHAUSTIVE_LIMIT = 500_000


class NCSetChecker:
    """
    Laws of GF(as) and GF, the pair isomorphism, the star condition and
    the pullback span composites, over one label group.
    """

    def __init__(self, group, max_n, samples=None, seed=None):
        self.group = group
        self.max_n = max_n
        self.samples = samples or setting('SAMPLES')
        self.rng = make_rng(seed)
        self._homs = {}

    def hom(self, n, m, ordered=True):
        if (n, m, ordered) not in self._homs:
            enumerate_maps = enumerate_ncset if ordered else enumerate_gf
            self._homs[n, m, ordered] = enumerate_maps(self.group, n, m)
        return self._homs[n, m, ordered]

    def _cases(self, pools):
        """Every combination of the pools, lazily, or a seeded sample when too many"""
        total = math.prod(len(pool) for pool in pools)
        if total == 0:
            return []
        if total <= EXHAUSTIVE_LIMIT:
            return itertools.product(*pools)
        logger.info(f"{total} cases past {EXHAUSTIVE_LIMIT}; sampling {self.samples}")
        return [tuple(self.rng.choice(pool) for pool in pools) for _ in range(self.samples)]

    def _arities(self, count, bound):
        return itertools.product(range(bound + 1), repeat=count)

    def composition_laws(self, ordered=True, bound=2):
        """
        Identity and associativity, exhaustive for arities up to `bound` and
        sampled above it up to max_n. Associativity is read off composition
        tables; the ordered case also checks that forgetting orders is a functor.
        """
        compose = ncset_compose if ordered else gf_compose
        identity = NCSetMap.identity if ordered else _gf_identity
        hom = lambda n, m: self.hom(n, m, ordered)  # noqa: E731
        report = CheckReport('GF(as) composition' if ordered else 'GF composition')
        bound = min(bound, self.max_n)
        for n, m in self._arities(2, bound):
            for (f,) in self._cases([hom(n, m)]):
                report.record(
                    compose(identity(self.group, m), f) == f and compose(f, identity(self.group, n)) == f,
                    law='identity', f=str(f),
                )
        CompositionTables(hom, compose, _map_key).check_associativity(report, bound)
        for f, g, h in self._chains(hom, bound):
            report.record(
                compose(h, compose(g, f)) == compose(compose(h, g), f),
                law='associativity', f=str(f), g=str(g), h=str(h),
            )
        if ordered:
            for n, m, l in self._arities(3, bound):
                for f, g in self._cases([hom(n, m), hom(m, l)]):
                    report.record(
                        forget(ncset_compose(g, f)) == gf_compose(forget(g), forget(f)),
                        law='forget', f=str(f), g=str(g),
                    )
        return report

    def _chains(self, hom, floor):
        """`samples` composable triples up to max_n whose largest arity is above `floor`"""
        shapes = [
            (n, m, l, k) for n, m, l, k in self._arities(4, self.max_n)
            if max(n, m, l, k) > floor and hom(n, m) and hom(m, l) and hom(l, k)
        ]
        if not shapes:
            return
        for _ in range(self.samples):
            n, m, l, k = self.rng.choice(shapes)
            yield self.rng.choice(hom(n, m)), self.rng.choice(hom(m, l)), self.rng.choice(hom(l, k))

    def hom_counts(self):
        """Three enumerations of |Hom(n, m)| for GF(as) and 𝔻⊗ℙ⊗𝔾"""
        report = CheckReport('hom-set counts')
        family = CrossedFamily(SYMMETRIC, self.group)
        for n in range(self.max_n + 1):
            for m in range(1, self.max_n + 1):
                counts = (len(self.hom(n, m)), ncset_hom_count(self.group, n, m), hom_count(family, n, m))
                report.record(len(set(counts)) == 1, law='hom count', n=n, m=m, counts=counts)
        return report

    def pair_isomorphism(self, bound=None):
        """Round trips up to max_n, functoriality on every composable pair up to `bound` (max_n by default)"""
        report = CheckReport('GF(as) ≅ pairs')
        bound = self.max_n if bound is None else bound
        pairs = {}
        for n, m in self._arities(2, self.max_n):
            pairs[n, m] = [to_pair(f) for f in self.hom(n, m)]
            for f, pair in zip(self.hom(n, m), pairs[n, m]):
                report.record(from_pair(pair) == f, law='round trip', f=str(f))
        for n, m, l in self._arities(3, bound):
            fs = list(zip(self.hom(n, m), pairs[n, m]))
            gs = list(zip(self.hom(m, l), pairs[m, l]))
            for (f, f_pair), (g, g_pair) in self._cases([fs, gs]):
                left = to_pair(ncset_compose(g, f))
                report.record(
                    left.key() == compose_DJG(g_pair, f_pair).key(),
                    law='functoriality', f=str(f), g=str(g),
                )
        for n1, m1, n2, m2 in self._arities(4, 1):
            for f, g in self._cases([self.hom(n1, m1), self.hom(n2, m2)]):
                report.record(
                    to_pair(f.tensor(g)).key() == to_pair(f).tensor(to_pair(g)).key(),
                    law='monoidal', f=str(f), g=str(g),
                )
        return report

    def star_condition(self, bound=2):
        report = CheckReport('star condition')
        for ambient in AMBIENT_FOR_VARIANT.values():
            horizontal, vertical = AMBIENT_ORDERS[ambient]
            for m, p, q in self._arities(3, bound):
                pools = [self.hom(m, q, horizontal), self.hom(p, q, vertical)]
                for f, phi in self._cases(pools):
                    square = star_complete(f, phi, ambient)
                    report.record(
                        is_bimorphism(square) and count_completions(f, phi, ambient) == 1,
                        law='unique completion', ambient=ambient, f=str(f), phi=str(phi),
                    )
        return report

    # ============= SPANS =============

    def random_span(self, variant, n, m, max_middle=3):
        out_ordered, in_ordered = leg_orders(variant)
        p = 0 if n == 0 or m == 0 else self.rng.randint(0, max_middle)
        return SpanClass(
            variant,
            random_ncset(self.group, self.rng, p, n, in_ordered),
            random_ncset(self.group, self.rng, p, m, out_ordered),
        )

    def span_laws(self, variant):
        report = CheckReport(f"{variant} span composition")
        arity = lambda: self.rng.randint(0, self.max_n)  # noqa: E731
        for _ in range(self.samples):
            n, m, l, k = arity(), arity(), arity(), arity()
            f = self.random_span(variant, n, m)
            g = self.random_span(variant, m, l)
            h = self.random_span(variant, l, k)
            report.record(
                pullback_span_compose(variant, SpanClass.identity(variant, self.group, m), f) == f
                and pullback_span_compose(variant, f, SpanClass.identity(variant, self.group, n)) == f,
                law='identity', f=str(f),
            )
            left = pullback_span_compose(variant, h, pullback_span_compose(variant, g, f))
            right = pullback_span_compose(variant, pullback_span_compose(variant, h, g), f)
            report.record(left == right, law='associativity', f=str(f), g=str(g), h=str(h))
        return report

    def _composites(self, n, m, max_middle):
        family = CrossedFamily(SYMMETRIC, self.group)
        return [
            CompositeMorphism(family, in_mono, elt, out_mono)
            for p in range(max_middle + 1)
            for elt in family.enumerate(p)
            for in_mono in enumerate_mono(p, n)
            for out_mono in enumerate_mono(p, m)
        ]

    def dual_composition(self, max_middle=2):
        """Generator rewriting against star-condition pullbacks on every composable pair, symmetric family"""
        report = CheckReport('rewriting vs pullback composition')
        homs = {}
        for n, m in self._arities(2, self.max_n):
            homs[n, m] = [(f, SpanClass.from_composite(f)) for f in self._composites(n, m, max_middle)]
        for n, m, l in self._arities(3, self.max_n):
            for (f, f_class), (g, g_class) in self._cases([homs[n, m], homs[m, l]]):
                rewritten = SpanClass.from_composite(span_compose(g, f))
                pulled = pullback_span_compose('AA', g_class, f_class)
                report.record(rewritten == pulled, law='dual composition', f=str(f), g=str(g))
        return report

    def order_insensitivity(self, bound=2, max_middle=2):
        """
        Q_GF does not see fiber orders: every reordering of the fibers of
        both legs of both factors, composed in GF(as) and then forgotten,
        gives the GF composite of the unordered spans.
        """
        report = CheckReport('VV order insensitivity')
        for n, m, l in self._arities(3, bound):
            for _ in range(self.samples // 10 or 1):
                f = self.random_span('AA', n, m, max_middle)
                g = self.random_span('AA', m, l, max_middle)
                plain = pullback_span_compose('VV', _as_vv(g), _as_vv(f))
                legs = (f.in_leg, f.out_leg, g.in_leg, g.out_leg)
                for f_in, f_out, g_in, g_out in itertools.product(*(_reorderings(leg) for leg in legs)):
                    permuted = pullback_span_compose('AA', SpanClass('AA', g_in, g_out), SpanClass('AA', f_in, f_out))
                    report.record(
                        _as_vv(permuted) == plain,
                        law='order insensitivity', f=str(f), g=str(g), reordered=f"{f_in} {f_out} {g_in} {g_out}",
                    )
        return report


def _gf_identity(group, n):
    return forget(NCSetMap.identity(group, n))


def _map_key(f):
    return f.domain, f.codomain, f.fibers


def _reorderings(f):
    """f with every order inside each of its fibers"""
    return [
        NCSetMap(f.group, f.domain, f.codomain, fibers)
        for fibers in itertools.product(*(itertools.permutations(fiber) for fiber in f.fibers))
    ]


def _as_vv(span):
    return SpanClass('VV', span.in_leg, span.out_leg)


@logged_suite
def check_ncset_laws(group, max_n, samples=None, seed=None):
    checker = NCSetChecker(group, max_n, samples, seed)
    report = CheckReport(f"non-commutative sets over {group.name}")
    for law in (
        lambda: checker.composition_laws(ordered=True),
        lambda: checker.composition_laws(ordered=False),
        checker.star_condition,
        checker.order_insensitivity,
    ):
        report.merge(law())
    for variant in SPAN_VARIANTS:
        report.merge(checker.span_laws(variant))
    return report


@logged_suite
def check_isomorphisms(group, max_n, samples=None, seed=None):
    checker = NCSetChecker(group, max_n, samples, seed)
    report = CheckReport(f"isomorphisms over {group.name}")
    for law in (checker.hom_counts, checker.pair_isomorphism, checker.dual_composition):
        report.merge(law())
    return report
