import itertools
import random
from unittest import mock

from django.test import SimpleTestCase

from composites.services import CompositeMorphism, comult, compose_DJG, mult, span_compose
from crossed.services import CrossedFamily
from groups.services import builtin_group
from ncsets.serializers import FiberMapSerializer, SpanClassSerializer
from ncsets.services import (
    Bimorphism, GFMap, NCSetChecker, NCSetMap, SpanClass, block_symmetry, check_isomorphisms,
    count_completions, enumerate_gf, enumerate_ncset, forget, from_pair, gf_compose,
    is_bimorphism, label_act, ncset_compose, ncset_hom_count, pullback_span_compose,
    random_ncset, star_complete, to_pair,
)
from ordmaps.services import MULT_MAP
from utils.constants import SPAN_VARIANTS, SYMMETRIC
from utils.validators import ArityError, InvalidDataError


class NCSetMapTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')
        self.s3 = builtin_group('s3')

    def test_fibers_must_partition_the_domain(self):
        with self.assertRaises(InvalidDataError):
            NCSetMap(self.c2, 2, 1, (((0, 0),),))
        with self.assertRaises(InvalidDataError):
            NCSetMap(self.c2, 1, 1, (((0, 0), (0, 1)),))

    def test_no_maps_into_zero(self):
        with self.assertRaises(InvalidDataError):
            NCSetMap(self.c2, 1, 0, ())
        self.assertEqual(enumerate_ncset(self.c2, 2, 0), [])
        self.assertEqual(len(enumerate_ncset(self.c2, 0, 0)), 1)

    def test_gf_maps_forget_fiber_order(self):
        a = GFMap(self.c2, 2, 1, (((1, 0), (0, 1)),))
        b = GFMap(self.c2, 2, 1, (((0, 1), (1, 0)),))
        self.assertEqual(a, b)
        self.assertNotEqual(NCSetMap(self.c2, 2, 1, a.fibers), NCSetMap(self.c2, 2, 1, (((1, 0), (0, 1)),)))

    def test_label_act_multiplies_on_the_left(self):
        fiber = ((0, 0), (1, 1))
        self.assertEqual(label_act(self.c2, self.c2.identity, fiber), fiber)
        self.assertEqual(label_act(self.c2, 1, fiber), ((0, 1), (1, 0)))
        g, h = self.s3.element('213'), self.s3.element('132')
        fiber = ((0, self.s3.element('231')), (1, self.s3.element('312')))
        self.assertEqual(
            label_act(self.s3, self.s3.mul(g, h), fiber),
            label_act(self.s3, g, label_act(self.s3, h, fiber)),
        )

    def test_composite_fiber_concatenates_in_outer_order(self):
        a, b, c = (self.s3.element(name) for name in ('213', '231', '132'))
        f1 = NCSetMap(self.s3, 2, 1, (((0, a), (1, b)),))
        f2 = NCSetMap(self.s3, 1, 1, (((0, c),),))
        composite = ncset_compose(f2, f1)
        self.assertEqual(composite.fibers, (((0, self.s3.mul(c, a)), (1, self.s3.mul(c, b))),))

    def test_identity_and_boundaries(self):
        rng = random.Random(3)
        f = random_ncset(self.s3, rng, 3, 2)
        self.assertEqual(ncset_compose(NCSetMap.identity(self.s3, 2), f), f)
        self.assertEqual(ncset_compose(f, NCSetMap.identity(self.s3, 3)), f)
        with self.assertRaises(ArityError):
            ncset_compose(f, f)

    def test_trivial_labels_reduce_gf_to_set_maps(self):
        trivial = builtin_group('trivial')
        rng = random.Random(5)
        for _ in range(30):
            f1 = random_ncset(trivial, rng, 3, 2, ordered=False)
            f2 = random_ncset(trivial, rng, 2, 3, ordered=False)
            self.assertEqual(gf_compose(f2, f1).values, tuple(f2.values[v] for v in f1.values))

    def test_forgetting_order_commutes_with_composition(self):
        rng = random.Random(7)
        for _ in range(100):
            f = random_ncset(self.s3, rng, 3, 2)
            g = random_ncset(self.s3, rng, 2, 2)
            self.assertEqual(forget(ncset_compose(g, f)), gf_compose(forget(g), forget(f)))

    def test_composition_laws_over_c2(self):
        checker = NCSetChecker(self.c2, max_n=2, seed=1)
        for ordered in (True, False):
            report = checker.composition_laws(ordered=ordered)
            self.assertTrue(report.passed, report.first_failure)

    def test_associativity_is_exhaustive_up_to_arity_two(self):
        checker = NCSetChecker(self.c2, max_n=2, seed=1)
        report = checker.composition_laws(ordered=False)
        size = lambda n, m: len(checker.hom(n, m, False))  # noqa: E731
        identities = sum(size(n, m) for n, m in itertools.product(range(3), repeat=2))
        triples = sum(
            size(n, m) * size(m, l) * size(l, k) for n, m, l, k in itertools.product(range(3), repeat=4)
        )
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(report.checked, identities + triples)

    def test_arity_three_triples_are_sampled(self):
        checker = NCSetChecker(self.c2, max_n=3, samples=20, seed=3)
        chains = list(checker._chains(checker.hom, 2))
        self.assertEqual(len(chains), 20)
        for f, g, h in chains:
            self.assertEqual((f.codomain, g.codomain), (g.domain, h.domain))
            self.assertEqual(max(f.domain, f.codomain, g.codomain, h.codomain), 3)
        report = checker.composition_laws(ordered=False)
        self.assertTrue(report.passed, report.first_failure)

    def test_block_symmetry_is_natural_and_hexagonal(self):
        rng = random.Random(9)
        sym = lambda a, b: block_symmetry(self.c2, a, b)  # noqa: E731
        for _ in range(50):
            n1, m1, n2, m2 = (rng.randint(1, 3) for _ in range(4))
            f, g = random_ncset(self.c2, rng, n1, m1), random_ncset(self.c2, rng, n2, m2)
            self.assertEqual(
                ncset_compose(sym(m1, m2), f.tensor(g)),
                ncset_compose(g.tensor(f), sym(n1, n2)),
            )
        for a, b, c in ((1, 1, 1), (2, 1, 3), (0, 2, 1)):
            self.assertEqual(
                sym(a, b + c),
                ncset_compose(NCSetMap.identity(self.c2, b).tensor(sym(a, c)), sym(a, b).tensor(NCSetMap.identity(self.c2, c))),
            )
        self.assertEqual(ncset_compose(sym(2, 1), sym(1, 2)), NCSetMap.identity(self.c2, 3))


class HomCountTests(SimpleTestCase):

    def test_three_enumerations_agree(self):
        report = NCSetChecker(builtin_group('c2'), max_n=3).hom_counts()
        self.assertTrue(report.passed, report.first_failure)

    def test_closed_forms(self):
        c2 = builtin_group('c2')
        self.assertEqual(ncset_hom_count(c2, 2, 1), 2 * 4)
        self.assertEqual(len(enumerate_ncset(c2, 2, 2)), 3 * 2 * 4)
        self.assertEqual(len(enumerate_gf(c2, 2, 3)), 9 * 4)


class PairIsomorphismTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')

    def test_identity_maps_to_the_identity_pair(self):
        pair = to_pair(NCSetMap.identity(self.c2, 3))
        self.assertTrue(pair.is_identity())

    def test_reversed_fiber_gives_a_labelled_transposition(self):
        f = NCSetMap(self.c2, 2, 1, (((1, 1), (0, 0)),))
        pair = to_pair(f)
        self.assertEqual(pair.mono, MULT_MAP)
        self.assertEqual(pair.elt.perm, (1, 0))
        self.assertEqual(pair.elt.labels.entries, (1, 0))
        self.assertEqual(from_pair(pair), f)

    def test_round_trip_and_functoriality(self):
        report = NCSetChecker(self.c2, max_n=3, seed=2).pair_isomorphism(bound=2)
        self.assertTrue(report.passed, report.first_failure)

    def test_functoriality_covers_every_composable_pair(self):
        checker = NCSetChecker(self.c2, max_n=2, seed=2)
        report = checker.pair_isomorphism()
        homs = {(n, m): len(checker.hom(n, m)) for n, m in itertools.product(range(3), repeat=2)}
        functoriality = sum(homs[n, m] * homs[m, l] for n, m, l in itertools.product(range(3), repeat=3))
        monoidal = sum(homs[n1, m1] * homs[n2, m2] for n1, m1, n2, m2 in itertools.product(range(2), repeat=4))
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(report.checked, sum(homs.values()) + functoriality + monoidal)

    def test_functoriality_over_a_nonabelian_group(self):
        s3 = builtin_group('s3')
        rng = random.Random(12)
        for _ in range(200):
            f = random_ncset(s3, rng, 3, 2)
            g = random_ncset(s3, rng, 2, 2)
            self.assertEqual(
                to_pair(ncset_compose(g, f)).key(),
                compose_DJG(to_pair(g), to_pair(f)).key(),
            )

    def test_unordered_maps_have_no_pair(self):
        with self.assertRaises(InvalidDataError):
            to_pair(forget(NCSetMap.identity(self.c2, 1)))


class StarConditionTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')

    def test_identity_vertical_edge(self):
        f = NCSetMap.from_values(self.c2, (0, 1, 1), 2)
        square = star_complete(f, NCSetMap.identity(self.c2, 2), 'GFas2')
        self.assertEqual(square.top, f)
        self.assertEqual(square.left, NCSetMap.identity(self.c2, 3))
        self.assertTrue(is_bimorphism(square))

    def test_relabelled_vertical_edge_lifts_inverse_labels(self):
        f = NCSetMap.from_values(self.c2, (0, 0), 1)
        phi = NCSetMap(self.c2, 1, 1, (((0, 1),),))
        square = star_complete(f, phi, 'GFas2')
        self.assertEqual(square.apex, 2)
        self.assertEqual(square.top.fibers, (((0, 1), (1, 1)),))
        self.assertEqual(square.left, NCSetMap.identity(self.c2, 2))
        self.assertEqual(count_completions(f, phi, 'GFas2'), 1)

    def test_tampered_square_is_rejected(self):
        f = NCSetMap.from_values(self.c2, (0, 0), 1)
        phi = NCSetMap.from_values(self.c2, (0, 0), 1)
        square = star_complete(f, phi, 'GFas2')
        reversed_top = NCSetMap(self.c2, 4, 2, tuple(fiber[::-1] for fiber in square.top.fibers))
        tampered = Bimorphism(square.ambient, reversed_top, square.left, square.right, square.bottom)
        self.assertTrue(is_bimorphism(square))
        self.assertFalse(is_bimorphism(tampered))

    def test_completions_are_unique_in_every_ambient(self):
        report = NCSetChecker(self.c2, max_n=2, seed=4).star_condition()
        self.assertTrue(report.passed, report.first_failure)

    def test_wrong_leg_kinds_are_rejected(self):
        f = NCSetMap.identity(self.c2, 1)
        with self.assertRaises(InvalidDataError):
            star_complete(forget(f), f, 'GFas2')
        with self.assertRaises(InvalidDataError):
            star_complete(f, f, 'Z')


class PullbackSpanTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')
        self.family = CrossedFamily(SYMMETRIC, self.c2)

    def test_identity_span_is_neutral(self):
        checker = NCSetChecker(self.c2, max_n=3, seed=5)
        for variant in SPAN_VARIANTS:
            for _ in range(30):
                s = checker.random_span(variant, 2, 3)
                identity = SpanClass.identity(variant, self.c2, 3)
                self.assertEqual(pullback_span_compose(variant, identity, s), s)

    def test_comult_after_mult_matches_rewriting(self):
        mu, delta = SpanClass.from_composite(mult(self.family)), SpanClass.from_composite(comult(self.family))
        pulled = pullback_span_compose('AA', delta, mu)
        self.assertEqual(pulled.middle, 4)
        self.assertEqual(pulled, SpanClass.from_composite(span_compose(comult(self.family), mult(self.family))))
        self.assertEqual(pullback_span_compose('AA', mu, delta).middle, 2)

    def test_rewriting_and_pullbacks_agree(self):
        checker = NCSetChecker(builtin_group('s3'), max_n=2, seed=6)
        report = checker.dual_composition(max_middle=1)
        self.assertTrue(report.passed, report.first_failure)

    def test_dual_composition_covers_every_composable_pair(self):
        checker = NCSetChecker(self.c2, max_n=2, seed=4)
        report = checker.dual_composition(max_middle=1)
        sizes = {(n, m): len(checker._composites(n, m, 1)) for n, m in itertools.product(range(3), repeat=2)}
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(
            report.checked,
            sum(sizes[n, m] * sizes[m, l] for n, m, l in itertools.product(range(3), repeat=3)),
        )

    def test_span_laws_for_every_variant(self):
        checker = NCSetChecker(builtin_group('s3'), max_n=3, samples=60, seed=7)
        for variant in SPAN_VARIANTS:
            report = checker.span_laws(variant)
            self.assertTrue(report.passed, report.first_failure)

    def test_vv_classes_ignore_fiber_order(self):
        report = NCSetChecker(self.c2, max_n=2, samples=50, seed=8).order_insensitivity()
        self.assertTrue(report.passed, report.first_failure)

    def test_every_fiber_reordering_is_composed(self):
        pair = NCSetMap.from_values(self.c2, (0, 0), 1)

        def span(variant, n, m, max_middle):
            if n and m:
                return SpanClass(variant, pair, pair)
            return SpanClass(variant, NCSetMap.from_values(self.c2, (), n), NCSetMap.from_values(self.c2, (), m))

        checker = NCSetChecker(self.c2, max_n=1, samples=10, seed=8)
        with mock.patch.object(checker, 'random_span', side_effect=span):
            report = checker.order_insensitivity(bound=1)
        self.assertTrue(report.passed, report.first_failure)
        # 1→1 spans have two orders per leg: 2^4 cases on (1, 1, 1), 2^2 on (1, 1, 0) and (0, 1, 1)
        self.assertEqual(report.checked, 5 + 2 * 2 ** 2 + 2 ** 4)

    def test_ordered_classes_see_fiber_order(self):
        forward = SpanClass('AA', NCSetMap.identity(self.c2, 2), NCSetMap.from_values(self.c2, (0, 0), 1))
        backward = SpanClass('AA', NCSetMap.identity(self.c2, 2), NCSetMap(self.c2, 2, 1, (((1, 0), (0, 0)),)))
        self.assertNotEqual(forward, backward)
        self.assertEqual(SpanClass('VA', forward.in_leg, forward.out_leg), SpanClass('VA', backward.in_leg, backward.out_leg))

    def test_variant_mismatch_is_rejected(self):
        s = SpanClass.identity('AA', self.c2, 1)
        with self.assertRaises(InvalidDataError):
            pullback_span_compose('VV', s, s)
        with self.assertRaises(InvalidDataError):
            SpanClass('AX', s.in_leg, s.out_leg)

    def test_isomorphism_suite(self):
        report = check_isomorphisms(self.c2, 2, seed=9)
        self.assertTrue(report.passed, report.first_failure)


class FiberSerializerTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')

    def test_reads_the_fiber_format(self):
        serializer = FiberMapSerializer(
            data={'cod': 1, 'fibers': [[[2, 'g'], [1, 'e']]]}, context={'group': self.c2},
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        f = serializer.save()
        self.assertEqual(f.fibers, (((1, 1), (0, 0)),))
        self.assertEqual(FiberMapSerializer(f).data['fibers'], [[[2, 'g'], [1, 'e']]])

    def test_rejects_a_non_partition(self):
        serializer = FiberMapSerializer(
            data={'cod': 1, 'fibers': [[[1, 'e'], [1, 'g']]]}, context={'group': self.c2},
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn('fibers', serializer.errors)

    def test_span_dump(self):
        span = SpanClass.from_composite(CompositeMorphism.identity(CrossedFamily(SYMMETRIC, self.c2), 1))
        data = SpanClassSerializer(span).data
        self.assertEqual((data['variant'], data['middle']), ('AA', 1))
        self.assertEqual(data['out']['fibers'], [[[1, 'e']]])
