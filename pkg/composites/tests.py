import itertools
import math
import random

from django.test import SimpleTestCase

from composites.serializers import CompositeMorphismSerializer
from composites.services import (
    INNERMOST, OUTERMOST, CompositeChecker, CompositeMorphism, CospanRewriter, DJGMorphism,
    SpanMorphism, canonicalize, check_category_axioms, check_strategy_independence, comult,
    compose_chain, compose_DJG, cospan_to_span, counit, djg_equal, enumerate_djg, hom_count,
    monotone_span, mult, precompose_middle, random_composite, span_compose, span_equiv, unit,
)
from crossed.services import CrossedFamily
from groups.services import builtin_group
from ordmaps.services import MULT_MAP, OrderedMap, identity_map, tensor_mono
from utils.constants import BRAID, FAMILIES, HYPEROCTAHEDRAL, RIBBON, SYMMETRIC
from utils.helpers import CheckReport, CompositionTables
from utils.validators import ArityError, InvalidDataError, RewriteError


class ComposeDJGTests(SimpleTestCase):

    def setUp(self):
        self.family = CrossedFamily(SYMMETRIC, builtin_group('trivial'))

    def test_identity_is_neutral(self):
        rng = random.Random(4)
        for _ in range(20):
            f = DJGMorphism(self.family, self.family.random(rng, 3), OrderedMap(3, 2, (0, 1, 1)))
            self.assertTrue(djg_equal(compose_DJG(DJGMorphism.identity(self.family, 2), f), f))
            self.assertTrue(djg_equal(compose_DJG(f, DJGMorphism.identity(self.family, 3)), f))

    def test_mult_after_crossing_keeps_the_crossing(self):
        sigma = self.family.crossing(2, 1)
        g = DJGMorphism.from_mono(self.family, MULT_MAP)
        f = DJGMorphism.from_elt(self.family, sigma)
        composite = compose_DJG(g, f)
        self.assertEqual(composite.mono, MULT_MAP)
        self.assertEqual(composite.elt, sigma)
        for i in range(2):
            self.assertEqual(composite.mono(composite.elt.perm[i]), MULT_MAP(i))

    def test_boundary_mismatch_is_rejected(self):
        with self.assertRaises(ArityError):
            compose_DJG(DJGMorphism.identity(self.family, 2), DJGMorphism.identity(self.family, 3))

    def test_pairs_form_a_category_over_c2(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        report = CompositeChecker(family, max_n=2, seed=1).djg_laws()
        self.assertTrue(report.passed, report.first_failure)

    def test_associativity_covers_every_triple_up_to_arity_two(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        checker = CompositeChecker(family, max_n=2, seed=1)
        report = CompositionTables(checker.djg_hom, compose_DJG, DJGMorphism.key).check_associativity(
            CheckReport('associativity'), 2,
        )
        expected = sum(
            hom_count(family, n, m) * hom_count(family, m, l) * hom_count(family, l, k)
            for n, m, l, k in itertools.product(range(3), repeat=4)
        )
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(report.checked, expected)

    def test_arity_three_chains_are_sampled(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        chains = list(CompositeChecker(family, max_n=3, samples=25, seed=2)._chains(2))
        self.assertEqual(len(chains), 25)
        for f, g, h in chains:
            self.assertEqual((f.codomain, g.codomain), (g.domain, h.domain))
            self.assertEqual(max(f.domain, f.codomain, g.codomain, h.codomain), 3)
        self.assertEqual(list(CompositeChecker(family, max_n=2, seed=2)._chains(2)), [])

    def test_hom_counts_match_the_closed_form(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        for n in range(4):
            for m in range(1, 4):
                expected = math.comb(n + m - 1, n) * math.factorial(n) * 2 ** n
                self.assertEqual(hom_count(family, n, m), expected)
                self.assertEqual(len(enumerate_djg(family, n, m)), expected)


class CospanToSpanTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')
        self.family = CrossedFamily(SYMMETRIC, self.c2)

    def test_two_mults_give_the_bimonoid_square(self):
        leg = DJGMorphism.from_mono(self.family, MULT_MAP)
        span = cospan_to_span(leg, leg)
        pair = tensor_mono(MULT_MAP, MULT_MAP)
        self.assertEqual(span.middle, 4)
        self.assertEqual(span.in_leg.mono, pair)
        self.assertTrue(span.in_leg.has_trivial_elt())
        self.assertEqual(span.out_leg.mono, pair)
        self.assertEqual(span.out_leg.elt.perm, (0, 2, 1, 3))

    def test_two_units_give_the_empty_span(self):
        leg = DJGMorphism.from_mono(self.family, OrderedMap(0, 1, ()))
        span = cospan_to_span(leg, leg)
        self.assertEqual((span.middle, span.domain, span.codomain), (0, 0, 0))

    def test_group_elements_give_their_inverses(self):
        rng = random.Random(8)
        for tag in FAMILIES:
            family = CrossedFamily(tag, self.c2)
            for _ in range(10):
                g, h = family.random(rng, 3), family.random(rng, 3)
                span = cospan_to_span(DJGMorphism.from_elt(family, g), DJGMorphism.from_elt(family, h))
                self.assertTrue(family.equal(span.in_leg.elt, family.inverse(g)))
                self.assertTrue(family.equal(span.out_leg.elt, family.inverse(h)))
                self.assertTrue(span.in_leg.mono.is_identity())

    def test_monotone_span_of_mult_against_identity(self):
        beta, alpha = monotone_span(self.family, MULT_MAP, identity_map(1))
        self.assertEqual(beta.mono, identity_map(2))
        self.assertEqual(alpha.mono, MULT_MAP)
        self.assertTrue(alpha.has_trivial_elt())

    def test_disjoint_wires_have_an_empty_middle(self):
        beta, alpha = monotone_span(self.family, OrderedMap(1, 2, (0,)), OrderedMap(1, 2, (1,)))
        self.assertEqual(beta.domain, 0)
        self.assertEqual(alpha.domain, 0)

    def test_unknown_strategy_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            CospanRewriter(self.family, strategy='leftmost')

    def test_budget_is_enforced(self):
        with self.assertRaises(RewriteError):
            span_compose(comult(self.family), mult(self.family), budget=1)


class SpanComposeTests(SimpleTestCase):

    def setUp(self):
        self.family = CrossedFamily(SYMMETRIC, builtin_group('c2'))

    def test_identity_span_gives_the_canonical_form(self):
        rng = random.Random(2)
        for _ in range(30):
            s = random_composite(self.family, rng, 2, 3)
            composite = span_compose(CompositeMorphism.identity(self.family, 3), s)
            self.assertEqual(composite.key(), canonicalize(s).key())

    def test_mult_after_comult_is_the_span_through_two(self):
        composite = span_compose(mult(self.family), comult(self.family))
        self.assertEqual(composite.middle, 2)
        self.assertEqual(composite.in_mono, MULT_MAP)
        self.assertEqual(composite.out_mono, MULT_MAP)
        self.assertTrue(self.family.is_identity(composite.elt))

    def test_comult_after_mult_crosses_the_middle_wires(self):
        composite = span_compose(comult(self.family), mult(self.family))
        self.assertEqual(composite.middle, 4)
        self.assertEqual(composite.in_mono, tensor_mono(MULT_MAP, MULT_MAP))
        self.assertEqual(composite.out_mono, tensor_mono(MULT_MAP, MULT_MAP))
        self.assertEqual(composite.elt.perm, (0, 2, 1, 3))

    def test_unit_then_counit_is_the_empty_scalar(self):
        composite = span_compose(counit(self.family), unit(self.family))
        self.assertEqual((composite.domain, composite.middle, composite.codomain), (0, 0, 0))

    def test_chain_composes_in_diagrammatic_order(self):
        chain = compose_chain([mult(self.family), comult(self.family)])
        self.assertEqual(chain.key(), span_compose(comult(self.family), mult(self.family)).key())

    def test_boundary_mismatch_is_rejected(self):
        with self.assertRaises(ArityError):
            span_compose(mult(self.family), mult(self.family))

    def test_serializer_dumps_the_canonical_triple(self):
        data = CompositeMorphismSerializer(span_compose(comult(self.family), mult(self.family))).data
        self.assertEqual(data['family'], SYMMETRIC)
        self.assertEqual(data['middle'], 4)
        self.assertEqual(data['in'], '[1,1,2,2]:4->2')
        self.assertEqual(data['elt']['perm'], [1, 3, 2, 4])


class SpanEquivalenceTests(SimpleTestCase):

    def test_relabelling_the_middle_preserves_the_class(self):
        rng = random.Random(11)
        for tag in FAMILIES:
            family = CrossedFamily(tag, builtin_group('c2'))
            for _ in range(50):
                s = random_composite(family, rng, 2, 2).to_span()
                h = family.random(rng, s.middle)
                self.assertTrue(span_equiv(precompose_middle(s, h), s))

    def test_different_fiber_shapes_are_distinguished(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        counit_then_id = counit(family).tensor(CompositeMorphism.identity(family, 1))
        self.assertFalse(span_equiv(mult(family), counit_then_id))

    def test_different_boundaries_are_rejected(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        with self.assertRaises(ArityError):
            span_equiv(mult(family), comult(family))

    def test_canonicalize_is_idempotent(self):
        rng = random.Random(5)
        for tag in FAMILIES:
            family = CrossedFamily(tag, builtin_group('c2'))
            for _ in range(30):
                once = canonicalize(random_composite(family, rng, 3, 2).to_span())
                self.assertEqual(canonicalize(once).key(), once.key())

    def test_hyperoctahedral_flags_end_up_in_the_middle(self):
        family = CrossedFamily(HYPEROCTAHEDRAL, builtin_group('trivial'))
        flip = family.flip(2, 0)
        composite = canonicalize(SpanMorphism(
            DJGMorphism.from_elt(family, flip), DJGMorphism.identity(family, 2),
        ))
        self.assertTrue(composite.in_mono.is_identity())
        self.assertEqual(composite.elt.flags, family.inverse(flip).flags)


class CompositeLawTests(SimpleTestCase):

    def test_span_category_axioms(self):
        for tag in (SYMMETRIC, HYPEROCTAHEDRAL, BRAID, RIBBON):
            report = check_category_axioms(CrossedFamily(tag, builtin_group('c2')), 2, samples=30, seed=6)
            self.assertTrue(report.passed, report.first_failure)

    def test_strategies_agree(self):
        for tag in FAMILIES:
            report = check_strategy_independence(CrossedFamily(tag, builtin_group('c2')), 3, samples=40, seed=9)
            self.assertTrue(report.passed, report.first_failure)

    def test_outermost_reproduces_the_bimonoid_square(self):
        family = CrossedFamily(BRAID, builtin_group('c2'))
        inner = span_compose(comult(family), mult(family), INNERMOST)
        outer = span_compose(comult(family), mult(family), OUTERMOST)
        self.assertTrue(span_equiv(inner, outer))


class CompositionTableTests(SimpleTestCase):

    def tables(self, compose):
        return CompositionTables(lambda n, m: [0, 1, 2], compose, lambda x: x)

    def test_associative_operation_passes(self):
        report = self.tables(lambda g, f: (g + f) % 3).check_associativity(CheckReport('sum'), 0)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 27)

    def test_every_non_associative_triple_is_reported(self):
        # h-(g-f) and (h-g)-f differ exactly when f != 0
        report = self.tables(lambda g, f: (g - f) % 3).check_associativity(CheckReport('difference'), 0)
        self.assertEqual(report.checked, 27)
        self.assertEqual(len(report.failures), 18)
        self.assertTrue(all(case['f'] != '0' for case in report.failures))

    def test_composites_outside_the_hom_set_fail_closure(self):
        report = self.tables(lambda g, f: g + f).check_associativity(CheckReport('sum'), 0)
        self.assertEqual(report.first_failure['law'], 'closure')
