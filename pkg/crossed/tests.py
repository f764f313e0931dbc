import itertools
import random
from unittest import mock

from django.test import SimpleTestCase

from braids.services import BraidWord, LabelledBraid, RibbonBraid, braid_equal, cable
from crossed.services import (
    CrossedFamily, CrossedRewrite, check_crossed_identities, count_factorizations,
    rewrite_past_mono, underlying_sets_agree,
)
from groups.services import GroupTuple, LabelledPermutation, builtin_group
from ordmaps.services import MULT_MAP, OrderedMap, enumerate_mono, identity_map
from utils.constants import BRAID, FAMILIES, HYPEROCTAHEDRAL, RIBBON, SYMMETRIC
from utils.validators import ArityError, GroupMismatchError, InvalidDataError


def _random_map(rng, n, m):
    return rng.choice(enumerate_mono(n, m))


class CrossedFamilyTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')

    def test_unknown_tag_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            CrossedFamily('cyclic', self.c2)

    def test_every_family_has_a_group_structure(self):
        rng = random.Random(1)
        for tag in FAMILIES:
            family = CrossedFamily(tag, self.c2)
            for _ in range(30):
                p, q = family.random(rng, 3), family.random(rng, 3)
                self.assertTrue(family.is_identity(family.compose(p, family.inverse(p))))
                self.assertTrue(family.equal(
                    family.compose(family.identity(3), q), q,
                ))
                self.assertEqual(family.perm(family.compose(p, q))[0], family.perm(p)[family.perm(q)[0]])

    def test_foreign_elements_are_rejected(self):
        symmetric = CrossedFamily(SYMMETRIC, self.c2)
        braid = CrossedFamily(BRAID, self.c2)
        with self.assertRaises(GroupMismatchError):
            symmetric.compose(braid.identity(2), braid.identity(2))
        with self.assertRaises(GroupMismatchError):
            CrossedFamily(SYMMETRIC, builtin_group('c3')).check(symmetric.identity(1))

    def test_flags_and_twists_belong_to_their_families(self):
        with self.assertRaises(GroupMismatchError):
            CrossedFamily(SYMMETRIC, self.c2).flip(2, 0)
        with self.assertRaises(GroupMismatchError):
            CrossedFamily(BRAID, self.c2).twist(2, 0)
        flip = CrossedFamily(HYPEROCTAHEDRAL, self.c2).flip(2, 1)
        self.assertEqual(flip.flags, (0, 1))
        twist = CrossedFamily(RIBBON, self.c2).twist(2, 0)
        self.assertEqual(twist.braid.twists, (1, 0))

    def test_enumeration_only_for_finite_families(self):
        self.assertEqual(len(list(CrossedFamily(HYPEROCTAHEDRAL, self.c2).enumerate(2))), 32)
        with self.assertRaises(InvalidDataError):
            CrossedFamily(BRAID, self.c2).enumerate(2)


class RewritePastMonoTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')
        self.s3 = builtin_group('s3')

    def test_identity_element_passes_unchanged(self):
        for tag in FAMILIES:
            family = CrossedFamily(tag, self.c2)
            phi = OrderedMap(3, 2, (0, 0, 1))
            mono, elt = rewrite_past_mono(family, family.identity(2), phi)
            self.assertEqual(mono, phi)
            self.assertTrue(family.is_identity(elt))

    def test_transposition_past_a_face(self):
        family = CrossedFamily(SYMMETRIC, self.s3)
        a, b = self.s3.element('213'), self.s3.element('132')
        j = LabelledPermutation(GroupTuple(self.s3, (a, b)), (1, 0))
        phi = OrderedMap(1, 2, (0,))
        mono, elt = rewrite_past_mono(family, j, phi)
        self.assertEqual(mono, OrderedMap(1, 2, (1,)))
        self.assertEqual(elt.perm, (0,))
        # the hit wire arrives at position 2, where j multiplies by b
        self.assertEqual(elt.labels.entries, (b,))

    def test_label_past_mult_is_copied(self):
        family = CrossedFamily(SYMMETRIC, self.c2)
        g = self.c2.element('g')
        j = family.from_labels(GroupTuple(self.c2, (g,)))
        mono, elt = rewrite_past_mono(family, j, MULT_MAP)
        self.assertEqual((mono, elt.perm), (MULT_MAP, (0, 1)))
        self.assertEqual(elt.labels.entries, (g, g))

    def test_braid_crossing_is_cabled(self):
        family = CrossedFamily(BRAID, self.c2)
        j = family.crossing(2, 1)
        phi = OrderedMap(3, 2, (0, 0, 1))
        mono, elt = rewrite_past_mono(family, j, phi)
        self.assertEqual(mono.fiber_sizes(), (1, 2))
        self.assertTrue(braid_equal(elt.braid, cable(BraidWord(2, (1,)), (2, 1))))

    def test_flagged_fiber_is_reversed(self):
        family = CrossedFamily(HYPEROCTAHEDRAL, builtin_group('trivial'))
        mono, elt = rewrite_past_mono(family, family.flip(1, 0), MULT_MAP)
        self.assertEqual(mono, MULT_MAP)
        self.assertEqual(elt.perm, (1, 0))
        self.assertEqual(elt.flags, (1, 1))

    def test_twisted_strand_cables_with_a_full_twist(self):
        family = CrossedFamily(RIBBON, self.c2)
        mono, elt = rewrite_past_mono(family, family.twist(1, 0), MULT_MAP)
        self.assertEqual(mono, MULT_MAP)
        self.assertEqual(elt.braid.twists, (1, 1))
        self.assertTrue(braid_equal(elt.braid.braid, BraidWord(2, (1, 1))))

    def test_empty_fibers_delete_strands(self):
        family = CrossedFamily(BRAID, self.c2)
        j = family.crossing(2, 1)
        mono, elt = rewrite_past_mono(family, j, OrderedMap(1, 2, (1,)))
        self.assertEqual(mono, OrderedMap(1, 2, (0,)))
        self.assertEqual(elt.arity, 1)

    def test_arity_mismatch_raises(self):
        family = CrossedFamily(SYMMETRIC, self.c2)
        with self.assertRaises(ArityError):
            rewrite_past_mono(family, family.identity(3), MULT_MAP)

    def test_underlying_sets_agree_for_random_inputs(self):
        rng = random.Random(9)
        for tag in FAMILIES:
            family = CrossedFamily(tag, self.s3)
            for _ in range(100):
                m, n = rng.randint(1, 4), rng.randint(0, 4)
                j, phi = family.random(rng, m), _random_map(rng, n, m)
                result = rewrite_past_mono(family, j, phi)
                self.assertTrue(underlying_sets_agree(
                    family.perm(j), phi, result, family.perm(result.new_elt),
                ))

    def test_labels_pull_back_along_the_new_map(self):
        rng = random.Random(10)
        for tag in FAMILIES:
            family = CrossedFamily(tag, self.s3)
            for _ in range(50):
                j, phi = family.random(rng, 3), _random_map(rng, rng.randint(0, 3), 3)
                mono, elt = rewrite_past_mono(family, j, phi)
                self.assertEqual(elt.labels.entries, tuple(j.labels[v] for v in mono.values))


class FactorizationUniquenessTests(SimpleTestCase):

    def _assert_unique(self, family, max_n):
        for m in range(max_n + 1):
            for j in family.enumerate(m):
                for n in range(max_n + 1):
                    for phi in enumerate_mono(n, m):
                        self.assertEqual(count_factorizations(family, j, phi), 1)

    def test_symmetric_factorizations_are_unique(self):
        self._assert_unique(CrossedFamily(SYMMETRIC, builtin_group('trivial')), 3)

    def test_hyperoctahedral_factorizations_are_unique(self):
        self._assert_unique(CrossedFamily(HYPEROCTAHEDRAL, builtin_group('trivial')), 3)

    def test_rewrite_is_the_fiberwise_monotone_factorization(self):
        family = CrossedFamily(HYPEROCTAHEDRAL, builtin_group('trivial'))
        for m in range(4):
            for j in family.enumerate(m):
                for n in range(4):
                    for phi in enumerate_mono(n, m):
                        _, elt = rewrite_past_mono(family, j, phi)
                        image = [j.perm[v] for v in phi.values]
                        for a, b in itertools.combinations(range(n), 2):
                            if image[a] == image[b]:
                                increasing = elt.perm[a] < elt.perm[b]
                                self.assertEqual(increasing, not j.flags[image[a]])


class ProjectionCoherenceTests(SimpleTestCase):

    def setUp(self):
        self.c2 = builtin_group('c2')
        self.rng = random.Random(12)

    def test_braid_rewrite_projects_to_the_symmetric_rewrite(self):
        braid = CrossedFamily(BRAID, self.c2)
        symmetric = CrossedFamily(SYMMETRIC, self.c2)
        for _ in range(150):
            m = self.rng.randint(1, 4)
            j, phi = braid.random(self.rng, m), _random_map(self.rng, self.rng.randint(0, 4), m)
            mono, elt = rewrite_past_mono(braid, j, phi)
            expected = rewrite_past_mono(symmetric, braid.project(j), phi)
            self.assertEqual(CrossedRewrite(mono, braid.project(elt)), expected)

    def test_unflagged_hyperoctahedral_rewrite_is_symmetric(self):
        hyper = CrossedFamily(HYPEROCTAHEDRAL, self.c2)
        symmetric = CrossedFamily(SYMMETRIC, self.c2)
        for j in symmetric.enumerate(3):
            flagged = LabelledPermutation(j.labels, j.perm, (0, 0, 0))
            for phi in enumerate_mono(2, 3):
                mono, elt = rewrite_past_mono(hyper, flagged, phi)
                self.assertEqual(
                    CrossedRewrite(mono, hyper.project(elt)),
                    rewrite_past_mono(symmetric, j, phi),
                )

    def test_zero_twists_reduce_ribbon_to_braid(self):
        ribbon = CrossedFamily(RIBBON, self.c2)
        braid = CrossedFamily(BRAID, self.c2)
        for _ in range(100):
            j = braid.random(self.rng, 3)
            as_ribbon = LabelledBraid(j.labels, RibbonBraid.from_braid(j.braid))
            phi = _random_map(self.rng, self.rng.randint(0, 4), 3)
            mono, elt = rewrite_past_mono(ribbon, as_ribbon, phi)
            expected_mono, expected_elt = rewrite_past_mono(braid, j, phi)
            self.assertEqual(mono, expected_mono)
            self.assertEqual(set(elt.braid.twists), set() if not elt.arity else {0})
            self.assertTrue(braid.equal(ribbon.project(elt), expected_elt))


class CrossedIdentityTests(SimpleTestCase):

    def test_symmetric_family_over_c2(self):
        report = check_crossed_identities(CrossedFamily(SYMMETRIC, builtin_group('c2')), 2)
        self.assertTrue(report.passed, report.first_failure)
        self.assertGreater(report.checked, 0)

    def test_hyperoctahedral_family_over_trivial_labels(self):
        report = check_crossed_identities(CrossedFamily(HYPEROCTAHEDRAL, builtin_group('trivial')), 2)
        self.assertTrue(report.passed, report.first_failure)

    def test_symmetric_family_over_s3_is_sampled(self):
        report = check_crossed_identities(CrossedFamily(SYMMETRIC, builtin_group('s3')), 3, samples=40, seed=1)
        self.assertTrue(report.passed, report.first_failure)

    def test_braid_family_over_c2(self):
        report = check_crossed_identities(CrossedFamily(BRAID, builtin_group('c2')), 3, samples=40, seed=2)
        self.assertTrue(report.passed, report.first_failure)

    def test_ribbon_family_over_c2(self):
        report = check_crossed_identities(CrossedFamily(RIBBON, builtin_group('c2')), 3, samples=40, seed=3)
        self.assertTrue(report.passed, report.first_failure)

    def test_broken_rewrite_is_reported(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))

        def forgetful(family, j, phi):
            result = rewrite_past_mono(family, j, phi)
            return CrossedRewrite(result.new_mono, family.identity(phi.domain))

        with mock.patch('crossed.services.checker.rewrite_past_mono', side_effect=forgetful):
            report = check_crossed_identities(family, 1)
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure['law'], 'j*(id) = id')

    def test_identity_map_needs_no_rewrite(self):
        family = CrossedFamily(SYMMETRIC, builtin_group('c2'))
        j = family.crossing(2, 1)
        self.assertEqual(rewrite_past_mono(family, j, identity_map(2)).new_elt, j)
