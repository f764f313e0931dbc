import itertools
import random

from django.test import SimpleTestCase

from braids.serializers import BraidWordSerializer, NormalFormSerializer
from braids.services import (
    BraidWord, LabelledBraid, RibbonBraid, WordProblemChecker, block_crossing_perm, braid_compose,
    braid_equal, braid_normal_form, cable, check_word_problem, full_twist, half_twist,
    labelled_braid_compose, labelled_braid_equal, parse_braid, parse_ribbon, permutation_braid,
    random_word, ribbon_cable, ribbon_compose, ribbon_equal, underlying_permutation,
)
from groups.services import (
    GroupTuple, builtin_group, inversions, perm_compose, permute_entries,
)
from utils.validators import ArityError, InvalidDataError, TermSyntaxError


def _word(n, *letters):
    return BraidWord(n, letters)


class BraidWordTests(SimpleTestCase):

    def test_out_of_range_generator_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            BraidWord(2, (2,))
        with self.assertRaises(InvalidDataError):
            BraidWord(3, (0,))

    def test_inverse_reverses_and_negates(self):
        self.assertEqual(_word(3, 1, -2, 2).inverse(), _word(3, -2, 2, -1))

    def test_tensor_shifts_generators(self):
        self.assertEqual(_word(2, 1).tensor(_word(3, -1, 2)), _word(5, 1, -3, 4))

    def test_compose_with_empty_word(self):
        w = _word(3, 1, -2)
        self.assertEqual(braid_compose(w, BraidWord.identity(3)), w)

    def test_compose_concatenates_without_normalizing(self):
        self.assertEqual(braid_compose(_word(2, 1), _word(2, -1)).letters, (1, -1))

    def test_strand_mismatch_raises(self):
        with self.assertRaises(ArityError):
            braid_compose(_word(2), _word(3))


class UnderlyingPermutationTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(underlying_permutation(BraidWord.identity(4)), (0, 1, 2, 3))

    def test_single_crossing(self):
        self.assertEqual(underlying_permutation(_word(3, 1)), (1, 0, 2))
        self.assertEqual(underlying_permutation(_word(3, -1)), (1, 0, 2))

    def test_right_letter_acts_first(self):
        # σ₁σ₂ ↦ t₁∘t₂: 1 ↦ 2, 2 ↦ 3, 3 ↦ 1
        self.assertEqual(underlying_permutation(_word(3, 1, 2)), (1, 2, 0))

    def test_is_a_homomorphism(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(2, 5)
            w1, w2 = random_word(rng, n), random_word(rng, n)
            self.assertEqual(
                underlying_permutation(braid_compose(w1, w2)),
                perm_compose(underlying_permutation(w1), underlying_permutation(w2)),
            )

    def test_permutation_braids_are_reduced_lifts(self):
        for n in range(5):
            for perm in itertools.permutations(range(n)):
                word = permutation_braid(perm)
                self.assertEqual(underlying_permutation(word), perm)
                self.assertEqual(len(word), inversions(perm))
                self.assertTrue(all(letter > 0 for letter in word.letters))


class NormalFormTests(SimpleTestCase):

    def test_free_cancellation(self):
        self.assertTrue(braid_normal_form(_word(2, 1, -1)).is_identity())
        self.assertTrue(braid_normal_form(_word(4, -3, 2, -2, 3)).is_identity())

    def test_braid_relation(self):
        self.assertTrue(braid_equal(_word(3, 1, 2, 1), _word(3, 2, 1, 2)))
        self.assertTrue(braid_equal(_word(4, 1, 3), _word(4, 3, 1)))

    def test_distinct_braids_are_distinguished(self):
        self.assertFalse(braid_equal(_word(3, 1), _word(3, 2)))
        self.assertFalse(braid_equal(_word(2, 1, 1), BraidWord.identity(2)))
        self.assertFalse(braid_equal(_word(3, 1, 2), _word(3, 2, 1)))
        self.assertFalse(braid_equal(_word(3, 1, -2), _word(3, -2, 1)))

    def test_half_twist_is_a_single_power(self):
        form = braid_normal_form(half_twist(4))
        self.assertEqual((form.infimum, form.canonical_length), (1, 0))
        inverse = braid_normal_form(half_twist(4).inverse())
        self.assertEqual((inverse.infimum, inverse.canonical_length), (-1, 0))

    def test_full_twist_is_central(self):
        delta2 = full_twist(4)
        for i in (1, 2, 3):
            self.assertTrue(braid_equal(
                braid_compose(delta2, _word(4, i)),
                braid_compose(_word(4, i), delta2),
            ))

    def test_half_twist_conjugates_generators(self):
        delta = half_twist(4)
        for i in (1, 2, 3):
            self.assertTrue(braid_equal(
                braid_compose(braid_compose(delta, _word(4, i)), delta.inverse()),
                _word(4, 4 - i),
            ))

    def test_to_word_round_trips(self):
        rng = random.Random(5)
        for _ in range(200):
            w = random_word(rng, rng.randint(2, 5))
            form = braid_normal_form(w)
            self.assertEqual(braid_normal_form(form.to_word()), form)
            self.assertEqual(underlying_permutation(form.to_word()), underlying_permutation(w))

    def test_word_times_inverse_is_identity(self):
        rng = random.Random(0)
        for _ in range(1000):
            w = random_word(rng, rng.randint(2, 5))
            self.assertTrue(braid_normal_form(braid_compose(w, w.inverse())).is_identity())

    def test_relation_insertions_preserve_normal_form(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(3, 5)
            w = random_word(rng, n)
            i = rng.randint(1, n - 2)
            relator = _word(n, i, i + 1, i, -(i + 1), -i, -(i + 1))
            j = rng.randint(1, n - 1)
            cancelling = _word(n, -j, j)
            cut = rng.randint(0, len(w))
            head, tail = _word(n, *w.letters[:cut]), _word(n, *w.letters[cut:])
            moved = braid_compose(braid_compose(head, braid_compose(relator, cancelling)), tail)
            self.assertEqual(braid_normal_form(moved), braid_normal_form(w))

    def test_trivial_strand_counts(self):
        self.assertTrue(braid_normal_form(BraidWord.identity(0)).is_identity())
        self.assertTrue(braid_normal_form(BraidWord.identity(1)).is_identity())


class CableTests(SimpleTestCase):

    def test_unit_multiplicities_leave_the_word(self):
        w = _word(3, 1, -2, 1)
        self.assertEqual(cable(w, (1, 1, 1)), w)

    def test_block_crossing(self):
        cabled = cable(_word(2, 1), (2, 1))
        self.assertEqual(cabled.strands, 3)
        self.assertEqual(underlying_permutation(cabled), block_crossing_perm(2, 1))
        # each strand of the 2-block crosses the single strand once, positively
        self.assertEqual(len(cabled), 2)
        self.assertTrue(all(letter > 0 for letter in cabled.letters))

    def test_zero_multiplicity_deletes_the_strand(self):
        self.assertTrue(braid_equal(cable(_word(2, 1), (1, 0)), BraidWord.identity(1)))

    def test_inverse_letter_cables_to_the_inverse_crossing(self):
        for mult in ((2, 1), (1, 3), (2, 2)):
            w = _word(2, 1)
            moved = permute_entries(underlying_permutation(w), mult)
            self.assertTrue(braid_normal_form(braid_compose(
                cable(w.inverse(), moved), cable(w, mult),
            )).is_identity())

    def test_block_permutation_matches(self):
        w = _word(3, 1, 2)
        mult = (2, 0, 1)
        perm = underlying_permutation(w)
        cabled = underlying_permutation(cable(w, mult))
        offsets = [sum(mult[:k]) for k in range(3)]
        target = permute_entries(perm, mult)
        target_offsets = [sum(target[:k]) for k in range(3)]
        for k in range(3):
            for r in range(mult[k]):
                self.assertEqual(cabled[offsets[k] + r], target_offsets[perm[k]] + r)

    def test_length_mismatch_raises(self):
        with self.assertRaises(ArityError):
            cable(_word(2, 1), (1, 1, 1))

    def test_functorial_in_the_braid(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(2, 4)
            w1, w2 = random_word(rng, n, 5), random_word(rng, n, 5)
            mult = tuple(rng.randint(0, 2) for _ in range(n))
            moved = permute_entries(underlying_permutation(w2), mult)
            self.assertTrue(braid_equal(
                cable(braid_compose(w1, w2), mult),
                braid_compose(cable(w1, moved), cable(w2, mult)),
            ))


class RibbonTests(SimpleTestCase):

    def test_identity_is_neutral(self):
        r = RibbonBraid(_word(2, 1), (1, -2))
        self.assertEqual(ribbon_compose(RibbonBraid.identity(2), r), r)

    def test_twists_move_with_the_left_braid(self):
        r = ribbon_compose(RibbonBraid(_word(2, 1), (1, 0)), RibbonBraid(_word(2, 1), (0, 2)))
        self.assertEqual(r.twists, (3, 0))
        self.assertEqual(r.braid, _word(2, 1, 1))

    def test_group_axioms_on_small_ribbons(self):
        words = [_word(2, *letters) for k in range(3) for letters in itertools.product((1, -1), repeat=k)]
        twists = list(itertools.product((-1, 0, 1), repeat=2))
        ribbons = [RibbonBraid(w, t) for w in words for t in twists]
        identity = RibbonBraid.identity(2)
        for r in ribbons:
            self.assertTrue(ribbon_equal(ribbon_compose(r, r.inverse()), identity))
            self.assertTrue(ribbon_equal(ribbon_compose(r.inverse(), r), identity))
        rng = random.Random(2)
        for _ in range(500):
            a, b, c = (rng.choice(ribbons) for _ in range(3))
            self.assertTrue(ribbon_equal(
                ribbon_compose(ribbon_compose(a, b), c),
                ribbon_compose(a, ribbon_compose(b, c)),
            ))

    def test_zero_twists_embed_braid_composition(self):
        rng = random.Random(4)
        for _ in range(100):
            w1, w2 = random_word(rng, 3, 4), random_word(rng, 3, 4)
            composed = ribbon_compose(RibbonBraid.from_braid(w1), RibbonBraid.from_braid(w2))
            self.assertEqual(composed, RibbonBraid.from_braid(braid_compose(w1, w2)))

    def test_cable_without_twists_is_plain_cabling(self):
        r = RibbonBraid.from_braid(_word(3, 1, -2))
        cabled = ribbon_cable(r, (2, 1, 0))
        self.assertEqual(cabled.twists, (0, 0, 0))
        self.assertTrue(braid_equal(cabled.braid, cable(r.braid, (2, 1, 0))))

    def test_twisted_strand_cables_to_a_full_twist(self):
        cabled = ribbon_cable(RibbonBraid(BraidWord.identity(1), (1,)), (2,))
        self.assertEqual(cabled.twists, (1, 1))
        self.assertTrue(braid_equal(cabled.braid, _word(2, 1, 1)))

    def test_unit_multiplicities_leave_the_ribbon(self):
        r = RibbonBraid(_word(3, 2, -1), (1, 0, -1))
        self.assertTrue(ribbon_equal(ribbon_cable(r, (1, 1, 1)), r))

    def test_ribbon_cable_is_functorial(self):
        rng = random.Random(23)
        for _ in range(150):
            n = rng.randint(2, 3)
            r1 = RibbonBraid(random_word(rng, n, 4), tuple(rng.randint(-1, 1) for _ in range(n)))
            r2 = RibbonBraid(random_word(rng, n, 4), tuple(rng.randint(-1, 1) for _ in range(n)))
            mult = tuple(rng.randint(0, 2) for _ in range(n))
            moved = permute_entries(underlying_permutation(r2.braid), mult)
            self.assertTrue(ribbon_equal(
                ribbon_cable(ribbon_compose(r1, r2), mult),
                ribbon_compose(ribbon_cable(r1, moved), ribbon_cable(r2, mult)),
            ))


class LabelledBraidTests(SimpleTestCase):

    def setUp(self):
        self.s3 = builtin_group('s3')

    def _labels(self, *names):
        return GroupTuple.from_names(self.s3, names)

    def test_semidirect_formula(self):
        a, b, c, d = '213', '132', '231', '312'
        p = LabelledBraid(self._labels(a, b), _word(2, 1))
        q = LabelledBraid(self._labels(c, d), _word(2, 1))
        mul = self.s3.mul
        expected = GroupTuple(self.s3, (
            mul(self.s3.element(a), self.s3.element(d)),
            mul(self.s3.element(b), self.s3.element(c)),
        ))
        self.assertEqual(labelled_braid_compose(p, q), LabelledBraid(expected, _word(2, 1, 1)))

    def test_inverse_and_associativity(self):
        rng = random.Random(8)
        elements = self.s3.elements()

        def sample(ribbon):
            n = 3
            braid = random_word(rng, n, 4)
            if ribbon:
                braid = RibbonBraid(braid, tuple(rng.randint(-1, 1) for _ in range(n)))
            return LabelledBraid(GroupTuple(self.s3, tuple(rng.choice(elements) for _ in range(n))), braid)

        for ribbon in (False, True):
            identity = LabelledBraid.identity(self.s3, 3, ribbon=ribbon)
            for _ in range(150):
                p, q, r = sample(ribbon), sample(ribbon), sample(ribbon)
                self.assertTrue(labelled_braid_equal(labelled_braid_compose(p, p.inverse()), identity))
                self.assertTrue(labelled_braid_equal(
                    labelled_braid_compose(labelled_braid_compose(p, q), r),
                    labelled_braid_compose(p, labelled_braid_compose(q, r)),
                ))


class SyntaxTests(SimpleTestCase):

    def test_parse_braid(self):
        w = parse_braid("s1 s2' s1")
        self.assertEqual((w.strands, w.letters), (3, (1, -2, 1)))
        self.assertEqual(str(w), "s1 s2' s1")

    def test_explicit_strand_count(self):
        self.assertEqual(parse_braid('s1', strands=4).strands, 4)
        self.assertEqual(parse_braid('e', strands=2), BraidWord.identity(2))

    def test_parse_ribbon(self):
        r = parse_ribbon('tw(1,0,-2) s1')
        self.assertEqual(r.twists, (1, 0, -2))
        self.assertEqual(r.braid, _word(3, 1))
        self.assertEqual(str(r), 'tw(1,0,-2) s1')

    def test_syntax_error_carries_a_position(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_braid('s1 x2')
        self.assertEqual(ctx.exception.line, 1)
        self.assertEqual(ctx.exception.column, 4)

    def test_unfinished_word_reports_a_real_position(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_ribbon('tw(1,')
        self.assertGreaterEqual(ctx.exception.line, 1)
        self.assertGreaterEqual(ctx.exception.column, 1)

    def test_twists_are_rejected_in_plain_braids(self):
        with self.assertRaises(TermSyntaxError):
            parse_braid('tw(1) ')


class BraidSerializerTests(SimpleTestCase):

    def test_word_is_parsed(self):
        serializer = BraidWordSerializer(data={'word': "s2 s1'", 'strands': 4})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), _word(4, 2, -1))

    def test_bad_word_is_reported(self):
        serializer = BraidWordSerializer(data={'word': 's9', 'strands': 3})
        self.assertFalse(serializer.is_valid())
        self.assertIn('word', serializer.errors)

    def test_normal_form_dump(self):
        data = NormalFormSerializer(_word(3, 1, 2, 1)).data
        self.assertEqual(data['infimum'], 1)
        self.assertEqual(data['factors'], [])


class WordProblemTests(SimpleTestCase):

    def test_suite_passes_on_sampled_words(self):
        report = check_word_problem(max_strands=4, max_length=8, samples=30, seed=5)
        self.assertTrue(report.passed, report.first_failure)
        self.assertGreaterEqual(report.checked, 30 * 5)

    def test_relations_need_three_strands(self):
        report = WordProblemChecker(max_strands=2, samples=10, seed=1).relations()
        self.assertEqual(report.checked, 0)

    def test_random_words_stay_on_their_strands(self):
        rng = random.Random(3)
        self.assertEqual(random_word(rng, 1), BraidWord.identity(1))
        for _ in range(20):
            w = random_word(rng, 4, max_length=6)
            self.assertLessEqual(len(w), 6)
            self.assertTrue(all(1 <= abs(letter) <= 3 for letter in w.letters))
