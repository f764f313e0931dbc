from dataclasses import replace

import numpy as np
from django.test import SimpleTestCase, override_settings
from rest_framework import serializers

from composites.services import (
    CompositeMorphism, DJGMorphism, comult, counit, mult, span_compose, unit,
)
from crossed.services import CrossedFamily
from groups.services import builtin_group
from ncsets.services import NCSetMap, forget, to_pair
from ordmaps.services import MULT_MAP, UNIT_MAP
from semantics.serializers import BimonoidModelSerializer, builtin_model, resolve_model
from semantics.services import (
    FunctorialityChecker, ModelLaws, braiding_laws, check_functoriality, check_involution,
    check_rewrite_soundness, check_ribbon, eval_djg, eval_element, eval_mono, eval_op_djg,
    eval_op_mono, eval_span_pair, evaluate, exterior_model, group_algebra_model, inverse_mod,
    is_cocommutative, is_commutative, matmul, mutate_comult, permutation_matrix, sign_characters,
    swap_matrix, trivial_model, verify_model, with_sign_braiding, with_sign_twist,
)
from utils.constants import HYPEROCTAHEDRAL, SYMMETRIC
from utils.validators import ArityError, EvaluationSizeError, InvalidDataError

P = 5


def _k(name):
    return group_algebra_model(P, builtin_group(name))


class LinalgTests(SimpleTestCase):

    def test_inverse_mod_inverts(self):
        matrix = np.array([[2, 1], [1, 1]], dtype=np.int64)
        self.assertTrue(np.array_equal(matmul(P, matrix, inverse_mod(P, matrix)), np.eye(2, dtype=np.int64)))

    def test_singular_matrix_has_no_inverse(self):
        with self.assertRaises(InvalidDataError):
            inverse_mod(P, np.array([[1, 2], [2, 4]], dtype=np.int64))

    def test_cyclic_permutation_is_two_swaps(self):
        swap, eye = swap_matrix(P, 2), np.eye(2, dtype=np.int64)
        expected = matmul(P, np.kron(eye, swap), np.kron(swap, eye))
        self.assertTrue(np.array_equal(permutation_matrix(P, 2, (2, 0, 1)), expected))

    def test_signed_swap_negates_odd_pairs(self):
        swap = swap_matrix(P, 2, parity=(0, 1))
        self.assertEqual(swap[3, 3], P - 1)
        self.assertEqual(swap[1, 2], 1)

    def test_matmul_rejects_mismatched_shapes(self):
        with self.assertRaises(ArityError):
            matmul(P, np.eye(2, dtype=np.int64), np.eye(3, dtype=np.int64))


class ModelTests(SimpleTestCase):

    def setUp(self):
        self.s3 = builtin_group('s3')
        self.conjugated = builtin_model('k[s3]:c2', P)

    def test_group_algebras_are_models(self):
        for model in (_k('c2'), _k('s3'), self.conjugated):
            report = verify_model(model)
            self.assertTrue(report.passed, report.first_failure)

    def test_group_algebra_structure(self):
        model = _k('c2')
        self.assertTrue(is_commutative(model))
        self.assertTrue(is_cocommutative(model))
        self.assertFalse(is_commutative(_k('s3')))
        self.assertTrue(is_cocommutative(_k('s3')))

    def test_involution_is_an_anti_automorphism(self):
        report = ModelLaws(self.conjugated).involution()
        self.assertTrue(report.passed, report.first_failure)
        self.assertGreater(report.checked, 0)

    def test_mutated_comult_is_detected(self):
        report = verify_model(mutate_comult(_k('c2')))
        self.assertFalse(report.passed)
        laws = {failure['law'] for failure in report.failures}
        self.assertIn('coassociativity', laws)

    def test_exterior_model_is_a_super_bimonoid(self):
        model = exterior_model(P)
        self.assertTrue(model.signed)
        report = verify_model(model)
        self.assertTrue(report.passed, report.first_failure)

    def test_sign_braiding_on_k_c2_is_rejected(self):
        report = verify_model(with_sign_braiding(_k('c2'), (0, 1)))
        self.assertFalse(report.passed)

    def test_sign_characters_of_s3(self):
        characters = sign_characters(self.s3)
        self.assertEqual(len(characters), 2)
        self.assertIn((1,) * 6, characters)

    def test_sign_twist_is_a_monoid_map_only(self):
        sign = next(c for c in sign_characters(self.s3) if -1 in c)
        model = with_sign_twist(_k('s3'), sign)
        laws = ModelLaws(model)
        self.assertTrue(laws.twist().passed, laws.twist().first_failure)
        self.assertFalse(laws.twist_comonoid().passed)

    def test_bad_shapes_are_rejected(self):
        model = _k('c2')
        with self.assertRaises(ArityError):
            with_sign_twist(model, (1, 1, 1))
        with self.assertRaises(InvalidDataError):
            group_algebra_model(4, builtin_group('c2'))


class EvaluationTests(SimpleTestCase):

    def setUp(self):
        self.model = _k('c2')
        self.family = CrossedFamily(SYMMETRIC, self.model.group)

    def test_identity_evaluates_to_the_identity(self):
        matrix = evaluate(self.model, DJGMorphism.identity(self.family, 2))
        self.assertTrue(np.array_equal(matrix, np.eye(4, dtype=np.int64)))

    def test_crossing_is_the_swap(self):
        matrix = eval_element(self.model, self.family, self.family.crossing(2, 1))
        self.assertTrue(np.array_equal(matrix, swap_matrix(P, 2)))

    def test_generators_are_the_structure_maps(self):
        self.assertTrue(np.array_equal(eval_mono(self.model, MULT_MAP), self.model.mult))
        self.assertTrue(np.array_equal(eval_mono(self.model, UNIT_MAP), self.model.unit))
        self.assertTrue(np.array_equal(eval_op_mono(self.model, MULT_MAP), self.model.comult))
        self.assertTrue(np.array_equal(evaluate(self.model, counit(self.family)), self.model.counit))

    def test_mult_after_comult_squares(self):
        matrix = evaluate(self.model, span_compose(mult(self.family), comult(self.family)))
        # h·h = e in C2
        self.assertTrue(np.array_equal(matrix, np.array([[1, 1], [0, 0]], dtype=np.int64)))

    def test_unit_then_counit_is_one(self):
        matrix = evaluate(self.model, span_compose(counit(self.family), unit(self.family)))
        self.assertTrue(np.array_equal(matrix, np.ones((1, 1), dtype=np.int64)))

    def test_trivial_model_sends_everything_to_one(self):
        model = trivial_model(P)
        family = CrossedFamily(SYMMETRIC, model.group)
        for morphism in (mult(family), comult(family), unit(family), counit(family)):
            self.assertTrue(np.array_equal(evaluate(model, morphism), np.ones((1, 1), dtype=np.int64)))

    def test_labelled_set_maps_evaluate_through_their_pair(self):
        model = builtin_model('k[s3]:c2', P)
        c2 = model.group
        f = NCSetMap(c2, 2, 1, (((1, 1), (0, 0)),))
        self.assertTrue(np.array_equal(evaluate(model, f), eval_djg(model, to_pair(f))))

    def test_unordered_fibers_need_commutativity(self):
        model = builtin_model('k[s3]:c2', P)
        f = forget(NCSetMap(model.group, 2, 1, (((0, 0), (1, 0)),)))
        with self.assertRaises(InvalidDataError):
            evaluate(model, f)

    def test_flags_apply_the_involution(self):
        model = exterior_model(P)
        family = CrossedFamily(HYPEROCTAHEDRAL, model.group)
        self.assertTrue(np.array_equal(eval_element(model, family, family.flip(1, 0)), model.involution))
        with self.assertRaises(InvalidDataError):
            eval_element(replace(model, involution=None), family, family.flip(1, 0))

    def test_unknown_objects_are_rejected(self):
        with self.assertRaises(InvalidDataError):
            evaluate(self.model, 'm')

    @override_settings(PROPCALC={'MAX_TENSOR_ENTRIES': 10})
    def test_oversized_evaluation_is_refused(self):
        with self.assertRaises(EvaluationSizeError):
            evaluate(self.model, CompositeMorphism.identity(self.family, 3))


class FunctorialityTests(SimpleTestCase):

    def setUp(self):
        self.model = builtin_model('k[s3]:c2', P)

    def test_equivariant_categories(self):
        for category in ('djg', 'span', 'gfas'):
            report = check_functoriality(self.model, SYMMETRIC, category, samples=6, max_arity=3, seed=1)
            self.assertTrue(report.passed, report.first_failure)
            self.assertGreater(report.checked, 0)

    def test_gf_needs_a_commutative_model(self):
        with self.assertRaises(InvalidDataError):
            check_functoriality(self.model, SYMMETRIC, 'gf', samples=2)

    def test_gf_on_a_commutative_model(self):
        report = check_functoriality(_k('c2'), SYMMETRIC, 'gf', samples=8, max_arity=3, seed=2)
        self.assertTrue(report.passed, report.first_failure)

    def test_span_classes(self):
        report = check_functoriality(self.model, SYMMETRIC, 'span_class', samples=6, max_arity=3, seed=3)
        self.assertTrue(report.passed, report.first_failure)
        report = check_functoriality(
            _k('c2'), SYMMETRIC, 'span_class', samples=6, max_arity=3, seed=3, variant='VV',
        )
        self.assertTrue(report.passed, report.first_failure)

    def test_unknown_category_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            check_functoriality(self.model, SYMMETRIC, 'cospan')

    def test_exterior_model_under_the_sign_braiding(self):
        model = exterior_model(P)
        report = braiding_laws(model, samples=6, seed=4)
        self.assertTrue(report.passed, report.first_failure)
        for category in ('djg', 'span'):
            report = check_functoriality(model, SYMMETRIC, category, samples=6, max_arity=3, seed=4)
            self.assertTrue(report.passed, report.first_failure)

    def test_hyperoctahedral_elements_use_the_involution(self):
        report = check_involution(self.model, samples=4, seed=5, max_arity=3)
        self.assertTrue(report.passed, report.first_failure)

    def test_ribbon_twist_by_a_sign_character(self):
        sign = next(c for c in sign_characters(builtin_group('s3')) if -1 in c)
        model = with_sign_twist(_k('s3'), sign)
        report = check_ribbon(model, samples=4, seed=6, max_arity=3)
        self.assertTrue(report.passed, report.first_failure)

    def test_every_requested_sample_is_evaluated(self):
        family = CrossedFamily(SYMMETRIC, self.model.group)
        checker = FunctorialityChecker(self.model, family, samples=12, max_arity=3, seed=7)
        report = checker.check('span')
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(checker.drawn, 12)

    def test_too_few_evaluable_samples_fail_the_suite(self):
        model = _k('c2')
        checker = FunctorialityChecker(model, CrossedFamily(SYMMETRIC, model.group), samples=3, seed=1)
        with override_settings(PROPCALC={'MAX_TENSOR_ENTRIES': 0}):
            report = checker.check('djg')
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure['law'], 'sample count')
        self.assertEqual(checker.drawn, 0)


class RewriteSoundnessTests(SimpleTestCase):

    def test_rules_hold_in_group_algebras(self):
        for model in (_k('c2'), builtin_model('k[s3]:c2', P)):
            report = check_rewrite_soundness(model, SYMMETRIC)
            self.assertTrue(report.passed, report.first_failure)

    def test_flagged_rules_hold_in_the_conjugation_model(self):
        model = builtin_model('k[s3]:c2', P)
        report = check_rewrite_soundness(model, HYPEROCTAHEDRAL, rules=('mm', 'elements'))
        self.assertTrue(report.passed, report.first_failure)

    def test_span_pair_matches_the_multiplied_legs(self):
        model = _k('c2')
        family = CrossedFamily(SYMMETRIC, model.group)
        beta = DJGMorphism.from_mono(family, MULT_MAP)
        alpha = DJGMorphism.from_elt(family, family.crossing(2, 1))
        expected = matmul(P, eval_djg(model, alpha), eval_op_djg(model, beta))
        self.assertTrue(np.array_equal(eval_span_pair(model, beta, alpha), expected))

    def test_bimonoid_square_fails_for_a_mutated_comult(self):
        report = check_rewrite_soundness(mutate_comult(_k('c2')), SYMMETRIC, rules=('mm',))
        self.assertFalse(report.passed)

    def test_unknown_rule_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            check_rewrite_soundness(_k('c2'), SYMMETRIC, rules=('mx',))


class ModelSerializerTests(SimpleTestCase):

    def test_dump_and_reload(self):
        model = builtin_model('k[s3]:c2', P)
        data = BimonoidModelSerializer(model).data
        self.assertEqual(sorted(data['action']), ['e', 'g'])
        serializer = BimonoidModelSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        loaded = serializer.save()
        self.assertTrue(np.array_equal(loaded.mult, model.mult))
        self.assertTrue(np.array_equal(loaded.act(1), model.act(1)))
        self.assertTrue(np.array_equal(loaded.involution, model.involution))

    def test_missing_action_defaults_to_identity(self):
        serializer = BimonoidModelSerializer(data={
            'dim': 1, 'mult': [[1]], 'unit': [[1]], 'comult': [[1]], 'counit': [[1]], 'group': 'c2',
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        model = serializer.save()
        self.assertEqual(model.group.order, 2)
        self.assertTrue(np.array_equal(model.act(1), np.eye(1, dtype=np.int64)))

    def test_wrong_shapes_are_reported(self):
        serializer = BimonoidModelSerializer(data={
            'dim': 2, 'mult': [[1, 0]], 'unit': [[1], [0]], 'comult': [[1]], 'counit': [[1, 0]],
        })
        self.assertFalse(serializer.is_valid())

    def test_unknown_builtin_is_rejected(self):
        with self.assertRaises(serializers.ValidationError):
            resolve_model('k[d4]')
