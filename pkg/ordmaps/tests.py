import itertools
import math

from django.test import SimpleTestCase

from ordmaps.serializers import OrderedMapField, OrderedMapSerializer
from ordmaps.services import (
    ID, MULT, MULT_MAP, UNIT, UNIT_MAP, GeneratorWord, OrderedMap,
    compose_mono, decompose, enumerate_mono, identity_map, letters,
    parse_ordered_map, recompose, tensor_mono,
)
from utils.validators import ArityError, InvalidDataError


def _map(values, n, m):
    return OrderedMap(n, m, tuple(v - 1 for v in values))


class OrderedMapTests(SimpleTestCase):

    def test_non_monotone_values_are_rejected(self):
        with self.assertRaises(InvalidDataError):
            OrderedMap(2, 2, (1, 0))

    def test_out_of_range_value_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            OrderedMap(1, 1, (1,))

    def test_text_form(self):
        f = parse_ordered_map('[1,2,2]:3->2')
        self.assertEqual(f.values, (0, 1, 1))
        self.assertEqual(str(f), '[1,2,2]:3->2')
        self.assertEqual(parse_ordered_map('[]:0->3'), OrderedMap(0, 3, ()))

    def test_bad_text_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            parse_ordered_map('[1,2]:3->2')
        with self.assertRaises(InvalidDataError):
            parse_ordered_map('1,2')


class CompositionTests(SimpleTestCase):

    def test_identity_is_neutral(self):
        f = _map([1, 2, 2], 3, 2)
        self.assertEqual(compose_mono(identity_map(2), f), f)
        self.assertEqual(compose_mono(f, identity_map(3)), f)

    def test_mult_after_map(self):
        self.assertEqual(compose_mono(MULT_MAP, _map([1, 2, 2], 3, 2)), _map([1, 1, 1], 3, 1))

    def test_unit_then_map_has_empty_domain(self):
        result = compose_mono(_map([3], 1, 3), UNIT_MAP)
        self.assertEqual(result, OrderedMap(0, 3, ()))

    def test_boundary_mismatch_raises(self):
        with self.assertRaises(ArityError):
            compose_mono(MULT_MAP, identity_map(3))

    def test_associativity(self):
        maps = {(n, m): enumerate_mono(n, m) for n in range(4) for m in range(4)}
        for n, m, l, k in itertools.product(range(3), repeat=4):
            for f in maps[n, m]:
                for g in maps[m, l]:
                    for h in maps[l, k]:
                        self.assertEqual(
                            compose_mono(h, compose_mono(g, f)),
                            compose_mono(compose_mono(h, g), f),
                        )


class TensorTests(SimpleTestCase):

    def test_unit_object(self):
        f = _map([1, 2, 2], 3, 2)
        self.assertEqual(tensor_mono(f, identity_map(0)), f)
        self.assertEqual(tensor_mono(identity_map(0), f), f)

    def test_mult_tensor_mult(self):
        self.assertEqual(tensor_mono(MULT_MAP, MULT_MAP), _map([1, 1, 2, 2], 4, 2))

    def test_strict_associativity(self):
        samples = [MULT_MAP, UNIT_MAP, identity_map(1), _map([1, 3], 2, 3)]
        for f, g, h in itertools.product(samples, repeat=3):
            self.assertEqual(
                tensor_mono(tensor_mono(f, g), h),
                tensor_mono(f, tensor_mono(g, h)),
            )

    def test_interchange(self):
        maps = {(n, m): enumerate_mono(n, m) for n in range(3) for m in range(3)}
        arities = list(itertools.product(range(3), repeat=2))
        for (n1, m1), (n2, m2) in itertools.product(arities, repeat=2):
            for l1, l2 in itertools.product(range(3), repeat=2):
                for f1, g1 in itertools.product(maps[n1, m1], maps[m1, l1]):
                    for f2, g2 in itertools.product(maps[n2, m2], maps[m2, l2]):
                        self.assertEqual(
                            compose_mono(tensor_mono(g1, g2), tensor_mono(f1, f2)),
                            tensor_mono(compose_mono(g1, f1), compose_mono(g2, f2)),
                        )


class DecomposeTests(SimpleTestCase):

    def test_generator_is_its_own_word(self):
        self.assertEqual(decompose(MULT_MAP).layers, ((MULT,),))
        self.assertEqual(decompose(UNIT_MAP).layers, ((UNIT,),))

    def test_identity_has_empty_word(self):
        self.assertEqual(decompose(identity_map(3)).layers, ())

    def test_degeneracy_example(self):
        self.assertEqual(decompose(_map([1, 2, 2], 3, 2)).layers, ((ID, MULT),))

    def test_face_example(self):
        self.assertEqual(decompose(_map([2], 1, 2)).layers, ((UNIT, ID),))

    def test_degeneracies_come_before_faces(self):
        word = decompose(_map([1, 1, 3], 3, 3))
        self.assertEqual(word.layers, ((MULT, ID), (ID, UNIT, ID)))

    def test_long_fiber_brackets_to_the_left(self):
        word = decompose(_map([1, 1, 1], 3, 1))
        self.assertEqual(word.layers, ((MULT, ID), (MULT,)))

    def test_recomposition_is_exhaustive_identity(self):
        for n, m in itertools.product(range(6), repeat=2):
            for f in enumerate_mono(n, m):
                word = decompose(f)
                self.assertEqual(word.codomain, m)
                self.assertEqual(recompose(word), f)

    def test_letters_compose_to_the_map(self):
        for n, m in itertools.product(range(5), repeat=2):
            for f in enumerate_mono(n, m):
                result = identity_map(n)
                for letter in letters(decompose(f)):
                    result = compose_mono(letter.map, result)
                self.assertEqual(result, f)

    def test_letter_offsets(self):
        word = GeneratorWord(3, ((MULT, UNIT, ID),))
        found = [(letter.symbol, letter.offset) for letter in letters(word)]
        self.assertEqual(found, [(MULT, 0), (UNIT, 1)])

    def test_mismatched_layers_are_rejected(self):
        with self.assertRaises(ArityError):
            GeneratorWord(2, ((MULT,), (MULT,)))


class EnumerateTests(SimpleTestCase):

    def test_empty_domain_has_one_map(self):
        for m in range(4):
            self.assertEqual(len(enumerate_mono(0, m)), 1)

    def test_empty_codomain(self):
        self.assertEqual(enumerate_mono(2, 0), [])

    def test_small_cases(self):
        self.assertEqual(len(enumerate_mono(1, 3)), 3)
        self.assertEqual(
            [f.values for f in enumerate_mono(2, 2)],
            [(0, 0), (0, 1), (1, 1)],
        )

    def test_counts_match_stars_and_bars(self):
        for m in range(1, 6):
            for n in range(6):
                self.assertEqual(len(enumerate_mono(n, m)), math.comb(n + m - 1, n))
                self.assertEqual(len(set(enumerate_mono(n, m))), math.comb(n + m - 1, n))

    def test_negative_arity_raises(self):
        with self.assertRaises(InvalidDataError):
            enumerate_mono(-1, 2)


class OrderedMapSerializerTests(SimpleTestCase):

    def test_values_are_one_based(self):
        serializer = OrderedMapSerializer(data={'domain': 3, 'codomain': 2, 'values': [1, 2, 2]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        f = serializer.save()
        self.assertEqual(f.values, (0, 1, 1))
        self.assertEqual(OrderedMapSerializer(f).data['word'], 'id(1) + m')

    def test_non_monotone_values_are_reported(self):
        serializer = OrderedMapSerializer(data={'domain': 2, 'codomain': 2, 'values': [2, 1]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('values', serializer.errors)

    def test_text_field(self):
        field = OrderedMapField()
        self.assertEqual(field.to_internal_value('[1,1]:2->1'), MULT_MAP)
        self.assertEqual(field.to_representation(MULT_MAP), '[1,1]:2->1')
