import itertools
import random

from django.test import SimpleTestCase

from groups.serializers import GroupSerializer, LabelledPermutationSerializer, resolve_group
from groups.services import (
    FiniteGroup, GroupTuple, LabelledPermutation, builtin_group, conjugation_action,
    cyclic_group, direct_product, enumerate_labelled_permutations,
    labelled_perm_compose, perm_compose, skeletal_relabel, tuple_act,
)
from utils.validators import ArityError, GroupMismatchError, InvalidDataError


def _tuple(group, *names):
    return GroupTuple.from_names(group, names)


class FiniteGroupTests(SimpleTestCase):

    def test_builtin_groups_have_expected_orders(self):
        self.assertEqual(builtin_group('trivial').order, 1)
        self.assertEqual(builtin_group('c2').order, 2)
        self.assertEqual(builtin_group('c3').order, 3)
        self.assertEqual(builtin_group('s3').order, 6)

    def test_inverse_and_identity_are_derived(self):
        s3 = builtin_group('s3')
        for a in s3.elements():
            self.assertEqual(s3.mul(a, s3.inv(a)), s3.identity)
        self.assertEqual(s3.name_of(s3.identity), '123')

    def test_s3_is_not_abelian(self):
        s3 = builtin_group('s3')
        a, b = s3.element('213'), s3.element('132')
        self.assertNotEqual(s3.mul(a, b), s3.mul(b, a))

    def test_non_latin_table_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            FiniteGroup('bad', ((0, 1), (0, 1)))

    def test_non_associative_table_is_rejected(self):
        # Latin square with identity 0 that is not associative
        table = (
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        )
        with self.assertRaises(InvalidDataError):
            FiniteGroup('loop', table)

    def test_direct_product_order(self):
        self.assertEqual(direct_product(cyclic_group(2), cyclic_group(3)).order, 6)

    def test_conjugation_action_of_c2_on_s3(self):
        s3 = builtin_group('s3')
        action = conjugation_action(builtin_group('c2'), s3, s3.element('213'))
        g = 1
        self.assertEqual(action.apply(g, s3.element('213')), s3.element('213'))
        self.assertEqual(action.apply(g, s3.element('132')), s3.element('321'))


class TupleActTests(SimpleTestCase):

    def setUp(self):
        self.c3 = builtin_group('c3')

    def test_identity_permutation_fixes_tuple(self):
        x = _tuple(self.c3, 'e', 'g', 'g2')
        self.assertEqual(tuple_act((0, 1, 2), x), x)

    def test_transposition_swaps_entries(self):
        x = _tuple(self.c3, 'e', 'g')
        self.assertEqual(tuple_act((1, 0), x), _tuple(self.c3, 'g', 'e'))

    def test_three_cycle_moves_each_entry_forward(self):
        # σ: 1→2→3→1, (a,b,c) ↦ (c,a,b)
        x = _tuple(self.c3, 'e', 'g', 'g2')
        self.assertEqual(tuple_act((1, 2, 0), x), _tuple(self.c3, 'g2', 'e', 'g'))

    def test_length_mismatch_raises(self):
        with self.assertRaises(ArityError):
            tuple_act((0, 1), _tuple(self.c3, 'e'))

    def test_is_a_left_action(self):
        for group_name, n in (('s3', 3), ('c2', 4)):
            group = builtin_group(group_name)
            perms = list(itertools.permutations(range(n)))
            for entries in itertools.product(group.elements(), repeat=n):
                x = GroupTuple(group, entries)
                for sigma, tau in itertools.product(perms, repeat=2):
                    self.assertEqual(
                        tuple_act(perm_compose(sigma, tau), x),
                        tuple_act(sigma, tuple_act(tau, x)),
                    )


class LabelledPermutationTests(SimpleTestCase):

    def test_identity_is_neutral(self):
        c2 = builtin_group('c2')
        p = LabelledPermutation(_tuple(c2, 'g', 'e'), (1, 0))
        identity = LabelledPermutation.identity(c2, 2)
        self.assertEqual(labelled_perm_compose(identity, p), p)
        self.assertEqual(labelled_perm_compose(p, identity), p)

    def test_semidirect_formula(self):
        # ((a,b),(1 2)) ∘ ((c,d),(1 2)) = ((a·d, b·c), id) in S3 labels
        s3 = builtin_group('s3')
        a, b, c, d = '213', '132', '231', '312'
        p = LabelledPermutation(_tuple(s3, a, b), (1, 0))
        q = LabelledPermutation(_tuple(s3, c, d), (1, 0))
        expected_labels = GroupTuple(s3, (
            s3.mul(s3.element(a), s3.element(d)),
            s3.mul(s3.element(b), s3.element(c)),
        ))
        self.assertEqual(
            labelled_perm_compose(p, q),
            LabelledPermutation(expected_labels, (0, 1)),
        )

    def test_group_axioms_exhaustively(self):
        for group_name in ('c2', 'c3'):
            group = builtin_group(group_name)
            for n in range(3):
                elements = list(enumerate_labelled_permutations(group, n))
                identity = LabelledPermutation.identity(group, n)
                for p in elements:
                    self.assertEqual(labelled_perm_compose(p, p.inverse()), identity)
                    self.assertEqual(labelled_perm_compose(p.inverse(), p), identity)
                if n == 2 and group_name == 'c3':
                    continue
                for p, q, r in itertools.product(elements, repeat=3):
                    self.assertEqual(
                        labelled_perm_compose(labelled_perm_compose(p, q), r),
                        labelled_perm_compose(p, labelled_perm_compose(q, r)),
                    )

    def test_associativity_sampled_over_s3_and_arity_three(self):
        rng = random.Random(7)
        for group_name in ('c2', 'c3', 's3'):
            group = builtin_group(group_name)
            elements = list(enumerate_labelled_permutations(group, 3))
            for _ in range(300):
                p, q, r = (rng.choice(elements) for _ in range(3))
                self.assertEqual(
                    labelled_perm_compose(labelled_perm_compose(p, q), r),
                    labelled_perm_compose(p, labelled_perm_compose(q, r)),
                )

    def test_semidirect_product_orders(self):
        for group_name in ('c2', 'c3', 's3'):
            group = builtin_group(group_name)
            for n in range(4):
                count = sum(1 for _ in enumerate_labelled_permutations(group, n))
                self.assertEqual(count, group.order ** n * len(list(itertools.permutations(range(n)))))

    def test_hyperoctahedral_h2_has_eight_elements_and_is_a_group(self):
        trivial = builtin_group('trivial')
        elements = list(enumerate_labelled_permutations(trivial, 2, hyperoctahedral=True))
        self.assertEqual(len(elements), 8)
        closure = {labelled_perm_compose(p, q) for p in elements for q in elements}
        self.assertEqual(closure, set(elements))
        for p, q, r in itertools.product(elements, repeat=3):
            self.assertEqual(
                labelled_perm_compose(labelled_perm_compose(p, q), r),
                labelled_perm_compose(p, labelled_perm_compose(q, r)),
            )

    def test_hyperoctahedral_flags_move_with_the_permutation(self):
        trivial = builtin_group('trivial')
        p = LabelledPermutation(GroupTuple.identity(trivial, 2), (1, 0), (1, 0))
        square = labelled_perm_compose(p, p)
        self.assertEqual(square.perm, (0, 1))
        self.assertEqual(square.flags, (1, 1))

    def test_mixing_flag_modes_raises(self):
        c2 = builtin_group('c2')
        with self.assertRaises(GroupMismatchError):
            labelled_perm_compose(
                LabelledPermutation.identity(c2, 1),
                LabelledPermutation.identity(c2, 1, hyperoctahedral=True),
            )


class SkeletalRelabelTests(SimpleTestCase):

    def setUp(self):
        self.c3 = builtin_group('c3')

    def test_identity_map(self):
        x = _tuple(self.c3, 'g', 'g2')
        self.assertEqual(skeletal_relabel((0, 1), x), x)

    def test_constant_map_copies_the_label(self):
        self.assertEqual(skeletal_relabel((0, 0), _tuple(self.c3, 'g')), _tuple(self.c3, 'g', 'g'))

    def test_empty_domain(self):
        self.assertEqual(len(skeletal_relabel((), _tuple(self.c3, 'g', 'e'))), 0)

    def test_out_of_range_value_raises(self):
        with self.assertRaises(InvalidDataError):
            skeletal_relabel((2,), _tuple(self.c3, 'g', 'e'))

    def test_contravariant_functoriality(self):
        x = _tuple(self.c3, 'e', 'g', 'g2')
        for f in itertools.product(range(3), repeat=2):
            for g in itertools.product(range(2), repeat=3):
                f_after_g = tuple(f[v] for v in g)
                self.assertEqual(
                    skeletal_relabel(f_after_g, x),
                    skeletal_relabel(g, skeletal_relabel(f, x)),
                )


class GroupSerializerTests(SimpleTestCase):

    def test_flat_table_is_accepted(self):
        serializer = GroupSerializer(data={
            'name': 'c2', 'order': 2, 'table': [0, 1, 1, 0], 'names': ['e', 'g'],
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), cyclic_group(2))

    def test_nested_table_is_accepted(self):
        serializer = GroupSerializer(data={'order': 2, 'table': [[0, 1], [1, 0]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_bad_table_is_reported(self):
        serializer = GroupSerializer(data={'order': 2, 'table': [0, 0, 1, 1]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('table', serializer.errors)

    def test_representation_round_trips(self):
        s3 = builtin_group('s3')
        data = GroupSerializer(s3).data
        self.assertEqual(resolve_group(dict(data)), s3)

    def test_labelled_permutation_json(self):
        c2 = builtin_group('c2')
        serializer = LabelledPermutationSerializer(
            data={'labels': ['g', 'e'], 'perm': [2, 1], 'flags': '-+'},
            context={'group': c2},
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        element = serializer.save()
        self.assertEqual(element.perm, (1, 0))
        self.assertEqual(element.flags, (1, 0))
        self.assertEqual(LabelledPermutationSerializer(element).data['flags'], '-+')
