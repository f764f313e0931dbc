import json
import random
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework.test import APIClient

from cli.services import (
    MONOTONE, PAIRS, SPANS, Term, arity, compose_terms, interpret, morphisms_equal, parse,
    print_term, random_term, run_enum, run_eq, run_interp, run_nf,
)
from cli.services import runner
from cli.tasks import run_suite
from composites.services import CompositeMorphism
from crossed.services import CrossedFamily
from groups.services import GroupTuple, builtin_group
from ordmaps.services import MULT_MAP, OrderedMap
from propcalc import celery_app
from semantics.serializers import builtin_model
from utils.constants import BRAID, HYPEROCTAHEDRAL, RIBBON, SYMMETRIC
from utils.helpers import CheckReport
from utils.validators import InvalidDataError, TermArityError, TermSyntaxError


def _family(tag=SYMMETRIC, group='trivial'):
    return CrossedFamily(tag, builtin_group(group))


class ParseTests(SimpleTestCase):

    def test_mult_is_a_generator(self):
        self.assertEqual(parse('m'), Term('m'))
        self.assertEqual(arity(parse('m')), (2, 1))

    def test_associator_side_has_arity_three_to_one(self):
        self.assertEqual(arity(parse('(id(1)+m);m')), (3, 1))

    def test_tensor_binds_tighter_than_composition(self):
        self.assertEqual(parse('m+id(1);m'), parse('(m+id(1));m'))

    def test_ill_typed_composite_names_the_subterm(self):
        with self.assertRaises(TermArityError) as ctx:
            parse('m;u')
        self.assertEqual(ctx.exception.subterm, 'm;u')

    def test_syntax_errors_carry_a_position(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse('m;;')
        self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 3))
        with self.assertRaises(TermSyntaxError) as ctx:
            parse('m;\n)')
        self.assertEqual(ctx.exception.line, 2)

    def test_op_of_op_is_rejected(self):
        with self.assertRaises(TermSyntaxError):
            parse('op(op(m))')

    def test_generator_arities(self):
        self.assertEqual(arity(parse('s(2)')), (3, 3))
        self.assertEqual(arity(parse('f(1)')), (1, 1))
        self.assertEqual(arity(parse('tw(2)')), (2, 2))
        self.assertEqual(arity(parse('g(e,g,e)')), (3, 3))
        self.assertEqual(arity(parse('g()')), (0, 0))
        self.assertEqual(arity(parse('op(m)')), (1, 2))
        self.assertEqual(arity(parse('span(m; id(2); id(2))')), (1, 2))

    def test_wire_indices_start_at_one(self):
        with self.assertRaises(TermArityError):
            parse('s(0)')

    def test_span_legs_need_a_common_middle(self):
        with self.assertRaises(TermArityError):
            parse('span(m; id(1); m)')

    def test_print_then_parse_is_the_identity(self):
        rng = random.Random(11)
        checked = 0
        for _ in range(400):
            term = random_term(rng, depth=4, labels=('e', 'g'))
            try:
                arity(term)
            except TermArityError:
                continue
            checked += 1
            self.assertEqual(parse(print_term(term)), term, print_term(term))
        self.assertGreater(checked, 20)

    def test_compose_terms_runs_the_first_term_first(self):
        composite = compose_terms([parse('m+id(1)'), parse('m')])
        self.assertEqual(composite, parse('(m+id(1));m'))
        with self.assertRaises(TermArityError):
            compose_terms([parse('m'), parse('m')])


class InterpretTests(SimpleTestCase):

    def test_monotone_reading(self):
        self.assertEqual(interpret(parse('m'), MONOTONE), MULT_MAP)
        self.assertEqual(interpret(parse('(m+id(1));m'), MONOTONE), OrderedMap(3, 1, (0, 0, 0)))

    def test_elements_are_not_monotone(self):
        with self.assertRaises(TermArityError):
            interpret(parse('s(1)'), MONOTONE)

    def test_op_lives_in_spans_only(self):
        with self.assertRaises(TermArityError):
            interpret(parse('op(m)'), PAIRS, _family())
        comult = interpret(parse('op(m)'), SPANS, _family())
        self.assertEqual((comult.domain, comult.codomain), (1, 2))

    def test_crossing_before_mult_is_kept_in_pairs(self):
        family = _family()
        f = interpret(parse('s(1);m'), PAIRS, family)
        g = interpret(parse('m'), PAIRS, family)
        self.assertFalse(morphisms_equal(PAIRS, f, g))
        self.assertEqual(f.elt, family.crossing(2, 1))

    def test_associativity_holds_in_every_category(self):
        for category in (MONOTONE, PAIRS, SPANS):
            family = None if category == MONOTONE else _family(group='c2')
            f = interpret(parse('(m+id(1));m'), category, family)
            g = interpret(parse('(id(1)+m);m'), category, family)
            self.assertTrue(morphisms_equal(category, f, g), category)

    def test_labels_are_read_in_the_family_group(self):
        family = _family(group='c2')
        pair = interpret(parse('g(e,g)'), PAIRS, family)
        self.assertEqual(pair.elt, family.from_labels(GroupTuple.from_names(family.group, ('e', 'g'))))
        with self.assertRaises(TermArityError):
            interpret(parse('g(x)'), PAIRS, family)

    def test_explicit_span_of_the_mult_is_the_comult(self):
        family = _family()
        explicit = interpret(parse('span(m; id(2); id(2))'), SPANS, family)
        self.assertTrue(morphisms_equal(SPANS, explicit, interpret(parse('op(m)'), SPANS, family)))

    def test_flags_and_twists_need_their_families(self):
        self.assertEqual(interpret(parse('f(1)'), PAIRS, _family(HYPEROCTAHEDRAL)).domain, 1)
        self.assertEqual(interpret(parse('tw(1)'), PAIRS, _family(RIBBON)).domain, 1)

    def test_unknown_category_is_rejected(self):
        with self.assertRaises(InvalidDataError):
            interpret(parse('m'), 'gf', _family())

    def test_spans_normalize_to_composites(self):
        self.assertIsInstance(interpret(parse('m;op(m)'), SPANS, _family()), CompositeMorphism)


class RunnerTests(SimpleTestCase):

    def test_nf_reports_the_arity(self):
        payload, ok = run_nf('(id(1)+m);m', MONOTONE, None)
        self.assertTrue(ok)
        self.assertEqual((payload['domain'], payload['codomain']), (3, 1))
        self.assertEqual(payload['normal_form']['values'], [1, 1, 1])

    def test_eq_of_the_two_bracketings(self):
        payload, ok = run_eq('(m+id(1));m', '(id(1)+m);m', SPANS, _family())
        self.assertTrue(ok)
        self.assertTrue(payload['equal'])
        self.assertEqual(payload['left'], payload['right'])

    def test_enum_matches_the_closed_form(self):
        payload, ok = run_enum(PAIRS, _family(group='c2'), 2, 1)
        self.assertTrue(ok)
        self.assertEqual(payload['count'], 8)
        self.assertEqual(payload['expected'], 8)

    def test_enum_counts_flags(self):
        payload, ok = run_enum(PAIRS, _family(HYPEROCTAHEDRAL), 2, 2, list_items=True)
        self.assertTrue(ok)
        self.assertEqual(payload['count'], 3 * 2 * 4)
        self.assertEqual(len(payload['morphisms']), payload['count'])

    def test_enum_of_gf_and_gfas(self):
        for category in ('gf', 'gfas', MONOTONE):
            payload, ok = run_enum(category, _family(group='c2'), 2, 2)
            self.assertTrue(ok, payload)

    def test_braid_hom_sets_are_infinite(self):
        with self.assertRaises(InvalidDataError):
            run_enum(PAIRS, _family(BRAID), 1, 1)

    def test_interp_of_mult_is_the_mult_matrix(self):
        model = builtin_model('k[c2]')
        payload, _ = run_interp('m', model)
        self.assertEqual((payload['rows'], payload['cols']), (2, 4))
        self.assertEqual(payload['matrix'], model.mult.tolist())

    def test_braid_suites_default_to_their_own_sample_counts(self):
        with mock.patch('cli.services.runner.check_word_problem', return_value=CheckReport('w')) as words, \
                mock.patch('cli.services.runner.check_crossed_identities', return_value=CheckReport('c')) as crossed, \
                mock.patch('cli.services.runner.check_ribbon', return_value=CheckReport('r')):
            runner.run_suite('braid', max_n=2)
            runner.run_suite('ribbon', max_n=2, model=builtin_model('k[c2]'))
            runner.run_suite('crossed', RIBBON, max_n=2)
            runner.run_suite('crossed', SYMMETRIC, max_n=2)
        self.assertEqual(words.call_args.args[:3], (5, 12, 1000))
        self.assertEqual([call.args[2] for call in crossed.call_args_list], [500, 500, 500, None])

    def test_given_samples_override_the_braid_defaults(self):
        with mock.patch('cli.services.runner.check_word_problem', return_value=CheckReport('w')) as words, \
                mock.patch('cli.services.runner.check_crossed_identities', return_value=CheckReport('c')) as crossed:
            runner.run_suite('braid', max_n=2, samples=7)
        self.assertEqual(words.call_args.args[2], 7)
        self.assertEqual(crossed.call_args.args[2], 7)


class CommandTests(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command('propcalc', *args, stdout=out)
        return json.loads(out.getvalue())

    def test_eq_of_associativity(self):
        payload = self.call('eq', '(m+id(1));m', '(id(1)+m);m', '--category', 'd')
        self.assertTrue(payload['equal'])

    def test_unequal_terms_exit_with_one(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('eq', 'm', 's(1);m', '--category', 'dpg')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_bad_terms_exit_with_two(self):
        for args in (('nf', 'm;;'), ('nf', 'm;u'), ('nf', 'g(x)', '--group', 'c2'), ('nf', 'm', '--group', 'c9')):
            with self.assertRaises(CommandError) as ctx:
                self.call(*args)
            self.assertEqual(ctx.exception.returncode, 2, args)

    def test_enum_dpg_over_c2(self):
        payload = self.call('enum', '--cat', 'dpg', '--family', 'symmetric', '--group', 'c2', '--n', '2', '--m', '1')
        self.assertEqual(payload['count'], 8)

    def test_compose_chains_terms(self):
        payload = self.call('compose', 'm+id(1)', 'm', '--category', 'd')
        self.assertEqual(payload['term'], 'm+id(1);m')

    def test_crossed_suite_for_braids_passes(self):
        payload = self.call('check', '--suite', 'crossed', '--family', 'braid', '--max-n', '2', '--samples', '10')
        self.assertTrue(payload['passed'])
        self.assertGreater(payload['checked'], 0)

    def test_semantic_suites_pass_on_the_default_model(self):
        for suite in ('semantics', 'hyperoctahedral'):
            payload = self.call('check', '--suite', suite, '--max-n', '2', '--samples', '3', '--seed', '1')
            self.assertTrue(payload['passed'], payload['first_failure'])

    def test_seeded_runs_are_byte_identical(self):
        args = ('check', '--suite', 'rewrite', '--max-n', '2', '--samples', '10', '--seed', '7')
        outputs = []
        for _ in range(2):
            out = StringIO()
            call_command('propcalc', *args, stdout=out)
            outputs.append(out.getvalue())
        self.assertEqual(outputs[0], outputs[1])

    def test_interp_with_a_builtin_model(self):
        payload = self.call('interp', 'u', '--model', 'k[c3]')
        self.assertEqual((payload['rows'], payload['cols']), (3, 1))

    def test_pretty_output_is_indented(self):
        out = StringIO()
        call_command('propcalc', '--pretty', 'nf', 'm', '--category', 'd', stdout=out)
        self.assertIn('\n  ', out.getvalue())


class ApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_normalize(self):
        response = self.client.post('/api/v1/terms/normalize/', {'term': 'm', 'category': 'd'}, format='json')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data['normal_form']['values'], [1, 1])

    def test_ill_typed_terms_are_bad_requests(self):
        response = self.client.post('/api/v1/terms/normalize/', {'term': 'm;u'}, format='json')
        self.assertEqual(response.status_code, 400)
        self.assertIn('error', response.data)

    def test_equal(self):
        response = self.client.post(
            '/api/v1/terms/equal/',
            {'left': '(m+id(1));m', 'right': '(id(1)+m);m', 'group': 'c2'},
            format='json',
        )
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.data['equal'])

    def test_suite_runs_eagerly(self):
        response = self.client.post(
            '/api/v1/suites/',
            {'suite': 'crossed', 'family': 'braid', 'max_n': 2, 'samples': 5, 'seed': 1},
            format='json',
        )
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.data['passed'])

    def test_unknown_suite_is_rejected(self):
        response = self.client.post('/api/v1/suites/', {'suite': 'nope'}, format='json')
        self.assertEqual(response.status_code, 400)


class TaskTests(SimpleTestCase):

    def test_suite_task_returns_the_report(self):
        report = run_suite('iso', group='c2', max_n=2, samples=5, seed=2)
        self.assertTrue(report['passed'])
        self.assertIn('checked', report)

    def test_failures_inside_the_task_are_reported(self):
        report = run_suite('nope')
        self.assertFalse(report['passed'])
        self.assertIn('error', report)

    def test_suite_task_is_registered_with_the_project_app(self):
        self.assertEqual(run_suite.name, 'cli.tasks.run_suite')
        self.assertIn(run_suite.name, celery_app.tasks)
