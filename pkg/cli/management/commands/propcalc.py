# cli/management/commands/propcalc.py
import json
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from cli.services import (
    CATEGORIES, ENUM_CATEGORIES, SPANS, SUITES, run_check, run_compose, run_enum, run_eq,
    run_interp, run_nf,
)
from crossed.services import CrossedFamily
from groups.serializers import resolve_group
from semantics.serializers import resolve_model
from utils.constants import FAMILIES, SYMMETRIC
from utils.validators import PropcalcError

logger = logging.getLogger(__name__)

# exit codes
PROPERTY_FAILURE = 1
USAGE_ERROR = 2


class Command(BaseCommand):
    help = 'Normalize, compare, compose and enumerate morphisms; run verification suites; evaluate terms'

    def add_family_arguments(self, parser, group='trivial'):
        parser.add_argument('--family', choices=FAMILIES, default=SYMMETRIC, help='Crossed family of middle elements')
        parser.add_argument('--group', default=group, help='Label group: trivial, c2, c3, s3 or a JSON file')

    def add_arguments(self, parser):
        parser.add_argument('--pretty', action='store_true', help='Indented JSON')
        commands = parser.add_subparsers(dest='command', required=True)

        nf = commands.add_parser('nf', help='Normal form of a term')
        nf.add_argument('term')
        nf.add_argument('--category', choices=CATEGORIES, default=SPANS)
        self.add_family_arguments(nf)

        eq = commands.add_parser('eq', help='Decide equality of two terms; exit 1 when they differ')
        eq.add_argument('left')
        eq.add_argument('right')
        eq.add_argument('--category', choices=CATEGORIES, default=SPANS)
        self.add_family_arguments(eq)

        compose = commands.add_parser('compose', help='Compose terms left to right')
        compose.add_argument('terms', nargs='+')
        compose.add_argument('--category', choices=CATEGORIES, default=SPANS)
        self.add_family_arguments(compose)

        enum = commands.add_parser('enum', help='Enumerate a hom-set and compare with its closed form')
        enum.add_argument('--category', '--cat', choices=ENUM_CATEGORIES, default='dpg')
        enum.add_argument('--n', type=int, required=True)
        enum.add_argument('--m', type=int, required=True)
        enum.add_argument('--list', action='store_true', help='Also print every morphism')
        self.add_family_arguments(enum)

        check = commands.add_parser('check', help='Run a verification suite')
        check.add_argument('--suite', choices=SUITES, required=True)
        check.add_argument('--max-n', type=int, default=None)
        check.add_argument('--samples', type=int, default=None)
        check.add_argument('--seed', type=int, default=None)
        check.add_argument('--model', default=None, help='Model name or JSON file for semantic suites')
        self.add_family_arguments(check, group='c2')

        interp = commands.add_parser('interp', help='Evaluate a term against a matrix model')
        interp.add_argument('term')
        interp.add_argument('--model', required=True, help='Model name or JSON file')
        interp.add_argument('--category', choices=CATEGORIES, default=SPANS)
        interp.add_argument('--family', choices=FAMILIES, default=SYMMETRIC)

    def handle(self, *args, **options):
        command = options['command']
        try:
            payload, ok = getattr(self, f'handle_{command}')(options)
        except (PropcalcError, serializers.ValidationError) as e:
            message = e.detail if isinstance(e, serializers.ValidationError) else str(e)
            logger.warning(f"propcalc {command} rejected its input: {message}")
            raise CommandError(f"{command}: {message}", returncode=USAGE_ERROR)
        self.stdout.write(json.dumps(payload, sort_keys=True, indent=2 if options['pretty'] else None, default=str))
        if not ok:
            raise CommandError(f"{command}: property failed", returncode=PROPERTY_FAILURE)

    def family(self, options):
        return CrossedFamily(options['family'], resolve_group(options['group']))

    def handle_nf(self, options):
        return run_nf(options['term'], options['category'], self.family(options))

    def handle_eq(self, options):
        return run_eq(options['left'], options['right'], options['category'], self.family(options))

    def handle_compose(self, options):
        return run_compose(options['terms'], options['category'], self.family(options))

    def handle_enum(self, options):
        if options['n'] < 0 or options['m'] < 0:
            raise CommandError('--n and --m must be non-negative', returncode=USAGE_ERROR)
        return run_enum(options['category'], self.family(options), options['n'], options['m'], options['list'])

    def handle_check(self, options):
        return run_check(
            options['suite'],
            family_tag=options['family'],
            group=resolve_group(options['group']),
            max_n=options['max_n'],
            samples=options['samples'],
            seed=options['seed'],
            model=resolve_model(options['model']) if options['model'] else None,
        )

    def handle_interp(self, options):
        return run_interp(options['term'], resolve_model(options['model']), options['family'], options['category'])
