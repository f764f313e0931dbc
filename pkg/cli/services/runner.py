# cli/services/runner.py
"""
The commands behind `manage.py propcalc` and the API.

Every command returns (payload, ok): payload is JSON-ready and ok is
False only when a checked property or an equality fails.
"""
import logging
import math

from braids.services import check_word_problem
from composites.serializers import CompositeMorphismSerializer, DJGMorphismSerializer
from composites.services import check_category_axioms, check_strategy_independence, enumerate_djg
from crossed.services import CrossedFamily, check_crossed_identities
from groups.services import builtin_group
from ncsets.serializers import FiberMapSerializer
from ncsets.services import (
    check_isomorphisms, check_ncset_laws, enumerate_gf, enumerate_ncset, ncset_hom_count,
)
from ordmaps.serializers import OrderedMapSerializer
from ordmaps.services import enumerate_mono
from semantics.serializers import resolve_model
from semantics.services import (
    check_involution, check_ribbon, check_semantics, evaluate, group_algebra_model,
    sign_characters, with_sign_twist,
)
from utils.constants import BRAID, HYPEROCTAHEDRAL, RIBBON, SYMMETRIC
from utils.helpers import CheckReport, setting
from utils.validators import InvalidDataError

from .interpret import MONOTONE, PAIRS, SPANS, interpret, morphisms_equal
from .terms import arity, compose_terms, parse, print_term

logger = logging.getLogger(__name__)

SUITES = ('category', 'crossed', 'rewrite', 'iso', 'semantics', 'braid', 'hyperoctahedral', 'ribbon')

ENUM_CATEGORIES = (MONOTONE, PAIRS, 'gfas', 'gf')

# strands and word length of the braid word-problem suite
BRAID_STRANDS = 5
BRAID_LENGTH = 12

DEFAULT_MODEL = 'k[s3]:c2'

# sample counts the braid suites use when none is given
WORD_PROBLEM_SAMPLES = 1000
BRAIDED_SAMPLES = 500


def normal_form(category, morphism):
    if category == MONOTONE:
        return OrderedMapSerializer(morphism).data
    if category == PAIRS:
        return DJGMorphismSerializer(morphism).data
    return CompositeMorphismSerializer(morphism).data


def _read(text, category, family):
    term = parse(text)
    return term, interpret(term, category, family)


# ============= TERM COMMANDS =============

def run_nf(text, category, family):
    term, morphism = _read(text, category, family)
    domain, codomain = arity(term)
    return {
        'term': print_term(term),
        'category': category,
        'domain': domain,
        'codomain': codomain,
        'normal_form': normal_form(category, morphism),
    }, True


def run_eq(left, right, category, family):
    _, f = _read(left, category, family)
    _, g = _read(right, category, family)
    equal = morphisms_equal(category, f, g)
    logger.info(f"{left!r} {'=' if equal else '!='} {right!r} in {category}")
    return {
        'equal': equal,
        'left': normal_form(category, f),
        'right': normal_form(category, g),
    }, equal


def run_compose(texts, category, family):
    if not texts:
        raise InvalidDataError("compose needs at least one term")
    term = compose_terms([parse(text) for text in texts])
    morphism = interpret(term, category, family)
    return {'term': print_term(term), 'normal_form': normal_form(category, morphism)}, True


# ============= ENUMERATION =============

def _element_count(family, n):
    count = math.factorial(n) * family.group.order ** n
    return count * 2 ** n if family.tag == HYPEROCTAHEDRAL else count


def run_enum(category, family, n, m, list_items=False):
    """Hom-set sizes by enumeration, next to the closed form"""
    group = family.group
    monotone = math.comb(n + m - 1, n) if m else int(n == 0)
    if category == MONOTONE:
        items, expected = enumerate_mono(n, m), monotone
        dump = OrderedMapSerializer
    elif category == PAIRS:
        if not family.finite:
            raise InvalidDataError(f"the {family.tag} family has infinite hom-sets")
        items, expected = enumerate_djg(family, n, m), monotone * _element_count(family, n)
        dump = DJGMorphismSerializer
    elif category == 'gfas':
        items, expected = enumerate_ncset(group, n, m), ncset_hom_count(group, n, m)
        dump = FiberMapSerializer
    elif category == 'gf':
        items, expected = enumerate_gf(group, n, m), (m * group.order) ** n
        dump = FiberMapSerializer
    else:
        raise InvalidDataError(f"unknown category {category!r}; expected one of {', '.join(ENUM_CATEGORIES)}")
    payload = {
        'category': category,
        'family': family.tag,
        'group': group.name,
        'n': n,
        'm': m,
        'count': len(items),
        'expected': expected,
    }
    if list_items:
        payload['morphisms'] = [dump(f).data for f in items]
    return payload, len(items) == expected


# ============= SUITES =============

def suite_model(suite, model=None):
    """The model a semantic suite runs against when none is given"""
    if model is not None:
        return model
    if suite == 'ribbon':
        s3 = builtin_group('s3')
        sign = next(c for c in sign_characters(s3) if -1 in c)
        return with_sign_twist(group_algebra_model(setting('PRIME'), s3), sign)
    return resolve_model(DEFAULT_MODEL)


def run_suite(suite, family_tag=SYMMETRIC, group=None, max_n=None, samples=None, seed=None, model=None):
    """Run one verification suite and return its CheckReport"""
    group = group or builtin_group('c2')
    max_n = max_n or setting('MAX_N')
    family = CrossedFamily(family_tag, group)
    braided_samples = samples or max(setting('SAMPLES'), BRAIDED_SAMPLES)
    word_samples = samples or max(setting('SAMPLES'), WORD_PROBLEM_SAMPLES)
    if suite == 'category':
        report = CheckReport(f"category suite {family}")
        report.merge(check_category_axioms(family, max_n, samples, seed))
        report.merge(check_ncset_laws(group, max_n, samples, seed))
        return report
    if suite == 'crossed':
        if family.braided:
            samples = braided_samples
        return check_crossed_identities(family, max_n, samples, seed)
    if suite == 'rewrite':
        return check_strategy_independence(family, max_n, samples, seed)
    if suite == 'iso':
        return check_isomorphisms(group, max_n, samples, seed)
    if suite == 'braid':
        report = CheckReport('braid suite')
        report.merge(check_word_problem(BRAID_STRANDS, BRAID_LENGTH, word_samples, seed))
        report.merge(check_crossed_identities(CrossedFamily(BRAID, group), max_n, braided_samples, seed))
        return report
    if suite == 'semantics':
        return check_semantics(suite_model(suite, model), samples, seed, max_n)
    if suite == 'hyperoctahedral':
        report = CheckReport('hyperoctahedral suite')
        report.merge(check_crossed_identities(CrossedFamily(HYPEROCTAHEDRAL, group), max_n, samples, seed))
        report.merge(check_involution(suite_model(suite, model), samples, seed, max_n))
        return report
    if suite == 'ribbon':
        report = CheckReport('ribbon suite')
        report.merge(check_crossed_identities(CrossedFamily(RIBBON, group), max_n, braided_samples, seed))
        report.merge(check_ribbon(suite_model(suite, model), samples, seed, max_n))
        return report
    raise InvalidDataError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")


def run_check(suite, **options):
    report = run_suite(suite, **options)
    return report.to_dict(), report.passed


# ============= SEMANTICS =============

def run_interp(text, model, family_tag=SYMMETRIC, category=SPANS):
    """Evaluate a term against a model; labels are read in the model's acting group"""
    family = CrossedFamily(family_tag, model.group)
    term, morphism = _read(text, category, family if category != MONOTONE else None)
    matrix = evaluate(model, morphism)
    return {
        'term': print_term(term),
        'model': str(model),
        'p': model.p,
        'rows': int(matrix.shape[0]),
        'cols': int(matrix.shape[1]),
        'matrix': matrix.tolist(),
    }, True
