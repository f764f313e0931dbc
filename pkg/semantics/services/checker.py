# semantics/services/checker.py
import logging

import numpy as np

from braids.services import LabelledBraid, RibbonBraid
from composites.services import (
    CospanRewriter, DJGMorphism, canonicalize, compose_DJG, precompose_middle,
    random_composite, random_djg, span_compose,
)
from crossed.services import CrossedFamily
from groups.services import GroupTuple
from ncsets.services import (
    SpanClass, gf_compose, leg_orders, ncset_compose, pullback_span_compose, random_ncset,
)
from ordmaps.services import MULT_MAP, UNIT_MAP, identity_map, tensor_all, tensor_mono
from utils.constants import BRAID, HYPEROCTAHEDRAL, RIBBON, SYMMETRIC
from utils.decorators import logged_suite
from utils.helpers import CheckReport, make_rng, setting
from utils.validators import EvaluationSizeError, InvalidDataError

from .evaluator import (
    apply_op_djg, eval_composite, eval_djg, eval_element, eval_ncset, eval_span_class,
    eval_span_pair, is_cocommutative, is_commutative,
)
from .linalg import diff_weight, equal_mod, identity, kron_all, matmul, permutation_matrix

logger = logging.getLogger(__name__)

EvalReport = CheckReport

CATEGORIES = ('djg', 'span', 'gfas', 'gf', 'span_class')

RULES = ('mm', 'uu', 'mu', 'um', 'commute', 'elements')

# draws allowed per requested functoriality sample
REDRAWS = 10


def _record(report, model, left, right, **case):
    ok = equal_mod(model.p, left, right)
    if not ok:
        case['diff'] = diff_weight(model.p, left, right)
    return report.record(ok, **case)


def _family(model, family):
    if isinstance(family, str):
        return CrossedFamily(family, model.group)
    return family


# ============= MODEL AXIOMS =============

class ModelLaws:
    """Matrix identities a model must satisfy, grouped by structure"""

    def __init__(self, model):
        self.model = model
        self.p = model.p
        self.I = identity(model.dim)

    def _law(self, report, name, left, right):
        _record(report, self.model, left, right, law=name)

    def bimonoid(self):
        p, I, m = self.p, self.I, self.model
        mu, eta, delta, eps = m.mult, m.unit, m.comult, m.counit
        swap = m.swap()
        report = EvalReport('bimonoid axioms')

        def law(name, left, right):
            self._law(report, name, left, right)

        law('associativity', matmul(p, mu, kron_all(p, (mu, I))), matmul(p, mu, kron_all(p, (I, mu))))
        law('left unit', matmul(p, mu, kron_all(p, (eta, I))), I)
        law('right unit', matmul(p, mu, kron_all(p, (I, eta))), I)
        law('coassociativity', matmul(p, kron_all(p, (delta, I)), delta), matmul(p, kron_all(p, (I, delta)), delta))
        law('left counit', matmul(p, kron_all(p, (eps, I)), delta), I)
        law('right counit', matmul(p, kron_all(p, (I, eps)), delta), I)
        law(
            'bimonoid compatibility',
            matmul(p, delta, mu),
            matmul(p, kron_all(p, (mu, mu)), kron_all(p, (I, swap, I)), kron_all(p, (delta, delta))),
        )
        law('comult of unit', matmul(p, delta, eta), kron_all(p, (eta, eta)))
        law('counit of mult', matmul(p, eps, mu), kron_all(p, (eps, eps)))
        law('counit of unit', matmul(p, eps, eta), np.ones((1, 1), dtype=np.int64))
        return report

    def braiding(self):
        m = self.model
        report = EvalReport('braiding axioms')
        swap = m.swap()
        self._law(report, 'symmetry', matmul(self.p, swap, swap), identity(m.dim, 2))
        if m.signed:
            odd = np.asarray(m.parity, dtype=bool)
            maps = [('mult', m.mult), ('unit', m.unit), ('comult', m.comult), ('counit', m.counit), ('twist', m.twist)]
            maps += [(f"action of {m.group.name_of(g)}", m.act(g)) for g in m.group.elements()]
            if m.involution is not None:
                maps.append(('involution', m.involution))
            for name, matrix in maps:
                self._law(report, f"{name} is even", _parity_mask(matrix, odd, m.dim), np.zeros_like(matrix))
        return report

    def action(self):
        p, I, m = self.p, self.I, self.model
        report = EvalReport('equivariance axioms')
        group = m.group
        self._law(report, 'action of identity', m.act(group.identity), I)
        for g in group.elements():
            A = m.act(g)
            for h in group.elements():
                self._law(report, 'action is a homomorphism', matmul(p, A, m.act(h)), m.act(group.mul(g, h)))
            self._law(report, 'action preserves mult', matmul(p, A, m.mult), matmul(p, m.mult, kron_all(p, (A, A))))
            self._law(report, 'action preserves unit', matmul(p, A, m.unit), m.unit)
            self._law(report, 'action preserves comult', matmul(p, m.comult, A), matmul(p, kron_all(p, (A, A)), m.comult))
            self._law(report, 'action preserves counit', matmul(p, m.counit, A), m.counit)
        return report

    def twist(self):
        """Θ is an invertible monoid map commuting with the action and ι"""
        p, m = self.p, self.model
        theta = m.twist
        report = EvalReport('twist axioms')
        try:
            m.twist_inverse()
            report.record(True, law='twist is invertible')
        except InvalidDataError:
            report.record(False, law='twist is invertible')
        self._law(report, 'twist preserves mult', matmul(p, theta, m.mult), matmul(p, m.mult, kron_all(p, (theta, theta))))
        self._law(report, 'twist preserves unit', matmul(p, theta, m.unit), m.unit)
        for g in m.group.elements():
            A = m.act(g)
            self._law(report, 'twist commutes with action', matmul(p, theta, A), matmul(p, A, theta))
        if m.involution is not None:
            self._law(report, 'twist commutes with involution', matmul(p, theta, m.involution), matmul(p, m.involution, theta))
        return report

    def twist_comonoid(self):
        """Θ is a comonoid map; needed for ribbon spans, false for sign twists"""
        p, m = self.p, self.model
        theta = m.twist
        report = EvalReport('twist comonoid axioms')
        self._law(report, 'twist preserves comult', matmul(p, m.comult, theta), matmul(p, kron_all(p, (theta, theta)), m.comult))
        self._law(report, 'twist preserves counit', matmul(p, m.counit, theta), m.counit)
        return report

    def involution(self):
        p, I, m = self.p, self.I, self.model
        report = EvalReport('involution axioms')
        iota = m.involution
        if iota is None:
            return report
        swap = m.swap()
        self._law(report, 'involution squares to identity', matmul(p, iota, iota), I)
        self._law(report, 'involution reverses mult', matmul(p, iota, m.mult), matmul(p, m.mult, kron_all(p, (iota, iota)), swap))
        self._law(report, 'involution preserves unit', matmul(p, iota, m.unit), m.unit)
        self._law(report, 'involution reverses comult', matmul(p, m.comult, iota), matmul(p, swap, kron_all(p, (iota, iota)), m.comult))
        self._law(report, 'involution preserves counit', matmul(p, m.counit, iota), m.counit)
        for g in m.group.elements():
            A = m.act(g)
            self._law(report, 'involution commutes with action', matmul(p, iota, A), matmul(p, A, iota))
        return report


def _parity_mask(matrix, odd, d):
    """Entries of `matrix` linking basis tensors of different parity"""
    rows, cols = matrix.shape
    return np.where(
        _tensor_parity(odd, d, rows)[:, None] != _tensor_parity(odd, d, cols)[None, :], matrix, 0,
    )


def _tensor_parity(odd, d, size):
    strands = 0
    while d ** strands < size:
        strands += 1
    if strands == 0:
        return np.zeros(1, dtype=bool)
    digits = np.indices((d,) * strands).reshape(strands, size)
    return np.bitwise_xor.reduce(odd[digits], axis=0)


def verify_model(model):
    """Bimonoid, braiding, equivariance, twist and involution axioms"""
    laws = ModelLaws(model)
    report = EvalReport(f"axioms of {model}")
    for group in (laws.bimonoid, laws.braiding, laws.action, laws.twist, laws.involution):
        report.merge(group())
    if report.passed:
        logger.debug(f"{model} verified on {report.checked} identities")
    return report


def braiding_laws(model, samples=None, seed=None, max_strands=3):
    """The hexagon, and braid words evaluated letter by letter against the whole word"""
    p, d = model.p, model.dim
    rng = make_rng(seed)
    family = CrossedFamily(BRAID, model.group)
    swap = model.swap()
    report = EvalReport(f"braiding of {model}")
    _record(
        report, model,
        permutation_matrix(p, d, (2, 0, 1), model.sign_parity),
        matmul(p, kron_all(p, (identity(d), swap)), kron_all(p, (swap, identity(d)))),
        law='hexagon',
    )
    for _ in range(samples or setting('SAMPLES')):
        n = rng.randint(2, max_strands)
        word = family.random(rng, n).word
        elt = LabelledBraid(GroupTuple.identity(model.group, n), word)
        stepwise = identity(d, n)
        for letter in word.letters:
            crossing = family.crossing(n, abs(letter))
            if letter < 0:
                crossing = family.inverse(crossing)
            stepwise = matmul(p, stepwise, eval_element(model, family, crossing))
        _record(report, model, stepwise, eval_element(model, family, elt), law='braid word', word=str(word))
        squared = family.compose(elt, elt)
        inverse = family.inverse(elt)
        _record(
            report, model, eval_element(model, family, family.compose(squared, inverse)),
            eval_element(model, family, elt), law='word times inverse', word=str(word),
        )
    return report


# ============= FUNCTORIALITY =============

class FunctorialityChecker:
    """Samples composable and tensorable pairs in one category and compares matrices"""

    def __init__(self, model, family, samples=None, max_arity=None, seed=None, variant='AA', max_middle=2):
        self.model = model
        self.family = family
        self.samples = samples or setting('SAMPLES')
        self.max_arity = max_arity or setting('MAX_N')
        self.rng = make_rng(seed)
        self.variant = variant
        self.max_middle = max_middle
        self.drawn = 0

    def _arity(self, bound=None, low=0):
        return self.rng.randint(low, self.max_arity if bound is None else bound)

    def _target(self, n, bound=None):
        return self._arity(bound, 0 if n == 0 else 1)

    def sample(self, category, n, m):
        rng, family, group = self.rng, self.family, self.family.group
        if category == 'djg':
            return random_djg(family, rng, n, m)
        if category == 'span':
            return random_composite(family, rng, n, m, self.max_middle)
        if category in ('gfas', 'gf'):
            return random_ncset(group, rng, n, m, ordered=category == 'gfas')
        out_ordered, in_ordered = leg_orders(self.variant)
        middle = 0 if n == 0 or m == 0 else rng.randint(0, self.max_middle)
        return SpanClass(
            self.variant,
            random_ncset(group, rng, middle, n, in_ordered),
            random_ncset(group, rng, middle, m, out_ordered),
        )

    def evaluate(self, category, f):
        if category == 'djg':
            return eval_djg(self.model, f)
        if category == 'span':
            return eval_composite(self.model, f)
        if category in ('gfas', 'gf'):
            return eval_ncset(self.model, f)
        return eval_span_class(self.model, f)

    def compose(self, category, g, f):
        if category == 'djg':
            return compose_DJG(g, f)
        if category == 'span':
            return span_compose(g, f)
        if category == 'gfas':
            return ncset_compose(g, f)
        if category == 'gf':
            return gf_compose(g, f)
        return pullback_span_compose(self.variant, g, f)

    def _pair_cases(self, report, category):
        p = self.model.p
        n = self._arity()
        m = self._target(n)
        l = self._target(m)
        f, g = self.sample(category, n, m), self.sample(category, m, l)
        left = self.evaluate(category, self.compose(category, g, f))
        right = matmul(p, self.evaluate(category, g), self.evaluate(category, f))
        _record(report, self.model, left, right, law='composition', f=str(f), g=str(g))
        if category == 'span' and f.middle:
            h = self.family.random(self.rng, f.middle)
            relabelled = canonicalize(precompose_middle(f.to_span(), h))
            _record(
                report, self.model, self.evaluate(category, relabelled), self.evaluate(category, f),
                law='middle relabelling', f=str(f),
            )

    def _tensor_cases(self, report, category):
        bound = max(1, self.max_arity // 2)
        n1, n2 = self._arity(bound), self._arity(bound)
        a = self.sample(category, n1, self._target(n1, bound))
        b = self.sample(category, n2, self._target(n2, bound))
        left = self.evaluate(category, a.tensor(b))
        right = kron_all(self.model.p, (self.evaluate(category, a), self.evaluate(category, b)))
        _record(report, self.model, left, right, law='tensor', f=str(a), g=str(b))

    def check(self, category):
        """Exactly `samples` evaluated cases; oversized draws are replaced, up to REDRAWS per sample"""
        report = EvalReport(f"{category} functoriality of {self.family} in {self.model}")
        self.drawn = 0
        attempts = 0
        while self.drawn < self.samples and attempts < self.samples * REDRAWS:
            attempts += 1
            case = EvalReport(report.suite)
            try:
                self._pair_cases(case, category)
                self._tensor_cases(case, category)
            except EvaluationSizeError as e:
                logger.debug(f"Redrawing an oversized sample: {e}")
                continue
            report.merge(case)
            self.drawn += 1
        if self.drawn < self.samples:
            report.record(False, law='sample count', drawn=self.drawn, requested=self.samples)
        elif attempts > self.drawn:
            logger.info(f"{report.suite}: {attempts - self.drawn} oversized samples redrawn")
        return report


@logged_suite
def check_functoriality(model, family, category='span', samples=None, max_arity=None, seed=None, variant='AA'):
    """
    eval(g∘f) = eval(g)·eval(f) and eval(f⊗g) = eval(f)⊗eval(g) on sampled pairs.

    `family` is a family tag or a CrossedFamily over the model's acting group.
    """
    family = _family(model, family)
    if category not in CATEGORIES:
        raise InvalidDataError(f"unknown category {category!r}; expected one of {', '.join(CATEGORIES)}")
    if category == 'gf' and not is_commutative(model):
        raise InvalidDataError(f"{model} is not commutative; GF cannot be evaluated")
    checker = FunctorialityChecker(model, family, samples, max_arity, seed, variant)
    return checker.check(category)


# ============= REWRITE RULES =============

def _on_wire(family, width, offset, a_map, b_map):
    before, after = identity_map(offset), identity_map(width - offset - 1)
    return (
        DJGMorphism.from_mono(family, tensor_all((before, a_map, after))),
        DJGMorphism.from_mono(family, tensor_all((before, b_map, after))),
    )


def _element_instances(family):
    group = family.group
    mult = DJGMorphism.from_mono(family, MULT_MAP)
    instances = [
        (
            DJGMorphism.from_elt(family, family.from_labels(GroupTuple(group, (g,)))),
            DJGMorphism.from_elt(family, family.from_labels(GroupTuple(group, (h,)))),
        )
        for g in group.elements() for h in group.elements()
    ]
    special = [family.crossing(2, 1)]
    if family.tag == HYPEROCTAHEDRAL:
        special.append(family.flip(2, 0))
    if family.tag == RIBBON:
        special.append(family.twist(2, 1))
    for elt in special:
        moved = DJGMorphism.from_elt(family, elt)
        instances.append((moved, DJGMorphism.identity(family, 2)))
        instances.append((DJGMorphism.identity(family, 2), moved))
        instances.append((compose_DJG(mult, moved), mult))
    return instances


def rule_instances(family, rule):
    """Cospans (a, b) exercising one elementary rewrite rule"""
    if rule == 'mm':
        return [_on_wire(family, 1, 0, MULT_MAP, MULT_MAP), _on_wire(family, 2, 1, MULT_MAP, MULT_MAP)]
    if rule == 'uu':
        return [_on_wire(family, 1, 0, UNIT_MAP, UNIT_MAP), _on_wire(family, 2, 0, UNIT_MAP, UNIT_MAP)]
    if rule == 'mu':
        return [_on_wire(family, 1, 0, MULT_MAP, UNIT_MAP)]
    if rule == 'um':
        return [_on_wire(family, 1, 0, UNIT_MAP, MULT_MAP)]
    if rule == 'commute':
        return [
            (
                DJGMorphism.from_mono(family, tensor_mono(MULT_MAP, identity_map(1))),
                DJGMorphism.from_mono(family, tensor_mono(identity_map(1), MULT_MAP)),
            ),
            (
                DJGMorphism.from_mono(family, tensor_mono(UNIT_MAP, identity_map(1))),
                DJGMorphism.from_mono(family, tensor_mono(identity_map(1), MULT_MAP)),
            ),
        ]
    if rule == 'elements':
        return _element_instances(family)
    raise InvalidDataError(f"unknown rule {rule!r}; expected one of {', '.join(RULES)}")


@logged_suite
def check_rewrite_soundness(model, family=SYMMETRIC, rules=RULES):
    """Both sides of every elementary rule instance: bᵒᵖ∘a against α∘βᵒᵖ"""
    family = _family(model, family)
    report = EvalReport(f"rewrite soundness of {family} in {model}")
    for rule in rules:
        for a, b in rule_instances(family, rule):
            beta, alpha = CospanRewriter(family).solve(a, b)
            left = apply_op_djg(model, b, eval_djg(model, a))
            right = eval_span_pair(model, beta, alpha)
            _record(report, model, left, right, law=rule, cospan=f"{a} / {b}")
    return report


# ============= SUITES =============

@logged_suite
def check_involution(model, samples=None, seed=None, max_arity=None):
    """Involution axioms plus functoriality of flagged elements"""
    report = EvalReport(f"involution of {model}")
    report.merge(ModelLaws(model).involution())
    report.merge(check_rewrite_soundness(model, HYPEROCTAHEDRAL))
    for category in ('djg', 'span'):
        report.merge(check_functoriality(model, HYPEROCTAHEDRAL, category, samples, max_arity, seed))
    return report


@logged_suite
def check_ribbon(model, samples=None, seed=None, max_arity=None):
    """Ribbon functoriality and agreement of zero-twist ribbons with their braids"""
    report = EvalReport(f"ribbon twist of {model}")
    report.merge(ModelLaws(model).twist())
    report.merge(check_functoriality(model, RIBBON, 'djg', samples, max_arity, seed))
    rng = make_rng(seed)
    ribbon = CrossedFamily(RIBBON, model.group)
    braid = CrossedFamily(BRAID, model.group)
    for _ in range(samples or setting('SAMPLES')):
        elt = ribbon.random(rng, rng.randint(1, max_arity or setting('MAX_N')))
        untwisted = LabelledBraid(elt.labels, RibbonBraid.from_braid(elt.word))
        _record(
            report, model, eval_element(model, ribbon, untwisted),
            eval_element(model, braid, ribbon.project(elt)),
            law='zero twist', braid=str(elt),
        )
    return report


@logged_suite
def check_semantics(model, samples=None, seed=None, max_arity=None):
    """Every symmetric semantics suite that applies to the model"""
    report = EvalReport(f"semantics of {model}")
    report.merge(verify_model(model))
    report.merge(braiding_laws(model, samples, seed))
    report.merge(check_rewrite_soundness(model, SYMMETRIC))
    for category in ('djg', 'span', 'gfas'):
        report.merge(check_functoriality(model, SYMMETRIC, category, samples, max_arity, seed))
    if is_commutative(model):
        report.merge(check_functoriality(model, SYMMETRIC, 'gf', samples, max_arity, seed))
    report.merge(check_functoriality(model, SYMMETRIC, 'span_class', samples, max_arity, seed))
    return report
